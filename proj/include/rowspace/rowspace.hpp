#pragma once

#include "rowspace/dispatch.hpp"
#include "rowspace/exhaustive.hpp"
#include "rowspace/families.hpp"
#include "rowspace/graph.hpp"
#include "rowspace/graph6.hpp"
#include "rowspace/linalg.hpp"
#include "rowspace/oracle.hpp"
#include "rowspace/report.hpp"
#include "rowspace/witness.hpp"
