#include "oracles.hpp"

#include "rowspace/families.hpp"
#include "rowspace/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace rowspace {
namespace {

namespace fam = families;

BitVector bits(std::initializer_list<int> v) { return BitVector(v.begin(), v.end()); }

std::vector<Rational> q(std::initializer_list<Rational> v) { return {v.begin(), v.end()}; }

TEST(AdjacencyMatrix, StarAndSixVertexGraph) {
  const RationalMatrix a1 = adjacency_matrix(fam::figure1_gamma1());
  const int expected1[5][5] = {{0, 1, 1, 1, 1}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(a1(i, j), expected1[i][j]);

  const RationalMatrix a2 = adjacency_matrix(fam::figure1_gamma2());
  const int expected2[6][6] = {{0, 1, 0, 0, 1, 0}, {1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 1},
                              {0, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(a2(i, j), expected2[i][j]);

  const RationalMatrix z = adjacency_matrix(Graph(3));
  EXPECT_EQ(z, RationalMatrix(3, 3));
}

TEST(Rank, KnownValues) {
  EXPECT_EQ(rank(adjacency_matrix(fam::path(5))), 4u);
  EXPECT_EQ(rank(adjacency_matrix(fam::cycle(8))), 6u);
  EXPECT_EQ(rank(adjacency_matrix(fam::petersen())), 10u);
  EXPECT_EQ(nullity(fam::cycle(8)), 2u);
  EXPECT_EQ(nullity(fam::complete(4)), 0u);
  EXPECT_EQ(nullity(fam::path(5)), 1u);
  EXPECT_EQ(rank(RationalMatrix(0, 0)), 0u);
}

TEST(Rank, MatchesReferenceOnRandomRationalMatrices) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    RationalMatrix m(r, c);
    std::vector<std::vector<mpq_class>> ref(r, std::vector<mpq_class>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        // sparse small rationals so rank deficiency is common
        const long num = (rng() % 3 == 0) ? static_cast<long>(rng() % 7) - 3 : 0;
        m(i, j) = ref[i][j] = fraction(num, 1 + static_cast<long>(rng() % 4));
      }
    EXPECT_EQ(rank(m), test::reference_rank(ref));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Rank, InvariantUnderRelabeling) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_graph(1 + rng() % 9, 0.4, rng);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(rank(adjacency_matrix(g)), rank(adjacency_matrix(permute(g, perm))));
    EXPECT_EQ(rank(adjacency_matrix(g)), test::reference_rank(test::to_int_matrix(g)));
  }
}

TEST(Rank, PathAndCycleClosedForms) {
  for (std::size_t n = 3; n <= 64; ++n) {
    EXPECT_EQ(rank(adjacency_matrix(fam::path(n))), n - (n % 2 == 1 ? 1 : 0)) << n;
    EXPECT_EQ(rank(adjacency_matrix(fam::cycle(n))), n - (n % 4 == 0 ? 2 : 0)) << n;
  }
}

TEST(Rank, PreservedByMultiplication) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_graph(1 + rng() % 6, 0.5, rng);
    std::vector<std::size_t> mv;
    for (std::size_t i = 0; i < g.order(); ++i) mv.push_back(1 + rng() % 3);
    EXPECT_EQ(rank(adjacency_matrix(multiply_vertices(g, MultiplicityVector(mv)))), rank(adjacency_matrix(g)));
  }
}

TEST(SolveMembership, KnownCertificates) {
  const RationalMatrix a1 = adjacency_matrix(fam::figure1_gamma1());
  const auto c1 = solve_membership(a1, bits({1, 1, 1, 1, 1}));
  ASSERT_TRUE(c1);
  EXPECT_TRUE(certifies(a1, c1->coefficients, c1->target));
  // R1 + R2 is another valid combination
  EXPECT_TRUE(certifies(a1, q({1, 1, 0, 0, 0}), bits({1, 1, 1, 1, 1})));

  const RationalMatrix d14 = adjacency_matrix(fam::build({fam::Family::d14, {}}));
  const auto c14 = solve_membership(d14, bits({1, 1, 1, 1, 1, 1}));
  ASSERT_TRUE(c14);
  EXPECT_TRUE(certifies(d14, c14->coefficients, c14->target));
  EXPECT_TRUE(certifies(d14, q({fraction(1, 2), fraction(-1, 2), 0, 0, fraction(1, 2), 1}), bits({1, 1, 1, 1, 1, 1})));

  EXPECT_FALSE(solve_membership(RationalMatrix(3, 3), bits({1, 0, 0})));
}

TEST(SolveMembership, Errors) {
  const RationalMatrix a = adjacency_matrix(fam::complete(3));
  EXPECT_THROW(solve_membership(a, bits({1, 1})), std::invalid_argument);
  EXPECT_THROW(solve_membership(a, bits({1, 2, 0})), std::invalid_argument);
  EXPECT_THROW(is_row(a, bits({1, 1})), std::invalid_argument);
}

TEST(SolveMembership, AgreesWithAugmentedRankAndBasis) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 150; ++t) {
    const Graph g = test::random_graph(1 + rng() % 7, 0.4, rng);
    const RationalMatrix a = adjacency_matrix(g);
    const RowSpaceBasis basis(a);
    EXPECT_EQ(basis.rank(), rank(a));
    const auto ref = test::to_int_matrix(g);
    for (int s = 0; s < 8; ++s) {
      BitVector x(g.order());
      for (auto& b : x) b = rng() % 2;
      const auto cert = solve_membership(a, x);
      const bool in_space = test::reference_in_row_space(ref, x);
      EXPECT_EQ(cert.has_value(), in_space);
      EXPECT_EQ(cert.has_value(), rank(a.with_row(x)) == rank(a));
      EXPECT_EQ(basis.contains(x), in_space);
      if (cert) {
        EXPECT_TRUE(certifies(a, cert->coefficients, x));
      }
      if (auto bc = basis.certificate(x)) {
        EXPECT_TRUE(certifies(a, bc->coefficients, x));
      }
    }
    // every row is trivially a member
    for (Vertex i = 0; i < g.order(); ++i) {
      BitVector row(g.order());
      for (Vertex j = 0; j < g.order(); ++j) row[j] = g.adjacent(i, j);
      EXPECT_TRUE(solve_membership(a, row).has_value());
    }
  }
}

TEST(IsRow, Examples) {
  const RationalMatrix a1 = adjacency_matrix(fam::figure1_gamma1());
  EXPECT_EQ(is_row(a1, bits({1, 1, 1, 1, 1})), std::nullopt);
  EXPECT_EQ(is_row(a1, bits({0, 1, 1, 1, 1})), 0u);
  // duplicate rows report the smallest index
  EXPECT_EQ(is_row(a1, bits({1, 0, 0, 0, 0})), 1u);
  EXPECT_EQ(is_row(fam::figure1_gamma1(), bits({1, 0, 0, 0, 0})), 1u);
}

TEST(Fractions, RoundTrip) {
  EXPECT_EQ(to_fraction_string(fraction(6, 8)), "3/4");
  EXPECT_EQ(to_fraction_string(Rational(-2)), "-2/1");
  EXPECT_EQ(parse_fraction("-1/2"), fraction(-1, 2));
  EXPECT_EQ(parse_fraction("4/8"), fraction(1, 2));
  EXPECT_EQ(parse_fraction("7"), Rational(7));
  EXPECT_THROW(parse_fraction("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_fraction("x"), std::invalid_argument);
}

}  // namespace
}  // namespace rowspace
