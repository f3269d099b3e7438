#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lyubeznik/cochain.hpp"
#include "oracle.hpp"

using namespace lyubeznik;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

SimplicialComplex complex_of(Mask vertices, std::initializer_list<std::initializer_list<unsigned>> facets) {
  std::vector<Mask> fs;
  for (auto f : facets) fs.push_back(mask_of(f));
  return SimplicialComplex::generated_by(vertices, fs);
}

}  // namespace

TEST(ReducedCohomology, SmallComplexes) {
  const auto two_points = complex_of(3, {{1}, {2}});
  EXPECT_EQ(reduced_cohomology_dim(two_points, 0, Q), 1U);
  EXPECT_EQ(reduced_cohomology_dim(two_points, -1, Q), 0U);
  const auto hollow = complex_of(7, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(reduced_cohomology_dim(hollow, 1, Q), 1U);
  EXPECT_EQ(reduced_cohomology_dim(hollow, 0, Q), 0U);
  EXPECT_EQ(reduced_cohomology_dim(SimplicialComplex::irrelevant(7), -1, Q), 1U);
  EXPECT_EQ(reduced_cohomology_dim(SimplicialComplex::irrelevant(7), 0, Q), 0U);
  for (int q = -2; q < 4; ++q) {
    EXPECT_EQ(reduced_cohomology_dim(SimplicialComplex::void_complex(7), q, Q), 0U);
    EXPECT_EQ(reduced_cohomology_dim(SimplicialComplex::simplex(7), q, Q), 0U);
  }
  EXPECT_EQ(reduced_cohomology_dim(two_points, -2, Q), 0U);
}

TEST(ReducedCohomology, ProjectivePlaneDependsOnCharacteristic) {
  // Δ of the ten-generator ideal is the six-vertex projective plane; torsion in
  // H_1(RP^2; Z) appears over F_2 in degrees 1 and 2.
  const auto delta = stanley_reisner(corpus::rp2());
  EXPECT_EQ(reduced_cohomology_dim(delta, 1, Q), 0U);
  EXPECT_EQ(reduced_cohomology_dim(delta, 1, F2), 1U);
  EXPECT_EQ(reduced_cohomology_dim(delta, 2, F2), 1U);
  const auto faces = oracle::faces(63, oracle::sr_face(corpus::rp2().gens()));
  EXPECT_EQ(oracle::reduced_homology(faces, 1, 0), 0U);
  EXPECT_EQ(oracle::reduced_homology(faces, 1, 2), 1U);
}

TEST(ReducedCohomology, CochainAndChainDimensionsAgreeWithOracle) {
  for (const auto& [name, ideal] : corpus::all()) {
    const unsigned n = ideal.n();
    const auto delta = stanley_reisner(ideal);
    const auto faces = oracle::faces(full_mask(n), oracle::sr_face(ideal.gens()));
    for (const FieldSpec spec : {Q, F2}) {
      for (int q = -1; q < static_cast<int>(n); ++q) {
        const auto co = reduced_cohomology_dim(delta, q, spec);
        EXPECT_EQ(co, reduced_homology_dim(delta, q, spec)) << name << " q=" << q;
        EXPECT_EQ(co, oracle::reduced_homology(faces, q, spec.characteristic()))
            << name << " q=" << q;
      }
    }
  }
}

TEST(CochainComplex, BasisOrderAndSigns) {
  const RationalField f;
  const CochainComplex<RationalField> c(complex_of(7, {{1, 2, 3}}), f);
  EXPECT_EQ(c.top(), 2);
  EXPECT_EQ(c.faces_of_degree(1), (std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})}));
  // δ^1 of the triangle: [23] − [13] + [12].
  const auto d1 = c.coboundary(1);
  EXPECT_EQ(d1, Matrix<RationalField>::from_ints(f, {{1, -1, 1}}));
  EXPECT_TRUE(multiply(c.coboundary(0), c.coboundary(-1)).is_zero());
}

TEST(RestrictionMap, IdentityZeroAndEdge) {
  const RationalField f;
  const auto cycle = stanley_reisner(alexander_dual(corpus::a(4)));
  const CochainComplex<RationalField> big(cycle, f);
  const auto id = restriction_cochain_map(big, big);
  for (int q = -1; q <= big.top(); ++q) {
    const auto n = big.faces_of_degree(q).size();
    EXPECT_EQ(id[static_cast<std::size_t>(q + 1)], Matrix<RationalField>::identity(f, n));
  }
  const CochainComplex<RationalField> nothing(SimplicialComplex::void_complex(15), f);
  for (const auto& m : restriction_cochain_map(nothing, big)) EXPECT_EQ(m.rows(), 0U);

  const CochainComplex<RationalField> edge(complex_of(15, {{1, 2}}), f);
  const auto res = restriction_cochain_map(edge, big);
  EXPECT_EQ(res[2].rows(), 1U);
  EXPECT_EQ(res[2].cols(), 4U);
  EXPECT_EQ(res[1].rows(), 2U);
  EXPECT_EQ(res[1].cols(), 4U);
  EXPECT_THROW(restriction_cochain_map(big, edge), input_error);
}

TEST(InducedCohomologyMap, IdentityAndContractible) {
  const RationalField f;
  const auto cycle = stanley_reisner(alexander_dual(corpus::a(4)));
  EXPECT_EQ(induced_cohomology_map(cycle, cycle, 1, f), Matrix<RationalField>::identity(f, 1));
  const auto point = complex_of(7, {{1}});
  const auto triangle = complex_of(7, {{1, 2, 3}});
  const auto m = induced_cohomology_map(point, triangle, 0, f);
  EXPECT_EQ(m.rows(), 0U);
  EXPECT_EQ(m.cols(), 0U);
  // Two points inside the hollow triangle: H^0 restriction is injective.
  const auto hollow = complex_of(7, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(induced_cohomology_map(complex_of(3, {{1}, {2}}), complex_of(3, {{1}, {2}}), 0, f).rows(), 1U);
  // A path inside the circle: H^1(circle) → H^1(path) = 0.
  EXPECT_EQ(induced_cohomology_map(complex_of(7, {{1, 2}, {1, 3}}), hollow, 1, f).rows(), 0U);
}

TEST(InducedCohomologyMap, Functoriality) {
  // Two points ⊆ four points ⊆ hollow square plus isolated vertex.
  const RationalField f;
  const auto g1 = complex_of(15, {{1}, {3}});
  const auto g2 = complex_of(15, {{1}, {2}, {3}, {4}});
  const auto g3 = complex_of(31, {{1, 2}, {2, 3}, {3, 4}, {5}});
  const auto direct = induced_cohomology_map(g1, g3, 0, f);
  const auto composite =
      multiply(induced_cohomology_map(g1, g2, 0, f), induced_cohomology_map(g2, g3, 0, f));
  EXPECT_EQ(direct, composite);
  EXPECT_EQ(rank(direct), 0U);
  const auto g3b = complex_of(31, {{1, 2}, {3, 4}, {5}});
  EXPECT_EQ(induced_cohomology_map(g1, g3b, 0, f),
            multiply(induced_cohomology_map(g1, g2, 0, f), induced_cohomology_map(g2, g3b, 0, f)));
  EXPECT_EQ(rank(induced_cohomology_map(g1, g3b, 0, f)), 1U);
}
