#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"
#include "vngeom/posdef.hpp"
#include "vngeom/sampling.hpp"

using namespace vngeom;

namespace {

struct Fixture {
  FiniteGroup g;
  CharacterTable table;
  BlockDecomposition decomp;
};

Fixture make(const char* kind) {
  FiniteGroup g = build_named(GroupKind::parse(kind));
  CharacterTable t = character_table(g);
  BlockDecomposition d = block_decompose(g, t);
  return {g, t, d};
}

ErrorKind p1_error(const GroupFunction& phi) {
  try {
    require_p1(phi, {});
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST(Bochner, CyclicGroupsAgreeWithDft) {
  Rng rng(2024);
  for (unsigned n = 2; n <= 16; ++n) {
    const FiniteGroup g = build_named(GroupKind::cyclic(n));
    int positive = 0;
    for (int i = 0; i < 200; ++i) {
      const GroupFunction phi = random_hermitian_symmetric(g, rng, rng.uniform(0.0, 2.0 / std::sqrt(double(n))));
      const PsdVerdict v = is_positive_definite(phi);
      double min_hat = 1e300;
      for (const Complex& h : oracle::dft(phi.values)) {
        EXPECT_NEAR(h.imag(), 0.0, 1e-12);
        min_hat = std::min(min_hat, h.real());
      }
      EXPECT_NEAR(v.min_eigenvalue, min_hat, 1e-12);
      if (!v.undecided) EXPECT_EQ(v.psd, min_hat >= -v.cutoff) << n;
      positive += v.psd ? 1 : 0;
    }
    EXPECT_GT(positive, 0) << n;
    EXPECT_LT(positive, 200) << n;
  }
}

TEST(PositiveDefinite, BasicFunctions) {
  const FiniteGroup g = build_named(GroupKind::symmetric(3));
  EXPECT_TRUE(is_positive_definite(GroupFunction::constant(g, 1.0)).psd);
  EXPECT_TRUE(is_positive_definite(GroupFunction::delta_e(g)).psd);
  const CharacterTable t = character_table(g);
  for (std::size_t pi = 0; pi < t.num_irreps(); ++pi) {
    const GroupFunction chi = GroupFunction::normalized_character(g, t, pi);
    EXPECT_TRUE(is_positive_definite(chi).psd);
    EXPECT_NO_THROW(require_p1(chi, {}));
  }
  EXPECT_FALSE(is_positive_definite(GroupFunction::constant(g, -1.0)).psd);
}

TEST(PositiveDefinite, GramConvention) {
  const FiniteGroup g = build_named(GroupKind::dihedral(3));
  Rng rng(1);
  const GroupFunction phi = random_hermitian_symmetric(g, rng);
  const CMatrix m = gram_matrix(phi);
  for (Elem j = 0; j < g.order(); ++j)
    for (Elem k = 0; k < g.order(); ++k) EXPECT_EQ(m(j, k), phi(g.mul(g.inv(k), j)));
}

TEST(PositiveDefinite, P1Errors) {
  const FiniteGroup g = build_named(GroupKind::cyclic(4));
  GroupFunction half = GroupFunction::constant(g, 0.5);
  EXPECT_EQ(p1_error(half), ErrorKind::NotNormalized);
  GroupFunction skew{g, CVector::Zero(4)};
  skew.values << 1.0, Complex(0, 1), 0.0, Complex(0, 1);
  EXPECT_EQ(p1_error(skew), ErrorKind::NotHermitianSymmetric);
  GroupFunction neg{g, CVector::Zero(4)};
  neg.values << 1.0, 0.0, 2.0, 0.0;
  EXPECT_EQ(p1_error(neg), ErrorKind::NotPositiveDefinite);
  const CharacterTable t = character_table(build_named(GroupKind::symmetric(3)));
  GroupFunction chi = GroupFunction::normalized_character(build_named(GroupKind::symmetric(3)), t, 2);
  chi.values *= 2.0;
  EXPECT_EQ(p1_error(chi), ErrorKind::NotNormalized);
}

TEST(States, RoundTripAndLinearity) {
  for (const char* kind : {"cyclic:4", "symmetric:3", "dihedral:4", "quaternion8"}) {
    const Fixture f = make(kind);
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
      const GroupFunction phi = random_state(f.decomp, f.table, rng);
      const NormalState omega = to_state(phi);
      EXPECT_LT((from_state(omega).values - phi.values).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_NEAR(std::abs(omega.evaluate(algebra::unit(f.g)) - 1.0), 0.0, 1e-12);
      const CVector x = algebra::random_element(f.g, rng);
      const CVector y = algebra::random_element(f.g, rng);
      const Complex c(0.3, -1.2);
      EXPECT_LT(std::abs(omega.evaluate(x + c * y) - omega.evaluate(x) - c * omega.evaluate(y)), 1e-12);
      // Positivity on x^* x.
      const Complex v = omega.evaluate(algebra::multiply(f.g, algebra::adjoint(f.g, x), x));
      EXPECT_GT(v.real(), -1e-12);
      EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
  }
}

TEST(ANorm, StatesHaveNormOneAndCyclicMatchesDft) {
  const Fixture f = make("quaternion8");
  Rng rng(4);
  for (int i = 0; i < 20; ++i) EXPECT_NEAR(a_norm(random_state(f.decomp, f.table, rng)), 1.0, 1e-10);
  const FiniteGroup z = build_named(GroupKind::cyclic(9));
  for (int i = 0; i < 20; ++i) {
    const GroupFunction phi = random_hermitian_symmetric(z, rng);
    double expected = 0.0;
    for (const Complex& h : oracle::dft(phi.values)) expected += std::abs(h);
    EXPECT_NEAR(a_norm(phi), expected / 9.0, 1e-10);
  }
}

TEST(ConvexCombine, WeightsAndGroups) {
  const FiniteGroup g = build_named(GroupKind::symmetric(3));
  const std::vector<GroupFunction> fs = {GroupFunction::constant(g, 1.0), GroupFunction::delta_e(g)};
  const std::vector<double> w = {0.25, 0.75};
  const GroupFunction mix = convex_combine(w, fs);
  EXPECT_NEAR(std::abs(mix(1) - 0.25), 0.0, 1e-15);
  for (const std::vector<double>& bad : std::vector<std::vector<double>>{{0.5, 0.6}, {-0.1, 1.1}, {1.0}}) {
    try {
      convex_combine(bad, fs);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadWeights);
    }
  }
  const std::vector<GroupFunction> mixed = {GroupFunction::constant(g, 1.0),
                                            GroupFunction::constant(build_named(GroupKind::cyclic(6)), 1.0)};
  try {
    convex_combine(w, mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(Gns, InvariantsAndDimensions) {
  const Fixture f = make("quaternion8");
  for (std::size_t pi = 0; pi < f.table.num_irreps(); ++pi) {
    const GroupFunction chi = GroupFunction::normalized_character(f.g, f.table, pi);
    const GnsRepresentation r = gns(chi);
    EXPECT_LT(r.invariant_defect(chi), 1e-10);
    const int d = f.table.dims[pi];
    EXPECT_EQ(r.dim, d * d);
  }
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const GroupFunction phi = random_state(f.decomp, f.table, rng);
    const GnsRepresentation r = gns(phi);
    EXPECT_LT(r.invariant_defect(phi), 1e-9);
    EXPECT_EQ(r.dim, numerical_rank(gram_matrix(phi), 1e-8));
  }
}

TEST(Extreme, OneDimensionalCharactersAndPureStates) {
  for (const char* kind : {"symmetric:3", "dihedral:4", "quaternion8", "symmetric:4"}) {
    const Fixture f = make(kind);
    for (std::size_t pi = 0; pi < f.table.num_irreps(); ++pi) {
      const ExtremeVerdict v = is_extreme(GroupFunction::normalized_character(f.g, f.table, pi));
      const int d = f.table.dims[pi];
      // chi/d generates pi^(+d): commutant M_d.
      EXPECT_EQ(v.commutant_dimension, d * d) << kind << " " << pi;
      EXPECT_EQ(v.extreme, d == 1);
    }
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
      const GroupFunction a = random_pure_state(f.decomp, rng);
      const GroupFunction b = random_pure_state(f.decomp, rng);
      EXPECT_TRUE(is_extreme(a).extreme);
      if ((a.values - b.values).cwiseAbs().maxCoeff() < 1e-6) continue;
      const double t = rng.uniform(0.1, 0.9);
      EXPECT_FALSE(is_extreme({f.g, t * a.values + (1 - t) * b.values}).extreme);
    }
  }
}

TEST(Commutant, DimensionOfScalarsAndFullAlgebra) {
  const std::vector<CMatrix> identity = {CMatrix::Identity(3, 3)};
  EXPECT_EQ(commutant_dimension(identity, 3, 1e-8), 9);
  CMatrix shift = CMatrix::Zero(3, 3);
  shift(1, 0) = shift(2, 1) = shift(0, 2) = 1.0;
  const std::vector<CMatrix> cyc = {shift};
  EXPECT_EQ(commutant_dimension(cyc, 3, 1e-8), 3);
}
