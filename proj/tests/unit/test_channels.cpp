#include <gtest/gtest.h>

#include "vngeom/channels.hpp"
#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"
#include "vngeom/sampling.hpp"

using namespace vngeom;

namespace {

CVector vec(const CMatrix& m) { return Eigen::Map<const CVector>(m.data(), m.size()); }

}  // namespace

TEST(Channel, CpIffPositiveDefinite) {
  Rng rng(31);
  for (const char* kind : {"cyclic:5", "symmetric:3", "dihedral:4", "quaternion8", "cyclic:2*symmetric:3"}) {
    const FiniteGroup g = build_named(GroupKind::parse(kind));
    int cp = 0;
    for (int i = 0; i < 60; ++i) {
      const GroupFunction phi = random_hermitian_symmetric(g, rng, rng.uniform(0.0, 2.0 / std::sqrt(double(g.order()))));
      const ChoiCertificate c = is_completely_positive(build_channel(phi));
      const PsdVerdict pd = is_positive_definite(phi);
      if (!c.symbol_check.undecided && !pd.undecided) EXPECT_EQ(c.verdict, pd.psd) << kind;
      if (!c.symbol_check.undecided && !c.choi_check.undecided) EXPECT_EQ(c.symbol_check.psd, c.choi_check.psd);
      EXPECT_TRUE(c.choi_dense);
      EXPECT_EQ(c.choi.rows(), static_cast<Eigen::Index>(g.order() * g.order()));
      cp += c.verdict ? 1 : 0;
    }
    EXPECT_GT(cp, 0);
    EXPECT_LT(cp, 60);
  }
}

TEST(Channel, LargeGroupUsesSupportBlock) {
  const FiniteGroup g = build_named(GroupKind::dihedral(18));
  Rng rng(2);
  for (int i = 0; i < 6; ++i) {
    const GroupFunction phi = random_hermitian_symmetric(g, rng, i % 2 == 0 ? 0.02 : 0.4);
    const ChoiCertificate c = is_completely_positive(build_channel(phi));
    EXPECT_FALSE(c.choi_dense);
    EXPECT_EQ(c.verdict, is_positive_definite(phi).psd);
  }
}

TEST(Channel, UnitalIffNormalized) {
  const FiniteGroup g = build_named(GroupKind::quaternion8());
  EXPECT_TRUE(is_unital(build_channel(GroupFunction::constant(g, 1.0))).unital);
  EXPECT_FALSE(is_unital(build_channel(GroupFunction::constant(g, 0.5))).unital);
}

TEST(Channel, ApplyMatchesSuperoperator) {
  const FiniteGroup g = build_named(GroupKind::symmetric(3));
  Rng rng(8);
  const FourierMultiplierChannel ch = build_channel(random_hermitian_symmetric(g, rng));
  const CVector a = algebra::random_element(g, rng);
  const CVector out = vngeom::apply(ch, a);
  for (Elem s = 0; s < g.order(); ++s) EXPECT_EQ(out(s), ch.symbol(s) * a(s));
  const CVector via_super = ch.superoperator() * vec(algebra::regular_image(g, a));
  EXPECT_LT((via_super - vec(algebra::regular_image(g, out))).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(vngeom::apply(ch, CVector::Zero(4)), Error);
}

TEST(Channel, SchurSymbolConvention) {
  const FiniteGroup g = build_named(GroupKind::dihedral(3));
  Rng rng(3);
  const GroupFunction phi = random_hermitian_symmetric(g, rng);
  const CMatrix a = schur_symbol(phi);
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem t = 0; t < g.order(); ++t) EXPECT_EQ(a(s, t), phi(g.mul(s, g.inv(t))));
}

TEST(Channel, ComposeAndPullBack) {
  const FiniteGroup g = build_named(GroupKind::quaternion8());
  const CharacterTable t = character_table(g);
  const BlockDecomposition d = block_decompose(g, t);
  Rng rng(12);
  const GroupFunction phi = random_state(d, t, rng);
  const GroupFunction psi = random_state(d, t, rng);
  const FourierMultiplierChannel c = compose(build_channel(phi), build_channel(psi));
  for (Elem s = 0; s < g.order(); ++s) EXPECT_LT(std::abs(c.symbol(s) - phi(s) * psi(s)), 1e-15);
  // (omega o M_phi)(lambda_s^*) computed directly.
  const NormalState omega = to_state(psi);
  const GroupFunction back = pull_back(build_channel(phi), psi);
  for (Elem s = 0; s < g.order(); ++s) {
    const CVector x = vngeom::apply(build_channel(phi), algebra::adjoint(g, algebra::basis(g, s)));
    EXPECT_LT(std::abs(back(s) - omega.evaluate(x)), 1e-12);
  }
  // Composition of CP channels stays CP (Schur product theorem).
  EXPECT_TRUE(is_completely_positive(c).verdict);
}

TEST(Channel, RejectsNonHermitianSymbol) {
  const FiniteGroup g = build_named(GroupKind::cyclic(3));
  GroupFunction phi{g, CVector::Zero(3)};
  phi.values << 1.0, Complex(0.5, 0.0), Complex(0.0, 0.5);
  try {
    is_completely_positive(build_channel(phi));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitianSymmetric);
  }
}
