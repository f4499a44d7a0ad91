#include <gtest/gtest.h>

#include "vngeom/convexity.hpp"
#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"
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

bool member(const FaceDescriptor& f, const GroupFunction& phi) { return face_membership(f, to_state(phi)).member; }

}  // namespace

TEST(Faces, WholeAndEmpty) {
  const Fixture f = make("symmetric:3");
  const FaceDescriptor all = make_face(f.g, algebra::unit(f.g));
  const FaceDescriptor none = make_face(f.g, CVector::Zero(6));
  EXPECT_TRUE(all.is_central);
  EXPECT_TRUE(all.is_split);
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    const GroupFunction phi = random_state(f.decomp, f.table, rng);
    EXPECT_TRUE(member(all, phi));
    EXPECT_FALSE(member(none, phi));
  }
}

TEST(Faces, OrderTwoCharacters) {
  const FiniteGroup g = build_named(GroupKind::cyclic(2));
  CVector plus(2), minus(2);
  plus << 0.5, 0.5;
  minus << 0.5, -0.5;
  const GroupFunction one = GroupFunction::constant(g, 1.0);
  EXPECT_TRUE(member(make_face(g, plus), one));
  EXPECT_FALSE(member(make_face(g, minus), one));
}

TEST(Faces, NotAProjection) {
  const FiniteGroup g = build_named(GroupKind::cyclic(3));
  CVector x(3);
  x << 0.5, 0.5, 0.0;
  try {
    make_face(g, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAProjection);
  }
}

TEST(Faces, StateOutOfBounds) {
  const FiniteGroup g = build_named(GroupKind::cyclic(2));
  CVector plus(2);
  plus << 0.5, 0.5;
  // A density that is not positive pairs outside [0, 1].
  NormalState fake{g, CVector::Zero(2), CMatrix::Zero(2, 2)};
  fake.density << 1.0, 2.0;
  try {
    face_membership(make_face(g, plus), fake);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StateOutOfBounds);
  }
}

TEST(SplitFaces, CountsAndMinimality) {
  const Fixture z2 = make("cyclic:2");
  EXPECT_EQ(split_faces(z2.g, z2.table).size(), 4u);
  const Fixture q8 = make("quaternion8");
  const auto faces = split_faces(q8.g, q8.table);
  ASSERT_EQ(faces.size(), 32u);
  int minimal = 0;
  for (const auto& f : faces) {
    minimal += f.is_minimal ? 1 : 0;
    EXPECT_TRUE(f.is_central);
    EXPECT_EQ(f.is_split, f.is_central);
  }
  EXPECT_EQ(minimal, 5);
}

TEST(SplitFaces, OrderAndDisjointness) {
  const Fixture f = make("quaternion8");
  const auto faces = split_faces(f.g, f.table);
  Rng rng(6);
  std::vector<GroupFunction> states;
  for (int i = 0; i < 40; ++i) states.push_back(random_state(f.decomp, f.table, rng));
  // Pure states in single blocks are members of the faces that contain them.
  for (int i = 0; i < 20; ++i) states.push_back(random_pure_state(f.decomp, rng));
  std::vector<std::vector<bool>> in(faces.size());
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (const auto& s : states) in[a].push_back(member(faces[a], s));
  for (std::size_t a = 0; a < faces.size(); ++a) {
    for (std::size_t b = 0; b < faces.size(); ++b) {
      for (std::size_t i = 0; i < states.size(); ++i) {
        if ((a & b) == a && in[a][i]) EXPECT_TRUE(in[b][i]);  // S subset T
        if ((a & b) == 0 && a != 0 && b != 0) EXPECT_FALSE(in[a][i] && in[b][i]);
      }
    }
  }
  int pure_hits = 0;
  for (std::size_t i = 40; i < states.size(); ++i)
    for (std::size_t a = 0; a < faces.size(); ++a) pure_hits += faces[a].is_minimal && in[a][i] ? 1 : 0;
  EXPECT_EQ(pure_hits, 20);
}

TEST(Complement, InvolutionAndExamples) {
  const Fixture f = make("quaternion8");
  const auto faces = split_faces(f.g, f.table);
  const FaceDescriptor whole = faces.back();
  const FaceDescriptor empty = complementary_split_face(whole);
  EXPECT_LT(empty.coeffs.cwiseAbs().maxCoeff(), 1e-12);
  for (const auto& face : faces) {
    const FaceDescriptor twice = complementary_split_face(complementary_split_face(face));
    EXPECT_LT((twice.coeffs - face.coeffs).cwiseAbs().maxCoeff(), 1e-12);
  }
  // The 2-dim block is the last irrep; its complement is the sum of the four linear characters' blocks.
  const FaceDescriptor block = faces[std::size_t{1} << 4];
  ASSERT_EQ(*block.irreps, std::vector<std::size_t>{4});
  const FaceDescriptor comp = complementary_split_face(block);
  EXPECT_EQ(*comp.irreps, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_LT((comp.coeffs - faces[15].coeffs).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Complement, NotCentral) {
  const Fixture f = make("dihedral:4");
  const FaceDescriptor e11 = make_face(f.g, f.decomp.blocks()[4].unit(0, 0));
  EXPECT_FALSE(e11.is_central);
  try {
    complementary_split_face(e11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCentral);
  }
  EXPECT_THROW(state_decomposition(GroupFunction::delta_e(f.g), e11), Error);
}

TEST(Complement, UniqueFreeConvexSum) {
  const Fixture f = make("quaternion8");
  const auto faces = split_faces(f.g, f.table);
  Rng rng(13);
  std::vector<GroupFunction> states;
  for (int i = 0; i < 15; ++i) states.push_back(random_state(f.decomp, f.table, rng));
  for (int i = 0; i < 15; ++i) states.push_back(random_pure_state(f.decomp, rng));
  for (std::size_t s = 1; s + 1 < faces.size(); ++s) {
    int matches = 0;
    for (std::size_t q = 0; q < faces.size(); ++q) {
      // q works when every state splits with its remainder in Face(q) and the faces are disjoint.
      bool ok = true;
      for (const auto& phi : states) {
        const StateDecomposition d = state_decomposition(phi, faces[s]);
        if (d.outside && !member(faces[q], *d.outside)) ok = false;
        if (member(faces[s], phi) && member(faces[q], phi)) ok = false;
      }
      if (ok) {
        ++matches;
        EXPECT_EQ(q, faces.size() - 1 - s);
      }
    }
    EXPECT_EQ(matches, 1);
  }
}

TEST(Chains, LengthsMatchDimensions) {
  for (const char* kind : {"cyclic:4", "symmetric:3", "dihedral:4", "quaternion8", "symmetric:4"}) {
    const Fixture f = make(kind);
    for (std::size_t pi = 0; pi < f.table.num_irreps(); ++pi) {
      const FaceChain c = maximal_chain(f.decomp, pi);
      EXPECT_EQ(c.length(), static_cast<std::size_t>(f.table.dims[pi])) << kind << " " << pi;
      EXPECT_EQ(c.rank_bound, f.table.dims[pi]);
      for (std::size_t k = 0; k < c.length(); ++k) EXPECT_EQ(c.ranks[k], static_cast<Eigen::Index>(k + 1));
      EXPECT_EQ(maximal_chain_length(f.g, f.table, pi), static_cast<std::size_t>(f.table.dims[pi]));
    }
  }
  const Fixture f = make("cyclic:3");
  EXPECT_THROW(maximal_chain(f.decomp, 3), Error);
}

TEST(StateDecomposition, ReconstructsRandomStates) {
  const Fixture f = make("quaternion8");
  const auto faces = split_faces(f.g, f.table);
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const GroupFunction phi = random_state(f.decomp, f.table, rng);
    const FaceDescriptor& face = faces[1 + rng.index(faces.size() - 2)];
    const StateDecomposition d = state_decomposition(phi, face);
    EXPECT_LT(d.residual, 1e-10);
    EXPECT_NEAR(d.t, pairing(face, phi).real(), 1e-12);
    if (d.inside) EXPECT_TRUE(member(face, *d.inside));
    if (d.outside) EXPECT_TRUE(member(complementary_split_face(face), *d.outside));
  }
}

TEST(StateDecomposition, Degenerate) {
  const Fixture f = make("cyclic:2");
  const auto faces = split_faces(f.g, f.table);
  const GroupFunction trivial = GroupFunction::constant(f.g, 1.0);
  const StateDecomposition inside = state_decomposition(trivial, faces[1]);
  EXPECT_NEAR(inside.t, 1.0, 1e-15);
  ASSERT_TRUE(inside.inside);
  EXPECT_FALSE(inside.outside);
  EXPECT_LT((inside.inside->values - trivial.values).cwiseAbs().maxCoeff(), 1e-15);
  const StateDecomposition half = state_decomposition(GroupFunction::delta_e(f.g), faces[1]);
  EXPECT_NEAR(half.t, 0.5, 1e-15);
  ASSERT_TRUE(half.inside && half.outside);
  EXPECT_LT((half.inside->values - trivial.values).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(half.outside->values(1).real(), -1.0, 1e-15);
}
