#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vngeom/error.hpp"
#include "vngeom/group.hpp"

using namespace vngeom;

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

ErrorKind kind_of(const Table& t) {
  try {
    validate_group(t);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::MalformedInput;  // unreachable in the tests that use it
}

Table to_table(const FiniteGroup& g) {
  Table t;
  for (const auto& row : g.cayley_rows()) t.emplace_back(row.begin(), row.end());
  return t;
}

}  // namespace

TEST(ValidateGroup, TrivialGroup) {
  const FiniteGroup g = validate_group({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_TRUE(g.generators().empty());
}

TEST(ValidateGroup, OrderTwo) {
  const FiniteGroup g = validate_group({{0, 1}, {1, 0}});
  EXPECT_EQ(g.inv(0), 0u);
  EXPECT_EQ(g.inv(1), 1u);
}

TEST(ValidateGroup, RepeatedEntryIsNotLatin) {
  try {
    validate_group({{0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLatinSquare);
    EXPECT_EQ(e.witness().at("row"), 1);
  }
}

TEST(ValidateGroup, ShapeErrors) {
  EXPECT_EQ(kind_of({{0, 1}, {1}}), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of({{0, 2}, {1, 0}}), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of({{0, -1}, {1, 0}}), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of({}), ErrorKind::MalformedInput);
}

TEST(ValidateGroup, LatinSquareWithoutIdentity) {
  // x * y = -x - y mod 3
  EXPECT_EQ(kind_of({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), ErrorKind::NoIdentity);
}

TEST(ValidateGroup, NonAssociativeLoopNamesATriple) {
  const Table loop = {{0, 1, 2, 3, 4}, {1, 2, 0, 4, 3}, {2, 4, 3, 0, 1}, {3, 0, 4, 1, 2}, {4, 3, 1, 2, 0}};
  ASSERT_FALSE(oracle::brute_force_associative(loop));
  try {
    validate_group(loop);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.kind(), ErrorKind::NotAssociative);
    const auto t = e.witness().at("triple").get<std::vector<std::size_t>>();
    ASSERT_EQ(t.size(), 3u);
    EXPECT_NE(loop[static_cast<std::size_t>(loop[t[0]][t[1]])][t[2]], loop[t[0]][static_cast<std::size_t>(loop[t[1]][t[2]])]);
  }
}

// Swapping an intercalate keeps a Latin square with identity; associativity
// then has to be decided from scratch.
TEST(ValidateGroup, AssociativityAgreesWithBruteForce) {
  int checked = 0;
  for (const char* kind : {"cyclic:4", "cyclic:6", "cyclic:8", "dihedral:3", "dihedral:4", "quaternion8", "cyclic:2*cyclic:2"}) {
    const Table base = to_table(build_named(GroupKind::parse(kind)));
    const std::size_t n = base.size();
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            if (base[a][c] != base[b][d] || base[a][d] != base[b][c]) continue;
            Table t = base;
            std::swap(t[a][c], t[a][d]);
            std::swap(t[b][c], t[b][d]);
            const bool assoc = oracle::brute_force_associative(t);
            bool accepted = true;
            try {
              validate_group(t);
            } catch (const Error& e) {
              EXPECT_EQ(e.kind(), ErrorKind::NotAssociative);
              accepted = false;
            }
            EXPECT_EQ(accepted, assoc) << kind << " " << a << b << c << d;
            ++checked;
          }
  }
  EXPECT_GT(checked, 20);
}

TEST(BuildNamed, Orders) {
  EXPECT_EQ(build_named(GroupKind::cyclic(7)).order(), 7u);
  EXPECT_EQ(build_named(GroupKind::dihedral(5)).order(), 10u);
  EXPECT_EQ(build_named(GroupKind::quaternion8()).order(), 8u);
  EXPECT_EQ(build_named(GroupKind::symmetric(4)).order(), 24u);
  EXPECT_EQ(build_named(GroupKind::parse("cyclic:2*symmetric:3")).order(), 12u);
  EXPECT_TRUE(build_named(GroupKind::cyclic(4)).is_abelian());
  EXPECT_FALSE(build_named(GroupKind::dihedral(4)).is_abelian());
}

TEST(BuildNamed, QuaternionTableMatchesQuaternionArithmetic) {
  const FiniteGroup q = build_named(GroupKind::quaternion8());
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) EXPECT_EQ(q.label(q.mul(a, b)), oracle::quaternion_product(q.label(a), q.label(b)));
  }
}

TEST(BuildNamed, SizeCapsAndBadKinds) {
  EXPECT_THROW(build_named(GroupKind::cyclic(20), {10}), Error);
  EXPECT_THROW(build_named(GroupKind::symmetric(9)), Error);
  for (const char* bad : {"cyclic", "cyclic:x", "cyclic:0", "torus:3", "q8:2", "*cyclic:2"}) {
    EXPECT_THROW(GroupKind::parse(bad), Error) << bad;
  }
  EXPECT_EQ(GroupKind::parse("d:4").to_string(), "dihedral:4");
  EXPECT_EQ(GroupKind::parse("cyclic:2*q8").to_string(), "cyclic:2*quaternion8");
}

TEST(Permutations, SingleFourCycleIsCyclic) {
  const FiniteGroup g = from_permutation_generators({{1, 2, 3, 0}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Permutations, SquareSymmetriesMatchDihedral) {
  const FiniteGroup g = from_permutation_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(conjugacy_classes(g).num_classes(), 5u);
}

TEST(Permutations, SizeLimit) {
  try {
    from_permutation_generators({{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, {50});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimitExceeded);
  }
  EXPECT_THROW(from_permutation_generators({{0, 0, 1}}), Error);
  EXPECT_THROW(from_permutation_generators({{0, 1}, {0, 1, 2}}), Error);
}

TEST(Conjugacy, AgreesWithBruteForceOnSmallGroups) {
  for (const std::string& kind : oracle::small_group_kinds()) {
    const FiniteGroup g = build_named(GroupKind::parse(kind));
    const ConjugacyPartition p = conjugacy_classes(g);
    std::set<std::set<Elem>> got;
    for (const auto& c : p.classes) got.insert(std::set<Elem>(c.begin(), c.end()));
    EXPECT_EQ(got, oracle::brute_force_classes(g)) << kind;
    ASSERT_EQ(p.classes.front(), std::vector<Elem>{g.identity()}) << kind;
    for (std::size_t i = 0; i < p.num_classes(); ++i) {
      EXPECT_EQ(p.class_sizes[i], p.classes[i].size());
      for (Elem s : p.classes[i]) EXPECT_EQ(p.class_of[s], i);
    }
    for (std::size_t i = 2; i < p.num_classes(); ++i) {
      EXPECT_LT(*std::min_element(p.classes[i - 1].begin(), p.classes[i - 1].end()),
                *std::min_element(p.classes[i].begin(), p.classes[i].end()));
    }
  }
}

TEST(Conjugacy, AbelianClassesAreSingletons) {
  const ConjugacyPartition p = conjugacy_classes(build_named(GroupKind::cyclic(4)));
  EXPECT_EQ(p.num_classes(), 4u);
  for (auto s : p.class_sizes) EXPECT_EQ(s, 1u);
}

TEST(Conjugacy, ClassCounts) {
  EXPECT_EQ(conjugacy_classes(build_named(GroupKind::symmetric(3))).num_classes(), 3u);
  EXPECT_EQ(conjugacy_classes(build_named(GroupKind::quaternion8())).num_classes(), 5u);
  EXPECT_EQ(conjugacy_classes(build_named(GroupKind::dihedral(4))).num_classes(), 5u);
  EXPECT_EQ(conjugacy_classes(build_named(GroupKind::symmetric(4))).num_classes(), 5u);
}

TEST(RegularRepresentation, IsAHomomorphismIntoPermutationMatrices) {
  const FiniteGroup g = build_named(GroupKind::dihedral(3));
  for (Elem s = 0; s < g.order(); ++s) {
    const CMatrix ls = regular_representation(g, s);
    EXPECT_NEAR((ls.adjoint() * ls - CMatrix::Identity(6, 6)).norm(), 0.0, 1e-15);
    for (Elem t = 0; t < g.order(); ++t) {
      EXPECT_EQ(ls(g.mul(s, t), t), Complex(1.0));
      EXPECT_NEAR((ls * regular_representation(g, t) - regular_representation(g, g.mul(s, t))).norm(), 0.0, 1e-15);
    }
  }
  EXPECT_THROW(regular_representation(g, 6), Error);
}

TEST(DirectProduct, OrderAndIdentity) {
  const FiniteGroup g = direct_product(build_named(GroupKind::cyclic(2)), build_named(GroupKind::symmetric(3)));
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(conjugacy_classes(g).num_classes(), 6u);
  EXPECT_TRUE(g.same_as(build_named(GroupKind::parse("cyclic:2*symmetric:3"))));
}
