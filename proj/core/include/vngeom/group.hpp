#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vngeom/numerics.hpp"

namespace vngeom {

/// Dense element index 0..n-1.
using Elem = std::uint32_t;
using Permutation = std::vector<Elem>;

struct SizeLimits {
  std::size_t max_order = 10000;
};

/// A finite group given by its Cayley table. Immutable; copies share storage.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  std::size_t order() const noexcept { return data_->order; }
  Elem identity() const noexcept { return data_->identity; }
  Elem mul(Elem a, Elem b) const noexcept { return data_->cayley[a * data_->order + b]; }
  Elem inv(Elem a) const noexcept { return data_->inverses[a]; }
  /// s t s^-1
  Elem conjugate(Elem s, Elem t) const noexcept { return mul(mul(s, t), inv(s)); }

  std::span<const Elem> row(Elem a) const noexcept {
    return {data_->cayley.data() + a * data_->order, data_->order};
  }
  std::span<const Elem> inverses() const noexcept { return data_->inverses; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::string label(Elem a) const;

  /// A generating set found greedily in index order; empty for the trivial group.
  const std::vector<Elem>& generators() const noexcept { return data_->generators; }

  bool is_abelian() const;
  /// Same Cayley table (labels ignored).
  bool same_as(const FiniteGroup& other) const noexcept;

  std::vector<std::vector<Elem>> cayley_rows() const;

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> cayley;
    Elem identity = 0;
    std::vector<Elem> inverses;
    std::vector<std::string> labels;
    std::vector<Elem> generators;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>&,
                                    std::vector<std::string>);
};

/// Checks the table and builds the group. Errors: MalformedInput (not square or
/// entries out of range), NotLatinSquare, NoIdentity, NotAssociative; each names
/// the offending row/column/triple in its witness.
FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& cayley,
                           std::vector<std::string> labels = {});

/// Named isomorphism types understood by build_named.
struct GroupKind {
  enum class Family { Cyclic, Dihedral, Quaternion8, Symmetric, DirectProduct };

  Family family = Family::Cyclic;
  unsigned n = 1;
  std::vector<GroupKind> factors;  // DirectProduct only

  static GroupKind cyclic(unsigned n) { return {Family::Cyclic, n, {}}; }
  /// Symmetry group of the n-gon, order 2n.
  static GroupKind dihedral(unsigned n) { return {Family::Dihedral, n, {}}; }
  static GroupKind quaternion8() { return {Family::Quaternion8, 8, {}}; }
  static GroupKind symmetric(unsigned n) { return {Family::Symmetric, n, {}}; }
  static GroupKind direct_product(GroupKind a, GroupKind b) {
    return {Family::DirectProduct, 0, {std::move(a), std::move(b)}};
  }

  /// "cyclic:4", "dihedral:4", "quaternion8" (or "q8"), "symmetric:3",
  /// products joined with '*' such as "cyclic:2*cyclic:2".
  static GroupKind parse(std::string_view text);
  std::string to_string() const;
};

FiniteGroup build_named(const GroupKind& kind, const SizeLimits& limits = {});

/// Closure of the generated permutation group (composition (p*q)(i) = p(q(i))).
FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators,
                                        const SizeLimits& limits = {});

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct ConjugacyPartition {
  std::vector<std::vector<Elem>> classes;  // class 0 is {e}; others ordered by least element
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_sizes;

  std::size_t num_classes() const noexcept { return classes.size(); }
};

ConjugacyPartition conjugacy_classes(const FiniteGroup& g);

/// Matrix of the left translation lambda_s in the basis of point masses:
/// column t has its single 1 in row s*t.
CMatrix regular_representation(const FiniteGroup& g, Elem s);

}  // namespace vngeom
