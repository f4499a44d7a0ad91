#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vngeom/group.hpp"
#include "vngeom/numerics.hpp"

namespace vngeom {

/// a[i][j][l] with C_i C_j = sum_l a[i][j][l] C_l for class sums C.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t k) : k_(k), data_(k * k * k, 0) {}

  std::size_t num_classes() const noexcept { return k_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return data_[(i * k_ + j) * k_ + l]; }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t l) { return data_[(i * k_ + j) * k_ + l]; }

  /// Matrix of multiplication by C_i on the centre, in the class-sum basis.
  Eigen::MatrixXd multiplication_matrix(std::size_t i) const;

 private:
  std::size_t k_;
  std::vector<std::int64_t> data_;
};

StructureConstants class_sum_structure_constants(const FiniteGroup& g, const ConjugacyPartition& classes);

/// Irreducible characters on class representatives. Irreps are sorted by
/// dimension, then by character row (descending); index 0 is the trivial
/// representation.
struct CharacterTable {
  std::vector<int> dims;
  CMatrix chars;  // chars(pi, c) = chi_pi(class_reps[c])
  std::vector<std::size_t> class_sizes;
  std::vector<Elem> class_reps;
  ConjugacyPartition classes;
  std::size_t group_order = 0;

  std::size_t num_irreps() const noexcept { return dims.size(); }
  /// chi_pi(s) for an arbitrary element.
  Complex value(std::size_t pi, Elem s) const { return chars(static_cast<Eigen::Index>(pi), static_cast<Eigen::Index>(classes.class_of[s])); }
  /// max |<chi_pi, chi_rho> - delta| over all pairs.
  double orthogonality_defect() const;
};

struct CharacterOptions {
  std::uint64_t seed = 0;
  int max_resamples = 20;
  double gap_relative = 1e-6;
};

/// Common-eigenvector method on the class-sum multiplication matrices.
/// Errors: DegenerateSpectrum, ConvergenceFailure.
CharacterTable character_table(const FiniteGroup& g, const CharacterOptions& options = {});

/// Group-algebra projection. `irrep` is empty for aggregate sums.
struct CentralProjection {
  CVector coeffs;
  std::optional<std::size_t> irrep;
  CMatrix matrix;  // regular image
};

/// p_pi = (d_pi / |G|) sum_s conj(chi_pi(s)) lambda_s, one per irrep.
std::vector<CentralProjection> minimal_central_projections(const FiniteGroup& g, const CharacterTable& table);

}  // namespace vngeom
