#pragma once

#include <cstdint>
#include <vector>

#include "vngeom/characters.hpp"
#include "vngeom/posdef.hpp"

namespace vngeom {

/// Matrix units e^pi_{jk} of one simple summand, stored as group-algebra
/// coefficient vectors.
struct Block {
  std::size_t irrep = 0;
  int dim = 0;
  std::vector<CVector> units;  // row-major d x d

  const CVector& unit(int j, int k) const { return units[static_cast<std::size_t>(j * dim + k)]; }
};

/// Block density matrices of a functional: blocks[pi](k, j) = omega(e^pi_{jk}),
/// so that omega(x) = sum_pi tr(blocks[pi] X^pi).
using BlockDensity = std::vector<CMatrix>;
/// Block coordinates X^pi of an algebra element.
using BlockCoordinates = std::vector<CMatrix>;

class BlockDecomposition {
 public:
  BlockDecomposition(FiniteGroup group, std::vector<Block> blocks)
      : group_(std::move(group)), blocks_(std::move(blocks)) {}

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  std::vector<int> dims() const;

  /// x -> (X^pi) with X^pi_{jk} = (|G|/d) tau(e^pi_{kj} x).
  BlockCoordinates to_blocks(const CVector& x) const;
  /// (X^pi) -> sum X^pi_{jk} e^pi_{jk}.
  CVector from_blocks(const BlockCoordinates& blocks) const;

  /// Function phi (read as the functional s -> omega(lambda_s^*)) to block densities.
  BlockDensity density_of(const GroupFunction& phi) const;
  /// Inverse of density_of.
  GroupFunction function_of(const BlockDensity& density) const;

  /// Largest violation of the matrix-unit relations. `exhaustive` checks every
  /// product within each block; otherwise `samples` random triples per block.
  double relation_defect(bool exhaustive = true, std::size_t samples = 200, std::uint64_t seed = 0) const;

 private:
  FiniteGroup group_;
  std::vector<Block> blocks_;
};

struct DecompositionOptions {
  std::uint64_t seed = 0;
  int max_resamples = 20;
};

/// Builds matrix units from spectral projections of a random self-adjoint
/// element cut down to each central block. The block size is found from the
/// eigenvalue clusters and cross-checked against the table.
/// Errors: DecompositionFailure.
BlockDecomposition block_decompose(const FiniteGroup& g, const CharacterTable& table,
                                   const DecompositionOptions& options = {}, const Tolerance& tol = {});

}  // namespace vngeom
