#pragma once

#include "vngeom/block_decomposition.hpp"
#include "vngeom/characters.hpp"
#include "vngeom/posdef.hpp"

namespace vngeom {

/// Dirichlet(1, ..., 1) weights of length k.
std::vector<double> dirichlet(std::size_t k, Rng& rng);

/// Dirichlet mixture of the normalized irreducible characters.
GroupFunction random_character_mixture(const FiniteGroup& g, const CharacterTable& table, Rng& rng);

/// Random full-rank block density (W W^* per block, Dirichlet block weights).
BlockDensity random_block_density(const std::vector<int>& dims, Rng& rng);

/// Vector state of a random unit vector in a uniformly chosen block.
BlockDensity random_pure_density(const std::vector<int>& dims, Rng& rng);

GroupFunction random_pure_state(const BlockDecomposition& decomp, Rng& rng);

/// Element of P1(G) drawn from a mix of the three families above: interior
/// points, pure states and character mixtures.
GroupFunction random_state(const BlockDecomposition& decomp, const CharacterTable& table, Rng& rng);

/// Random Hermitian-symmetric function (phi(s^-1) = conj(phi(s))) with phi(e) = 1,
/// not necessarily positive definite.
GroupFunction random_hermitian_symmetric(const FiniteGroup& g, Rng& rng, double spread = 1.0);

}  // namespace vngeom
