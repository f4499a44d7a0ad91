#pragma once

#include <optional>
#include <vector>

#include "vngeom/block_decomposition.hpp"
#include "vngeom/characters.hpp"
#include "vngeom/posdef.hpp"

namespace vngeom {

/// Face(p) = {omega : omega(p) = 1} for a projection p of the group algebra.
struct FaceDescriptor {
  FiniteGroup group;
  CVector coeffs;
  CMatrix matrix;  // regular image of p
  bool is_central = false;
  bool is_split = false;  // closed faces are split exactly when p is central
  /// Irreps summed into p when the face comes from split_faces.
  std::optional<std::vector<std::size_t>> irreps;
  std::size_t num_irreps = 0;
  bool is_minimal = false;
};

/// Errors: NotAProjection (not idempotent or not self-adjoint to residual tolerance).
FaceDescriptor make_face(const FiniteGroup& g, const CVector& coeffs, const Tolerance& tol = {});

struct MembershipVerdict {
  bool member = false;
  Complex pairing;  // omega(p)
};

/// Errors: GroupMismatch, StateOutOfBounds (pairing outside [0, 1]).
MembershipVerdict face_membership(const FaceDescriptor& face, const NormalState& omega, const Tolerance& tol = {});
/// omega(p) = sum_s p[s] phi(s^-1)
Complex pairing(const FaceDescriptor& face, const GroupFunction& phi);

/// All 2^k central projections. Errors: SizeLimitExceeded for k > 20.
std::vector<FaceDescriptor> split_faces(const FiniteGroup& g, const CharacterTable& table, const Tolerance& tol = {});

/// Face(1 - p). Errors: NotCentral.
FaceDescriptor complementary_split_face(const FaceDescriptor& face, const Tolerance& tol = {});

/// q_1 < ... < q_m under one minimal central projection.
struct FaceChain {
  std::size_t irrep = 0;
  std::vector<CVector> projections;
  std::vector<Eigen::Index> ranks;  // rank in the block image
  Eigen::Index rank_bound = 0;      // size of the block image

  std::size_t length() const noexcept { return projections.size(); }
};

struct ChainOptions {
  std::uint64_t seed = 0;
  /// Extra chains built from random unitary frames and checked like the first.
  int trials = 4;
};

/// q_k = sum_{j <= k} e_jj (and rotated copies for each trial), each verified
/// to be a projection, increasing, of strictly increasing rank, with a pure
/// witness state in Face(q_k) outside Face(q_{k-1}). Errors: DecompositionFailure.
FaceChain maximal_chain(const BlockDecomposition& decomp, std::size_t irrep, const ChainOptions& options = {},
                        const Tolerance& tol = {});

std::size_t maximal_chain_length(const FiniteGroup& g, const CharacterTable& table, std::size_t irrep,
                                 const ChainOptions& options = {}, const Tolerance& tol = {});

/// omega = t omega_1 + (1 - t) omega_2 with omega_1 in Face(p), omega_2 in Face(1 - p).
/// A component is absent when its weight vanishes.
struct StateDecomposition {
  double t = 0.0;
  std::optional<GroupFunction> inside;
  std::optional<GroupFunction> outside;
  double residual = 0.0;  // max |t phi_1 + (1-t) phi_2 - phi|
};

/// Errors: NotCentral, GroupMismatch.
StateDecomposition state_decomposition(const GroupFunction& phi, const FaceDescriptor& face, const Tolerance& tol = {});

}  // namespace vngeom
