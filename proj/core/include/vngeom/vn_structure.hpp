#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vngeom/block_decomposition.hpp"
#include "vngeom/characters.hpp"
#include "vngeom/posdef.hpp"

namespace vngeom {

/// Sorted multiset of block dimensions.
struct VNInvariant {
  std::vector<int> dims;

  std::map<int, int> multiplicities() const;
  bool operator==(const VNInvariant&) const = default;
};

VNInvariant invariant_of(const CharacterTable& table);
VNInvariant vn_invariant(const FiniteGroup& g, const CharacterOptions& options = {});

struct IsomorphismVerdict {
  bool isomorphic = false;
  VNInvariant first;
  VNInvariant second;
};

IsomorphismVerdict vn_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const CharacterOptions& options = {});

/// Jordan automorphism of the block algebra: block pi goes to sigma[pi] via
/// D -> u D u^* (or u D^T u^* when transposed), acting on block densities.
struct AffineHomeoDescriptor {
  std::vector<std::size_t> sigma;
  std::vector<CMatrix> unitaries;
  std::vector<bool> transpose;
};

AffineHomeoDescriptor identity_descriptor(const std::vector<int>& dims);
/// Phase of each u fixed so that its first nonzero entry of the first column is
/// real positive; 1x1 blocks get u = 1 and no transpose.
AffineHomeoDescriptor canonicalize(AffineHomeoDescriptor desc);
AffineHomeoDescriptor inverse(const AffineHomeoDescriptor& desc);
/// Random dimension-preserving sigma, Haar unitaries, fair transpose flags on d >= 2.
AffineHomeoDescriptor random_descriptor(const std::vector<int>& dims, Rng& rng);
/// Max over blocks of min_c |u_a - c u_b| with |c| = 1; infinity when sigma or
/// flags differ.
double descriptor_distance(const AffineHomeoDescriptor& a, const AffineHomeoDescriptor& b);

/// Errors: DimensionMismatch.
void require_compatible(const AffineHomeoDescriptor& desc, const std::vector<int>& dims);
BlockDensity apply_descriptor(const AffineHomeoDescriptor& desc, const BlockDensity& density);
GroupFunction apply_descriptor(const AffineHomeoDescriptor& desc, const GroupFunction& phi,
                               const BlockDecomposition& decomp);

/// Affine bijection P1(G) -> P1(H) stored as its linear extension.
struct AffineHomeomorphism {
  FiniteGroup source;
  FiniteGroup target;
  /// matching[pi] is the irrep of H receiving irrep pi of G.
  std::vector<std::size_t> matching;
  CMatrix forward;  // |H| x |G|
  CMatrix backward;  // |G| x |H|

  GroupFunction apply(const GroupFunction& phi) const;
  GroupFunction apply_inverse(const GroupFunction& psi) const;
};

struct HomeomorphismOptions {
  std::uint64_t seed = 0;
};

/// Errors: NotIsomorphic, DecompositionFailure.
AffineHomeomorphism construct_affine_homeomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                   const HomeomorphismOptions& options = {},
                                                   const Tolerance& tol = {});

/// Same as above with decompositions supplied by the caller.
AffineHomeomorphism construct_affine_homeomorphism(const BlockDecomposition& g, const BlockDecomposition& h);

using StateMap = std::function<GroupFunction(const GroupFunction&)>;

struct JordanFitOptions {
  std::uint64_t seed = 0;
  std::size_t affinity_samples = 20;
  std::size_t holdout_samples = 20;
  double fit_tolerance = 1e-7;
};

struct JordanFit {
  AffineHomeoDescriptor descriptor;
  double affinity_residual = 0.0;
  double fit_residual = 0.0;           // worst block residual of the chosen form
  double reproduction_residual = 0.0;  // on held-out states
};

/// Recovers (sigma, u, transpose) from a black-box affine automorphism of P1(G).
/// Errors: NotAffine, FitFailure.
JordanFit verify_jordan_form(const StateMap& map, const BlockDecomposition& decomp,
                             const JordanFitOptions& options = {});

/// Linear map fitted to (input, output) pairs of functions by least squares.
/// Errors: FitFailure (inputs do not span), NotAffine (residual above tolerance).
struct SampledMap {
  FiniteGroup group;
  CMatrix matrix;
  double residual = 0.0;

  GroupFunction operator()(const GroupFunction& phi) const;
};

SampledMap fit_sampled_map(const std::vector<GroupFunction>& inputs, const std::vector<GroupFunction>& outputs,
                           double tolerance = 1e-7);

struct HomeoGroupFactor {
  int dim = 0;
  int multiplicity = 0;
  std::string block_group;  // "trivial" or "PU(d) x| Z/2"
  std::string wreath;       // "S_m"
};

struct HomeoGroupDescription {
  VNInvariant invariant;
  std::vector<HomeoGroupFactor> factors;
  /// prod_d m_d! * 2^(m_d [d >= 2]), in decimal.
  std::string component_count;
  std::string summary;
};

HomeoGroupDescription homeo_group_description(const VNInvariant& invariant);

}  // namespace vngeom
