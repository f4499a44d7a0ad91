#pragma once

#include <span>
#include <vector>

#include "vngeom/characters.hpp"
#include "vngeom/group.hpp"
#include "vngeom/numerics.hpp"

namespace vngeom {

/// A complex function on a finite group, values[s] = phi(s).
struct GroupFunction {
  FiniteGroup group;
  CVector values;

  Complex operator()(Elem s) const { return values(s); }
  Complex at_identity() const { return values(group.identity()); }

  static GroupFunction constant(const FiniteGroup& g, Complex c);
  /// Point mass at the identity.
  static GroupFunction delta_e(const FiniteGroup& g);
  /// chi_pi / d_pi.
  static GroupFunction normalized_character(const FiniteGroup& g, const CharacterTable& table, std::size_t pi);
};

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what);

/// max_s |phi(s^-1) - conj(phi(s))|
double hermitian_symmetry_defect(const GroupFunction& phi);
void require_hermitian_symmetric(const GroupFunction& phi, const Tolerance& tol);

/// Entry (j, k) = phi(s_k^-1 s_j) over all elements, in index order.
CMatrix gram_matrix(const GroupFunction& phi);

/// Positive definiteness of phi via its Gram matrix. Throws NotHermitianSymmetric.
PsdVerdict is_positive_definite(const GroupFunction& phi, const Tolerance& tol = {});

/// Throws NotHermitianSymmetric, NotNormalized or NotPositiveDefinite unless phi
/// lies in P1(G).
void require_p1(const GroupFunction& phi, const Tolerance& tol);

/// Normal state omega(x) = tau(density x) with density = sum_s phi(s) lambda_s.
struct NormalState {
  FiniteGroup group;
  CVector density;
  CMatrix gram;  // regular image of the density, entry (t, u) = phi(t u^-1)

  /// omega(x) for a group-algebra element x.
  Complex evaluate(const CVector& x) const;
};

NormalState to_state(const GroupFunction& phi, const Tolerance& tol = {});
/// phi(s) = omega(lambda_s^*)
GroupFunction from_state(const NormalState& omega);

/// Norm of the Fourier algebra: (1/|G|) * trace norm of the Gram matrix.
double a_norm(const GroupFunction& phi, const Tolerance& tol = {});

/// Pointwise affine combination of P1 functions. Errors: BadWeights, GroupMismatch.
GroupFunction convex_combine(std::span<const double> weights, std::span<const GroupFunction> functions,
                             const Tolerance& tol = {});

struct GnsRepresentation {
  FiniteGroup group;
  Eigen::Index dim = 0;
  std::vector<CMatrix> rep;  // rep[s], unitary dim x dim
  CVector cyclic_vector;

  /// Largest deviation of the representation invariants (homomorphism,
  /// unitarity, <rep(s) xi, xi> = phi(s)).
  double invariant_defect(const GroupFunction& phi) const;
};

GnsRepresentation gns(const GroupFunction& phi, const Tolerance& tol = {});

struct ExtremeVerdict {
  bool extreme = false;
  Eigen::Index commutant_dimension = 0;
  Eigen::Index gns_dimension = 0;
};

/// Extreme in P1(G) iff the GNS representation is irreducible, i.e. its
/// commutant is one-dimensional.
ExtremeVerdict is_extreme(const GroupFunction& phi, const Tolerance& tol = {});

/// Dimension of {X : X R = R X for all R in reps}.
Eigen::Index commutant_dimension(std::span<const CMatrix> reps, Eigen::Index dim, double cutoff);

}  // namespace vngeom
