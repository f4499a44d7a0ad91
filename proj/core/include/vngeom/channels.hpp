#pragma once

#include "vngeom/posdef.hpp"

namespace vngeom {

/// The Fourier multiplier M_phi(lambda_s) = phi(s) lambda_s. The symbol need not
/// be positive definite; certificates record what it is.
struct FourierMultiplierChannel {
  FiniteGroup group;
  GroupFunction symbol;

  /// Diagonal of the action on group-algebra coefficients.
  const CVector& coefficient_action() const { return symbol.values; }
  /// The action on vec(L(a)) for a in C[G] (column-major vec), |G|^2 x |G|^2:
  /// sum_s phi(s) vec(lambda_s) vec(lambda_s)^* / |G|.
  CMatrix superoperator() const;
};

FourierMultiplierChannel build_channel(const GroupFunction& phi);

CVector apply(const FourierMultiplierChannel& ch, const CVector& a);

struct UnitalVerdict {
  bool unital = false;
  double identity_deviation = 0.0;  // |phi(e) - 1|
  double image_deviation = 0.0;     // max |M(1) - 1|
};

UnitalVerdict is_unital(const FourierMultiplierChannel& ch, const Tolerance& tol = {});

/// Both CP checks: the Schur symbol A(s, t) = phi(s t^-1) and the explicit Choi
/// matrix of the Schur multiplier X -> A o X on M_|G|.
struct ChoiCertificate {
  CMatrix schur_symbol;
  CMatrix choi;  // empty when |G| exceeds the dense Choi limit
  bool verdict = false;
  double min_eigenvalue = 0.0;  // of the symbol
  PsdVerdict symbol_check;
  PsdVerdict choi_check;
  bool choi_dense = true;
};

struct CpOptions {
  /// Above this order the Choi check runs on the support rows of the Choi matrix.
  std::size_t dense_choi_limit = 32;
};

/// Errors: NotHermitianSymmetric, InternalDisagreement (the two checks disagree
/// outside the undecided band).
ChoiCertificate is_completely_positive(const FourierMultiplierChannel& ch, const Tolerance& tol = {},
                                       const CpOptions& options = {});

/// Symbol is the pointwise product.
FourierMultiplierChannel compose(const FourierMultiplierChannel& first, const FourierMultiplierChannel& second);

/// omega o M_phi as a function: s -> omega(M_phi(lambda_s^*)).
GroupFunction pull_back(const FourierMultiplierChannel& ch, const GroupFunction& state_function);

/// A(s, t) = phi(s t^-1)
CMatrix schur_symbol(const GroupFunction& phi);

}  // namespace vngeom
