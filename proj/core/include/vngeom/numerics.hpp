#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "vngeom/random.hpp"

namespace vngeom {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical cutoffs. `eig_tol` defaults to eig_relative * dim * max|entry| of
/// the matrix under test; `eig_absolute` overrides it when set.
struct Tolerance {
  double eig_relative = 1e-9;
  std::optional<double> eig_absolute;
  double residual = 1e-8;

  double eig_tol(const CMatrix& a) const;
  /// Width of the undecided band around zero.
  double undecided_band(const CMatrix& a) const { return 10.0 * eig_tol(a); }
};

struct HermitianEig {
  RVector values;   // ascending
  CMatrix vectors;  // unitary, columns are eigenvectors
};

double max_abs(const CMatrix& a);
/// max |A - A*| entrywise.
double hermitian_defect(const CMatrix& a);

/// Decomposes A = V diag(values) V*. Inputs within `tol.residual` (scaled by
/// max|A|) of Hermitian are symmetrized first; larger defects throw NotHermitian.
HermitianEig hermitian_eig(const CMatrix& a, const Tolerance& tol = {});

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double cutoff = 0.0;     // eig_tol used
  bool undecided = false;  // |min eigenvalue| <= 10 * cutoff
};

PsdVerdict is_psd(const CMatrix& a, const Tolerance& tol = {});

/// Unitary factor U of A = U (A*A)^{1/2}; throws SingularInput when the smallest
/// singular value is below eig_tol.
CMatrix polar_unitary(const CMatrix& a, const Tolerance& tol = {});

/// Sum of singular values.
double trace_norm(const CMatrix& a);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Number of singular values above `cutoff`.
Eigen::Index numerical_rank(const CMatrix& a, double cutoff);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
CMatrix random_unitary(Eigen::Index n, Rng& rng);

/// Random Hermitian matrix with i.i.d. complex normal entries above the diagonal.
CMatrix random_hermitian(Eigen::Index n, Rng& rng);

}  // namespace vngeom
