#include "vngeom/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "vngeom/error.hpp"

namespace vngeom {

namespace {

void require_finite(const CMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorKind::MalformedInput, std::string(what) + ": matrix has non-finite entries");
  }
}

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::MalformedInput, std::string(what) + ": matrix is not square",
                {{"rows", a.rows()}, {"cols", a.cols()}});
  }
}

}  // namespace

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

double Rng::exponential() {
  double u = uniform();
  while (u <= 0.0) u = uniform();
  return -std::log(u);
}

double Tolerance::eig_tol(const CMatrix& a) const {
  if (eig_absolute) return *eig_absolute;
  const double dim = static_cast<double>(std::max<Eigen::Index>(a.rows(), 1));
  // Floor keeps the cutoff strictly positive for the zero matrix.
  return std::max(eig_relative * dim * max_abs(a), 1e-300);
}

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermitian_defect(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "hermitian_eig");
  require_finite(a, "hermitian_eig");
  const double defect = hermitian_defect(a);
  if (defect > tol.residual * std::max(1.0, max_abs(a))) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within residual tolerance",
                {{"defect", defect}, {"residual_tol", tol.residual}});
  }
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "self-adjoint eigensolver did not converge",
                {{"dim", a.rows()}});
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdVerdict is_psd(const CMatrix& a, const Tolerance& tol) {
  PsdVerdict verdict;
  verdict.cutoff = tol.eig_tol(a);
  if (a.size() == 0) {
    verdict.psd = true;
    return verdict;
  }
  const HermitianEig eig = hermitian_eig(a, tol);
  verdict.min_eigenvalue = eig.values(0);
  verdict.psd = verdict.min_eigenvalue >= -verdict.cutoff;
  verdict.undecided = std::abs(verdict.min_eigenvalue) <= 10.0 * verdict.cutoff;
  return verdict;
}

CMatrix polar_unitary(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "polar_unitary");
  require_finite(a, "polar_unitary");
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  if (sv.size() > 0 && sv(sv.size() - 1) <= tol.eig_tol(a)) {
    throw Error(ErrorKind::SingularInput, "polar decomposition of a singular matrix",
                {{"smallest_singular_value", sv(sv.size() - 1)}});
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

double trace_norm(const CMatrix& a) {
  require_finite(a, "trace_norm");
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Index numerical_rank(const CMatrix& a, double cutoff) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(a);
  const RVector& sv = svd.singularValues();
  return static_cast<Eigen::Index>((sv.array() > cutoff).count());
}

CMatrix random_unitary(Eigen::Index n, Rng& rng) {
  CMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

CMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  CMatrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i, i) = rng.normal();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      h(i, j) = rng.complex_normal() / std::sqrt(2.0);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace vngeom
