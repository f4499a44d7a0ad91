#include "vngeom/channels.hpp"

#include <algorithm>
#include <cmath>

#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"

namespace vngeom {

namespace {

// Choi matrix sum_{ij} E_ij (x) S(E_ij) of a linear map S on n x n matrices.
template <typename Map>
CMatrix choi_matrix(Eigen::Index n, Map&& map) {
  CMatrix choi = CMatrix::Zero(n * n, n * n);
  CMatrix unit = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      unit(i, j) = 1.0;
      choi.block(i * n, j * n, n, n) = map(unit);
      unit(i, j) = 0.0;
    }
  }
  return choi;
}

}  // namespace

CMatrix FourierMultiplierChannel::superoperator() const {
  const auto n = static_cast<Eigen::Index>(group.order());
  CMatrix op = CMatrix::Zero(n * n, n * n);
  for (Elem s = 0; s < group.order(); ++s) {
    const CMatrix lambda = regular_representation(group, s);
    const CVector v = lambda.reshaped();
    op.noalias() += symbol(s) * v * v.adjoint();
  }
  return op / static_cast<double>(n);
}

FourierMultiplierChannel build_channel(const GroupFunction& phi) {
  algebra::require_size(phi.group, phi.values, "build_channel");
  if (!phi.values.allFinite()) throw Error(ErrorKind::MalformedInput, "symbol has non-finite values");
  return {phi.group, phi};
}

CVector apply(const FourierMultiplierChannel& ch, const CVector& a) {
  if (static_cast<std::size_t>(a.size()) != ch.group.order()) {
    throw Error(ErrorKind::GroupMismatch, "element does not live on the channel's group",
                {{"length", a.size()}, {"order", ch.group.order()}});
  }
  return ch.symbol.values.cwiseProduct(a);
}

UnitalVerdict is_unital(const FourierMultiplierChannel& ch, const Tolerance& tol) {
  UnitalVerdict v;
  v.identity_deviation = std::abs(ch.symbol.at_identity() - Complex(1.0));
  const CVector one = algebra::unit(ch.group);
  v.image_deviation = (apply(ch, one) - one).cwiseAbs().maxCoeff();
  v.unital = v.identity_deviation <= tol.residual && v.image_deviation <= tol.residual;
  return v;
}

CMatrix schur_symbol(const GroupFunction& phi) {
  const FiniteGroup& g = phi.group;
  const auto n = static_cast<Eigen::Index>(g.order());
  CMatrix a(n, n);
  for (Elem s = 0; s < g.order(); ++s) {
    for (Elem t = 0; t < g.order(); ++t) a(s, t) = phi(g.mul(s, g.inv(t)));
  }
  return a;
}

ChoiCertificate is_completely_positive(const FourierMultiplierChannel& ch, const Tolerance& tol,
                                       const CpOptions& options) {
  require_hermitian_symmetric(ch.symbol, tol);
  ChoiCertificate cert;
  cert.schur_symbol = schur_symbol(ch.symbol);
  cert.symbol_check = is_psd(cert.schur_symbol, tol);
  cert.min_eigenvalue = cert.symbol_check.min_eigenvalue;

  const auto n = static_cast<Eigen::Index>(ch.group.order());
  const CMatrix& a = cert.schur_symbol;
  const auto schur = [&a](const CMatrix& x) -> CMatrix { return a.cwiseProduct(x); };
  if (ch.group.order() <= options.dense_choi_limit) {
    cert.choi = choi_matrix(n, schur);
    cert.choi_check = is_psd(cert.choi, tol);
  } else {
    // Only rows/columns i*n+i of the Choi matrix can be nonzero; assemble
    // that principal block entry by entry from the map's action.
    cert.choi_dense = false;
    CMatrix support(n, n);
    CMatrix unit = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        unit(i, j) = 1.0;
        support(i, j) = schur(unit)(i, j);
        unit(i, j) = 0.0;
      }
    }
    cert.choi_check = is_psd(support, tol);
  }
  cert.verdict = cert.symbol_check.psd;
  if (cert.symbol_check.psd != cert.choi_check.psd && !cert.symbol_check.undecided && !cert.choi_check.undecided) {
    throw Error(ErrorKind::InternalDisagreement, "symbol and Choi checks disagree",
                {{"symbol_min_eigenvalue", cert.symbol_check.min_eigenvalue},
                 {"choi_min_eigenvalue", cert.choi_check.min_eigenvalue}});
  }
  return cert;
}

FourierMultiplierChannel compose(const FourierMultiplierChannel& first, const FourierMultiplierChannel& second) {
  require_same_group(first.group, second.group, "compose");
  return {first.group, {first.group, first.symbol.values.cwiseProduct(second.symbol.values)}};
}

GroupFunction pull_back(const FourierMultiplierChannel& ch, const GroupFunction& state_function) {
  require_same_group(ch.group, state_function.group, "pull_back");
  const FiniteGroup& g = ch.group;
  CVector v(static_cast<Eigen::Index>(g.order()));
  for (Elem s = 0; s < g.order(); ++s) {
    // omega(M(lambda_{s^-1})) = phi(s^-1) omega(lambda_{s^-1}) = phi(s^-1) psi(s)
    v(s) = ch.symbol(g.inv(s)) * state_function(s);
  }
  return {g, v};
}

}  // namespace vngeom
