#include "vngeom/posdef.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"

namespace vngeom {

GroupFunction GroupFunction::constant(const FiniteGroup& g, Complex c) {
  return {g, CVector::Constant(static_cast<Eigen::Index>(g.order()), c)};
}

GroupFunction GroupFunction::delta_e(const FiniteGroup& g) { return {g, algebra::unit(g)}; }

GroupFunction GroupFunction::normalized_character(const FiniteGroup& g, const CharacterTable& table, std::size_t pi) {
  CVector v(static_cast<Eigen::Index>(g.order()));
  for (Elem s = 0; s < g.order(); ++s) v(s) = table.value(pi, s) / static_cast<double>(table.dims.at(pi));
  return {g, v};
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what) {
  if (!a.same_as(b)) {
    throw Error(ErrorKind::GroupMismatch, std::string(what) + ": operands live on different groups",
                {{"orders", {a.order(), b.order()}}});
  }
}

double hermitian_symmetry_defect(const GroupFunction& phi) {
  algebra::require_size(phi.group, phi.values, "hermitian_symmetry_defect");
  double worst = 0.0;
  for (Elem s = 0; s < phi.group.order(); ++s) {
    worst = std::max(worst, std::abs(phi(phi.group.inv(s)) - std::conj(phi(s))));
  }
  return worst;
}

void require_hermitian_symmetric(const GroupFunction& phi, const Tolerance& tol) {
  if (!phi.values.allFinite()) {
    throw Error(ErrorKind::MalformedInput, "function has non-finite values");
  }
  const double defect = hermitian_symmetry_defect(phi);
  if (defect > tol.residual) {
    Elem worst = 0;
    double worst_defect = -1.0;
    for (Elem s = 0; s < phi.group.order(); ++s) {
      const double d = std::abs(phi(phi.group.inv(s)) - std::conj(phi(s)));
      if (d > worst_defect) {
        worst_defect = d;
        worst = s;
      }
    }
    throw Error(ErrorKind::NotHermitianSymmetric, "phi(s^-1) != conj(phi(s))",
                {{"element", worst}, {"defect", defect}});
  }
}

CMatrix gram_matrix(const GroupFunction& phi) {
  algebra::require_size(phi.group, phi.values, "gram_matrix");
  const FiniteGroup& g = phi.group;
  const auto n = static_cast<Eigen::Index>(g.order());
  CMatrix m(n, n);
  for (Elem k = 0; k < g.order(); ++k) {
    const auto row = g.row(g.inv(k));
    for (Elem j = 0; j < g.order(); ++j) m(j, k) = phi(row[j]);
  }
  return m;
}

PsdVerdict is_positive_definite(const GroupFunction& phi, const Tolerance& tol) {
  require_hermitian_symmetric(phi, tol);
  return is_psd(gram_matrix(phi), tol);
}

void require_p1(const GroupFunction& phi, const Tolerance& tol) {
  require_hermitian_symmetric(phi, tol);
  const Complex at_e = phi.at_identity();
  if (std::abs(at_e - Complex(1.0)) > tol.residual) {
    throw Error(ErrorKind::NotNormalized, "phi(e) != 1",
                {{"phi_e", {at_e.real(), at_e.imag()}}});
  }
  const PsdVerdict verdict = is_psd(gram_matrix(phi), tol);
  if (!verdict.psd) {
    throw Error(ErrorKind::NotPositiveDefinite, "Gram matrix has a negative eigenvalue",
                {{"min_eigenvalue", verdict.min_eigenvalue}, {"eig_tol", verdict.cutoff}});
  }
}

Complex NormalState::evaluate(const CVector& x) const {
  return algebra::trace_of_product(group, density, x);
}

NormalState to_state(const GroupFunction& phi, const Tolerance& tol) {
  require_p1(phi, tol);
  NormalState omega{phi.group, phi.values, algebra::regular_image(phi.group, phi.values)};
  for (Elem s = 0; s < phi.group.order(); ++s) {
    const Complex back = omega.evaluate(algebra::adjoint(phi.group, algebra::basis(phi.group, s)));
    if (std::abs(back - phi(s)) > tol.residual) {
      throw Error(ErrorKind::ConvergenceFailure, "state does not reproduce phi",
                  {{"element", s}, {"deviation", std::abs(back - phi(s))}});
    }
  }
  return omega;
}

GroupFunction from_state(const NormalState& omega) {
  const FiniteGroup& g = omega.group;
  CVector v(static_cast<Eigen::Index>(g.order()));
  for (Elem s = 0; s < g.order(); ++s) {
    // lambda_s^* = lambda_{s^-1}
    v(s) = omega.evaluate(algebra::basis(g, g.inv(s)));
  }
  return {g, v};
}

double a_norm(const GroupFunction& phi, const Tolerance& tol) {
  require_hermitian_symmetric(phi, tol);
  return trace_norm(gram_matrix(phi)) / static_cast<double>(phi.group.order());
}

GroupFunction convex_combine(std::span<const double> weights, std::span<const GroupFunction> functions,
                             const Tolerance& tol) {
  if (weights.size() != functions.size() || weights.empty()) {
    throw Error(ErrorKind::BadWeights, "need one weight per function",
                {{"weights", weights.size()}, {"functions", functions.size()}});
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const bool negative = std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); });
  if (negative || std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::BadWeights, "weights must be a probability vector",
                {{"weights", std::vector<double>(weights.begin(), weights.end())}, {"sum", total}});
  }
  const FiniteGroup& g = functions.front().group;
  CVector acc = CVector::Zero(static_cast<Eigen::Index>(g.order()));
  for (std::size_t i = 0; i < functions.size(); ++i) {
    require_same_group(g, functions[i].group, "convex_combine");
    require_p1(functions[i], tol);
    acc += weights[i] * functions[i].values;
  }
  return {g, acc};
}

double GnsRepresentation::invariant_defect(const GroupFunction& phi) const {
  const FiniteGroup& g = group;
  double worst = 0.0;
  const CMatrix id = CMatrix::Identity(dim, dim);
  worst = std::max(worst, max_abs(rep[g.identity()] - id));
  for (Elem s = 0; s < g.order(); ++s) {
    worst = std::max(worst, max_abs(rep[s].adjoint() * rep[s] - id));
    const Complex coeff = cyclic_vector.dot(rep[s] * cyclic_vector);  // xi^* rep(s) xi
    worst = std::max(worst, std::abs(coeff - phi(s)));
    for (Elem t : g.generators()) {
      worst = std::max(worst, max_abs(rep[s] * rep[t] - rep[g.mul(s, t)]));
    }
  }
  return worst;
}

GnsRepresentation gns(const GroupFunction& phi, const Tolerance& tol) {
  require_p1(phi, tol);
  const FiniteGroup& g = phi.group;
  const auto n = static_cast<Eigen::Index>(g.order());

  // Form <delta_s, delta_t> = phi(t^-1 s): K(t, s) = phi(t^-1 s), the transpose
  // of the Gram matrix. Pi(g) delta_s = delta_{gs} and xi = delta_e.
  const CMatrix form = gram_matrix(phi).transpose();
  const HermitianEig eig = hermitian_eig(form, tol);
  const double cutoff = tol.eig_tol(form);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eig.values(i) > cutoff) keep.push_back(i);
  }
  const auto r = static_cast<Eigen::Index>(keep.size());
  // Columns of `basis` are coefficient vectors of an orthonormal basis of the
  // quotient by the null space.
  CMatrix basis(n, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    basis.col(i) = eig.vectors.col(keep[static_cast<std::size_t>(i)]) / std::sqrt(eig.values(keep[static_cast<std::size_t>(i)]));
  }
  const CMatrix coords = basis.adjoint() * form;  // r x n, coordinates of delta_s

  GnsRepresentation out;
  out.group = g;
  out.dim = r;
  out.rep.reserve(g.order());
  CMatrix shifted(n, r);
  for (Elem s = 0; s < g.order(); ++s) {
    const auto row = g.row(s);
    for (Elem t = 0; t < g.order(); ++t) shifted.row(row[t]) = basis.row(t);
    out.rep.push_back(coords * shifted);
  }
  out.cyclic_vector = coords.col(g.identity());
  return out;
}

Eigen::Index commutant_dimension(std::span<const CMatrix> reps, Eigen::Index dim, double cutoff) {
  const Eigen::Index d2 = dim * dim;
  if (reps.empty()) return d2;
  const CMatrix id = CMatrix::Identity(dim, dim);
  // vec(X R - R X) = (R^T (x) I - I (x) R) vec(X); null space of the stacked system.
  CMatrix normal = CMatrix::Zero(d2, d2);
  for (const CMatrix& r : reps) {
    const CMatrix a = kron(r.transpose(), id) - kron(id, r);
    normal.noalias() += a.adjoint() * a;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(normal, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "commutant eigensolver failed", {{"dim", dim}});
  }
  return static_cast<Eigen::Index>((solver.eigenvalues().array() <= cutoff).count());
}

ExtremeVerdict is_extreme(const GroupFunction& phi, const Tolerance& tol) {
  const GnsRepresentation rep = gns(phi, tol);
  std::vector<CMatrix> gens;
  for (Elem s : phi.group.generators()) gens.push_back(rep.rep[s]);
  ExtremeVerdict v;
  v.gns_dimension = rep.dim;
  v.commutant_dimension = commutant_dimension(gens, rep.dim, tol.residual * std::max<std::size_t>(1, gens.size()));
  v.extreme = v.commutant_dimension == 1;
  return v;
}

}  // namespace vngeom
