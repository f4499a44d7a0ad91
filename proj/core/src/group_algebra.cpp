#include "vngeom/group_algebra.hpp"

#include "vngeom/error.hpp"

namespace vngeom::algebra {

void require_size(const FiniteGroup& g, const CVector& a, const char* what) {
  if (static_cast<std::size_t>(a.size()) != g.order()) {
    throw Error(ErrorKind::GroupMismatch, std::string(what) + ": coefficient vector has the wrong length",
                {{"length", a.size()}, {"order", g.order()}});
  }
}

CVector unit(const FiniteGroup& g) { return basis(g, g.identity()); }

CVector basis(const FiniteGroup& g, Elem s) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(g.order()));
  v(s) = 1.0;
  return v;
}

CVector multiply(const FiniteGroup& g, const CVector& a, const CVector& b) {
  require_size(g, a, "multiply");
  require_size(g, b, "multiply");
  const std::size_t n = g.order();
  CVector out = CVector::Zero(static_cast<Eigen::Index>(n));
  for (Elem s = 0; s < n; ++s) {
    const Complex as = a(s);
    if (as == Complex(0.0)) continue;
    const auto row = g.row(s);
    for (Elem t = 0; t < n; ++t) out(row[t]) += as * b(t);
  }
  return out;
}

CVector adjoint(const FiniteGroup& g, const CVector& a) {
  require_size(g, a, "adjoint");
  CVector out(a.size());
  for (Elem s = 0; s < g.order(); ++s) out(s) = std::conj(a(g.inv(s)));
  return out;
}

Complex trace(const FiniteGroup& g, const CVector& a) {
  require_size(g, a, "trace");
  return a(g.identity());
}

Complex trace_of_product(const FiniteGroup& g, const CVector& a, const CVector& b) {
  require_size(g, a, "trace_of_product");
  require_size(g, b, "trace_of_product");
  Complex sum = 0.0;
  for (Elem s = 0; s < g.order(); ++s) sum += a(s) * b(g.inv(s));
  return sum;
}

CMatrix regular_image(const FiniteGroup& g, const CVector& a) {
  require_size(g, a, "regular_image");
  const auto n = static_cast<Eigen::Index>(g.order());
  CMatrix m = CMatrix::Zero(n, n);
  for (Elem s = 0; s < g.order(); ++s) {
    const auto row = g.row(s);
    for (Elem c = 0; c < g.order(); ++c) m(row[c], c) += a(s);
  }
  return m;
}

CVector from_regular_image(const FiniteGroup& g, const CMatrix& m) {
  return m.col(g.identity());
}

CVector random_element(const FiniteGroup& g, Rng& rng) {
  CVector v(static_cast<Eigen::Index>(g.order()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return v;
}

CVector random_self_adjoint(const FiniteGroup& g, Rng& rng) {
  const CVector a = random_element(g, rng);
  return 0.5 * (a + adjoint(g, a));
}

}  // namespace vngeom::algebra
