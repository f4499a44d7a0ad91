#include "vngeom/sampling.hpp"

namespace vngeom {

std::vector<double> dirichlet(std::size_t k, Rng& rng) {
  std::vector<double> w(k);
  double total = 0.0;
  for (double& x : w) total += (x = rng.exponential());
  for (double& x : w) x /= total;
  return w;
}

GroupFunction random_character_mixture(const FiniteGroup& g, const CharacterTable& table, Rng& rng) {
  const auto w = dirichlet(table.num_irreps(), rng);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(g.order()));
  for (std::size_t pi = 0; pi < w.size(); ++pi) v += w[pi] * GroupFunction::normalized_character(g, table, pi).values;
  return {g, v};
}

BlockDensity random_block_density(const std::vector<int>& dims, Rng& rng) {
  const auto w = dirichlet(dims.size(), rng);
  BlockDensity out;
  for (std::size_t pi = 0; pi < dims.size(); ++pi) {
    CMatrix a(dims[pi], dims[pi]);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = rng.complex_normal();
    CMatrix rho = a * a.adjoint();
    rho *= w[pi] / rho.trace().real();
    out.push_back(std::move(rho));
  }
  return out;
}

BlockDensity random_pure_density(const std::vector<int>& dims, Rng& rng) {
  BlockDensity out;
  for (const int d : dims) out.push_back(CMatrix::Zero(d, d));
  const std::size_t pi = rng.index(dims.size());
  CVector v(dims[pi]);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  v.normalize();
  out[pi] = v * v.adjoint();
  return out;
}

GroupFunction random_pure_state(const BlockDecomposition& decomp, Rng& rng) {
  return decomp.function_of(random_pure_density(decomp.dims(), rng));
}

GroupFunction random_state(const BlockDecomposition& decomp, const CharacterTable& table, Rng& rng) {
  switch (rng.index(4)) {
    case 0:
      return decomp.function_of(random_block_density(decomp.dims(), rng));
    case 1:
      return random_pure_state(decomp, rng);
    case 2:
      return random_character_mixture(decomp.group(), table, rng);
    default: {
      // Sparse mixture of a few pure states: boundary points of low rank.
      const std::size_t m = 2 + rng.index(2);
      const auto w = dirichlet(m, rng);
      CVector v = CVector::Zero(static_cast<Eigen::Index>(decomp.group().order()));
      for (double x : w) v += x * random_pure_state(decomp, rng).values;
      return {decomp.group(), v};
    }
  }
}

GroupFunction random_hermitian_symmetric(const FiniteGroup& g, Rng& rng, double spread) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(g.order()));
  for (Elem s = 0; s < g.order(); ++s) {
    const Elem t = g.inv(s);
    if (s == g.identity()) {
      v(s) = 1.0;
    } else if (t == s) {
      v(s) = spread * rng.uniform(-1.0, 1.0);
    } else if (s < t) {
      v(s) = spread * Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      v(t) = std::conj(v(s));
    }
  }
  return {g, v};
}

}  // namespace vngeom
