#include "vngeom/vn_structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "vngeom/error.hpp"
#include "vngeom/sampling.hpp"

namespace vngeom {

namespace {

nlohmann::json to_json(const VNInvariant& inv) { return inv.dims; }

BlockDensity zero_density(const std::vector<int>& dims) {
  BlockDensity out;
  for (const int d : dims) out.push_back(CMatrix::Zero(d, d));
  return out;
}

double max_deviation(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

std::map<int, int> VNInvariant::multiplicities() const {
  std::map<int, int> m;
  for (const int d : dims) ++m[d];
  return m;
}

VNInvariant invariant_of(const CharacterTable& table) {
  VNInvariant inv{table.dims};
  std::sort(inv.dims.begin(), inv.dims.end());
  return inv;
}

VNInvariant vn_invariant(const FiniteGroup& g, const CharacterOptions& options) {
  return invariant_of(character_table(g, options));
}

IsomorphismVerdict vn_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const CharacterOptions& options) {
  IsomorphismVerdict v;
  v.first = vn_invariant(g, options);
  v.second = vn_invariant(h, options);
  v.isomorphic = v.first == v.second;
  return v;
}

AffineHomeoDescriptor identity_descriptor(const std::vector<int>& dims) {
  AffineHomeoDescriptor desc;
  for (std::size_t pi = 0; pi < dims.size(); ++pi) {
    desc.sigma.push_back(pi);
    desc.unitaries.push_back(CMatrix::Identity(dims[pi], dims[pi]));
    desc.transpose.push_back(false);
  }
  return desc;
}

AffineHomeoDescriptor canonicalize(AffineHomeoDescriptor desc) {
  for (std::size_t pi = 0; pi < desc.unitaries.size(); ++pi) {
    CMatrix& u = desc.unitaries[pi];
    if (u.rows() == 1) {
      u = CMatrix::Identity(1, 1);
      desc.transpose[pi] = false;
      continue;
    }
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      if (std::abs(u(i, 0)) > 1e-9) {
        u *= std::conj(u(i, 0)) / std::abs(u(i, 0));
        break;
      }
    }
  }
  return desc;
}

AffineHomeoDescriptor inverse(const AffineHomeoDescriptor& desc) {
  AffineHomeoDescriptor inv = desc;
  for (std::size_t pi = 0; pi < desc.sigma.size(); ++pi) {
    const std::size_t rho = desc.sigma[pi];
    inv.sigma[rho] = pi;
    // D' = u D u^*  =>  D = u^* D' u;   D' = u D^T u^*  =>  D = u^T D'^T conj(u).
    inv.unitaries[rho] = desc.transpose[pi] ? CMatrix(desc.unitaries[pi].transpose()) : CMatrix(desc.unitaries[pi].adjoint());
    inv.transpose[rho] = desc.transpose[pi];
  }
  return canonicalize(std::move(inv));
}

AffineHomeoDescriptor random_descriptor(const std::vector<int>& dims, Rng& rng) {
  AffineHomeoDescriptor desc = identity_descriptor(dims);
  std::map<int, std::vector<std::size_t>> by_dim;
  for (std::size_t pi = 0; pi < dims.size(); ++pi) by_dim[dims[pi]].push_back(pi);
  for (auto& [d, members] : by_dim) {
    std::vector<std::size_t> image = members;
    for (std::size_t i = image.size(); i > 1; --i) std::swap(image[i - 1], image[rng.index(i)]);
    for (std::size_t i = 0; i < members.size(); ++i) desc.sigma[members[i]] = image[i];
    for (const std::size_t pi : members) {
      if (d >= 2) {
        desc.unitaries[pi] = random_unitary(d, rng);
        desc.transpose[pi] = rng.uniform() < 0.5;
      }
    }
  }
  return canonicalize(std::move(desc));
}

double descriptor_distance(const AffineHomeoDescriptor& a, const AffineHomeoDescriptor& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a.sigma != b.sigma || a.unitaries.size() != b.unitaries.size()) return inf;
  double worst = 0.0;
  for (std::size_t pi = 0; pi < a.unitaries.size(); ++pi) {
    const CMatrix& ua = a.unitaries[pi];
    const CMatrix& ub = b.unitaries[pi];
    if (ua.rows() != ub.rows()) return inf;
    if (ua.rows() >= 2 && a.transpose[pi] != b.transpose[pi]) return inf;
    const Complex overlap = (ub.adjoint() * ua).trace();
    const Complex c = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    worst = std::max(worst, max_abs(ua - c * ub));
  }
  return worst;
}

void require_compatible(const AffineHomeoDescriptor& desc, const std::vector<int>& dims) {
  const std::size_t k = dims.size();
  if (desc.sigma.size() != k || desc.unitaries.size() != k || desc.transpose.size() != k) {
    throw Error(ErrorKind::DimensionMismatch, "descriptor has the wrong number of blocks",
                {{"blocks", k}, {"sigma", desc.sigma.size()}, {"unitaries", desc.unitaries.size()},
                 {"transpose", desc.transpose.size()}});
  }
  std::vector<bool> hit(k, false);
  for (std::size_t pi = 0; pi < k; ++pi) {
    const std::size_t rho = desc.sigma[pi];
    if (rho >= k || hit[rho] || dims[rho] != dims[pi]) {
      throw Error(ErrorKind::DimensionMismatch, "sigma is not a dimension-preserving permutation",
                  {{"block", pi}, {"image", rho}});
    }
    hit[rho] = true;
    const CMatrix& u = desc.unitaries[pi];
    if (u.rows() != dims[pi] || u.cols() != dims[pi]) {
      throw Error(ErrorKind::DimensionMismatch, "unitary has the wrong size",
                  {{"block", pi}, {"rows", u.rows()}, {"cols", u.cols()}, {"dim", dims[pi]}});
    }
    const double defect = max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
    if (defect > 1e-8) {
      throw Error(ErrorKind::DimensionMismatch, "block map is not unitary", {{"block", pi}, {"defect", defect}});
    }
  }
}

BlockDensity apply_descriptor(const AffineHomeoDescriptor& desc, const BlockDensity& density) {
  std::vector<int> dims;
  for (const CMatrix& m : density) dims.push_back(static_cast<int>(m.rows()));
  require_compatible(desc, dims);
  BlockDensity out(density.size());
  for (std::size_t pi = 0; pi < density.size(); ++pi) {
    const CMatrix& u = desc.unitaries[pi];
    const CMatrix d = desc.transpose[pi] ? CMatrix(density[pi].transpose()) : density[pi];
    out[desc.sigma[pi]] = u * d * u.adjoint();
  }
  return out;
}

GroupFunction apply_descriptor(const AffineHomeoDescriptor& desc, const GroupFunction& phi,
                               const BlockDecomposition& decomp) {
  require_compatible(desc, decomp.dims());
  return decomp.function_of(apply_descriptor(desc, decomp.density_of(phi)));
}

GroupFunction AffineHomeomorphism::apply(const GroupFunction& phi) const {
  require_same_group(source, phi.group, "AffineHomeomorphism::apply");
  return {target, forward * phi.values};
}

GroupFunction AffineHomeomorphism::apply_inverse(const GroupFunction& psi) const {
  require_same_group(target, psi.group, "AffineHomeomorphism::apply_inverse");
  return {source, backward * psi.values};
}

AffineHomeomorphism construct_affine_homeomorphism(const BlockDecomposition& g, const BlockDecomposition& h) {
  std::vector<int> dg = g.dims();
  std::vector<int> dh = h.dims();
  VNInvariant ig{dg};
  VNInvariant ih{dh};
  std::sort(ig.dims.begin(), ig.dims.end());
  std::sort(ih.dims.begin(), ih.dims.end());
  if (!(ig == ih)) {
    throw Error(ErrorKind::NotIsomorphic, "block dimensions differ", {{"first", to_json(ig)}, {"second", to_json(ih)}});
  }
  AffineHomeomorphism t;
  t.source = g.group();
  t.target = h.group();
  // Match blocks of equal size in index order.
  std::map<int, std::vector<std::size_t>> free;
  for (std::size_t rho = 0; rho < dh.size(); ++rho) free[dh[rho]].push_back(rho);
  for (auto& [d, list] : free) std::reverse(list.begin(), list.end());
  for (std::size_t pi = 0; pi < dg.size(); ++pi) {
    auto& list = free[dg[pi]];
    t.matching.push_back(list.back());
    list.pop_back();
  }
  std::vector<std::size_t> back(dh.size());
  for (std::size_t pi = 0; pi < dg.size(); ++pi) back[t.matching[pi]] = pi;

  const auto transfer = [](const BlockDecomposition& from, const BlockDecomposition& to,
                           const std::vector<std::size_t>& match) {
    const auto n_from = static_cast<Eigen::Index>(from.group().order());
    const auto n_to = static_cast<Eigen::Index>(to.group().order());
    CMatrix m(n_to, n_from);
    for (Eigen::Index s = 0; s < n_from; ++s) {
      const BlockDensity src = from.density_of({from.group(), CVector::Unit(n_from, s)});
      BlockDensity dst(src.size());
      for (std::size_t pi = 0; pi < src.size(); ++pi) dst[match[pi]] = src[pi];
      m.col(s) = to.function_of(dst).values;
    }
    return m;
  };
  t.forward = transfer(g, h, t.matching);
  t.backward = transfer(h, g, back);
  return t;
}

AffineHomeomorphism construct_affine_homeomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                   const HomeomorphismOptions& options, const Tolerance& tol) {
  const CharacterTable tg = character_table(g, {options.seed, 20, 1e-6});
  const CharacterTable th = character_table(h, {options.seed, 20, 1e-6});
  const VNInvariant ig = invariant_of(tg);
  const VNInvariant ih = invariant_of(th);
  if (!(ig == ih)) {
    throw Error(ErrorKind::NotIsomorphic, "block dimensions differ", {{"first", to_json(ig)}, {"second", to_json(ih)}});
  }
  return construct_affine_homeomorphism(block_decompose(g, tg, {options.seed, 20}, tol),
                                        block_decompose(h, th, {options.seed, 20}, tol));
}

JordanFit verify_jordan_form(const StateMap& map, const BlockDecomposition& decomp, const JordanFitOptions& options) {
  const std::vector<int> dims = decomp.dims();
  const std::size_t k = dims.size();
  const auto n = static_cast<Eigen::Index>(decomp.group().order());
  Rng rng(options.seed);
  JordanFit fit;

  const auto image = [&](const GroupFunction& phi) {
    GroupFunction out = map(phi);
    if (out.values.size() != n) {
      throw Error(ErrorKind::NotAffine, "map changes the group", {{"input_order", n}, {"output_order", out.values.size()}});
    }
    return out;
  };
  const auto sample = [&] {
    return rng.uniform() < 0.5 ? decomp.function_of(random_block_density(dims, rng))
                               : decomp.function_of(random_pure_density(dims, rng));
  };

  for (std::size_t i = 0; i < options.affinity_samples; ++i) {
    const GroupFunction a = sample();
    const GroupFunction b = sample();
    const double t = rng.uniform();
    const CVector lhs = image({a.group, t * a.values + (1.0 - t) * b.values}).values;
    const CVector rhs = t * image(a).values + (1.0 - t) * image(b).values;
    fit.affinity_residual = std::max(fit.affinity_residual, max_deviation(lhs, rhs));
  }
  if (fit.affinity_residual > options.fit_tolerance) {
    throw Error(ErrorKind::NotAffine, "map does not preserve mixtures",
                {{"residual", fit.affinity_residual}, {"seed", options.seed}});
  }

  AffineHomeoDescriptor desc = identity_descriptor(dims);
  std::vector<bool> taken(k, false);
  for (std::size_t pi = 0; pi < k; ++pi) {
    const int d = dims[pi];
    const auto pure = [&](const CVector& v) {
      BlockDensity in = zero_density(dims);
      in[pi] = v * v.adjoint();
      return decomp.density_of(image(decomp.function_of(in)));
    };
    const auto basis = [&](int j) { return CVector::Unit(d, j); };

    // sigma: the block carrying the image of a state supported on block pi.
    const BlockDensity first = pure(basis(0));
    std::size_t rho = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < k; ++r) {
      const double tr = first[r].trace().real();
      if (tr > best) {
        best = tr;
        rho = r;
      }
    }
    if (best < 1.0 - 1e-6 || taken[rho] || dims[rho] != d) {
      throw Error(ErrorKind::FitFailure, "minimal split face is not mapped onto a minimal split face",
                  {{"block", pi}, {"image", rho}, {"weight", best}});
    }
    taken[rho] = true;
    desc.sigma[pi] = rho;
    if (d == 1) {
      fit.fit_residual = std::max(fit.fit_residual, std::abs(first[rho](0, 0) - Complex(1.0)));
      continue;
    }

    // Linear extension on matrix units by polarization.
    std::vector<BlockDensity> diag(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) diag[static_cast<std::size_t>(j)] = j == 0 ? first : pure(basis(j));
    std::vector<CMatrix> phi(static_cast<std::size_t>(d * d));
    const auto at = [&](int j, int l) -> CMatrix& { return phi[static_cast<std::size_t>(j * d + l)]; };
    for (int j = 0; j < d; ++j) at(j, j) = diag[static_cast<std::size_t>(j)][rho];
    const double r2 = std::sqrt(0.5);
    for (int j = 0; j < d; ++j) {
      for (int l = j + 1; l < d; ++l) {
        const CMatrix base = at(j, j) + at(l, l);
        const CMatrix a = 2.0 * pure(r2 * (basis(j) + basis(l)))[rho] - base;
        const CMatrix b = 2.0 * pure(r2 * (basis(j) + Complex(0, 1) * basis(l)))[rho] - base;
        at(j, l) = 0.5 * (a + Complex(0, 1) * b);
        at(l, j) = 0.5 * (a - Complex(0, 1) * b);
      }
    }

    const HermitianEig top = hermitian_eig(at(0, 0));
    const CVector u0 = top.vectors.col(d - 1);
    const auto candidate = [&](bool transposed, double& residual) {
      CMatrix u(d, d);
      u.col(0) = u0;
      for (int j = 1; j < d; ++j) u.col(j) = (transposed ? at(0, j) : at(j, 0)) * u0;
      try {
        u = polar_unitary(u);
      } catch (const Error&) {
        residual = std::numeric_limits<double>::infinity();
        return u;
      }
      residual = 0.0;
      for (int j = 0; j < d; ++j) {
        for (int l = 0; l < d; ++l) {
          const CMatrix predicted = transposed ? CMatrix(u.col(l) * u.col(j).adjoint()) : CMatrix(u.col(j) * u.col(l).adjoint());
          residual = std::max(residual, max_abs(at(j, l) - predicted));
        }
      }
      return u;
    };
    double plain_residual = 0.0;
    double transposed_residual = 0.0;
    const CMatrix plain = candidate(false, plain_residual);
    const CMatrix transposed = candidate(true, transposed_residual);
    if (plain_residual < options.fit_tolerance) {
      desc.unitaries[pi] = plain;
      fit.fit_residual = std::max(fit.fit_residual, plain_residual);
    } else if (transposed_residual < options.fit_tolerance) {
      desc.unitaries[pi] = transposed;
      desc.transpose[pi] = true;
      fit.fit_residual = std::max(fit.fit_residual, transposed_residual);
    } else {
      throw Error(ErrorKind::FitFailure, "block map is neither u.u^* nor u.^T u^*",
                  {{"block", pi}, {"plain_residual", plain_residual}, {"transposed_residual", transposed_residual}});
    }
  }
  fit.descriptor = canonicalize(std::move(desc));

  for (std::size_t i = 0; i < options.holdout_samples; ++i) {
    const GroupFunction phi = sample();
    const double r = max_deviation(apply_descriptor(fit.descriptor, phi, decomp).values, image(phi).values);
    fit.reproduction_residual = std::max(fit.reproduction_residual, r);
  }
  if (fit.reproduction_residual > options.fit_tolerance) {
    throw Error(ErrorKind::FitFailure, "fitted descriptor does not reproduce the map",
                {{"residual", fit.reproduction_residual}, {"seed", options.seed}});
  }
  return fit;
}

GroupFunction SampledMap::operator()(const GroupFunction& phi) const {
  require_same_group(group, phi.group, "SampledMap");
  return {group, matrix * phi.values};
}

SampledMap fit_sampled_map(const std::vector<GroupFunction>& inputs, const std::vector<GroupFunction>& outputs,
                           double tolerance) {
  if (inputs.empty() || inputs.size() != outputs.size()) {
    throw Error(ErrorKind::FitFailure, "need matching nonempty input and output samples",
                {{"inputs", inputs.size()}, {"outputs", outputs.size()}});
  }
  const FiniteGroup& g = inputs.front().group;
  const auto n = static_cast<Eigen::Index>(g.order());
  const auto m = static_cast<Eigen::Index>(inputs.size());
  CMatrix x(n, m);
  CMatrix y(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& in = inputs[static_cast<std::size_t>(i)];
    const auto& out = outputs[static_cast<std::size_t>(i)];
    require_same_group(g, in.group, "fit_sampled_map");
    require_same_group(g, out.group, "fit_sampled_map");
    x.col(i) = in.values;
    y.col(i) = out.values;
  }
  const Eigen::Index rank = numerical_rank(x, 1e-9 * std::max(1.0, max_abs(x)) * static_cast<double>(n));
  if (rank < n) {
    throw Error(ErrorKind::FitFailure, "input samples do not span the function space",
                {{"rank", rank}, {"needed", n}, {"samples", m}});
  }
  SampledMap out;
  out.group = g;
  const CMatrix xt = x.transpose();
  const CMatrix yt = y.transpose();
  out.matrix = xt.completeOrthogonalDecomposition().solve(yt).transpose();
  out.residual = max_abs(out.matrix * x - y);
  if (out.residual > tolerance) {
    throw Error(ErrorKind::NotAffine, "samples are not consistent with a linear map",
                {{"residual", out.residual}, {"tolerance", tolerance}});
  }
  return out;
}

HomeoGroupDescription homeo_group_description(const VNInvariant& invariant) {
  using boost::multiprecision::cpp_int;
  HomeoGroupDescription out;
  out.invariant = invariant;
  cpp_int count = 1;
  std::ostringstream summary;
  bool first = true;
  for (const auto& [d, m] : invariant.multiplicities()) {
    HomeoGroupFactor f;
    f.dim = d;
    f.multiplicity = m;
    f.block_group = d == 1 ? "trivial" : "PU(" + std::to_string(d) + ") x| Z/2";
    f.wreath = "S_" + std::to_string(m);
    for (int i = 2; i <= m; ++i) count *= i;
    if (d >= 2) count <<= m;
    if (!first) summary << " x ";
    first = false;
    summary << "(" << f.block_group << ") wr " << f.wreath;
    out.factors.push_back(std::move(f));
  }
  out.component_count = count.str();
  out.summary = summary.str();
  return out;
}

}  // namespace vngeom
