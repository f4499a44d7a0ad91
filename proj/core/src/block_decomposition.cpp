#include "vngeom/block_decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"

namespace vngeom {

std::vector<int> BlockDecomposition::dims() const {
  std::vector<int> out;
  for (const Block& b : blocks_) out.push_back(b.dim);
  return out;
}

BlockCoordinates BlockDecomposition::to_blocks(const CVector& x) const {
  algebra::require_size(group_, x, "to_blocks");
  const double n = static_cast<double>(group_.order());
  BlockCoordinates out;
  for (const Block& b : blocks_) {
    CMatrix m(b.dim, b.dim);
    for (int j = 0; j < b.dim; ++j) {
      for (int k = 0; k < b.dim; ++k) m(j, k) = n / b.dim * algebra::trace_of_product(group_, b.unit(k, j), x);
    }
    out.push_back(std::move(m));
  }
  return out;
}

CVector BlockDecomposition::from_blocks(const BlockCoordinates& blocks) const {
  if (blocks.size() != blocks_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "wrong number of blocks",
                {{"given", blocks.size()}, {"expected", blocks_.size()}});
  }
  CVector x = CVector::Zero(static_cast<Eigen::Index>(group_.order()));
  for (std::size_t pi = 0; pi < blocks_.size(); ++pi) {
    const Block& b = blocks_[pi];
    if (blocks[pi].rows() != b.dim || blocks[pi].cols() != b.dim) {
      throw Error(ErrorKind::DimensionMismatch, "block has the wrong size",
                  {{"block", pi}, {"rows", blocks[pi].rows()}, {"expected", b.dim}});
    }
    for (int j = 0; j < b.dim; ++j) {
      for (int k = 0; k < b.dim; ++k) x += blocks[pi](j, k) * b.unit(j, k);
    }
  }
  return x;
}

BlockDensity BlockDecomposition::density_of(const GroupFunction& phi) const {
  require_same_group(group_, phi.group, "density_of");
  BlockDensity out;
  for (const Block& b : blocks_) {
    CMatrix m(b.dim, b.dim);
    for (int j = 0; j < b.dim; ++j) {
      for (int k = 0; k < b.dim; ++k) m(k, j) = algebra::trace_of_product(group_, phi.values, b.unit(j, k));
    }
    out.push_back(std::move(m));
  }
  return out;
}

GroupFunction BlockDecomposition::function_of(const BlockDensity& density) const {
  if (density.size() != blocks_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "wrong number of density blocks",
                {{"given", density.size()}, {"expected", blocks_.size()}});
  }
  const double n = static_cast<double>(group_.order());
  CVector v = CVector::Zero(static_cast<Eigen::Index>(group_.order()));
  for (std::size_t pi = 0; pi < blocks_.size(); ++pi) {
    const Block& b = blocks_[pi];
    if (density[pi].rows() != b.dim || density[pi].cols() != b.dim) {
      throw Error(ErrorKind::DimensionMismatch, "density block has the wrong size",
                  {{"block", pi}, {"rows", density[pi].rows()}, {"expected", b.dim}});
    }
    // phi(s) = sum_{jk} (n/d) e_{kj}[s] D(k, j)
    for (int j = 0; j < b.dim; ++j) {
      for (int k = 0; k < b.dim; ++k) v += (n / b.dim) * density[pi](k, j) * b.unit(k, j);
    }
  }
  return {group_, v};
}

double BlockDecomposition::relation_defect(bool exhaustive, std::size_t samples, std::uint64_t seed) const {
  const FiniteGroup& g = group_;
  double worst = 0.0;
  const auto product_defect = [&](const Block& b, int j, int k, int l, int m) {
    CVector expected = CVector::Zero(static_cast<Eigen::Index>(g.order()));
    if (k == l) expected = b.unit(j, m);
    return (algebra::multiply(g, b.unit(j, k), b.unit(l, m)) - expected).cwiseAbs().maxCoeff();
  };
  Rng rng(seed);
  CVector identity_sum = CVector::Zero(static_cast<Eigen::Index>(g.order()));
  for (const Block& b : blocks_) {
    const int d = b.dim;
    for (int j = 0; j < d; ++j) {
      identity_sum += b.unit(j, j);
      for (int k = 0; k < d; ++k) {
        worst = std::max(worst, (algebra::adjoint(g, b.unit(j, k)) - b.unit(k, j)).cwiseAbs().maxCoeff());
      }
    }
    if (exhaustive) {
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            for (int m = 0; m < d; ++m) worst = std::max(worst, product_defect(b, j, k, l, m));
    } else {
      for (std::size_t t = 0; t < samples; ++t) {
        const auto pick = [&] { return static_cast<int>(rng.index(static_cast<std::size_t>(d))); };
        const int j = pick(), k = pick(), m = pick();
        const int l = rng.uniform() < 0.5 ? k : pick();
        worst = std::max(worst, product_defect(b, j, k, l, m));
      }
    }
  }
  worst = std::max(worst, (identity_sum - algebra::unit(g)).cwiseAbs().maxCoeff());
  for (std::size_t a = 0; a < blocks_.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks_.size(); ++b) {
      for (int j = 0; j < blocks_[a].dim; ++j) {
        for (int k = 0; k < blocks_[b].dim; ++k) {
          worst = std::max(worst, algebra::multiply(g, blocks_[a].unit(j, j), blocks_[b].unit(k, k)).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return worst;
}

namespace {

// Splits ascending eigenvalues into clusters of near-equal values.
std::vector<std::vector<Eigen::Index>> cluster(const RVector& values, double tol) {
  std::vector<std::vector<Eigen::Index>> out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (out.empty() || values(i) - values(out.back().back()) > tol) out.emplace_back();
    out.back().push_back(i);
  }
  return out;
}

Block decompose_block(const FiniteGroup& g, std::size_t pi, const CVector& central, int expected_dim,
                      Rng& rng, const DecompositionOptions& options, const Tolerance& tol) {
  const double n = static_cast<double>(g.order());
  Block block;
  block.irrep = pi;

  const HermitianEig proj = hermitian_eig(algebra::regular_image(g, central), tol);
  std::vector<Eigen::Index> range;
  for (Eigen::Index i = 0; i < proj.values.size(); ++i) {
    if (proj.values(i) > 0.5) range.push_back(i);
  }
  const auto rank = static_cast<Eigen::Index>(range.size());
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rank))));
  if (static_cast<Eigen::Index>(d) * d != rank || d < 1) {
    throw Error(ErrorKind::DecompositionFailure, "central block rank is not a perfect square",
                {{"irrep", pi}, {"rank", rank}});
  }
  if (d != expected_dim) {
    throw Error(ErrorKind::DecompositionFailure, "block size disagrees with the character table",
                {{"irrep", pi}, {"found", d}, {"table", expected_dim}});
  }
  block.dim = d;
  if (d == 1) {
    block.units = {central};
    return block;
  }

  CMatrix q(proj.vectors.rows(), rank);
  for (Eigen::Index i = 0; i < rank; ++i) q.col(i) = proj.vectors.col(range[static_cast<std::size_t>(i)]);

  // Minimal projections: spectral projections of p h for random self-adjoint h.
  std::vector<CVector> diagonal;
  for (int attempt = 0; attempt <= options.max_resamples && diagonal.empty(); ++attempt) {
    const CVector x = algebra::multiply(g, central, algebra::random_self_adjoint(g, rng));
    const CMatrix cut = q.adjoint() * algebra::regular_image(g, x) * q;
    const HermitianEig eig = hermitian_eig(cut, tol);
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    const auto groups = cluster(eig.values, 1e-7 * scale);
    bool ok = static_cast<int>(groups.size()) == d;
    for (const auto& c : groups) ok = ok && static_cast<int>(c.size()) == d;
    for (std::size_t c = 1; ok && c < groups.size(); ++c) {
      ok = eig.values(groups[c].front()) - eig.values(groups[c - 1].back()) > 1e-6 * scale;
    }
    if (!ok) continue;
    for (const auto& c : groups) {
      CMatrix v(q.rows(), d);
      for (int i = 0; i < d; ++i) v.col(i) = q * eig.vectors.col(c[static_cast<std::size_t>(i)]);
      diagonal.push_back(algebra::from_regular_image(g, v * v.adjoint()));
    }
  }
  if (diagonal.empty()) {
    throw Error(ErrorKind::DecompositionFailure, "spectral collision in every resample",
                {{"irrep", pi}, {"attempts", options.max_resamples + 1}, {"seed", options.seed}});
  }

  // e_{j0} = e_jj z e_00 / sqrt(c): since e_00 is minimal, y^* y = c e_00.
  std::vector<CVector> column(static_cast<std::size_t>(d));
  column[0] = diagonal[0];
  for (int j = 1; j < d; ++j) {
    for (int attempt = 0; attempt <= options.max_resamples && column[static_cast<std::size_t>(j)].size() == 0; ++attempt) {
      const CVector z = algebra::random_element(g, rng);
      const CVector y = algebra::multiply(g, algebra::multiply(g, diagonal[static_cast<std::size_t>(j)], z), diagonal[0]);
      const double c = algebra::trace(g, algebra::multiply(g, algebra::adjoint(g, y), y)).real() * n / d;
      if (c > 1e-6) column[static_cast<std::size_t>(j)] = y / std::sqrt(c);
    }
    if (column[static_cast<std::size_t>(j)].size() == 0) {
      throw Error(ErrorKind::DecompositionFailure, "could not build a partial isometry",
                  {{"irrep", pi}, {"row", j}});
    }
  }
  block.units.resize(static_cast<std::size_t>(d * d));
  std::vector<CVector> row(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(k)] = algebra::adjoint(g, column[static_cast<std::size_t>(k)]);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      CVector u;
      if (k == 0) {
        u = column[static_cast<std::size_t>(j)];
      } else if (j == 0) {
        u = row[static_cast<std::size_t>(k)];
      } else {
        u = algebra::multiply(g, column[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(k)]);
      }
      block.units[static_cast<std::size_t>(j * d + k)] = std::move(u);
    }
  }
  return block;
}

}  // namespace

BlockDecomposition block_decompose(const FiniteGroup& g, const CharacterTable& table,
                                   const DecompositionOptions& options, const Tolerance& tol) {
  if (table.group_order != g.order()) {
    throw Error(ErrorKind::GroupMismatch, "character table belongs to another group",
                {{"table_order", table.group_order}, {"order", g.order()}});
  }
  if (table.classes.class_of.size() != g.order()) {
    throw Error(ErrorKind::GroupMismatch, "character table belongs to another group", nullptr);
  }
  // Each listed class must be exactly one conjugation orbit.
  std::vector<char> seen(g.order(), 0);
  for (std::size_t c = 0; c < table.class_reps.size(); ++c) {
    std::vector<Elem> stack{table.class_reps[c]};
    seen[table.class_reps[c]] = 1;
    std::size_t size = 0;
    while (!stack.empty()) {
      const Elem s = stack.back();
      stack.pop_back();
      ++size;
      if (table.classes.class_of[s] != c) {
        throw Error(ErrorKind::GroupMismatch, "table classes are not conjugacy classes of this group", {{"element", s}});
      }
      for (const Elem t : g.generators()) {
        const Elem u = g.conjugate(t, s);
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    if (size != table.class_sizes[c]) {
      throw Error(ErrorKind::GroupMismatch, "table classes are not conjugacy classes of this group", {{"class", c}});
    }
  }
  Rng rng(options.seed);
  const auto projections = minimal_central_projections(g, table);
  std::vector<Block> blocks;
  for (std::size_t pi = 0; pi < projections.size(); ++pi) {
    blocks.push_back(decompose_block(g, pi, projections[pi].coeffs, table.dims[pi], rng, options, tol));
  }
  BlockDecomposition out(g, std::move(blocks));
  std::size_t work = 0;
  for (int d : out.dims()) work += static_cast<std::size_t>(d) * d * d * d;
  const bool exhaustive = work * g.order() * g.order() <= 100'000'000;
  const double defect = out.relation_defect(exhaustive, 200, options.seed);
  if (defect > 1e-8) {
    throw Error(ErrorKind::DecompositionFailure, "matrix-unit relations fail",
                {{"defect", defect}, {"seed", options.seed}});
  }
  return out;
}

}  // namespace vngeom
