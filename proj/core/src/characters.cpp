#include "vngeom/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"

namespace vngeom {

Eigen::MatrixXd StructureConstants::multiplication_matrix(std::size_t i) const {
  const auto k = static_cast<Eigen::Index>(k_);
  Eigen::MatrixXd m(k, k);
  for (std::size_t j = 0; j < k_; ++j) {
    for (std::size_t l = 0; l < k_; ++l) m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j)) = static_cast<double>((*this)(i, j, l));
  }
  return m;
}

StructureConstants class_sum_structure_constants(const FiniteGroup& g, const ConjugacyPartition& classes) {
  const std::size_t k = classes.num_classes();
  StructureConstants a(k);
  // a[i][j][l] counts x in C_i with x^-1 z in C_j, for a fixed z in C_l.
  for (std::size_t l = 0; l < k; ++l) {
    const Elem z = classes.classes[l].front();
    for (Elem x = 0; x < g.order(); ++x) {
      const std::size_t i = classes.class_of[x];
      const std::size_t j = classes.class_of[g.mul(g.inv(x), z)];
      ++a(i, j, l);
    }
  }
  return a;
}

double CharacterTable::orthogonality_defect() const {
  const auto k = static_cast<Eigen::Index>(num_irreps());
  double worst = 0.0;
  for (Eigen::Index p = 0; p < k; ++p) {
    for (Eigen::Index r = 0; r < k; ++r) {
      Complex sum = 0.0;
      for (Eigen::Index c = 0; c < chars.cols(); ++c) {
        sum += static_cast<double>(class_sizes[static_cast<std::size_t>(c)]) * chars(p, c) * std::conj(chars(r, c));
      }
      sum /= static_cast<double>(group_order);
      worst = std::max(worst, std::abs(sum - Complex(p == r ? 1.0 : 0.0)));
    }
  }
  return worst;
}

CharacterTable character_table(const FiniteGroup& g, const CharacterOptions& options) {
  CharacterTable table;
  table.group_order = g.order();
  table.classes = conjugacy_classes(g);
  const std::size_t k = table.classes.num_classes();
  const auto kk = static_cast<Eigen::Index>(k);
  table.class_sizes = table.classes.class_sizes;
  for (const auto& c : table.classes.classes) table.class_reps.push_back(c.front());

  const StructureConstants structure = class_sum_structure_constants(g, table.classes);
  std::vector<Eigen::MatrixXd> class_matrices;
  for (std::size_t i = 0; i < k; ++i) class_matrices.push_back(structure.multiplication_matrix(i));

  Rng rng(options.seed);
  CMatrix vectors;
  double last_gap = 0.0;
  bool separated = false;
  for (int attempt = 0; attempt <= options.max_resamples && !separated; ++attempt) {
    Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(kk, kk);
    for (std::size_t i = 0; i < k; ++i) mix += rng.uniform(-1.0, 1.0) * class_matrices[i];
    Eigen::ComplexEigenSolver<CMatrix> solver(mix.cast<Complex>());
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::ConvergenceFailure, "eigensolver failed on class-sum combination",
                  {{"classes", k}, {"attempt", attempt}});
    }
    const CVector& values = solver.eigenvalues();
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < kk; ++a) {
      for (Eigen::Index b = a + 1; b < kk; ++b) gap = std::min(gap, std::abs(values(a) - values(b)));
    }
    last_gap = gap;
    if (k == 1 || gap >= options.gap_relative * mix.norm()) {
      vectors = solver.eigenvectors();
      separated = true;
    }
  }
  if (!separated) {
    throw Error(ErrorKind::DegenerateSpectrum, "could not separate class-sum eigenvalues",
                {{"attempts", options.max_resamples + 1}, {"last_gap", last_gap}, {"seed", options.seed}});
  }

  // Each eigenvector is proportional to the class coordinates of a central
  // idempotent, i.e. to conj(chi(g_c)); the identity class is index 0.
  struct Row {
    int dim;
    CVector values;
  };
  std::vector<Row> rows;
  rows.reserve(k);
  const double n = static_cast<double>(g.order());
  for (Eigen::Index col = 0; col < kk; ++col) {
    const Complex pivot = vectors(0, col);
    if (std::abs(pivot) < 1e-12 * vectors.col(col).norm()) {
      throw Error(ErrorKind::ConvergenceFailure, "class-sum eigenvector vanishes on the identity class",
                  {{"column", col}});
    }
    const CVector ratio = vectors.col(col) / pivot;
    double weight = 0.0;
    for (Eigen::Index c = 0; c < kk; ++c) weight += static_cast<double>(table.class_sizes[static_cast<std::size_t>(c)]) * std::norm(ratio(c));
    const double dim = std::sqrt(n / weight);
    const double rounded = std::round(dim);
    if (std::abs(dim - rounded) > 1e-6 || rounded < 1.0) {
      throw Error(ErrorKind::ConvergenceFailure, "irrep dimension is not an integer",
                  {{"dimension", dim}});
    }
    rows.push_back({static_cast<int>(rounded), rounded * ratio.conjugate()});
  }

  const auto key = [](const CVector& v) {
    std::vector<std::pair<long long, long long>> out;
    for (Eigen::Index c = 0; c < v.size(); ++c) out.emplace_back(std::llround(v(c).real() * 1e6), std::llround(v(c).imag() * 1e6));
    return out;
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return key(a.values) > key(b.values);
  });

  table.chars.resize(kk, kk);
  long long sum_sq = 0;
  for (Eigen::Index p = 0; p < kk; ++p) {
    table.dims.push_back(rows[static_cast<std::size_t>(p)].dim);
    table.chars.row(p) = rows[static_cast<std::size_t>(p)].values.transpose();
    sum_sq += static_cast<long long>(table.dims.back()) * table.dims.back();
  }
  if (sum_sq != static_cast<long long>(g.order())) {
    throw Error(ErrorKind::ConvergenceFailure, "sum of squared dimensions differs from the group order",
                {{"sum_of_squares", sum_sq}, {"order", g.order()}, {"dims", table.dims}});
  }
  const double defect = table.orthogonality_defect();
  if (defect > 1e-6) {
    throw Error(ErrorKind::ConvergenceFailure, "character rows are not orthonormal",
                {{"defect", defect}});
  }
  return table;
}

std::vector<CentralProjection> minimal_central_projections(const FiniteGroup& g, const CharacterTable& table) {
  std::vector<CentralProjection> out;
  const double n = static_cast<double>(g.order());
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    CentralProjection p;
    p.irrep = pi;
    p.coeffs.resize(static_cast<Eigen::Index>(g.order()));
    for (Elem s = 0; s < g.order(); ++s) p.coeffs(s) = static_cast<double>(table.dims[pi]) / n * std::conj(table.value(pi, s));
    p.matrix = algebra::regular_image(g, p.coeffs);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace vngeom
