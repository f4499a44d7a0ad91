#include "vngeom/convexity.hpp"

#include <algorithm>
#include <cmath>

#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"

namespace vngeom {

namespace {

bool is_central(const FiniteGroup& g, const CVector& p, double tol) {
  for (Elem s : g.generators()) {
    for (Elem t = 0; t < g.order(); ++t) {
      if (std::abs(p(g.conjugate(s, t)) - p(t)) > tol) return false;
    }
  }
  return true;
}

double scale_of(const CVector& v) { return std::max(1.0, v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff()); }

}  // namespace

FaceDescriptor make_face(const FiniteGroup& g, const CVector& coeffs, const Tolerance& tol) {
  algebra::require_size(g, coeffs, "make_face");
  const double scale = scale_of(coeffs);
  const double idem = (algebra::multiply(g, coeffs, coeffs) - coeffs).cwiseAbs().maxCoeff();
  const double adj = (algebra::adjoint(g, coeffs) - coeffs).cwiseAbs().maxCoeff();
  if (idem > tol.residual * scale || adj > tol.residual * scale) {
    throw Error(ErrorKind::NotAProjection, "p^2 = p = p^* fails",
                {{"idempotence_defect", idem}, {"adjoint_defect", adj}});
  }
  FaceDescriptor f;
  f.group = g;
  f.coeffs = coeffs;
  f.matrix = algebra::regular_image(g, coeffs);
  f.is_central = is_central(g, coeffs, tol.residual * scale);
  f.is_split = f.is_central;
  return f;
}

Complex pairing(const FaceDescriptor& face, const GroupFunction& phi) {
  require_same_group(face.group, phi.group, "pairing");
  return algebra::trace_of_product(face.group, face.coeffs, phi.values);
}

MembershipVerdict face_membership(const FaceDescriptor& face, const NormalState& omega, const Tolerance& tol) {
  require_same_group(face.group, omega.group, "face_membership");
  MembershipVerdict v;
  v.pairing = omega.evaluate(face.coeffs);
  if (v.pairing.real() < -tol.residual || v.pairing.real() > 1.0 + tol.residual ||
      std::abs(v.pairing.imag()) > tol.residual) {
    throw Error(ErrorKind::StateOutOfBounds, "omega(p) is not in [0, 1]",
                {{"re", v.pairing.real()}, {"im", v.pairing.imag()}});
  }
  v.member = std::abs(v.pairing - Complex(1.0)) <= tol.residual;
  return v;
}

std::vector<FaceDescriptor> split_faces(const FiniteGroup& g, const CharacterTable& table, const Tolerance& tol) {
  const std::size_t k = table.num_irreps();
  if (k > 20) {
    throw Error(ErrorKind::SizeLimitExceeded, "too many minimal central projections to enumerate",
                {{"num_irreps", k}, {"limit", 20}});
  }
  const auto minimal = minimal_central_projections(g, table);
  std::vector<FaceDescriptor> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    CVector p = CVector::Zero(static_cast<Eigen::Index>(g.order()));
    std::vector<std::size_t> members;
    for (std::size_t pi = 0; pi < k; ++pi) {
      if (mask >> pi & 1U) {
        p += minimal[pi].coeffs;
        members.push_back(pi);
      }
    }
    FaceDescriptor f = make_face(g, p, tol);
    f.is_minimal = members.size() == 1;
    f.num_irreps = k;
    f.irreps = std::move(members);
    out.push_back(std::move(f));
  }
  return out;
}

FaceDescriptor complementary_split_face(const FaceDescriptor& face, const Tolerance& tol) {
  if (!face.is_central) {
    throw Error(ErrorKind::NotCentral, "complement is only defined for central projections");
  }
  FaceDescriptor c = make_face(face.group, algebra::unit(face.group) - face.coeffs, tol);
  c.num_irreps = face.num_irreps;
  if (face.irreps) {
    std::vector<std::size_t> rest;
    for (std::size_t pi = 0; pi < face.num_irreps; ++pi) {
      if (std::find(face.irreps->begin(), face.irreps->end(), pi) == face.irreps->end()) rest.push_back(pi);
    }
    c.is_minimal = rest.size() == 1;
    c.irreps = std::move(rest);
  }
  return c;
}

FaceChain maximal_chain(const BlockDecomposition& decomp, std::size_t irrep, const ChainOptions& options,
                        const Tolerance& tol) {
  if (irrep >= decomp.num_blocks()) {
    throw Error(ErrorKind::IndexOutOfRange, "irrep index out of range",
                {{"irrep", irrep}, {"num_irreps", decomp.num_blocks()}});
  }
  const FiniteGroup& g = decomp.group();
  const Block& block = decomp.blocks()[irrep];
  const int d = block.dim;
  Rng rng(options.seed);

  const auto build = [&](const CMatrix& frame) {
    FaceChain chain;
    chain.irrep = irrep;
    chain.rank_bound = d;
    BlockCoordinates coords;
    for (const int dim : decomp.dims()) coords.push_back(CMatrix::Zero(dim, dim));
    CVector previous;
    for (int k = 1; k <= d; ++k) {
      const CMatrix q = frame.leftCols(k) * frame.leftCols(k).adjoint();
      coords[irrep] = q;
      const CVector p = decomp.from_blocks(coords);
      const FaceDescriptor face = make_face(g, p, tol);
      const Eigen::Index rank = numerical_rank(decomp.to_blocks(p)[irrep], 0.5);
      if (rank != k) {
        throw Error(ErrorKind::DecompositionFailure, "chain projection has the wrong rank",
                    {{"irrep", irrep}, {"step", k}, {"rank", rank}});
      }
      if (previous.size() > 0) {
        const double order = (algebra::multiply(g, previous, p) - previous).cwiseAbs().maxCoeff();
        if (order > tol.residual) {
          throw Error(ErrorKind::DecompositionFailure, "chain is not increasing",
                      {{"irrep", irrep}, {"step", k}, {"defect", order}});
        }
      }
      // Pure witness: the vector state of the k-th frame column.
      BlockDensity density;
      for (const int dim : decomp.dims()) density.push_back(CMatrix::Zero(dim, dim));
      density[irrep] = frame.col(k - 1) * frame.col(k - 1).adjoint();
      const GroupFunction witness = decomp.function_of(density);
      const NormalState state = to_state(witness, tol);
      if (!face_membership(face, state, tol).member) {
        throw Error(ErrorKind::DecompositionFailure, "witness state is not in its face",
                    {{"irrep", irrep}, {"step", k}});
      }
      if (previous.size() > 0 && std::abs(state.evaluate(previous)) > tol.residual) {
        throw Error(ErrorKind::DecompositionFailure, "faces do not increase strictly",
                    {{"irrep", irrep}, {"step", k}});
      }
      chain.projections.push_back(p);
      chain.ranks.push_back(rank);
      previous = p;
    }
    return chain;
  };

  FaceChain chain = build(CMatrix::Identity(d, d));
  for (int t = 0; t < options.trials; ++t) {
    const FaceChain rotated = build(random_unitary(d, rng));
    if (rotated.length() != chain.length()) {
      throw Error(ErrorKind::DecompositionFailure, "chain length depends on the frame", {{"irrep", irrep}});
    }
  }
  return chain;
}

std::size_t maximal_chain_length(const FiniteGroup& g, const CharacterTable& table, std::size_t irrep,
                                 const ChainOptions& options, const Tolerance& tol) {
  const BlockDecomposition decomp = block_decompose(g, table, {options.seed, 20}, tol);
  return maximal_chain(decomp, irrep, options, tol).length();
}

StateDecomposition state_decomposition(const GroupFunction& phi, const FaceDescriptor& face, const Tolerance& tol) {
  require_same_group(face.group, phi.group, "state_decomposition");
  if (!face.is_central) {
    throw Error(ErrorKind::NotCentral, "state decomposition needs a central projection");
  }
  const FiniteGroup& g = face.group;
  StateDecomposition out;
  // The density of phi is its own coefficient vector; cutting by central p
  // gives the unnormalized components.
  const CVector inside = algebra::multiply(g, phi.values, face.coeffs);
  const CVector outside = phi.values - inside;
  out.t = std::clamp(algebra::trace(g, inside).real(), 0.0, 1.0);
  CVector rebuilt = CVector::Zero(phi.values.size());
  if (out.t > tol.residual) {
    out.inside = GroupFunction{g, inside / out.t};
    rebuilt += inside;
  }
  if (1.0 - out.t > tol.residual) {
    out.outside = GroupFunction{g, outside / (1.0 - out.t)};
    rebuilt += outside;
  }
  out.residual = (rebuilt - phi.values).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace vngeom
