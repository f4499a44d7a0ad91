#include <cmath>
#include <numbers>

#include "commands.hpp"
#include "vngeom/convexity.hpp"
#include "vngeom/error.hpp"
#include "vngeom/sampling.hpp"
#include "vngeom/vn_structure.hpp"

namespace vngeom::cli {

namespace {

using nlohmann::json;

json q8_vs_d4(const RunConfig& cfg) {
  const FiniteGroup q8 = build_named(GroupKind::quaternion8());
  const FiniteGroup d4 = build_named(GroupKind::dihedral(4));
  const CharacterOptions copts{cfg.seed, 20, 1e-6};
  const IsomorphismVerdict iso = vn_isomorphic(q8, d4, copts);
  json j = {{"invariant_q8", iso.first.dims}, {"invariant_d4", iso.second.dims}, {"isomorphic", iso.isomorphic},
            {"q8_abelian", q8.is_abelian()}, {"d4_abelian", d4.is_abelian()}};

  const AffineHomeomorphism t = construct_affine_homeomorphism(q8, d4, {cfg.seed}, cfg.tol);
  const CharacterTable tq = character_table(q8, copts);
  const BlockDecomposition dq = block_decompose(q8, tq, {cfg.seed, 20}, cfg.tol);
  Rng rng(cfg.seed);
  double round_trip = 0.0;
  double isometry = 0.0;
  for (int i = 0; i < 200; ++i) {
    const GroupFunction a = random_state(dq, tq, rng);
    const GroupFunction b = random_state(dq, tq, rng);
    round_trip = std::max(round_trip, (t.apply_inverse(t.apply(a)).values - a.values).cwiseAbs().maxCoeff());
    const double before = a_norm({q8, a.values - b.values}, cfg.tol);
    const double after = a_norm({d4, t.apply(a).values - t.apply(b).values}, cfg.tol);
    isometry = std::max(isometry, std::abs(before - after));
  }
  int extreme_images = 0;
  for (int i = 0; i < 20; ++i) extreme_images += is_extreme(t.apply(random_pure_state(dq, rng)), cfg.tol).extreme ? 1 : 0;
  j["homeomorphism"] = {{"matching", t.matching},
                        {"round_trip_residual", round_trip},
                        {"isometry_residual", isometry},
                        {"samples", 200},
                        {"pure_states_tested", 20},
                        {"pure_images_extreme", extreme_images}};
  j["homeo_group_components"] = homeo_group_description(iso.first).component_count;
  return j;
}

json bochner(const RunConfig& cfg) {
  constexpr unsigned n = 12;
  const FiniteGroup g = build_named(GroupKind::cyclic(n));
  Rng rng(cfg.seed);
  int positive = 0, disagreements = 0, undecided = 0;
  for (int i = 0; i < 500; ++i) {
    const GroupFunction phi = random_hermitian_symmetric(g, rng, rng.uniform(0.0, 0.3));
    const PsdVerdict v = is_positive_definite(phi, cfg.tol);
    // Element k is a^k, so the Gram eigenvalues are the DFT of phi.
    double min_dft = std::numeric_limits<double>::infinity();
    for (unsigned k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (unsigned m = 0; m < n; ++m) s += phi(m) * std::polar(1.0, -2.0 * std::numbers::pi * k * m / n);
      min_dft = std::min(min_dft, s.real());
    }
    const bool oracle = min_dft >= -v.cutoff;
    positive += v.psd ? 1 : 0;
    if (v.undecided) {
      ++undecided;
    } else if (oracle != v.psd) {
      ++disagreements;
    }
  }
  return {{"group", "cyclic:12"}, {"samples", 500}, {"positive_definite", positive},
          {"disagreements", disagreements}, {"undecided", undecided}};
}

json faces_tour(const RunConfig& cfg) {
  const FiniteGroup g = build_named(GroupKind::symmetric(3));
  const CharacterTable t = character_table(g, {cfg.seed, 20, 1e-6});
  const BlockDecomposition d = block_decompose(g, t, {cfg.seed, 20}, cfg.tol);
  const auto faces = split_faces(g, t, cfg.tol);
  std::vector<std::size_t> chains;
  for (std::size_t pi = 0; pi < t.num_irreps(); ++pi) chains.push_back(maximal_chain(d, pi, {cfg.seed, 4}, cfg.tol).length());
  Rng rng(cfg.seed);
  const GroupFunction phi = random_state(d, t, rng);
  json splits = json::array();
  for (const auto& f : faces) {
    if (!f.is_minimal) continue;
    const StateDecomposition sd = state_decomposition(phi, f, cfg.tol);
    splits.push_back({{"irreps", *f.irreps}, {"t", sd.t}, {"residual", sd.residual}});
  }
  std::size_t minimal = 0;
  for (const auto& f : faces) minimal += f.is_minimal ? 1 : 0;
  return {{"group", "symmetric:3"}, {"split_faces", faces.size()}, {"minimal", minimal},
          {"dims", t.dims}, {"chain_lengths", chains}, {"sample_splits", splits}};
}

}  // namespace

nlohmann::json run_demo(const std::string& name, const RunConfig& cfg) {
  if (name == "q8-vs-d4") return q8_vs_d4(cfg);
  if (name == "bochner") return bochner(cfg);
  if (name == "faces-tour") return faces_tour(cfg);
  throw Error(ErrorKind::MalformedInput, "unknown demo '" + name + "'");
}

}  // namespace vngeom::cli
