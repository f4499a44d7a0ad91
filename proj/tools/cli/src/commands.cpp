#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vngeom/error.hpp"
#include "vngeom/group_algebra.hpp"
#include "vngeom/json_io.hpp"
#include "vngeom/sampling.hpp"

namespace vngeom::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

json load(const std::string& path) { return vngeom::json::read_file(path); }
fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

FiniteGroup group_arg(const std::string& value) { return vngeom::json::resolve_group(json(value)); }

GroupFunction function_arg(const std::string& path) {
  return vngeom::json::function_from_json(load(path), dir_of(path));
}

void write_out(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot write output file", {{"path", path}});
  f << j.dump(2) << '\n';
}

std::vector<Permutation> parse_perms(const std::string& text) {
  std::vector<Permutation> gens;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    std::stringstream ss(part);
    Permutation p;
    long long x = 0;
    while (ss >> x) {
      if (x < 0) malformed("negative point in permutation");
      p.push_back(static_cast<Elem>(x));
    }
    if (!ss.eof()) malformed("bad permutation '" + part + "'");
    if (!p.empty()) gens.push_back(std::move(p));
  }
  if (gens.empty()) malformed("no permutation generators given");
  return gens;
}

CharacterTable table_for(const FiniteGroup& g, const RunConfig& cfg) {
  return character_table(g, {cfg.seed, 20, 1e-6});
}

BlockDecomposition decompose(const FiniteGroup& g, const CharacterTable& t, const RunConfig& cfg) {
  return block_decompose(g, t, {cfg.seed, 20}, cfg.tol);
}

json group_report(const FiniteGroup& g) {
  json j = vngeom::json::to_json(g);
  j["identity"] = g.identity();
  j["inverses"] = std::vector<Elem>(g.inverses().begin(), g.inverses().end());
  j["generators"] = g.generators();
  j["abelian"] = g.is_abelian();
  return j;
}

json group_build(const Options& o, const RunConfig& cfg) {
  FiniteGroup g = !o.perms.empty() ? from_permutation_generators(parse_perms(o.perms), cfg.limits)
                  : !o.kind.empty() ? build_named(GroupKind::parse(o.kind), cfg.limits)
                                    : (malformed("group build needs --kind or --perms"), FiniteGroup{});
  json j = vngeom::json::to_json(g);
  write_out(o.out, j);
  return j;
}

json classes(const Options& o) {
  const FiniteGroup g = group_arg(o.in);
  const ConjugacyPartition p = conjugacy_classes(g);
  json j = vngeom::json::to_json(p);
  json names = json::array();
  for (const auto& c : p.classes) {
    json row = json::array();
    for (Elem s : c) row.push_back(g.label(s));
    names.push_back(row);
  }
  j["class_labels"] = names;
  j["num_classes"] = p.num_classes();
  return j;
}

json chartable(const Options& o, const RunConfig& cfg) {
  const CharacterTable t = table_for(group_arg(o.in), cfg);
  json j = vngeom::json::to_json(t);
  j["orthogonality_defect"] = t.orthogonality_defect();
  write_out(o.out, j);
  return j;
}

json posdef_check(const Options& o, const RunConfig& cfg) {
  const GroupFunction phi = function_arg(o.fn);
  if (o.p1) require_p1(phi, cfg.tol);
  const PsdVerdict v = is_positive_definite(phi, cfg.tol);
  const bool normalized = std::abs(phi.at_identity() - Complex(1.0)) <= cfg.tol.residual;
  json j = vngeom::json::to_json(v);
  j["positive_definite"] = v.psd;
  j["normalized"] = normalized;
  j["in_p1"] = v.psd && normalized;
  return j;
}

json posdef_extreme(const Options& o, const RunConfig& cfg) {
  const ExtremeVerdict v = is_extreme(function_arg(o.fn), cfg.tol);
  return {{"extreme", v.extreme}, {"commutant_dimension", v.commutant_dimension}, {"gns_dimension", v.gns_dimension}};
}

json posdef_norm(const Options& o, const RunConfig& cfg) {
  const GroupFunction phi = function_arg(o.fn);
  return {{"a_norm", a_norm(phi, cfg.tol)}, {"phi_e_re", phi.at_identity().real()}};
}

json channel_build(const Options& o, const RunConfig& cfg) {
  const FourierMultiplierChannel ch = build_channel(function_arg(o.fn));
  const UnitalVerdict u = is_unital(ch, cfg.tol);
  json j = vngeom::json::to_json(ch);
  write_out(o.out, j);
  j["unital"] = u.unital;
  j["identity_deviation"] = u.identity_deviation;
  return j;
}

json channel_cp(const Options& o, const RunConfig& cfg) {
  const FourierMultiplierChannel ch = build_channel(function_arg(o.fn));
  const ChoiCertificate c = is_completely_positive(ch, cfg.tol);
  json j = vngeom::json::to_json(c, o.matrices);
  j["unital"] = is_unital(ch, cfg.tol).unital;
  return j;
}

json channel_apply(const Options& o) {
  const FourierMultiplierChannel ch = vngeom::json::channel_from_json(load(o.ch), dir_of(o.ch));
  const json e = load(o.elem);
  if (e.contains("group")) require_same_group(ch.group, vngeom::json::resolve_group(e.at("group"), dir_of(o.elem)), "channel apply");
  const CVector a = vngeom::json::vector_from_json(e, ch.group.order());
  return vngeom::json::vector_to_json(apply(ch, a));
}

json faces_list(const Options& o, const RunConfig& cfg) {
  const FiniteGroup g = group_arg(o.in);
  const CharacterTable t = table_for(g, cfg);
  const auto faces = split_faces(g, t, cfg.tol);
  json list = json::array();
  std::size_t minimal = 0;
  for (const auto& f : faces) {
    json jf = {{"irreps", *f.irreps}, {"minimal", f.is_minimal}, {"central", f.is_central}, {"split", f.is_split}};
    int rank = 0;
    for (std::size_t pi : *f.irreps) rank += t.dims[pi] * t.dims[pi];
    jf["rank"] = rank;
    if (o.coeffs) jf["coeffs"] = vngeom::json::vector_to_json(f.coeffs);
    list.push_back(jf);
    minimal += f.is_minimal ? 1 : 0;
  }
  return {{"count", faces.size()}, {"minimal", minimal}, {"dims", t.dims}, {"faces", list}};
}

FaceDescriptor face_arg(const std::string& path, const RunConfig& cfg) {
  const GroupFunction p = function_arg(path);
  return make_face(p.group, p.values, cfg.tol);
}

json faces_member(const Options& o, const RunConfig& cfg) {
  const FaceDescriptor face = face_arg(o.proj, cfg);
  const NormalState omega = to_state(function_arg(o.state), cfg.tol);
  const MembershipVerdict v = face_membership(face, omega, cfg.tol);
  return {{"member", v.member}, {"pairing_re", v.pairing.real()}, {"pairing_im", v.pairing.imag()}, {"central", face.is_central}};
}

json faces_chain(const Options& o, const RunConfig& cfg) {
  const FiniteGroup g = group_arg(o.in);
  const CharacterTable t = table_for(g, cfg);
  if (o.irrep >= t.num_irreps()) {
    throw Error(ErrorKind::IndexOutOfRange, "irrep index out of range", {{"irrep", o.irrep}, {"num_irreps", t.num_irreps()}});
  }
  const FaceChain chain = maximal_chain(decompose(g, t, cfg), o.irrep, {cfg.seed, 4}, cfg.tol);
  return {{"irrep", o.irrep}, {"length", chain.length()}, {"ranks", chain.ranks},
          {"rank_bound", chain.rank_bound}, {"table_dim", t.dims[o.irrep]}};
}

json faces_decompose(const Options& o, const RunConfig& cfg) {
  const FaceDescriptor face = face_arg(o.proj, cfg);
  const GroupFunction phi = function_arg(o.state);
  require_p1(phi, cfg.tol);
  return vngeom::json::to_json(state_decomposition(phi, face, cfg.tol));
}

json vn_invariant_cmd(const Options& o, const RunConfig& cfg) {
  const FiniteGroup g = group_arg(o.in);
  const VNInvariant inv = invariant_of(table_for(g, cfg));
  int squares = 0;
  for (int d : inv.dims) squares += d * d;
  return {{"invariant", inv.dims}, {"order", g.order()}, {"sum_of_squares", squares}};
}

json vn_iso(const Options& o, const RunConfig& cfg) {
  const IsomorphismVerdict v = vn_isomorphic(group_arg(o.g1), group_arg(o.g2), {cfg.seed, 20, 1e-6});
  json j = {{"isomorphic", v.isomorphic}, {"invariant_g1", v.first.dims}, {"invariant_g2", v.second.dims}};
  if (v.isomorphic) j["invariant"] = v.first.dims;
  return j;
}

json vn_decompose(const Options& o, const RunConfig& cfg) {
  const FiniteGroup g = group_arg(o.in);
  json j = vngeom::json::to_json(decompose(g, table_for(g, cfg), cfg), o.units);
  j["seed"] = cfg.seed;
  return j;
}

json vn_homeo(const Options& o, const RunConfig& cfg) {
  const FiniteGroup g = group_arg(o.g1);
  const FiniteGroup h = group_arg(o.g2);
  const AffineHomeomorphism t = construct_affine_homeomorphism(g, h, {cfg.seed}, cfg.tol);
  const CharacterTable tg = table_for(g, cfg);
  const BlockDecomposition dg = decompose(g, tg, cfg);
  Rng rng(cfg.seed);
  double round_trip = 0.0, affinity = 0.0, isometry = 0.0, min_eig = 1.0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const GroupFunction a = random_state(dg, tg, rng);
    const GroupFunction b = random_state(dg, tg, rng);
    const double w = rng.uniform();
    const GroupFunction ta = t.apply(a);
    const GroupFunction tb = t.apply(b);
    round_trip = std::max(round_trip, (t.apply_inverse(ta).values - a.values).cwiseAbs().maxCoeff());
    const CVector mixed = t.apply({g, w * a.values + (1 - w) * b.values}).values;
    affinity = std::max(affinity, (mixed - (w * ta.values + (1 - w) * tb.values)).cwiseAbs().maxCoeff());
    const double before = a_norm({g, a.values - b.values}, cfg.tol);
    const double after = a_norm({h, ta.values - tb.values}, cfg.tol);
    isometry = std::max(isometry, std::abs(before - after));
    min_eig = std::min(min_eig, is_positive_definite(ta, cfg.tol).min_eigenvalue);
  }
  json j = {{"matching", t.matching},
            {"invariant", invariant_of(tg).dims},
            {"samples", o.samples},
            {"round_trip_residual", round_trip},
            {"affinity_residual", affinity},
            {"isometry_residual", isometry},
            {"min_image_eigenvalue", min_eig},
            {"seed", cfg.seed}};
  if (o.out.empty()) {
    j["map"] = vngeom::json::to_json(t);
  } else {
    write_out(o.out, vngeom::json::to_json(t));
    j["map_file"] = o.out;
  }
  return j;
}

json vn_homeo_group(const Options& o, const RunConfig& cfg) {
  return vngeom::json::to_json(homeo_group_description(invariant_of(table_for(group_arg(o.in), cfg))));
}

json vn_fit(const Options& o, const RunConfig& cfg) {
  const json j = load(o.map);
  const FiniteGroup g = vngeom::json::resolve_group(j.contains("group") ? j.at("group") : json(nullptr), dir_of(o.map));
  if (!j.contains("pairs") || !j.at("pairs").is_array()) malformed("samples file needs a 'pairs' array");
  std::vector<GroupFunction> in, out;
  for (const json& p : j.at("pairs")) {
    if (!p.contains("in") || !p.contains("out")) malformed("each pair needs 'in' and 'out'");
    in.push_back({g, vngeom::json::vector_from_json(p.at("in"), g.order())});
    out.push_back({g, vngeom::json::vector_from_json(p.at("out"), g.order())});
  }
  const SampledMap m = fit_sampled_map(in, out, 1e-7);
  const BlockDecomposition d = decompose(g, table_for(g, cfg), cfg);
  const JordanFit fit = verify_jordan_form(m, d, {cfg.seed, 20, 20, 1e-7});
  return {{"descriptor", vngeom::json::to_json(fit.descriptor)},
          {"linear_fit_residual", m.residual},
          {"affinity_residual", fit.affinity_residual},
          {"block_fit_residual", fit.fit_residual},
          {"reproduction_residual", fit.reproduction_residual},
          {"seed", cfg.seed}};
}

json vn_apply(const Options& o, const RunConfig& cfg) {
  const GroupFunction phi = function_arg(o.fn);
  const AffineHomeoDescriptor desc = vngeom::json::descriptor_from_json(load(o.desc));
  const BlockDecomposition d = decompose(phi.group, table_for(phi.group, cfg), cfg);
  return vngeom::json::to_json(apply_descriptor(desc, phi, d));
}

}  // namespace

nlohmann::json run_command(const std::string& command, const Options& o, const RunConfig& cfg) {
  if (command == "group build") return group_build(o, cfg);
  if (command == "group validate") return group_report(group_arg(o.in));
  if (command == "group classes") return classes(o);
  if (command == "chartable") return chartable(o, cfg);
  if (command == "posdef check") return posdef_check(o, cfg);
  if (command == "posdef extreme") return posdef_extreme(o, cfg);
  if (command == "posdef norm") return posdef_norm(o, cfg);
  if (command == "channel build") return channel_build(o, cfg);
  if (command == "channel cp") return channel_cp(o, cfg);
  if (command == "channel apply") return channel_apply(o);
  if (command == "faces list") return faces_list(o, cfg);
  if (command == "faces member") return faces_member(o, cfg);
  if (command == "faces chain") return faces_chain(o, cfg);
  if (command == "faces decompose") return faces_decompose(o, cfg);
  if (command == "vn invariant") return vn_invariant_cmd(o, cfg);
  if (command == "vn iso") return vn_iso(o, cfg);
  if (command == "vn decompose") return vn_decompose(o, cfg);
  if (command == "vn homeo") return vn_homeo(o, cfg);
  if (command == "vn homeo-group") return vn_homeo_group(o, cfg);
  if (command == "vn fit") return vn_fit(o, cfg);
  if (command == "vn apply") return vn_apply(o, cfg);
  malformed("unknown command '" + command + "'");
}

}  // namespace vngeom::cli
