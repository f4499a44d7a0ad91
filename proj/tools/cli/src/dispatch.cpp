#include "vngeom/cli/dispatch.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "vngeom/error.hpp"
#include "vngeom/json_io.hpp"

namespace vngeom::cli {

namespace {

void render_text(const nlohmann::json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const auto scalar_array = [](const nlohmann::json& a) {
    return std::all_of(a.begin(), a.end(), [](const nlohmann::json& x) { return x.is_primitive(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const nlohmann::json& v = it.value();
    out << pad << it.key() << ":";
    if (v.is_object()) {
      out << '\n';
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !scalar_array(v)) {
      out << '\n';
      for (const auto& item : v) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render_text(item, out, indent + 4);
        } else {
          out << pad << "  - " << item.dump() << '\n';
        }
      }
    } else {
      out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

void emit(const nlohmann::json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "text" && j.is_object()) {
    render_text(j, out, 0);
  } else {
    out << j.dump(2) << '\n';
  }
}

// Path of the deepest parsed subcommand, e.g. "vn homeo".
std::string command_path(const CLI::App& app) {
  std::string path;
  const CLI::App* cur = &app;
  while (true) {
    const auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    if (!path.empty()) path += ' ';
    path += cur->get_name();
  }
  return path;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive definite functions, normal states and the group von Neumann algebra of finite groups", "vngeom"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  Options opts;
  std::optional<double> eig_tol;
  std::optional<double> residual_tol;
  app.add_option("--seed", cfg.seed, "Seed for randomized algorithms")->capture_default_str();
  app.add_option("--eig-tol", eig_tol, "Absolute eigenvalue cutoff (default: relative 1e-9 * dim * max|entry|)")
      ->check(CLI::PositiveNumber);
  app.add_option("--residual-tol", residual_tol, "Residual tolerance (default 1e-8)")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--max-order", cfg.limits.max_order, "Largest group order accepted by builders")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  const auto group_in = [&](CLI::App* c) { c->add_option("--in", opts.in, "Group JSON file or kind string")->required(); };
  const auto fn_in = [&](CLI::App* c) { c->add_option("--fn", opts.fn, "Function JSON file")->required(); };
  const auto out_file = [&](CLI::App* c) { c->add_option("--out", opts.out, "Also write the result to this file"); };

  auto* group = app.add_subcommand("group", "Build, validate and analyze finite groups")->require_subcommand(1);
  auto* group_build = group->add_subcommand("build", "Build a named group or close permutation generators");
  auto* kind_opt = group_build->add_option("--kind", opts.kind, "cyclic:n, dihedral:n, quaternion8, symmetric:n, A*B");
  group_build->add_option("--perms", opts.perms, "Generators in one-line notation: \"1 2 0; 1 0 2\"")->excludes(kind_opt);
  out_file(group_build);
  group_in(group->add_subcommand("validate", "Check a Cayley table"));
  group_in(group->add_subcommand("classes", "Conjugacy classes"));

  auto* chartable = app.add_subcommand("chartable", "Character table");
  group_in(chartable);
  out_file(chartable);

  auto* posdef = app.add_subcommand("posdef", "Positive definite functions")->require_subcommand(1);
  auto* posdef_check = posdef->add_subcommand("check", "Positive definiteness via the Gram matrix");
  fn_in(posdef_check);
  posdef_check->add_flag("--p1", opts.p1, "Require membership in P1(G)");
  fn_in(posdef->add_subcommand("extreme", "Extremality in P1(G) via the GNS commutant"));
  fn_in(posdef->add_subcommand("norm", "Fourier algebra norm"));

  auto* channel = app.add_subcommand("channel", "Fourier multiplier channels")->require_subcommand(1);
  auto* channel_build = channel->add_subcommand("build", "Channel with the given symbol");
  fn_in(channel_build);
  out_file(channel_build);
  auto* channel_cp = channel->add_subcommand("cp", "Complete positivity certificate");
  fn_in(channel_cp);
  channel_cp->add_flag("--matrices", opts.matrices, "Include the symbol and Choi matrices");
  auto* channel_apply = channel->add_subcommand("apply", "Apply a channel to a group-algebra element");
  channel_apply->add_option("--ch", opts.ch, "Channel JSON file")->required();
  channel_apply->add_option("--elem", opts.elem, "Element JSON file (function format)")->required();

  auto* faces = app.add_subcommand("faces", "Split faces of P1(G)")->require_subcommand(1);
  auto* faces_list = faces->add_subcommand("list", "All split faces");
  group_in(faces_list);
  faces_list->add_flag("--coeffs", opts.coeffs, "Include projection coefficients");
  auto* faces_member = faces->add_subcommand("member", "Face membership of a state");
  faces_member->add_option("--proj", opts.proj, "Projection JSON file (function format)")->required();
  faces_member->add_option("--state", opts.state, "State JSON file (function format)")->required();
  auto* faces_chain = faces->add_subcommand("chain", "Maximal chain of faces under one block");
  group_in(faces_chain);
  faces_chain->add_option("--irrep", opts.irrep, "Irrep index")->required();
  auto* faces_decompose = faces->add_subcommand("decompose", "Split a state along a central projection");
  faces_decompose->add_option("--state", opts.state, "State JSON file")->required();
  faces_decompose->add_option("--proj", opts.proj, "Central projection JSON file")->required();

  auto* vn = app.add_subcommand("vn", "Structure of the group von Neumann algebra")->require_subcommand(1);
  group_in(vn->add_subcommand("invariant", "Multiset of block dimensions"));
  auto* vn_iso = vn->add_subcommand("iso", "Decide *-isomorphism of VN(G) and VN(H)");
  vn_iso->add_option("--g1", opts.g1, "First group")->required();
  vn_iso->add_option("--g2", opts.g2, "Second group")->required();
  auto* vn_decompose = vn->add_subcommand("decompose", "Matrix units of each block");
  group_in(vn_decompose);
  vn_decompose->add_flag("--units", opts.units, "Include matrix-unit coefficients");
  auto* vn_homeo = vn->add_subcommand("homeo", "Affine homeomorphism P1(G) -> P1(H)");
  vn_homeo->add_option("--g1", opts.g1, "Source group")->required();
  vn_homeo->add_option("--g2", opts.g2, "Target group")->required();
  vn_homeo->add_option("--samples", opts.samples, "States used for the verification residuals")->capture_default_str();
  out_file(vn_homeo);
  group_in(vn->add_subcommand("homeo-group", "Affine homeomorphism group of P1(G)"));
  auto* vn_fit = vn->add_subcommand("fit", "Recover (sigma, u, transpose) from sampled input/output pairs");
  vn_fit->add_option("--map", opts.map, "Samples JSON file")->required();
  auto* vn_apply = vn->add_subcommand("apply", "Push a function through a descriptor");
  vn_apply->add_option("--desc", opts.desc, "Descriptor JSON file")->required();
  fn_in(vn_apply);

  auto* demo = app.add_subcommand("demo", "End-to-end walkthroughs");
  std::string demo_name;
  demo->add_option("name", demo_name, "Demo to run")
      ->required()
      ->check(CLI::IsMember({"q8-vs-d4", "bochner", "faces-tour"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    out << nlohmann::json{{"error", "MalformedInput"}, {"message", e.what()}, {"witness", nullptr}}.dump(2) << '\n';
    return kMalformed;
  }
  if (eig_tol) cfg.tol.eig_absolute = *eig_tol;
  if (residual_tol) cfg.tol.residual = *residual_tol;

  try {
    const std::string path = command_path(app);
    const nlohmann::json result = path == "demo" ? run_demo(demo_name, cfg) : run_command(path, opts, cfg);
    emit(result, cfg, out);
    return kOk;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    emit(json::to_json(e), cfg, out);
    return e.kind() == ErrorKind::MalformedInput ? kMalformed : kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    emit({{"error", "InternalError"}, {"message", e.what()}, {"witness", nullptr}}, cfg, out);
    return kDomainError;
  }
}

}  // namespace vngeom::cli
