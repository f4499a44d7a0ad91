#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "vngeom/group.hpp"
#include "vngeom/numerics.hpp"

namespace vngeom::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  Tolerance tol;
  std::string format = "json";
  SizeLimits limits;
};

/// Flag values shared by all subcommands; each command reads the ones it uses.
struct Options {
  std::string in, fn, ch, elem, proj, state, g1, g2, map, desc, out, kind, perms;
  std::size_t irrep = 0;
  std::size_t samples = 200;
  bool p1 = false;
  bool matrices = false;
  bool units = false;
  bool coeffs = false;
};

/// `command` is the space-separated subcommand path, e.g. "faces chain".
nlohmann::json run_command(const std::string& command, const Options& opts, const RunConfig& cfg);

nlohmann::json run_demo(const std::string& name, const RunConfig& cfg);

}  // namespace vngeom::cli
