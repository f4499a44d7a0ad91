#include "vngeom/json_io.hpp"

#include <fstream>
#include <sstream>

#include "vngeom/error.hpp"

namespace vngeom::json {

namespace {

[[noreturn]] void malformed(const std::string& what, json witness = nullptr) {
  throw Error(ErrorKind::MalformedInput, what, std::move(witness));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("bad ") + what + ": " + e.what());
  }
}

std::vector<double> doubles(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return get<std::vector<double>>(j, what);
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what(), {{"byte", e.byte}});
  }
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read file", {{"path", path.string()}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"cayley", g.cayley_rows()}, {"labels", g.labels()}};
}

FiniteGroup group_from_json(const json& j) {
  const auto cayley = get<std::vector<std::vector<std::int64_t>>>(field(j, "cayley"), "cayley");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j.at("labels"), "labels");
  if (j.contains("order")) {
    const auto n = get<std::int64_t>(j.at("order"), "order");
    if (n != static_cast<std::int64_t>(cayley.size())) {
      malformed("order does not match the Cayley table", {{"order", n}, {"rows", cayley.size()}});
    }
  }
  return validate_group(cayley, std::move(labels));
}

FiniteGroup resolve_group(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_object()) return group_from_json(j);
  if (!j.is_string()) malformed("group must be an object, a path or a kind string");
  const std::string text = j.get<std::string>();
  std::filesystem::path p(text);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  std::error_code ec;
  if (std::filesystem::is_regular_file(p, ec)) return group_from_json(read_file(p));
  return build_named(GroupKind::parse(text));
}

json vector_to_json(const CVector& v) {
  std::vector<double> re(static_cast<std::size_t>(v.size()));
  std::vector<double> im(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re[static_cast<std::size_t>(i)] = v(i).real();
    im[static_cast<std::size_t>(i)] = v(i).imag();
  }
  return {{"re", re}, {"im", im}};
}

CVector vector_from_json(const json& j, std::size_t n) {
  const auto re = doubles(field(j, "re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = doubles(j.at("im"), "im");
  if (re.size() != n || im.size() != n) {
    malformed("value count does not match group order", {{"re", re.size()}, {"im", im.size()}, {"order", n}});
  }
  CVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return v;
}

json to_json(const GroupFunction& phi) {
  json j = vector_to_json(phi.values);
  j["group"] = to_json(phi.group);
  return j;
}

GroupFunction function_from_json(const json& j, const std::filesystem::path& base_dir) {
  FiniteGroup g = resolve_group(field(j, "group"), base_dir);
  CVector v = vector_from_json(j, g.order());
  return {std::move(g), std::move(v)};
}

json to_json(const CMatrix& m) {
  std::vector<double> re;
  std::vector<double> im;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const json& j) {
  const auto rows = get<std::int64_t>(field(j, "rows"), "rows");
  const auto cols = get<std::int64_t>(field(j, "cols"), "cols");
  const auto re = doubles(field(j, "re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = doubles(j.at("im"), "im");
  if (rows < 0 || cols < 0 || re.size() != static_cast<std::size_t>(rows * cols) || im.size() != re.size()) {
    malformed("matrix entry count does not match its shape", {{"rows", rows}, {"cols", cols}, {"entries", re.size()}});
  }
  CMatrix m(rows, cols);
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c, ++i) m(r, c) = Complex(re[i], im[i]);
  }
  return m;
}

json to_json(const CharacterTable& table) {
  std::vector<std::vector<double>> re;
  std::vector<std::vector<double>> im;
  for (Eigen::Index pi = 0; pi < table.chars.rows(); ++pi) {
    re.emplace_back();
    im.emplace_back();
    for (Eigen::Index c = 0; c < table.chars.cols(); ++c) {
      re.back().push_back(table.chars(pi, c).real());
      im.back().push_back(table.chars(pi, c).imag());
    }
  }
  return {{"dims", table.dims},           {"class_sizes", table.class_sizes}, {"class_reps", table.class_reps},
          {"classes", table.classes.classes}, {"chars_re", re},                {"chars_im", im}};
}

json to_json(const ConjugacyPartition& classes) {
  return {{"classes", classes.classes}, {"class_sizes", classes.class_sizes}, {"class_of", classes.class_of}};
}

json to_json(const PsdVerdict& v) {
  return {{"psd", v.psd}, {"min_eigenvalue", v.min_eigenvalue}, {"cutoff", v.cutoff}, {"undecided", v.undecided}};
}

json to_json(const ChoiCertificate& cert, bool include_matrices) {
  json j = {{"completely_positive", cert.verdict},
            {"min_eigenvalue", cert.min_eigenvalue},
            {"symbol_check", to_json(cert.symbol_check)},
            {"choi_check", to_json(cert.choi_check)},
            {"choi_dense", cert.choi_dense}};
  if (include_matrices) {
    j["schur_symbol"] = to_json(cert.schur_symbol);
    if (cert.choi.size() > 0) j["choi"] = to_json(cert.choi);
  }
  return j;
}

json to_json(const FourierMultiplierChannel& ch) {
  json j = vector_to_json(ch.symbol.values);
  j["group"] = to_json(ch.group);
  j["kind"] = "fourier_multiplier";
  return j;
}

FourierMultiplierChannel channel_from_json(const json& j, const std::filesystem::path& base_dir) {
  return build_channel(function_from_json(j, base_dir));
}

json to_json(const FaceDescriptor& face) {
  json j = vector_to_json(face.coeffs);
  j["central"] = face.is_central;
  j["split"] = face.is_split;
  j["minimal"] = face.is_minimal;
  if (face.irreps) j["irreps"] = *face.irreps;
  return j;
}

json to_json(const StateDecomposition& d) {
  json j = {{"t", d.t}, {"residual", d.residual}};
  j["inside"] = d.inside ? vector_to_json(d.inside->values) : json(nullptr);
  j["outside"] = d.outside ? vector_to_json(d.outside->values) : json(nullptr);
  return j;
}

json to_json(const VNInvariant& inv) { return inv.dims; }

json to_json(const BlockDecomposition& decomp, bool include_units) {
  json blocks = json::array();
  for (const Block& b : decomp.blocks()) {
    json jb = {{"irrep", b.irrep}, {"dim", b.dim}};
    if (include_units) {
      json units = json::array();
      for (const CVector& u : b.units) units.push_back(vector_to_json(u));
      jb["units"] = units;
    }
    blocks.push_back(jb);
  }
  return {{"dims", decomp.dims()}, {"blocks", blocks}, {"relation_defect", decomp.relation_defect()}};
}

json to_json(const AffineHomeoDescriptor& desc) {
  json us = json::array();
  for (const CMatrix& u : desc.unitaries) us.push_back(to_json(u));
  return {{"sigma", desc.sigma}, {"unitaries", us}, {"transpose", desc.transpose}};
}

AffineHomeoDescriptor descriptor_from_json(const json& j) {
  AffineHomeoDescriptor d;
  d.sigma = get<std::vector<std::size_t>>(field(j, "sigma"), "sigma");
  d.transpose = get<std::vector<bool>>(field(j, "transpose"), "transpose");
  const json& us = field(j, "unitaries");
  if (!us.is_array()) malformed("unitaries must be an array");
  for (const json& u : us) d.unitaries.push_back(matrix_from_json(u));
  return d;
}

json to_json(const AffineHomeomorphism& t) {
  return {{"source", to_json(t.source)},
          {"target", to_json(t.target)},
          {"matching", t.matching},
          {"forward", to_json(t.forward)},
          {"inverse", to_json(t.backward)}};
}

json to_json(const HomeoGroupDescription& d) {
  json factors = json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"dim", f.dim}, {"multiplicity", f.multiplicity}, {"block_group", f.block_group}, {"permutations", f.wreath}});
  }
  return {{"invariant", d.invariant.dims}, {"factors", factors}, {"components", d.component_count}, {"summary", d.summary}};
}

json to_json(const Error& e) {
  return {{"error", std::string(e.name())}, {"message", e.what()}, {"witness", e.witness()}};
}

}  // namespace vngeom::json
