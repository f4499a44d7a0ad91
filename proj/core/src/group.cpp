#include "vngeom/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "vngeom/error.hpp"

namespace vngeom {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Elements in the order 1, -1, i, -i, j, -j, k, -k.
constexpr Elem kQuaternionTable[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 1, 0, 6, 7, 5, 4},
    {3, 2, 0, 1, 7, 6, 4, 5},
    {4, 5, 7, 6, 1, 0, 2, 3},
    {5, 4, 6, 7, 0, 1, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};

std::string cycle_label(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = p[i];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

unsigned parse_count(std::string_view text, std::string_view full) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw Error(ErrorKind::MalformedInput, "bad group parameter in '" + std::string(full) + "'",
                {{"kind", std::string(full)}});
  }
  return value;
}

std::vector<std::vector<std::int64_t>> widen(const std::vector<Elem>& flat, std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = flat[a * n + b];
  }
  return rows;
}

void check_order(std::size_t order, const SizeLimits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw Error(ErrorKind::SizeLimitExceeded, what + " exceeds the element cap",
                {{"order", order}, {"limit", limits.max_order}});
  }
}

}  // namespace

std::string FiniteGroup::label(Elem a) const {
  return a < data_->labels.size() ? data_->labels[a] : std::to_string(a);
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const noexcept {
  return data_ == other.data_ || (order() == other.order() && data_->cayley == other.data_->cayley);
}

std::vector<std::vector<Elem>> FiniteGroup::cayley_rows() const {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(order());
  for (Elem a = 0; a < order(); ++a) rows.emplace_back(row(a).begin(), row(a).end());
  return rows;
}

FiniteGroup::FiniteGroup() {
  static const auto trivial = [] {
    auto d = std::make_shared<Data>();
    d->order = 1;
    d->cayley = {0};
    d->inverses = {0};
    d->labels = {"e"};
    return d;
  }();
  data_ = trivial;
}

FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& cayley,
                           std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "empty Cayley table");
  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = n;
  data->cayley.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) {
      throw Error(ErrorKind::MalformedInput, "Cayley table is not square",
                  {{"row", a}, {"length", cayley[a].size()}, {"expected", n}});
    }
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t v = cayley[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::MalformedInput, "Cayley entry out of range",
                    {{"row", a}, {"col", b}, {"value", v}});
      }
      data->cayley[a * n + b] = static_cast<Elem>(v);
    }
  }
  const auto at = [&](std::size_t a, std::size_t b) { return data->cayley[a * n + b]; };

  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem v = at(a, b);
      if (seen[v] == a) {
        throw Error(ErrorKind::NotLatinSquare, "repeated entry in row " + std::to_string(a),
                    {{"row", a}, {"value", v}});
      }
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const Elem v = at(a, b);
      if (seen[v] == b) {
        throw Error(ErrorKind::NotLatinSquare, "repeated entry in column " + std::to_string(b),
                    {{"col", b}, {"value", v}});
      }
      seen[v] = b;
    }
  }

  // The only left-identity candidate is the row mapping 0 to 0.
  std::size_t e = n;
  for (std::size_t a = 0; a < n; ++a) {
    if (at(a, 0) == 0) e = a;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (at(e, s) != s || at(s, e) != s) {
      throw Error(ErrorKind::NoIdentity, "no two-sided identity element",
                  {{"candidate", e}, {"element", s}});
    }
  }
  data->identity = static_cast<Elem>(e);

  // Greedy generating set of the magma, then Light's associativity test:
  // (x g) y == x (g y) for all x, y and every generator g.
  std::vector<Elem> magma_gens;
  std::vector<bool> in_closure(n, false);
  std::vector<Elem> members;
  members.reserve(n);
  for (Elem x = 0; x < n; ++x) {
    if (in_closure[x]) continue;
    magma_gens.push_back(x);
    std::deque<Elem> queue{x};
    in_closure[x] = true;
    while (!queue.empty()) {
      const Elem z = queue.front();
      queue.pop_front();
      members.push_back(z);
      for (std::size_t i = 0; i < members.size(); ++i) {
        const Elem m = members[i];
        for (Elem p : {at(z, m), at(m, z)}) {
          if (!in_closure[p]) {
            in_closure[p] = true;
            queue.push_back(p);
          }
        }
      }
    }
  }
  for (Elem g : magma_gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const Elem xg = at(x, g);
      for (std::size_t y = 0; y < n; ++y) {
        if (at(xg, y) != at(x, at(g, y))) {
          throw Error(ErrorKind::NotAssociative, "associativity fails",
                      {{"triple", {x, g, y}}});
        }
      }
    }
  }

  data->inverses.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (at(s, t) == e) {
        data->inverses[s] = static_cast<Elem>(t);
        break;
      }
    }
  }
  for (Elem g : magma_gens) {
    if (g != e) data->generators.push_back(g);
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t s = 0; s < n; ++s) labels.push_back(std::to_string(s));
  } else if (labels.size() != n) {
    throw Error(ErrorKind::MalformedInput, "label count does not match group order",
                {{"labels", labels.size()}, {"order", n}});
  }
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

GroupKind GroupKind::parse(std::string_view text) {
  if (const auto star = text.find('*'); star != std::string_view::npos) {
    return direct_product(parse(text.substr(0, star)), parse(text.substr(star + 1)));
  }
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (name == "quaternion8" || name == "q8") {
    if (colon != std::string_view::npos) {
      throw Error(ErrorKind::MalformedInput, "quaternion8 takes no parameter",
                  {{"kind", std::string(text)}});
    }
    return quaternion8();
  }
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::MalformedInput, "missing parameter in group kind '" + std::string(text) + "'",
                {{"kind", std::string(text)}});
  }
  const unsigned n = parse_count(text.substr(colon + 1), text);
  if (name == "cyclic" || name == "z") return cyclic(n);
  if (name == "dihedral" || name == "d") return dihedral(n);
  if (name == "symmetric" || name == "s") return symmetric(n);
  throw Error(ErrorKind::MalformedInput, "unknown group family '" + std::string(name) + "'",
              {{"kind", std::string(text)}});
}

std::string GroupKind::to_string() const {
  switch (family) {
    case Family::Cyclic: return "cyclic:" + std::to_string(n);
    case Family::Dihedral: return "dihedral:" + std::to_string(n);
    case Family::Quaternion8: return "quaternion8";
    case Family::Symmetric: return "symmetric:" + std::to_string(n);
    case Family::DirectProduct: return factors.at(0).to_string() + "*" + factors.at(1).to_string();
  }
  return {};
}

FiniteGroup build_named(const GroupKind& kind, const SizeLimits& limits) {
  using Family = GroupKind::Family;
  switch (kind.family) {
    case Family::Cyclic: {
      const std::size_t n = kind.n;
      check_order(n, limits, "cyclic group");
      std::vector<Elem> flat(n * n);
      std::vector<std::string> labels;
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "e" : "a^" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
      }
      return validate_group(widen(flat, n), std::move(labels));
    }
    case Family::Dihedral: {
      // r^a s^b at index a + n b; (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d).
      const std::size_t n = kind.n;
      const std::size_t order = 2 * n;
      check_order(order, limits, "dihedral group");
      std::vector<Elem> flat(order * order);
      std::vector<std::string> labels;
      for (std::size_t x = 0; x < order; ++x) {
        const std::size_t a = x % n, b = x / n;
        std::string label = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
        if (b == 1) label += "s";
        labels.push_back(label.empty() ? "e" : label);
        for (std::size_t y = 0; y < order; ++y) {
          const std::size_t c = y % n, d = y / n;
          const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
          flat[x * order + y] = static_cast<Elem>(rot + n * ((b + d) % 2));
        }
      }
      return validate_group(widen(flat, order), std::move(labels));
    }
    case Family::Quaternion8: {
      check_order(8, limits, "quaternion group");
      std::vector<Elem> flat(64);
      for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) flat[a * 8 + b] = kQuaternionTable[a][b];
      }
      return validate_group(widen(flat, 8), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    }
    case Family::Symmetric: {
      const unsigned m = kind.n;
      if (m > 8) {
        throw Error(ErrorKind::SizeLimitExceeded, "symmetric groups are limited to degree 8",
                    {{"degree", m}, {"limit", 8}});
      }
      std::size_t order = 1;
      for (unsigned i = 2; i <= m; ++i) order *= i;
      check_order(order, limits, "symmetric group");
      std::vector<Permutation> gens;
      if (m >= 2) {
        Permutation swap(m), cycle(m);
        std::iota(swap.begin(), swap.end(), Elem{0});
        std::swap(swap[0], swap[1]);
        for (unsigned i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
        gens = {swap, cycle};
      } else {
        gens = {Permutation{0}};
      }
      return from_permutation_generators(gens, limits);
    }
    case Family::DirectProduct: {
      if (kind.factors.size() != 2) {
        throw Error(ErrorKind::MalformedInput, "direct product needs exactly two factors");
      }
      const FiniteGroup g = build_named(kind.factors[0], limits);
      const FiniteGroup h = build_named(kind.factors[1], limits);
      check_order(g.order() * h.order(), limits, "direct product");
      return direct_product(g, h);
    }
  }
  throw Error(ErrorKind::MalformedInput, "unknown group family");
}

FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators,
                                        const SizeLimits& limits) {
  const std::size_t m = generators.empty() ? 1 : generators.front().size();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Permutation& p = generators[i];
    if (p.size() != m) {
      throw Error(ErrorKind::MalformedInput, "generators act on different domains",
                  {{"generator", i}, {"size", p.size()}, {"expected", m}});
    }
    std::vector<bool> hit(m, false);
    for (Elem x : p) {
      if (x >= m || hit[x]) {
        throw Error(ErrorKind::MalformedInput, "generator is not a bijection",
                    {{"generator", i}, {"image", p}});
      }
      hit[x] = true;
    }
  }

  const auto compose = [m](const Permutation& p, const Permutation& q) {
    Permutation r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = p[q[i]];
    return r;
  };

  Permutation id(m);
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Elem, PermutationHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : generators) {
      Permutation next = compose(elements[head], g);
      if (index.contains(next)) continue;
      if (elements.size() >= limits.max_order) {
        throw Error(ErrorKind::SizeLimitExceeded, "permutation closure exceeds the element cap",
                    {{"limit", limits.max_order}});
      }
      index.emplace(next, static_cast<Elem>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
  Permutation scratch(m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < m; ++i) scratch[i] = elements[a][elements[b][i]];
      table[a][b] = index.at(scratch);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Permutation& p : elements) labels.push_back(cycle_label(p));
  return validate_group(table, std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem g1 = static_cast<Elem>(x / nh), h1 = static_cast<Elem>(x % nh);
    labels.push_back("(" + g.label(g1) + "," + h.label(h1) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const Elem g2 = static_cast<Elem>(y / nh), h2 = static_cast<Elem>(y % nh);
      table[x][y] = static_cast<std::int64_t>(g.mul(g1, g2)) * static_cast<std::int64_t>(nh) + h.mul(h1, h2);
    }
  }
  return validate_group(table, std::move(labels));
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyPartition part;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  part.class_of.assign(n, kUnassigned);

  const auto orbit = [&](Elem start) {
    const std::size_t id = part.classes.size();
    std::vector<Elem> members{start};
    part.class_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Elem s : g.generators()) {
        const Elem c = g.conjugate(s, members[head]);
        if (part.class_of[c] == kUnassigned) {
          part.class_of[c] = id;
          members.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.class_sizes.push_back(members.size());
    part.classes.push_back(std::move(members));
  };

  orbit(g.identity());
  for (Elem x = 0; x < n; ++x) {
    if (part.class_of[x] == kUnassigned) orbit(x);
  }
  return part;
}

CMatrix regular_representation(const FiniteGroup& g, Elem s) {
  const std::size_t n = g.order();
  if (s >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "element index out of range", {{"element", s}, {"order", n}});
  }
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Elem t = 0; t < n; ++t) m(g.mul(s, t), t) = 1.0;
  return m;
}

}  // namespace vngeom
