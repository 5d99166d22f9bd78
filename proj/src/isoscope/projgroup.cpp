#include "isoscope/projgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "isoscope/error.hpp"
#include "isoscope/integer.hpp"

namespace isoscope::group {

namespace {

int mod(int64_t x, int l) {
  int64_t r = x % l;
  return static_cast<int>(r < 0 ? r + l : r);
}

int inv_mod(int x, int l) { return static_cast<int>(arith::invmod(static_cast<uint64_t>(x), static_cast<uint64_t>(l))); }

bool is_square_mod(int x, int l) { return arith::legendre(static_cast<int64_t>(x), static_cast<uint64_t>(l)) >= 0; }

void check_l(int l) {
  if (l < 3 || !arith::is_prime_u64(static_cast<uint64_t>(l)) || l > 2000)
    fail(ErrorCode::InvalidArgument, "l must be an odd prime below 2000, got " + std::to_string(l));
}

int primitive_root(int l) {
  for (int g = 2; g < l; ++g) {
    bool ok = true;
    int n = l - 1;
    for (int f = 2; f <= n && ok; ++f) {
      if (n % f) continue;
      if (arith::powmod(g, (l - 1) / f, l) == 1) ok = false;
      while (n % f == 0) n /= f;
    }
    if (ok) return g;
  }
  return 1;  // l = 2, unreachable for odd primes
}

}  // namespace

ProjMat ProjMat::make(int l, int64_t a, int64_t b, int64_t c, int64_t d) {
  ProjMat g;
  g.l = l;
  g.m = {mod(a, l), mod(b, l), mod(c, l), mod(d, l)};
  if (mod(static_cast<int64_t>(g.m[0]) * g.m[3] - static_cast<int64_t>(g.m[1]) * g.m[2], l) == 0)
    fail(ErrorCode::InvalidArgument, "singular matrix is not in PGL_2");
  int lead = g.m[0] ? g.m[0] : g.m[1];
  if (lead != 1) {
    int s = inv_mod(lead, l);
    for (auto& x : g.m) x = static_cast<int>(static_cast<int64_t>(x) * s % l);
  }
  return g;
}

uint64_t ProjMat::key() const {
  uint64_t L = static_cast<uint64_t>(l);
  return ((static_cast<uint64_t>(m[0]) * L + m[1]) * L + m[2]) * L + m[3];
}

int ProjMat::det() const { return mod(static_cast<int64_t>(m[0]) * m[3] - static_cast<int64_t>(m[1]) * m[2], l); }
bool ProjMat::det_is_square() const { return is_square_mod(det(), l); }
int ProjMat::trace() const { return mod(m[0] + m[3], l); }
int ProjMat::disc() const {
  int t = trace();
  return mod(static_cast<int64_t>(t) * t - 4LL * det(), l);
}

ProjMat operator*(const ProjMat& x, const ProjMat& y) {
  const int l = x.l;
  const auto& a = x.m;
  const auto& b = y.m;
  ProjMat r;
  r.l = l;
  r.m = {mod(static_cast<int64_t>(a[0]) * b[0] + static_cast<int64_t>(a[1]) * b[2], l),
         mod(static_cast<int64_t>(a[0]) * b[1] + static_cast<int64_t>(a[1]) * b[3], l),
         mod(static_cast<int64_t>(a[2]) * b[0] + static_cast<int64_t>(a[3]) * b[2], l),
         mod(static_cast<int64_t>(a[2]) * b[1] + static_cast<int64_t>(a[3]) * b[3], l)};
  int lead = r.m[0] ? r.m[0] : r.m[1];
  if (lead != 1) {
    int s = inv_mod(lead, l);
    for (auto& v : r.m) v = static_cast<int>(static_cast<int64_t>(v) * s % l);
  }
  return r;
}

ProjMat ProjMat::inverse() const { return make(l, m[3], -m[1], -m[2], m[0]); }

ProjMat ProjMat::pow(uint64_t e) const {
  ProjMat r = identity(l), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

int ProjMat::order() const {
  ProjMat x = *this;
  for (int k = 1; k <= 2 * l + 2; ++k) {
    if (x.is_identity()) return k;
    x = x * *this;
  }
  fail(ErrorCode::InvalidArgument, "element order exceeds l+1");
}

int act(const ProjMat& g, ProjPoint p) {
  const int l = g.l;
  const auto& m = g.m;
  if (p == l) return m[2] == 0 ? l : static_cast<int>(static_cast<int64_t>(m[0]) * inv_mod(m[2], l) % l);
  int num = mod(static_cast<int64_t>(m[0]) * p + m[1], l);
  int den = mod(static_cast<int64_t>(m[2]) * p + m[3], l);
  if (den == 0) return l;
  return static_cast<int>(static_cast<int64_t>(num) * inv_mod(den, l) % l);
}

std::vector<int> permutation(const ProjMat& g) {
  std::vector<int> perm(g.l + 1);
  for (int p = 0; p <= g.l; ++p) perm[p] = act(g, p);
  return perm;
}

std::vector<int> cycle_type(const ProjMat& g) {
  auto perm = permutation(g);
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> out;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int fixed_point_count(const ProjMat& g) {
  int n = 0;
  for (int p = 0; p <= g.l; ++p) n += act(g, p) == p;
  return n;
}

bool is_split_element(const ProjMat& g) {
  if (g.is_identity()) return true;
  int d = g.disc();
  return d != 0 && is_square_mod(d, g.l);
}

GroupLabel GroupLabel::parse(const std::string& s) {
  if (s == "A4") return a4();
  if (s == "S4") return s4();
  if (s == "A5") return a5();
  if (s == "ContainsPSL") return {Kind::ContainsPSL, 0};
  if (s == "Other") return {Kind::Other, 0};
  if (s.size() > 1 && (s[0] == 'C' || s[0] == 'D')) {
    try {
      size_t used = 0;
      int n = std::stoi(s.substr(1), &used);
      if (used == s.size() - 1 && n >= 1) {
        if (s[0] == 'C') return cyclic(n);
        if (n >= 4 && n % 2 == 0) return dihedral(n);
      }
    } catch (const std::exception&) {
    }
  }
  fail(ErrorCode::ParseError, "unknown group label '" + s + "'");
}

std::string GroupLabel::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(order);
    case Kind::Dihedral: return "D" + std::to_string(order);
    case Kind::A4: return "A4";
    case Kind::S4: return "S4";
    case Kind::A5: return "A5";
    case Kind::ContainsPSL: return "ContainsPSL";
    case Kind::Other: return "Other";
  }
  return "Other";
}

std::optional<ProjSubgroup> try_closure(int l, const std::vector<ProjMat>& gens, size_t bound) {
  check_l(l);
  for (const auto& g : gens)
    if (g.l != l) fail(ErrorCode::InvalidArgument, "generators over different fields");
  if (bound < 1) fail(ErrorCode::InvalidArgument, "closure bound must be at least 1");
  ProjSubgroup H;
  H.l_ = l;
  H.gens_ = gens;
  ProjMat id = ProjMat::identity(l);
  H.elements_.push_back(id);
  H.index_.emplace(id.key(), 0);
  for (size_t i = 0; i < H.elements_.size(); ++i) {
    for (const auto& g : gens) {
      ProjMat y = H.elements_[i] * g;
      if (H.index_.emplace(y.key(), H.elements_.size()).second) {
        H.elements_.push_back(y);
        if (H.elements_.size() > bound) return std::nullopt;
      }
    }
  }
  return H;
}

ProjSubgroup closure(int l, const std::vector<ProjMat>& gens, size_t bound) {
  auto H = try_closure(l, gens, bound);
  if (!H) fail(ErrorCode::BoundExceeded, "closure exceeded " + std::to_string(bound) + " elements");
  return *H;
}

nlohmann::json ProjSubgroup::to_json(const std::string& label) const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : gens_) gens.push_back({{g.m[0], g.m[1]}, {g.m[2], g.m[3]}});
  return {{"l", l_}, {"generators", gens}, {"label", label}};
}

ProjSubgroup subgroup_from_json(const nlohmann::json& j, std::string* label) {
  try {
    int l = j.at("l").get<int>();
    std::vector<ProjMat> gens;
    for (const auto& g : j.at("generators"))
      gens.push_back(ProjMat::make(l, g.at(0).at(0).get<int64_t>(), g.at(0).at(1).get<int64_t>(),
                                   g.at(1).at(0).get<int64_t>(), g.at(1).at(1).get<int64_t>()));
    if (label) *label = j.value("label", "");
    return closure(l, gens, pgl2_order(l));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed subgroup witness: ") + e.what());
  }
}

uint64_t pgl2_order(int l) {
  uint64_t L = static_cast<uint64_t>(l);
  return L * (L - 1) * (L + 1);
}

std::vector<ProjMat> all_elements(int l, bool psl_only) {
  check_l(l);
  std::vector<ProjMat> out;
  out.reserve(pgl2_order(l) / (psl_only ? 2 : 1));
  auto push = [&](int a, int b, int c, int d) {
    ProjMat g;
    g.l = l;
    g.m = {a, b, c, d};
    if (g.det() == 0) return;
    if (psl_only && !g.det_is_square()) return;
    out.push_back(g);
  };
  for (int b = 0; b < l; ++b)
    for (int c = 0; c < l; ++c)
      for (int d = 0; d < l; ++d) push(1, b, c, d);
  for (int c = 1; c < l; ++c)
    for (int d = 0; d < l; ++d) push(0, 1, c, d);
  return out;
}

ProjSubgroup pgl2(int l) {
  check_l(l);
  int r = primitive_root(l);
  return closure(l, {ProjMat::make(l, r, 0, 0, 1), ProjMat::make(l, 1, 1, 0, 1), ProjMat::make(l, 0, 1, 1, 0)},
                 pgl2_order(l));
}

ProjSubgroup psl2(int l) {
  check_l(l);
  return closure(l, {ProjMat::make(l, 1, 1, 0, 1), ProjMat::make(l, 1, 0, 1, 1)}, pgl2_order(l) / 2);
}

ProjSubgroup split_cartan_normalizer(int l) {
  check_l(l);
  int r = primitive_root(l);
  return closure(l, {ProjMat::make(l, r, 0, 0, 1), ProjMat::make(l, 0, 1, 1, 0)}, 2 * (l - 1));
}

ProjSubgroup nonsplit_cartan(int l) {
  check_l(l);
  int delta = 2;
  while (is_square_mod(delta, l)) ++delta;
  // a + sqrt(delta) acting on F_l(sqrt delta) in the basis (1, sqrt delta).
  for (int a = 0; a < l; ++a) {
    ProjMat g = ProjMat::make(l, a, delta, 1, a);
    if (g.order() == l + 1) return closure(l, {g}, l + 1);
  }
  fail(ErrorCode::NotFound, "no generator of the non-split Cartan found");
}

ProjSubgroup borel(int l) {
  check_l(l);
  int r = primitive_root(l);
  return closure(l, {ProjMat::make(l, r, 0, 0, 1), ProjMat::make(l, 1, 1, 0, 1)}, static_cast<size_t>(l) * (l - 1));
}

bool is_psl(const ProjSubgroup& H) {
  for (const auto& g : H.elements())
    if (!g.det_is_square()) return false;
  return true;
}

bool is_hasse(const ProjSubgroup& H) {
  const int l = H.l();
  std::vector<bool> common(l + 1, true);
  for (const auto& g : H.elements()) {
    bool any = false;
    for (int p = 0; p <= l; ++p) {
      bool fixed = act(g, p) == p;
      any |= fixed;
      if (!fixed) common[p] = false;
    }
    if (!any) return false;
  }
  return std::none_of(common.begin(), common.end(), [](bool b) { return b; });
}

bool is_abelian(const ProjSubgroup& H) {
  const auto& gens = H.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

std::map<int, int> order_profile(const ProjSubgroup& H) {
  std::map<int, int> prof;
  for (const auto& g : H.elements()) ++prof[g.order()];
  return prof;
}

GroupLabel classify(const ProjSubgroup& H) {
  const int n = static_cast<int>(H.order());
  const int l = H.l();
  auto prof = order_profile(H);
  if (is_abelian(H)) {
    if (prof.count(n)) return GroupLabel::cyclic(n);
    if (n == 4 && prof[2] == 3) return GroupLabel::dihedral(4);
  }
  if (n == 12 && prof == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}) return GroupLabel::a4();
  if (n == 24 && prof == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) return GroupLabel::s4();
  if (n == 60 && prof == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) return GroupLabel::a5();
  if (n % 2 == 0 && n >= 6) {
    const int m = n / 2;
    for (const auto& g : H.elements()) {
      if (g.order() != m) continue;
      std::set<uint64_t> cyc;
      ProjMat x = ProjMat::identity(l);
      for (int k = 0; k < m; ++k, x = x * g) cyc.insert(x.key());
      bool dihedral = true;
      for (const auto& h : H.elements())
        if (!cyc.count(h.key()) && h.order() != 2) dihedral = false;
      if (dihedral) return GroupLabel::dihedral(n);
      break;  // a cyclic subgroup of index 2 in a dihedral group of order >= 6 is unique
    }
  }
  if (n % l == 0) {
    if (static_cast<uint64_t>(n) * 2 >= pgl2_order(l)) return {GroupLabel::Kind::ContainsPSL, n};
    return {GroupLabel::Kind::Other, n};
  }
  fail(ErrorCode::Unclassifiable, "subgroup of order " + std::to_string(n) + " matches no known profile");
}

bool is_in_split_cartan_normalizer_class(const ProjSubgroup& H) {
  GroupLabel lab = classify(H);
  const int l = H.l();
  auto all_split = [&](const ProjMat& g) {
    ProjMat x = g;
    for (int k = 0; k < 2 * l + 2 && !x.is_identity(); ++k, x = x * g)
      if (!is_split_element(x)) return false;
    return true;
  };
  if (lab.kind == GroupLabel::Kind::Cyclic) {
    for (const auto& g : H.elements())
      if (!is_split_element(g)) return false;
    return true;
  }
  if (lab.kind != GroupLabel::Kind::Dihedral) fail(ErrorCode::WrongShape, "expected a cyclic or dihedral subgroup");
  const int m = lab.order / 2;
  // Some cyclic subgroup of index 2 made of split elements.
  for (const auto& g : H.elements())
    if (g.order() == m && all_split(g)) return true;
  return false;
}

bool congruence_prediction(const GroupLabel& target, int l, bool split) {
  using K = GroupLabel::Kind;
  switch (target.kind) {
    case K::A4: return l % 12 == 1;
    case K::S4: return l % 24 == 1;
    case K::A5: return l % 60 == 1;
    case K::Dihedral: {
      int n = target.order / 2;
      return l % 4 == 1 && n > 1 && ((l - 1) / 2) % n == 0 && split;
    }
    case K::Cyclic: return false;  // a cyclic group fixing a point fixes it globally
    default: fail(ErrorCode::InvalidArgument, "no congruence prediction for " + target.to_string());
  }
}

std::vector<int> orbit_sizes(const ProjSubgroup& H) {
  const int l = H.l();
  std::vector<int> parent(l + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  const auto& gens = H.generators();
  for (const auto& g : gens)
    for (int p = 0; p <= l; ++p) parent[find(p)] = find(act(g, p));
  std::map<int, int> sizes;
  for (int p = 0; p <= l; ++p) ++sizes[find(p)];
  std::vector<int> out;
  for (auto& [r, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

int orbit_count(const ProjSubgroup& H) { return static_cast<int>(orbit_sizes(H).size()); }

bool mackey_check(const ProjSubgroup& H) {
  const int l = H.l();
  const auto G = all_elements(l, false);
  const auto B = borel(l);
  std::unordered_map<uint64_t, bool> seen;
  seen.reserve(G.size());
  std::vector<int> indices;
  for (const auto& g : G) {
    if (seen.count(g.key())) continue;
    for (const auto& h : H.elements()) {
      ProjMat hg = h * g;
      for (const auto& b : B.elements()) seen[(hg * b).key()] = true;
    }
    // [H : H ∩ g B g^{-1}]
    ProjMat gi = g.inverse();
    int inter = 0;
    for (const auto& h : H.elements()) inter += B.contains(gi * h * g);
    indices.push_back(static_cast<int>(H.order()) / inter);
  }
  std::sort(indices.begin(), indices.end());
  return indices == orbit_sizes(H);
}

std::vector<std::vector<int>> cycle_type_set(const ProjSubgroup& H) {
  std::set<std::vector<int>> types;
  for (const auto& g : H.elements()) types.insert(cycle_type(g));
  return {types.begin(), types.end()};
}

ProjSubgroup find_subgroup(int l, const GroupLabel& target, uint64_t seed, int budget, const SearchOptions& opts) {
  check_l(l);
  using K = GroupLabel::Kind;
  const uint64_t ambient = pgl2_order(l) / (opts.psl_only ? 2 : 1);
  const std::string not_found = "no " + target.to_string() + " found in " + (opts.psl_only ? "PSL" : "PGL") +
                                "_2(F_" + std::to_string(l) + ") within budget";
  if (target.order <= 0 || ambient % static_cast<uint64_t>(target.order) != 0) fail(ErrorCode::NotFound, not_found);

  // Elements bucketed by order.
  std::map<int, std::vector<ProjMat>> by_order;
  for (const auto& g : all_elements(l, opts.psl_only)) {
    int o = g.order();
    if (o <= 5 || (target.kind == K::Cyclic && o == target.order) ||
        (target.kind == K::Dihedral && o == target.order / 2))
      by_order[o].push_back(g);
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](int order) -> const ProjMat* {
    auto it = by_order.find(order);
    if (it == by_order.end() || it->second.empty()) return nullptr;
    return &it->second[rng() % it->second.size()];
  };
  auto accept = [&](const std::vector<ProjMat>& gens) -> std::optional<ProjSubgroup> {
    auto H = try_closure(l, gens, static_cast<size_t>(target.order));
    if (!H || static_cast<int>(H->order()) != target.order) return std::nullopt;
    try {
      if (!(classify(*H) == target)) return std::nullopt;
    } catch (const Error&) {
      return std::nullopt;
    }
    if (target.kind == K::Dihedral && opts.split && is_in_split_cartan_normalizer_class(*H) != *opts.split)
      return std::nullopt;
    return H;
  };

  for (int attempt = 0; attempt < budget; ++attempt) {
    std::optional<ProjSubgroup> H;
    switch (target.kind) {
      case K::Cyclic: {
        const ProjMat* g = pick(target.order);
        if (g) H = accept({*g});
        break;
      }
      case K::Dihedral: {
        const int m = target.order / 2;
        const ProjMat* g = pick(m);
        const ProjMat* s = pick(2);
        if (!g || !s) break;
        if (opts.split && is_split_element(*g) != *opts.split) break;
        if (!((*s * *g) * (*s * *g)).is_identity() || *s == *g) break;
        H = accept({*g, *s});
        break;
      }
      case K::A4:
      case K::A5: {
        const ProjMat* a = pick(2);
        const ProjMat* b = pick(3);
        if (!a || !b) break;
        if ((*a * *b).order() != (target.kind == K::A4 ? 3 : 5)) break;
        H = accept({*a, *b});
        break;
      }
      case K::S4: {
        const ProjMat* a = pick(2);
        const ProjMat* b = pick(4);
        if (!a || !b) break;
        if ((*a * *b).order() != 3) break;
        H = accept({*a, *b});
        break;
      }
      default: fail(ErrorCode::InvalidArgument, "cannot search for " + target.to_string());
    }
    if (H) return *H;
  }
  fail(ErrorCode::NotFound, not_found);
}

}  // namespace isoscope::group
