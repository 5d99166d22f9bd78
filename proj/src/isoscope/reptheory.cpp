#include "isoscope/reptheory.hpp"

#include <sstream>

#include "isoscope/error.hpp"
#include "isoscope/integer.hpp"
#include "isoscope/projgroup.hpp"

namespace isoscope::rep {

MatGroup::MatGroup(int l) : l_(l) {
  if (l < 2 || l > 61 || !arith::is_prime_u64(static_cast<uint64_t>(l)))
    fail(ErrorCode::InvalidArgument, "MatGroup needs a prime l <= 61");
  const uint32_t n = static_cast<uint32_t>(l) * l * l * l;
  index_.assign(n, -1);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c)
        for (int d = 0; d < l; ++d) {
          if (((a * d - b * c) % l + l) % l == 0) continue;
          uint32_t code = encode(a, b, c, d);
          index_[code] = static_cast<int>(elems_.size());
          elems_.push_back(code);
        }
  id_ = index_[encode(1, 0, 0, 1)];
  inv_.resize(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i) {
    auto [a, b, c, d] = decode(elems_[i]);
    int det = ((a * d - b * c) % l + l) % l;
    int di = static_cast<int>(arith::invmod(static_cast<uint64_t>(det), static_cast<uint64_t>(l)));
    inv_[i] = index_[encode(d * di, (l - b) * di, (l - c) * di, a * di)];
  }
}

uint32_t MatGroup::encode(int a, int b, int c, int d) const {
  auto r = [&](int v) { return static_cast<uint32_t>(((v % l_) + l_) % l_); };
  const uint32_t L = static_cast<uint32_t>(l_);
  return r(a) + L * (r(b) + L * (r(c) + L * r(d)));
}

std::array<int, 4> MatGroup::decode(uint32_t code) const {
  std::array<int, 4> m{};
  for (auto& v : m) {
    v = static_cast<int>(code % l_);
    code /= l_;
  }
  return m;
}

int MatGroup::mul(int i, int j) const {
  auto [a, b, c, d] = decode(elems_[i]);
  auto [e, f, g, h] = decode(elems_[j]);
  return index_[encode(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)];
}

std::string MatGroup::to_string(int i) const {
  auto [a, b, c, d] = decode(elems_[i]);
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

ConjugacyClasses conjugacy_classes(const MatGroup& G) {
  ConjugacyClasses out;
  const int n = static_cast<int>(G.order());
  out.class_of.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (out.class_of[g] >= 0) continue;
    const int c = static_cast<int>(out.reps.size());
    out.reps.push_back(g);
    size_t size = 0;
    for (int x = 0; x < n; ++x) {
      int y = G.conj(g, x);
      if (out.class_of[y] < 0) {
        out.class_of[y] = c;
        ++size;
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

SubgroupGL2 closure(const MatGroup& G, const std::string& name, const std::vector<int>& gens) {
  SubgroupGL2 H{name, gens, {G.identity()}, std::vector<bool>(G.order(), false)};
  H.member[G.identity()] = true;
  for (size_t i = 0; i < H.elements.size(); ++i)
    for (int g : gens) {
      int y = G.mul(H.elements[i], g);
      if (!H.member[y]) {
        H.member[y] = true;
        H.elements.push_back(y);
      }
    }
  return H;
}

namespace {

int mat(const MatGroup& G, int a, int b, int c, int d) {
  int i = G.index_of(G.encode(a, b, c, d));
  if (i < 0) fail(ErrorCode::InvalidArgument, "singular generator");
  return i;
}

// Scalars are generated by a primitive root times the identity.
int scalar_gen(const MatGroup& G) {
  const int l = G.l();
  for (int g = 2; g < l; ++g) {
    int ord = 1;
    for (uint64_t x = g; x != 1; x = x * g % l) ++ord;
    if (ord == l - 1) return mat(G, g, 0, 0, g);
  }
  return G.identity();  // l = 2
}

}  // namespace

SubgroupGL2 a4_pullback(const MatGroup& G) {
  if (G.l() != 13) fail(ErrorCode::InvalidArgument, "the standard subgroups are for l = 13");
  return closure(G, "pi^-1(A4)", {scalar_gen(G), mat(G, -5, 0, 0, 5), mat(G, -2, -2, -3, 3)});
}

std::vector<SubgroupGL2> standard_subgroups(const MatGroup& G) {
  if (G.l() != 13) fail(ErrorCode::InvalidArgument, "the standard subgroups are for l = 13");
  const int z = scalar_gen(G), u = mat(G, 1, 1, 0, 1);
  std::vector<SubgroupGL2> out;
  out.push_back(closure(G, "Cs+", {mat(G, 2, 0, 0, 1), mat(G, 1, 0, 0, 2), mat(G, 0, 1, 1, 0)}));
  out.push_back(closure(G, "pi^-1(C13:C3)", {z, u, mat(G, 3, 0, 0, 1)}));
  out.push_back(closure(G, "pi^-1(C13:C4)", {z, u, mat(G, 5, 0, 0, 1)}));

  // S4 is the normalizer of A4 in PGL_2(F_13), so pi^-1(S4) is the normalizer
  // of pi^-1(A4) in G.
  SubgroupGL2 A = a4_pullback(G);
  std::vector<int> gens = A.generators;
  for (int x = 0; x < static_cast<int>(G.order()); ++x) {
    if (A.member[x]) continue;
    bool normalizes = true;
    for (int h : A.generators)
      if (!A.member[G.conj(h, x)]) {
        normalizes = false;
        break;
      }
    if (normalizes) {
      gens.push_back(x);
      break;
    }
  }
  SubgroupGL2 S = closure(G, "pi^-1(S4)", gens);
  std::vector<group::ProjMat> proj;
  for (int g : S.generators) {
    auto [a, b, c, d] = G.decode(G.code(g));
    proj.push_back(group::ProjMat::make(13, a, b, c, d));
  }
  auto img = group::closure(13, proj, 2184);
  if (S.order() != 288 || group::classify(img) != group::GroupLabel::s4())
    fail(ErrorCode::SearchFailed, "could not extend pi^-1(A4) to pi^-1(S4)");
  out.push_back(std::move(S));

  out.push_back(closure(G, "pi^-1(D26)", {z, u, mat(G, -1, 0, 0, 1)}));
  out.push_back(closure(G, "B", {mat(G, 2, 0, 0, 1), mat(G, 1, 0, 0, 2), u}));
  return out;
}

std::vector<int64_t> perm_character(const MatGroup& G, const ConjugacyClasses& cls, const SubgroupGL2& H) {
  std::vector<int64_t> chi;
  const int n = static_cast<int>(G.order());
  for (int rep : cls.reps) {
    int64_t count = 0;
    for (int x = 0; x < n; ++x)
      if (H.member[G.conj(rep, x)]) ++count;
    if (count % static_cast<int64_t>(H.order()) != 0)
      fail(ErrorCode::InvalidArgument, "fixed-point count not divisible by |H|; H is not a subgroup");
    chi.push_back(count / static_cast<int64_t>(H.order()));
  }
  return chi;
}

BrauerReport verify_brauer_relation(bool a4_instead) {
  MatGroup G(13);
  return verify_brauer_relation(G, conjugacy_classes(G), a4_instead);
}

BrauerReport verify_brauer_relation(const MatGroup& G, const ConjugacyClasses& cls, bool a4_instead) {
  auto subs = standard_subgroups(G);
  if (a4_instead) subs[3] = a4_pullback(G);
  BrauerReport r;
  for (const auto& H : subs) {
    r.names.push_back(H.name);
    r.orders.push_back(H.order());
    r.characters.push_back(perm_character(G, cls, H));
  }
  r.holds = true;
  const auto& c = r.characters;
  for (size_t k = 0; k < cls.reps.size(); ++k) {
    int64_t lhs = 2 * c[0][k] + c[1][k] + c[2][k];
    int64_t rhs = 2 * c[3][k] + c[4][k] + c[5][k];
    if (lhs != rhs) {
      r.holds = false;
      r.first_failing_class = static_cast<int>(k);
      break;
    }
  }
  return r;
}

std::string brauer_csv(const MatGroup& G, const ConjugacyClasses& cls, const BrauerReport& r) {
  std::ostringstream os;
  os << "class,representative,size";
  for (const auto& n : r.names) os << "," << n;
  os << "\n";
  for (size_t k = 0; k < cls.reps.size(); ++k) {
    os << k << ",\"" << G.to_string(cls.reps[k]) << "\"," << cls.sizes[k];
    for (const auto& chi : r.characters) os << "," << chi[k];
    os << "\n";
  }
  return os.str();
}

}  // namespace isoscope::rep
