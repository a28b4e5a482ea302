#include "vklab/ipfamily.hpp"

#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace vklab {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<Key> elements, KeyMul mul, Key identity)
    : name_(std::move(name)), keys_(std::move(elements)), mul_(std::move(mul)) {
  for (std::size_t i = 0; i < keys_.size(); ++i)
    if (!index_.emplace(keys_[i], static_cast<int>(i)).second) throw std::logic_error(name_ + ": duplicate element");
  const auto it = index_.find(identity);
  if (it == index_.end()) throw std::logic_error(name_ + ": identity missing");
  identity_ = it->second;
  const int n = size();
  auto product = [&](int a, int b) {
    const int c = index_of(mul_(key(a), key(b)));
    if (c < 0) throw std::logic_error(name_ + ": not closed under multiplication");
    return c;
  };
  if (n <= 5000) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) product(a, b);
  } else {
    std::mt19937 gen(1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) product(pick(gen), pick(gen));
  }
  std::mt19937 gen(2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < 2000; ++i) {
    const int a = pick(gen), b = pick(gen), c = pick(gen);
    if (product(product(a, b), c) != product(a, product(b, c))) throw std::logic_error(name_ + ": not associative");
  }
  for (int a = 0; a < n; ++a)
    if (product(identity_, a) != a || product(a, identity_) != a) throw std::logic_error(name_ + ": identity is not neutral");
  // the inverse is the last power before the identity
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    int prev = identity_, cur = a;
    for (int k = 0; k <= n && cur != identity_; ++k) {
      prev = cur;
      cur = product(cur, a);
    }
    if (cur != identity_) throw std::logic_error(name_ + ": element without inverse");
    inv_[static_cast<std::size_t>(a)] = a == identity_ ? identity_ : prev;
  }
}

int FiniteGroupTable::mul(int a, int b) const {
  const int c = index_of(mul_(key(a), key(b)));
  if (c < 0) throw std::logic_error(name_ + ": product outside the group");
  return c;
}

int FiniteGroupTable::index_of(Key k) const {
  const auto it = index_.find(k);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<std::vector<int>>& FiniteGroupTable::classes() const {
  if (!classes_.empty()) return classes_;
  std::vector<char> seen(static_cast<std::size_t>(size()), 0);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < size(); ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    std::vector<int> cls;
    for (int x = 0; x < size(); ++x) {
      const int y = conjugate(x, g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  classes_ = std::move(out);
  return classes_;
}

// ---------------------------------------------------------------------------------------------

FiniteGroupTable::Key matrix_key(const MatGF& g) {
  FiniteGroupTable::Key key = 0, place = 1;
  const auto q = static_cast<FiniteGroupTable::Key>(g.field().q());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      key += place * static_cast<FiniteGroupTable::Key>(g(i, j));
      place *= q;
    }
  return key;
}

MatGF matrix_from_key(FiniteGroupTable::Key key, int n, const FieldCtx& F) {
  MatGF g(F, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const auto q = static_cast<FiniteGroupTable::Key>(F.q());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<int>(key % q));
      key /= q;
    }
  return g;
}

namespace {

std::mutex g_group_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const FiniteGroupTable>> g_gl_cache;

}  // namespace

std::shared_ptr<const FiniteGroupTable> general_linear_group(int n, const FieldCtx& F) {
  if (n < 1) throw std::invalid_argument("GL_n needs n >= 1");
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= F.q();
  if (total > 2.0e7) throw SizeLimitError("GL_n(F_q) too large to enumerate");
  std::lock_guard lock(g_group_mutex);
  auto& slot = g_gl_cache[{n, F.q()}];
  if (slot) return slot;
  std::vector<FiniteGroupTable::Key> elements;
  const auto count = static_cast<FiniteGroupTable::Key>(total);
  for (FiniteGroupTable::Key k = 0; k < count; ++k)
    if (rank(matrix_from_key(k, n, F)) == n) elements.push_back(k);
  if (elements.size() > 1000000) throw SizeLimitError("GL_n(F_q) has more than 10^6 elements");
  const FieldCtx* f = &F;
  auto mul = [n, f](FiniteGroupTable::Key a, FiniteGroupTable::Key b) {
    return matrix_key(matrix_from_key(a, n, *f) * matrix_from_key(b, n, *f));
  };
  slot = std::make_shared<const FiniteGroupTable>("GL_" + std::to_string(n) + "(F_" + std::to_string(F.q()) + ")",
                                                  std::move(elements), mul, matrix_key(MatGF::identity(F, static_cast<std::size_t>(n))));
  return slot;
}

std::shared_ptr<const FiniteGroupTable> cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<FiniteGroupTable::Key> elements(static_cast<std::size_t>(k));
  std::iota(elements.begin(), elements.end(), 0);
  const auto kk = static_cast<FiniteGroupTable::Key>(k);
  return std::make_shared<const FiniteGroupTable>("Z/" + std::to_string(k), std::move(elements),
                                                  [kk](FiniteGroupTable::Key a, FiniteGroupTable::Key b) { return (a + b) % kk; }, 0);
}

WreathElement decode_wreath(FiniteGroupTable::Key key, int n, int h_size) {
  WreathElement w;
  for (int i = 0; i < n; ++i) {
    w.perm.push_back(static_cast<int>(key % static_cast<FiniteGroupTable::Key>(n)));
    key /= static_cast<FiniteGroupTable::Key>(n);
  }
  for (int i = 0; i < n; ++i) {
    w.values.push_back(static_cast<int>(key % static_cast<FiniteGroupTable::Key>(h_size)));
    key /= static_cast<FiniteGroupTable::Key>(h_size);
  }
  return w;
}

FiniteGroupTable::Key encode_wreath(const WreathElement& w, int h_size) {
  const auto n = static_cast<FiniteGroupTable::Key>(w.perm.size());
  FiniteGroupTable::Key key = 0, place = 1;
  for (int p : w.perm) {
    key += place * static_cast<FiniteGroupTable::Key>(p);
    place *= n;
  }
  for (int v : w.values) {
    key += place * static_cast<FiniteGroupTable::Key>(v);
    place *= static_cast<FiniteGroupTable::Key>(h_size);
  }
  return key;
}

std::shared_ptr<const FiniteGroupTable> wreath_group(int n, const FiniteGroupTable& H) {
  if (n < 1) throw std::invalid_argument("wreath product needs n >= 1");
  const int h = H.size();
  double total = 1;
  for (int i = 1; i <= n; ++i) total *= i * static_cast<double>(h);
  if (total > 1.0e6) throw SizeLimitError("wreath product too large to enumerate");
  std::vector<FiniteGroupTable::Key> elements;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<int> hv(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) hv[i] = values[i];
      elements.push_back(encode_wreath({perm, hv}, h));
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == h) values[i++] = 0;
      if (i == values.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // values are H indices; translate to H through the table
  auto Hs = std::make_shared<FiniteGroupTable>(H);
  auto mul = [n, h, Hs](FiniteGroupTable::Key a, FiniteGroupTable::Key b) {
    const WreathElement x = decode_wreath(a, n, h), y = decode_wreath(b, n, h);
    WreathElement z;
    z.perm.resize(static_cast<std::size_t>(n));
    z.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int j = x.perm[static_cast<std::size_t>(i)];
      z.perm[static_cast<std::size_t>(i)] = y.perm[static_cast<std::size_t>(j)];
      z.values[static_cast<std::size_t>(i)] = Hs->mul(x.values[static_cast<std::size_t>(i)], y.values[static_cast<std::size_t>(j)]);
    }
    return encode_wreath(z, h);
  };
  WreathElement id;
  for (int i = 0; i < n; ++i) {
    id.perm.push_back(i);
    id.values.push_back(H.identity());
  }
  return std::make_shared<const FiniteGroupTable>(H.name() + " wr S_" + std::to_string(n), std::move(elements), mul,
                                                  encode_wreath(id, h));
}

// ---------------------------------------------------------------------------------------------

namespace {

void finish_level(IPLevel& level) {
  const int g = level.G->size();
  level.in_P.assign(static_cast<std::size_t>(g), 0);
  level.pi_of.assign(static_cast<std::size_t>(g), -1);
  for (std::size_t i = 0; i < level.P.size(); ++i) {
    level.in_P[static_cast<std::size_t>(level.P[i])] = 1;
    level.pi_of[static_cast<std::size_t>(level.P[i])] = level.pi[i];
    if (level.pi[i] == level.G_prev->identity()) level.N.push_back(level.P[i]);
  }
  if (!verify_level(level)) throw std::logic_error("IP level bookkeeping failed for " + level.G->name());
}

IPLevel build_matrix_level(int m, const FieldCtx& F, bool affine) {
  if (m < 1) throw std::invalid_argument("levels start at m = 1");
  IPLevel level;
  level.kind = affine ? IPLevel::Kind::affine : IPLevel::Kind::gl;
  level.m = m;
  level.G = general_linear_group(m + 1, F);
  level.G_prev = general_linear_group(m, F);
  const std::size_t n = static_cast<std::size_t>(m);
  for (int i = 0; i < level.G->size(); ++i) {
    const MatGF g = matrix_from_key(level.G->key(i), m + 1, F);
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && g(n, j) == 0;
    if (!ok || (affine && g(n, n) != 1)) continue;
    MatGF a(F, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a.set(r, c, g(r, c));
    level.P.push_back(i);
    level.pi.push_back(level.G_prev->index_of(matrix_key(a)));
  }
  level.section.resize(static_cast<std::size_t>(level.G_prev->size()));
  for (int i = 0; i < level.G_prev->size(); ++i) {
    const MatGF a = matrix_from_key(level.G_prev->key(i), m, F);
    MatGF lift = MatGF::identity(F, n + 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) lift.set(r, c, a(r, c));
    level.section[static_cast<std::size_t>(i)] = level.G->index_of(matrix_key(lift));
  }
  finish_level(level);
  return level;
}

}  // namespace

IPLevel build_gl_ip_level(int m, const FieldCtx& F) { return build_matrix_level(m, F, false); }
IPLevel build_affine_ip_level(int m, const FieldCtx& F) { return build_matrix_level(m, F, true); }

IPLevel build_wreath_ip_level(int m, std::shared_ptr<const FiniteGroupTable> H) {
  if (m < 1) throw std::invalid_argument("levels start at m = 1");
  IPLevel level;
  level.kind = IPLevel::Kind::wreath;
  level.m = m;
  level.G = wreath_group(m + 1, *H);
  level.G_prev = wreath_group(m, *H);
  const int h = H->size();
  for (int i = 0; i < level.G->size(); ++i) {
    WreathElement w = decode_wreath(level.G->key(i), m + 1, h);
    if (w.perm[static_cast<std::size_t>(m)] != m) continue;
    w.perm.pop_back();
    w.values.pop_back();
    level.P.push_back(i);
    level.pi.push_back(level.G_prev->index_of(encode_wreath(w, h)));
  }
  level.section.resize(static_cast<std::size_t>(level.G_prev->size()));
  for (int i = 0; i < level.G_prev->size(); ++i) {
    WreathElement w = decode_wreath(level.G_prev->key(i), m, h);
    w.perm.push_back(m);
    w.values.push_back(H->identity());
    level.section[static_cast<std::size_t>(i)] = level.G->index_of(encode_wreath(w, h));
  }
  finish_level(level);
  return level;
}

bool verify_level(const IPLevel& level) {
  const FiniteGroupTable& G = *level.G;
  const FiniteGroupTable& Gm = *level.G_prev;
  std::vector<char> hit(static_cast<std::size_t>(Gm.size()), 0);
  for (int p : level.pi) {
    if (p < 0) return false;
    hit[static_cast<std::size_t>(p)] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  for (std::size_t i = 0; i < level.section.size(); ++i) {
    const int s = level.section[i];
    if (s < 0 || !level.in_P[static_cast<std::size_t>(s)] || level.pi_of[static_cast<std::size_t>(s)] != static_cast<int>(i)) return false;
  }
  if (level.P.size() != static_cast<std::size_t>(Gm.size()) * level.N.size()) return false;
  // π is a homomorphism on P (exhaustive up to 4·10^6 pairs)
  const std::size_t np = level.P.size();
  auto check_pair = [&](std::size_t a, std::size_t b) {
    const int ab = G.mul(level.P[a], level.P[b]);
    return level.in_P[static_cast<std::size_t>(ab)] && level.pi_of[static_cast<std::size_t>(ab)] == Gm.mul(level.pi[a], level.pi[b]);
  };
  if (np * np <= 4000000) {
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = 0; b < np; ++b)
        if (!check_pair(a, b)) return false;
  } else {
    std::mt19937 gen(3);
    std::uniform_int_distribution<std::size_t> pick(0, np - 1);
    for (int i = 0; i < 100000; ++i)
      if (!check_pair(pick(gen), pick(gen))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------

GroupAlgElem GroupAlgElem::delta(std::shared_ptr<const FiniteGroupTable> group, int g) {
  GroupAlgElem e{std::move(group), {}};
  e.coeffs[g] = 1;
  return e;
}

bool GroupAlgElem::operator==(const GroupAlgElem& o) const { return group == o.group && coeffs == o.coeffs; }

namespace {

void prune(GroupAlgElem& a) {
  for (auto it = a.coeffs.begin(); it != a.coeffs.end();) it = it->second == 0 ? a.coeffs.erase(it) : std::next(it);
}

}  // namespace

GroupAlgElem convolve(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.group != b.group) throw std::invalid_argument("convolution of elements of different groups");
  GroupAlgElem out{a.group, {}};
  for (const auto& [g, x] : a.coeffs)
    for (const auto& [h, y] : b.coeffs) out.coeffs[a.group->mul(g, h)] += x * y;
  prune(out);
  return out;
}

GroupAlgElem involution(const GroupAlgElem& a) {
  GroupAlgElem out{a.group, {}};
  for (const auto& [g, x] : a.coeffs) out.coeffs[a.group->inv(g)] = x;
  return out;
}

GroupAlgElem embed_i_with_lift(const GroupAlgElem& a, const IPLevel& level, std::size_t kernel_index) {
  if (a.group.get() != level.G_prev.get()) throw std::invalid_argument("element does not live on G_m of this level");
  GroupAlgElem out{level.G, {}};
  const Rational w(1, static_cast<long>(level.N.size()));
  const int shift = level.N.at(kernel_index);
  for (const auto& [g, x] : a.coeffs) {
    const int lift = level.G->mul(level.section[static_cast<std::size_t>(g)], shift);
    for (int h : level.N) out.coeffs[level.G->mul(lift, h)] += x * w;
  }
  prune(out);
  return out;
}

GroupAlgElem embed_i(const GroupAlgElem& a, const IPLevel& level) {
  const auto e = std::find(level.N.begin(), level.N.end(), level.G->identity());
  return embed_i_with_lift(a, level, static_cast<std::size_t>(e - level.N.begin()));
}

Verdict embed_homomorphism_check(const IPLevel& level) {
  Verdict v;
  auto fail = [&](const std::string& why) {
    if (v.ok) v.detail = why;
    v.ok = false;
  };
  const auto& Gm = level.G_prev;
  std::vector<GroupAlgElem> images;
  for (int g = 0; g < Gm->size(); ++g) images.push_back(embed_i(GroupAlgElem::delta(Gm, g), level));
  for (int g = 0; g < Gm->size(); ++g) {
    for (std::size_t k = 0; k < level.N.size(); ++k) {
      ++v.checked;
      if (!(embed_i_with_lift(GroupAlgElem::delta(Gm, g), level, k) == images[static_cast<std::size_t>(g)]))
        fail("i depends on the lift at g = " + std::to_string(g));
    }
    ++v.checked;
    if (!(involution(images[static_cast<std::size_t>(g)]) == images[static_cast<std::size_t>(Gm->inv(g))]))
      fail("i does not commute with the involution at g = " + std::to_string(g));
    for (int h = 0; h < Gm->size(); ++h) {
      ++v.checked;
      if (!(convolve(images[static_cast<std::size_t>(g)], images[static_cast<std::size_t>(h)]) ==
            images[static_cast<std::size_t>(Gm->mul(g, h))]))
        fail("i(g)i(h) != i(gh) at g = " + std::to_string(g) + ", h = " + std::to_string(h));
    }
  }
  const GroupAlgElem& e = images[static_cast<std::size_t>(Gm->identity())];
  ++v.checked;
  if (!(convolve(e, e) == e)) fail("i(e) is not idempotent");
  ++v.checked;
  const bool unit = e == GroupAlgElem::delta(level.G, level.G->identity());
  if (unit != (level.N.size() == 1)) fail("i(e) is the unit exactly when N is trivial; violated");
  return v;
}

std::vector<int> borel_subgroup(const FiniteGroupTable& G, int n, const FieldCtx& F) {
  std::vector<int> out;
  for (int i = 0; i < G.size(); ++i) {
    const MatGF g = matrix_from_key(G.key(i), n, F);
    bool upper = true;
    for (int r = 1; r < n && upper; ++r)
      for (int c = 0; c < r; ++c)
        if (g(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) != 0) {
          upper = false;
          break;
        }
    if (upper) out.push_back(i);
  }
  return out;
}

std::vector<Rational> permutation_character(const FiniteGroupTable& G, const std::vector<int>& B) {
  std::vector<char> inB(static_cast<std::size_t>(G.size()), 0);
  for (int b : B) inB[static_cast<std::size_t>(b)] = 1;
  std::vector<Rational> chi(static_cast<std::size_t>(G.size()), 0);
  for (const auto& cls : G.classes()) {
    long count = 0;
    for (int x = 0; x < G.size(); ++x) count += inB[static_cast<std::size_t>(G.conjugate(G.inv(x), cls.front()))];
    const Rational v = Rational(count) / static_cast<long>(B.size());
    for (int g : cls) chi[static_cast<std::size_t>(g)] = v;
  }
  return chi;
}

Verdict flag_induction_check(int m, const FieldCtx& F) {
  if (m < 1 || m + 1 > 3) throw SizeLimitError("flag_induction_check supports m + 1 <= 3");
  const IPLevel level = build_gl_ip_level(m, F);
  const FiniteGroupTable& G = *level.G;
  const auto sigma_m = permutation_character(*level.G_prev, borel_subgroup(*level.G_prev, m, F));
  Verdict v;
  const std::vector<int> ones(static_cast<std::size_t>(m) + 1, 1);
  for (const auto& cls : G.classes()) {
    const int g = cls.front();
    Rational induced = 0;
    for (int x = 0; x < G.size(); ++x) {
      const int y = G.conjugate(G.inv(x), g);
      if (level.in_P[static_cast<std::size_t>(y)]) induced += sigma_m[static_cast<std::size_t>(level.pi_of[static_cast<std::size_t>(y)])];
    }
    induced /= static_cast<long>(level.P.size());
    const Rational flags(count_fixed_flags(matrix_from_key(G.key(g), m + 1, F), ones));
    ++v.checked;
    if (induced != flags && v.ok) {
      v.ok = false;
      v.detail = "class of " + matrix_from_key(G.key(g), m + 1, F).to_text() + ": induced " + to_string(induced) +
                 ", fixed flags " + to_string(flags);
    }
  }
  return v;
}

Verdict central_check(int m, std::shared_ptr<const FiniteGroupTable> H,
                      const std::function<Rational(const std::vector<int>&)>& measure) {
  const auto G = wreath_group(m, *H);
  const int h = H->size();
  Verdict v;
  for (int d = 0; d < G->size(); ++d) {
    const WreathElement dw = decode_wreath(G->key(d), m, h);
    if (!std::is_sorted(dw.perm.begin(), dw.perm.end())) continue;  // diagonal elements only
    const Rational md = measure(dw.values);
    for (int x = 0; x < G->size(); ++x) {
      const WreathElement y = decode_wreath(G->key(G->conjugate(x, d)), m, h);
      ++v.checked;
      if (!std::is_sorted(y.perm.begin(), y.perm.end())) {
        v.ok = false;
        v.detail = "diagonal subgroup is not normal";
        return v;
      }
      if (measure(y.values) != md && v.ok) {
        v.ok = false;
        v.detail = "cylinder probability not constant on a conjugacy class";
      }
    }
  }
  return v;
}

Verdict de_finetti_central_check(int m, std::shared_ptr<const FiniteGroupTable> H, const std::vector<Rational>& M0) {
  if (static_cast<int>(M0.size()) != H->size()) throw std::invalid_argument("M0 must have one weight per element of H");
  Rational total = 0;
  for (const auto& w : M0) {
    if (w < 0) throw std::invalid_argument("M0 must be nonnegative");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("M0 must sum to 1");
  auto product = [&](const std::vector<int>& values) {
    Rational p = 1;
    for (int x : values) p *= M0[static_cast<std::size_t>(x)];
    return p;
  };
  Verdict v;
  for (int k = 1; k <= m; ++k) {
    const Verdict c = central_check(k, H, product);
    v.checked += c.checked;
    if (!c.ok && v.ok) v = Verdict{false, v.checked, "level " + std::to_string(k) + ": " + c.detail};
  }
  for (int k = 1; k < m; ++k) {
    const IPLevel level = build_wreath_ip_level(k, H);
    for (int g = 0; g < level.G_prev->size(); ++g) {
      const WreathElement w = decode_wreath(level.G_prev->key(g), k, H->size());
      if (!std::is_sorted(w.perm.begin(), w.perm.end())) continue;
      Rational sum = 0;
      for (int n : level.N)
        sum += product(decode_wreath(level.G->key(level.G->mul(level.section[static_cast<std::size_t>(g)], n)), k + 1, H->size()).values);
      ++v.checked;
      if (sum != product(w.values) && v.ok) {
        v.ok = false;
        v.detail = "coherence fails at level " + std::to_string(k);
      }
    }
  }
  return v;
}

Verdict coherence_bridge_check(const CylinderFn& cylinder, int n_max, const FieldCtx& F) {
  Verdict v;
  for (int m = 1; m < n_max; ++m) {
    const IPLevel level = build_gl_ip_level(m, F);
    std::vector<int> unitriangular_kernel;
    for (int h : level.N)
      if (matrix_from_key(level.G->key(h), m + 1, F)(static_cast<std::size_t>(m), static_cast<std::size_t>(m)) == 1)
        unitriangular_kernel.push_back(h);
    for (int g = 0; g < level.G_prev->size(); ++g) {
      const MatGF gm = matrix_from_key(level.G_prev->key(g), m, F);
      bool unitri = true;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c <= r; ++c)
          unitri = unitri && gm(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) == (r == c ? 1 : 0);
      if (!unitri) continue;
      const Partition rho = jordan_type_unipotent(gm);
      Rational group_sum = 0;
      for (int h : unitriangular_kernel) {
        const int gh = level.G->mul(level.section[static_cast<std::size_t>(g)], h);
        group_sum += cylinder(jordan_type_unipotent(matrix_from_key(level.G->key(gh), m + 1, F)));
      }
      Rational type_sum = 0;
      for (const auto& [sigma, c] : extension_counts(rho, F)) type_sum += Rational(c) * cylinder(sigma);
      ++v.checked;
      if ((group_sum != type_sum || group_sum != cylinder(rho)) && v.ok) {
        v.ok = false;
        v.detail = "mismatch at " + gm.to_text() + " (type " + rho.to_string() + ")";
      }
    }
  }
  return v;
}

}  // namespace vklab
