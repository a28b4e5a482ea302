#include "vklab/gflinalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <sstream>

#include "vklab/kernels.hpp"

namespace vklab {

namespace {

struct FieldDef {
  int q, p, e;
  std::vector<int> modulus;  // low to high, monic
};

// Defining polynomials for the non-prime fields.
const std::vector<FieldDef>& field_table() {
  static const std::vector<FieldDef> table = {
      {4, 2, 2, {1, 1, 1}},
      {8, 2, 3, {1, 1, 0, 1}},
      {16, 2, 4, {1, 1, 0, 0, 1}},
      {32, 2, 5, {1, 0, 1, 0, 0, 1}},
      {64, 2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {128, 2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {256, 2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {9, 3, 2, {2, 2, 1}},
      {27, 3, 3, {1, 2, 0, 1}},
      {81, 3, 4, {2, 0, 0, 2, 1}},
      {243, 3, 5, {1, 2, 0, 0, 0, 1}},
      {25, 5, 2, {2, 4, 1}},
      {125, 5, 3, {3, 3, 0, 1}},
      {49, 7, 2, {3, 6, 1}},
      {121, 11, 2, {2, 7, 1}},
      {169, 13, 2, {2, 12, 1}},
  };
  return table;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_supported_field_size(int q) {
  if (q < 2 || q > 256) return false;
  if (is_prime(q)) return true;
  return std::any_of(field_table().begin(), field_table().end(), [q](const FieldDef& d) { return d.q == q; });
}

FieldCtx::FieldCtx(int q) : q_(q), p_(q), e_(1), modulus_{0, 1} {
  if (!is_supported_field_size(q)) throw std::invalid_argument("unsupported field size q = " + std::to_string(q));
  if (!is_prime(q)) {
    const auto& table = field_table();
    const auto it = std::find_if(table.begin(), table.end(), [q](const FieldDef& d) { return d.q == q; });
    p_ = it->p;
    e_ = it->e;
    modulus_ = it->modulus;
  }
  const std::size_t qq = static_cast<std::size_t>(q);
  add_.assign(qq * qq, 0);
  mul_.assign(qq * qq, 0);
  neg_.assign(qq, 0);
  inv_.assign(qq, 0);

  auto digits = [&](int a) {
    std::vector<int> d(static_cast<std::size_t>(e_), 0);
    for (int i = 0; i < e_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = e_; i-- > 0;) a = a * p_ + d[static_cast<std::size_t>(i)];
    return a;
  };

  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) dn[static_cast<std::size_t>(i)] = (p_ - da[static_cast<std::size_t>(i)]) % p_;
    neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> ds(static_cast<std::size_t>(e_));
      for (int i = 0; i < e_; ++i) ds[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
      add_[idx(a, b)] = static_cast<std::uint8_t>(encode(ds));
      // polynomial product reduced by the monic modulus
      std::vector<int> prod(static_cast<std::size_t>(2 * e_), 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
      for (int k = 2 * e_ - 1; k >= e_; --k) {
        const int c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (int i = 0; i <= e_; ++i) {
          auto& slot = prod[static_cast<std::size_t>(k - e_ + i)];
          slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(a, b)] = static_cast<std::uint8_t>(encode(prod));
    }
  }
  // inverses must exist for every nonzero element, which holds iff the modulus is irreducible
  for (int a = 1; a < q; ++a) {
    int found = 0;
    for (int b = 1; b < q; ++b)
      if (mul_[idx(a, b)] == 1) found = b;
    if (found == 0) throw std::logic_error("field table for q = " + std::to_string(q) + " is not a field");
    inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(found);
  }
  // sampled associativity and distributivity (all triples for small q)
  const int step = q <= 16 ? 1 : q / 13 + 1;
  for (int a = 0; a < q; a += step)
    for (int b = 0; b < q; b += step)
      for (int c = 0; c < q; c += step) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)) || add(add(a, b), c) != add(a, add(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw std::logic_error("field axioms fail for q = " + std::to_string(q));
      }
}

int FieldCtx::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[static_cast<std::size_t>(a)];
}

int FieldCtx::from_int(long k) const { return static_cast<int>(((k % p_) + p_) % p_); }

const FieldCtx& field(int q) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot.reset(new FieldCtx(q));
  return *slot;
}

MatGF MatGF::identity(const FieldCtx& f, std::size_t n) {
  MatGF m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatGF MatGF::parse(const FieldCtx& f, std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  for (char c : text) {
    if (c == ' ') continue;
    if (c == ';') {
      rows.emplace_back();
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("bad matrix text: " + std::string(text));
    const int v = c - '0';
    if (v >= f.q()) throw std::invalid_argument("matrix entry out of range for q = " + std::to_string(f.q()));
    rows.back().push_back(v);
  }
  const std::size_t cols = rows[0].size();
  if (cols == 0) throw std::invalid_argument("empty matrix text");
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix text: " + std::string(text));
  MatGF m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  return m;
}

std::string MatGF::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      const int v = (*this)(i, j);
      if (f_->q() <= 10) {
        out += static_cast<char>('0' + v);
      } else {
        if (j) out += ',';
        out += std::to_string(v);
      }
    }
  }
  return out;
}

MatGF MatGF::operator*(const MatGF& o) const {
  if (cols_ != o.rows_ || f_ != o.f_) throw std::invalid_argument("matrix product shape mismatch");
  MatGF out(*f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const int b = o(k, j);
        if (b) out.set(i, j, f_->add(out(i, j), f_->mul(a, b)));
      }
    }
  return out;
}

MatGF MatGF::operator+(const MatGF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_) throw std::invalid_argument("matrix sum shape mismatch");
  MatGF out(*f_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = static_cast<std::uint8_t>(f_->add(data_[k], o.data_[k]));
  return out;
}

MatGF MatGF::operator-(const MatGF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_) throw std::invalid_argument("matrix difference shape mismatch");
  MatGF out(*f_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = static_cast<std::uint8_t>(f_->sub(data_[k], o.data_[k]));
  return out;
}

bool MatGF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

MatGF MatGF::pow(unsigned k) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  MatGF result = identity(*f_, rows_);
  MatGF base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

namespace {

int rank_gf2(const MatGF& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> a(m.rows() * words, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) a[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = r;
    while (piv < m.rows() && !(a[piv * words + w] & bit)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < words; ++k) std::swap(a[piv * words + k], a[r * words + k]);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (a[i * words + w] & bit)
        for (std::size_t k = w; k < words; ++k) a[i * words + k] ^= a[r * words + k];
    ++r;
  }
  return static_cast<int>(r);
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(MatGF& a) {
  const FieldCtx& F = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const int tmp = a(piv, j);
        a.set(piv, j, a(r, j));
        a.set(r, j, tmp);
      }
    const int s = F.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, F.mul(s, a(r, j)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const int f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a.set(i, j, F.sub(a(i, j), F.mul(f, a(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const MatGF& m) {
  if (m.field().q() == 2) return rank_gf2(m);
  MatGF a = m;
  return static_cast<int>(row_reduce(a).size());
}

int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly monic(const FieldCtx& F, Poly f) {
  trim(f);
  if (f.empty()) return f;
  const int s = F.inv(f.back());
  for (auto& c : f) c = F.mul(s, c);
  return f;
}

}  // namespace

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  trim(out);
  return out;
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly quo(r.size() - b.size() + 1, 0);
  const int lead_inv = F.inv(b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const int c = F.mul(r.back(), lead_inv);
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    trim(r);
  }
  trim(quo);
  return {quo, r};
}

Poly poly_pow(const FieldCtx& F, const Poly& a, int k) {
  Poly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(F, r, a);
  return r;
}

bool poly_is_irreducible(const FieldCtx& F, const Poly& f_in) {
  const Poly f = monic(F, f_in);
  const int d = poly_degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  for (int k = 1; 2 * k <= d; ++k)
    for (const auto& g : irreducibles(F, k))
      if (poly_divmod(F, f, g).second.empty()) return false;
  return true;
}

const std::vector<Poly>& irreducibles(const FieldCtx& F, int d) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Poly>>> cache;
  if (d < 1) throw std::invalid_argument("irreducible degree must be positive");
  double count = 1;
  for (int i = 0; i < d; ++i) count *= F.q();
  if (count > double(1 << 24)) throw SizeLimitError("too many polynomials to sieve");
  std::lock_guard lock(mutex);
  auto& slot = cache[{F.q(), d}];
  if (slot) return *slot;
  auto out = std::make_unique<std::vector<Poly>>();
  const long total = static_cast<long>(count);
  for (long code = 0; code < total; ++code) {
    Poly f(static_cast<std::size_t>(d) + 1, 0);
    long c = code;
    for (int i = 0; i < d; ++i, c /= F.q()) f[static_cast<std::size_t>(i)] = static_cast<int>(c % F.q());
    f[static_cast<std::size_t>(d)] = 1;
    if (poly_is_irreducible(F, f)) out->push_back(f);
  }
  slot = std::move(out);
  return *slot;
}

std::string poly_to_string(const Poly& f, int q) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (q > 10) {
      if (i) out += ',';
      out += std::to_string(f[i]);
    } else {
      out += static_cast<char>('0' + f[i]);
    }
  }
  return out;
}

Poly poly_parse(std::string_view text, int q) {
  Poly f;
  if (text.find(',') != std::string_view::npos || q > 10) {
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(std::stoi(item));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad polynomial text: " + std::string(text));
      f.push_back(c - '0');
    }
  }
  for (int c : f)
    if (c < 0 || c >= q) throw std::invalid_argument("polynomial coefficient out of range");
  trim(f);
  return f;
}

MatGF poly_eval(const Poly& f, const MatGF& g) {
  const FieldCtx& F = g.field();
  const std::size_t n = g.rows();
  MatGF r(F, n, n);
  for (std::size_t k = f.size(); k-- > 0;) {
    r = r * g;
    for (std::size_t i = 0; i < n; ++i) r.set(i, i, F.add(r(i, i), f[k]));
  }
  return r;
}

Poly charpoly(const MatGF& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  const FieldCtx& F = g.field();
  const std::size_t n = g.rows();
  MatGF h = g;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) {
      const int t = h(a, j);
      h.set(a, j, h(b, j));
      h.set(b, j, t);
    }
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) {
      const int t = h(i, a);
      h.set(i, a, h(i, b));
      h.set(i, b, t);
    }
  };
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      swap_rows(piv, j + 1);
      swap_cols(piv, j + 1);
    }
    const int inv = F.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const int u = F.mul(h(i, j), inv);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h.set(i, k, F.sub(h(i, k), F.mul(u, h(j + 1, k))));
      for (std::size_t k = 0; k < n; ++k) h.set(k, j + 1, F.add(h(k, j + 1), F.mul(u, h(k, i))));
    }
  }
  // p_k = (t - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1}^{k} h_{j,j-1}) p_{i-1}   (1-based)
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = poly_mul(F, Poly{F.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    int prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      const int c = F.mul(h(i - 1, k - 1), prod);
      if (c != 0) {
        Poly term = p[i - 1];
        next.resize(std::max(next.size(), term.size()), 0);
        for (std::size_t m = 0; m < term.size(); ++m) next[m] = F.sub(next[m], F.mul(c, term[m]));
      }
    }
    trim(next);
    p[k] = next;
  }
  return p[n];
}

MatGF companion(const FieldCtx& F, const Poly& f) {
  const int d = poly_degree(f);
  if (d < 1 || f.back() != 1) throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(d);
  MatGF c(F, n, n);
  for (std::size_t i = 1; i < n; ++i) c.set(i, i - 1, 1);
  for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, F.neg(f[i]));
  return c;
}

std::string conj_class_type_to_string(const ConjClassType& type, int q) {
  std::string out;
  for (const auto& [f, mu] : type) {
    if (!out.empty()) out += ' ';
    out += poly_to_string(f, q) + ":" + mu.to_string();
  }
  return out;
}

namespace {

void require_square(const MatGF& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("square matrix required");
}

}  // namespace

Partition jordan_type_unipotent(const MatGF& u) {
  require_square(u);
  const int n = static_cast<int>(u.rows());
  const MatGF nil = u - MatGF::identity(u.field(), u.rows());
  if (!nil.pow(static_cast<unsigned>(n)).is_zero()) throw std::invalid_argument("matrix is not unipotent");
  return kernels::nilpotent_type(u.field(), nil.data(), n);
}

ConjClassType conj_class_type(const MatGF& g) {
  require_square(g);
  const FieldCtx& F = g.field();
  const int n = static_cast<int>(g.rows());
  if (rank(g) != n) throw std::invalid_argument("conj_class_type needs an invertible matrix");
  Poly rest = charpoly(g);
  std::vector<std::pair<Poly, int>> factors;
  for (int d = 1; 2 * d <= poly_degree(rest); ++d) {
    for (const auto& f : irreducibles(F, d)) {
      if (f == Poly{0, 1}) continue;
      int k = 0;
      for (;;) {
        auto [quo, rem] = poly_divmod(F, rest, f);
        if (!rem.empty()) break;
        rest = quo;
        ++k;
      }
      if (k) factors.emplace_back(f, k);
    }
  }
  // whatever is left has no factor of degree <= half its own degree
  if (poly_degree(rest) >= 1) factors.emplace_back(monic(F, rest), 1);

  ConjClassType type;
  for (const auto& [f, k] : factors) {
    const int d = poly_degree(f);
    const MatGF fg = poly_eval(f, g);
    MatGF power = MatGF::identity(F, g.rows());
    int prev_null = 0;
    std::vector<int> cols;
    for (int j = 1; j <= k; ++j) {
      power = power * fg;
      const int null = n - rank(power);
      const int jump = null - prev_null;
      if (jump % d != 0) throw std::logic_error("nullity jump not divisible by degree");
      if (jump == 0) break;
      cols.push_back(jump / d);
      prev_null = null;
    }
    Partition mu = conjugate(Partition(cols));
    if (mu.size() != k) throw std::logic_error("primary component size mismatch");
    type.emplace(f, std::move(mu));
  }
  return type;
}

Partition extend_type(const MatGF& u, const std::vector<int>& b) {
  require_square(u);
  const std::size_t n = u.rows();
  if (b.size() != n) throw std::invalid_argument("extension column has wrong length");
  MatGF m(u.field(), n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, u(i, j));
    if (b[i] < 0 || b[i] >= u.field().q()) throw std::invalid_argument("extension entry out of range");
    m.set(i, n, b[i]);
  }
  m.set(n, n, 1);
  return jordan_type_unipotent(m);
}

MatGF canonical_unipotent(const Partition& rho, const FieldCtx& F) {
  const std::size_t n = static_cast<std::size_t>(rho.size());
  MatGF m = MatGF::identity(F, n);
  std::size_t start = 0;
  for (int part : rho.parts()) {
    for (int k = 0; k + 1 < part; ++k) m.set(start + static_cast<std::size_t>(k), start + static_cast<std::size_t>(k) + 1, 1);
    start += static_cast<std::size_t>(part);
  }
  return m;
}

MatGF block_diagonal(const std::vector<MatGF>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diagonal needs at least one block");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    require_square(b);
    if (&b.field() != &blocks[0].field()) throw std::invalid_argument("blocks over different fields");
    n += b.rows();
  }
  MatGF m(blocks[0].field(), n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.set(off + i, off + j, b(i, j));
    off += b.rows();
  }
  return m;
}

MatGF primary_element(const Poly& f_in, const Partition& mu, const FieldCtx& F) {
  Poly f = f_in;
  trim(f);
  if (poly_degree(f) < 1 || f.back() != 1) throw std::invalid_argument("primary_element needs a monic polynomial");
  if (f == Poly{0, 1}) throw std::invalid_argument("the polynomial t has no invertible primary elements");
  if (!poly_is_irreducible(F, f)) throw std::invalid_argument("polynomial is reducible");
  if (mu.empty()) throw std::invalid_argument("primary_element needs a nonempty partition");
  std::vector<MatGF> blocks;
  if (poly_degree(f) == 1) {
    const int a = F.neg(f[0]);
    for (int part : mu.parts()) {
      MatGF b(F, static_cast<std::size_t>(part), static_cast<std::size_t>(part));
      for (int i = 0; i < part; ++i) {
        b.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), a);
        if (i + 1 < part) b.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1, 1);
      }
      blocks.push_back(b);
    }
  } else {
    for (int part : mu.parts()) blocks.push_back(companion(F, poly_pow(F, f, part)));
  }
  return block_diagonal(blocks);
}

namespace {

void check_enumeration(int q, long exponent) {
  double size = 1;
  for (long i = 0; i < exponent; ++i) size *= q;
  if (size > double(1 << 22)) throw SizeLimitError("enumeration of " + std::to_string(q) + "^" + std::to_string(exponent) + " elements exceeds the limit");
}

}  // namespace

std::map<Partition, Integer> extension_counts(const Partition& rho, const FieldCtx& F) {
  check_enumeration(F.q(), rho.size());
  const auto hist = kernels::extension_histogram_omp(canonical_unipotent(rho, F));
  std::map<Partition, Integer> out;
  for (const auto& sigma : covers_up(rho)) out[sigma] = 0;
  for (const auto& [sigma, c] : hist) {
    if (!out.count(sigma)) throw std::logic_error("extension produced a non-cover");
    out[sigma] = Integer(static_cast<long>(c));
  }
  return out;
}

std::map<Partition, Integer> extension_counts_closed_form(const Partition& rho, const Integer& q) {
  const int n = rho.size();
  const Partition conj = conjugate(rho);
  auto qpow = [&](int e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };
  std::map<Partition, Integer> out;
  for (const auto& sigma : covers_up(rho)) {
    const int row = added_box_row(rho, sigma);
    const int j = rho[row] + 1;  // 1-based column of the new box
    Integer c = qpow(n - conj[j - 1]);
    if (j > 1) c -= qpow(n - conj[j - 2]);
    out[sigma] = c;
  }
  return out;
}

int extension_counts_validated_degree(int q) {
  switch (q) {
    case 2: return 10;
    case 3: return 10;
    case 4: return 7;
    case 5: return 6;
    default: return 0;
  }
}

std::vector<MatGF> all_subspaces(const FieldCtx& F, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("subspace dimension out of range");
  check_enumeration(F.q(), static_cast<long>(k) * (n - k));
  std::vector<MatGF> out;
  if (k == 0) {
    out.emplace_back(F, 0, static_cast<std::size_t>(n));
    return out;
  }
  std::vector<int> pivots(static_cast<std::size_t>(k));
  // iterate over pivot sets in increasing order
  auto next_comb = [&](std::vector<int>& c) {
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
    return true;
  };
  for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
  do {
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    std::vector<int> vals(free.size(), 0);
    for (;;) {
      MatGF b(F, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
      for (int r = 0; r < k; ++r) b.set(static_cast<std::size_t>(r), static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)]), 1);
      for (std::size_t s = 0; s < free.size(); ++s)
        b.set(static_cast<std::size_t>(free[s].first), static_cast<std::size_t>(free[s].second), vals[s]);
      out.push_back(std::move(b));
      std::size_t s = 0;
      while (s < vals.size() && ++vals[s] == F.q()) vals[s++] = 0;
      if (s == vals.size()) break;
    }
  } while (next_comb(pivots));
  return out;
}

namespace {

MatGF stack(const MatGF& a, const MatGF& b) {
  MatGF m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b(i, j));
  return m;
}

MatGF transpose(const MatGF& a) {
  MatGF t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a(i, j));
  return t;
}

bool contained_in(const MatGF& small, const MatGF& big) {
  if (small.rows() == 0) return true;
  return rank(stack(big, small)) == static_cast<int>(big.rows());
}

}  // namespace

std::vector<MatGF> invariant_subspaces(const MatGF& g) {
  require_square(g);
  const int n = static_cast<int>(g.rows());
  const MatGF gt = transpose(g);
  std::vector<MatGF> out;
  for (int k = 0; k <= n; ++k)
    for (auto& b : all_subspaces(g.field(), n, k))
      if (k == 0 || contained_in(b * gt, b)) out.push_back(std::move(b));
  return out;
}

Integer count_fixed_flags(const MatGF& g, const std::vector<int>& mu) {
  require_square(g);
  const int n = static_cast<int>(g.rows());
  int total = 0;
  for (int m : mu) {
    if (m < 1) throw std::invalid_argument("flag type parts must be positive");
    total += m;
  }
  if (total != n) throw std::invalid_argument("flag type does not sum to the matrix size");
  const auto inv = invariant_subspaces(g);
  std::vector<const MatGF*> level{nullptr};
  std::vector<Integer> ways{1};
  int dim = 0;
  for (int m : mu) {
    dim += m;
    std::vector<const MatGF*> next;
    std::vector<Integer> next_ways;
    for (const auto& u : inv) {
      if (static_cast<int>(u.rows()) != dim) continue;
      Integer w = 0;
      for (std::size_t i = 0; i < level.size(); ++i)
        if (level[i] == nullptr || contained_in(*level[i], u)) w += ways[i];
      if (w != 0) {
        next.push_back(&u);
        next_ways.push_back(w);
      }
    }
    level = std::move(next);
    ways = std::move(next_ways);
  }
  Integer sum = 0;
  for (const auto& w : ways) sum += w;
  return sum;
}

std::map<Partition, Integer> count_unitriangular_by_type(int n, const FieldCtx& F) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  check_enumeration(F.q(), static_cast<long>(n) * (n - 1) / 2);
  std::map<Partition, Integer> out;
  for (const auto& [rho, c] : kernels::unitriangular_histogram_omp(n, F)) out[rho] = Integer(static_cast<long>(c));
  return out;
}

std::map<Partition, Integer> count_unitriangular_recursive(int n, const Integer& q) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  std::map<Partition, Integer> cur{{Partition{1}, 1}};
  for (int m = 1; m < n; ++m) {
    std::map<Partition, Integer> next;
    for (const auto& [rho, count] : cur)
      for (const auto& [sigma, c] : extension_counts_closed_form(rho, q)) next[sigma] += count * c;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace vklab
