#include "vklab/sampler.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "vklab/kernels.hpp"

namespace vklab {

std::vector<int> random_column(const FieldCtx& F, int n, StepStream& rng) {
  std::vector<int> b(static_cast<std::size_t>(n));
  if (F.q() == 2) {
    std::uint32_t word = 0;
    for (int i = 0; i < n; ++i) {
      if (i % 32 == 0) word = rng.next_u32();
      b[static_cast<std::size_t>(i)] = static_cast<int>((word >> (i % 32)) & 1u);
    }
  } else {
    for (auto& x : b) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(F.q())));
  }
  return b;
}

GrowthState haar_initial(const FieldCtx& F) { return GrowthState{0, Partition{}, MatGF(F, 0, 0)}; }

GrowthState haar_grow_step(const GrowthState& state, const std::vector<int>& b) {
  if (!state.matrix) throw std::invalid_argument("haar_grow_step needs the full matrix");
  const MatGF& u = *state.matrix;
  const std::size_t n = u.rows();
  if (b.size() != n) throw std::invalid_argument("column length does not match the matrix");
  GrowthState next;
  next.n = state.n + 1;
  next.rho = extend_type(u, b);
  MatGF grown(u.field(), n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) grown.set(i, j, u(i, j));
    grown.set(i, n, b[i]);
  }
  grown.set(n, n, 1);
  next.matrix = std::move(grown);
  return next;
}

GrowthState haar_grow_step(const GrowthState& state, StepStream& rng) {
  if (!state.matrix) throw std::invalid_argument("haar_grow_step needs the full matrix");
  return haar_grow_step(state, random_column(state.matrix->field(), state.n, rng));
}

// ---------------------------------------------------------------------------------------------
// Jordan-basis tracker

namespace {

// Rows of a square matrix over F_2, 64 entries per word.
class Gf2Rows {
 public:
  Gf2Rows(const FieldCtx&, int rows, int cols)
      : words_((static_cast<std::size_t>(cols) + 63) / 64), data_(static_cast<std::size_t>(rows) * words_, 0) {}

  int get(int r, int c) const { return static_cast<int>((row(r)[c / 64] >> (c % 64)) & 1u); }
  void set(int r, int c, int v) {
    auto& w = row(r)[c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  // Σ_j row(r)_j b_j over the first len entries; b is packed with pack().
  int dot(int r, const std::vector<std::uint64_t>& b, int len) const {
    const std::uint64_t* x = row(r);
    std::uint64_t acc = 0;
    const std::size_t nw = (static_cast<std::size_t>(len) + 63) / 64;
    for (std::size_t i = 0; i < nw; ++i) acc ^= x[i] & b[i];
    return std::popcount(acc) & 1;
  }
  std::vector<std::uint64_t> pack(const std::vector<int>& b) const {
    std::vector<std::uint64_t> out(words_, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] & 1) out[i / 64] |= std::uint64_t{1} << (i % 64);
    return out;
  }
  // row(dst) += coef * row(src)
  void axpy(int dst, int coef, int src, int len) {
    if (coef == 0) return;
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    const std::size_t nw = (static_cast<std::size_t>(len) + 63) / 64;
    for (std::size_t i = 0; i < nw; ++i) d[i] ^= s[i];
  }
  void scale(int, int, int) {}
  void clear(int r) { std::fill(row(r), row(r) + words_, 0); }
  bool equal(int a, const Gf2Rows& other, int b) const { return std::equal(row(a), row(a) + words_, other.row(b)); }
  bool is_zero(int r) const { return std::all_of(row(r), row(r) + words_, [](std::uint64_t w) { return w == 0; }); }
  // row(dst) = row(r) of this times the matrix m (first len rows of m)
  void row_times(int r, const Gf2Rows& m, int len, Gf2Rows& out, int dst) const {
    out.clear(dst);
    for (int j = 0; j < len; ++j)
      if (get(r, j)) out.axpy_from(dst, m, j);
  }
  void axpy_from(int dst, const Gf2Rows& other, int src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = other.row(src);
    for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
  }

 private:
  std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
  const std::uint64_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

// Rows over a table field, one byte per entry.
class ByteRows {
 public:
  ByteRows(const FieldCtx& F, int rows, int cols)
      : F_(&F), cols_(static_cast<std::size_t>(cols)), data_(static_cast<std::size_t>(rows) * cols_, 0) {}

  int get(int r, int c) const { return row(r)[c]; }
  void set(int r, int c, int v) { row(r)[c] = static_cast<std::uint8_t>(v); }
  int dot(int r, const std::vector<int>& b, int len) const {
    const std::uint8_t* x = row(r);
    int acc = 0;
    for (int i = 0; i < len; ++i)
      if (x[i] && b[static_cast<std::size_t>(i)]) acc = F_->add(acc, F_->mul(x[i], b[static_cast<std::size_t>(i)]));
    return acc;
  }
  std::vector<int> pack(const std::vector<int>& b) const { return b; }
  void axpy(int dst, int coef, int src, int len) {
    if (coef == 0) return;
    std::uint8_t* d = row(dst);
    const std::uint8_t* s = row(src);
    for (int i = 0; i < len; ++i)
      if (s[i]) d[i] = static_cast<std::uint8_t>(F_->add(d[i], F_->mul(coef, s[i])));
  }
  void scale(int r, int coef, int len) {
    if (coef == 1) return;
    std::uint8_t* d = row(r);
    for (int i = 0; i < len; ++i) d[i] = static_cast<std::uint8_t>(F_->mul(coef, d[i]));
  }
  void clear(int r) { std::fill(row(r), row(r) + cols_, 0); }
  bool equal(int a, const ByteRows& other, int b) const { return std::equal(row(a), row(a) + cols_, other.row(b)); }
  bool is_zero(int r) const { return std::all_of(row(r), row(r) + cols_, [](std::uint8_t v) { return v == 0; }); }
  void row_times(int r, const ByteRows& m, int len, ByteRows& out, int dst) const {
    out.clear(dst);
    for (int j = 0; j < len; ++j)
      if (const int c = get(r, j)) {
        std::uint8_t* d = out.row(dst);
        const std::uint8_t* s = m.row(j);
        for (std::size_t i = 0; i < cols_; ++i)
          if (s[i]) d[i] = static_cast<std::uint8_t>(F_->add(d[i], F_->mul(c, s[i])));
      }
  }

 private:
  std::uint8_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const std::uint8_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const FieldCtx* F_;
  std::size_t cols_;
  std::vector<std::uint8_t> data_;
};

}  // namespace

struct HaarTracker::Impl {
  virtual ~Impl() = default;
  // Returns (chain index that grew or -1 for a new chain).
  virtual int step(const std::vector<int>& b) = 0;
  virtual bool verify() const = 0;
  virtual int chain_count() const = 0;
};

namespace {

template <class Rows>
struct TrackerCore final : HaarTracker::Impl {
  const FieldCtx& F;
  int cap;
  int n = 0;
  Rows T, N, scratch;
  std::vector<std::vector<int>> chains;  // row indices of T, bottom to top
  std::vector<int> c, xc;

  TrackerCore(const FieldCtx& f, int n_max)
      : F(f), cap(n_max), T(f, n_max, n_max), N(f, n_max, n_max), scratch(f, 1, n_max) {}

  int chain_count() const override { return static_cast<int>(chains.size()); }

  int step(const std::vector<int>& b) override {
    if (n >= cap) throw std::length_error("tracker capacity exceeded");
    const auto packed = T.pack(b);
    c.assign(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) c[static_cast<std::size_t>(r)] = T.dot(r, packed, n);

    int star = -1;
    std::size_t best = 0;
    xc.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < chains.size(); ++k) {
      const auto& ch = chains[k];
      for (std::size_t i = 1; i < ch.size(); ++i) xc[static_cast<std::size_t>(ch[i])] = c[static_cast<std::size_t>(ch[i - 1])];
      if (c[static_cast<std::size_t>(ch.back())] != 0 && ch.size() > best) {
        best = ch.size();
        star = static_cast<int>(k);
      }
    }
    for (int r = 0; r < n; ++r) T.set(r, n, xc[static_cast<std::size_t>(r)]);

    if (star >= 0) {
      const auto& cs = chains[static_cast<std::size_t>(star)];
      const int a_star = c[static_cast<std::size_t>(cs.back())];
      const int inv = F.inv(a_star);
      for (std::size_t k = 0; k < chains.size(); ++k) {
        if (static_cast<int>(k) == star) continue;
        const auto& ch = chains[k];
        const int a = c[static_cast<std::size_t>(ch.back())];
        if (a == 0) continue;
        const int coef = F.neg(F.mul(a, inv));
        for (std::size_t d = 0; d < ch.size(); ++d)
          T.axpy(ch[ch.size() - 1 - d], coef, cs[cs.size() - 1 - d], n + 1);
      }
      for (int r : cs) T.scale(r, inv, n + 1);
    }
    T.clear(n);
    T.set(n, n, 1);
    for (int r = 0; r < n; ++r) N.set(r, n, b[static_cast<std::size_t>(r)]);
    int grown;
    if (star >= 0) {
      chains[static_cast<std::size_t>(star)].push_back(n);
      grown = star;
    } else {
      chains.push_back({n});
      grown = -1;
    }
    ++n;
    return grown;
  }

  bool verify() const override {
    // T N = J T: row (C,k) of T N equals row (C,k+1) of T, and vanishes at the top of each chain.
    Rows& tmp = const_cast<Rows&>(scratch);
    for (const auto& ch : chains)
      for (std::size_t k = 0; k < ch.size(); ++k) {
        T.row_times(ch[k], N, n, tmp, 0);
        if (k + 1 == ch.size() ? !tmp.is_zero(0) : !tmp.equal(0, T, ch[k + 1])) return false;
      }
    MatGF m(F, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), T.get(i, j));
    return rank(m) == n;
  }
};

}  // namespace

HaarTracker::HaarTracker(const FieldCtx& F, int n_max, int guard_interval) : field_(&F), guard_interval_(guard_interval) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (F.q() == 2)
    impl_ = std::make_shared<TrackerCore<Gf2Rows>>(F, n_max);
  else
    impl_ = std::make_shared<TrackerCore<ByteRows>>(F, n_max);
}

int HaarTracker::step(const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("column length does not match the tracker size");
  const int grown = impl_->step(b);
  int row;
  if (grown < 0) {
    row = static_cast<int>(lengths_.size());
    lengths_.push_back(1);
  } else {
    const int old = lengths_[static_cast<std::size_t>(grown)];
    row = static_cast<int>(std::count_if(lengths_.begin(), lengths_.end(), [&](int l) { return l > old; }));
    ++lengths_[static_cast<std::size_t>(grown)];
  }
  ++n_;
  if (guard_interval_ > 0 && n_ % guard_interval_ == 0) {
    ++guards_;
    if (!impl_->verify()) throw std::logic_error("Jordan basis invariant violated at n = " + std::to_string(n_));
  }
  return row;
}

int HaarTracker::step(StepStream& rng) {
  return step(random_column(*field_, n_, rng));
}

Partition HaarTracker::type() const { return Partition::from_composition(lengths_); }

bool HaarTracker::verify() const { return impl_->verify(); }

// ---------------------------------------------------------------------------------------------
// Markov growth for general central measures

std::vector<std::pair<Partition, Rational>> markov_conditional(const Partition& rho, const CylinderFn& cylinder,
                                                               const CountFn& counts) {
  const Rational m_rho = cylinder(rho);
  if (m_rho == 0) throw std::domain_error("M_rho = 0 at rho = " + rho.to_string() + " (dead branch)");
  std::vector<std::pair<Partition, Rational>> law;
  Rational total = 0;
  for (const auto& [sigma, c] : counts(rho)) {
    if (c == 0) continue;
    Rational p = Rational(c) * cylinder(sigma) / m_rho;
    if (p == 0) continue;
    total += p;
    law.emplace_back(sigma, std::move(p));
  }
  if (total != 1) throw std::logic_error("conditional law at rho = " + rho.to_string() + " sums to " + to_string(total));
  return law;
}

Partition sample_conditional(const std::vector<std::pair<Partition, Rational>>& law, StepStream& rng) {
  if (law.empty()) throw std::invalid_argument("empty conditional law");
  static const Rational two64 = pow(Rational(2), 64);
  const Rational u(Integer(static_cast<unsigned long>(rng.next_u64())));
  Rational cum = 0;
  for (const auto& [sigma, p] : law) {
    cum += p;
    if (u < cum * two64) return sigma;
  }
  return law.back().first;
}

CountFn sampler_counts(int q, bool fast_path_counts) {
  const int validated = extension_counts_validated_degree(q);
  return [q, validated, fast_path_counts](const Partition& rho) {
    if (!fast_path_counts && rho.size() > validated)
      throw RangeError("extension counts at |rho| = " + std::to_string(rho.size()) + " exceed the validated range " +
                       std::to_string(validated) + " for q = " + std::to_string(q) + "; enable fast-path counts");
    return extension_counts_closed_form(rho, Integer(q));
  };
}

namespace {

int ground_q(const GroundParams& g) {
  if (g.q.get_den() != 1 || !g.q.get_num().fits_sint_p()) throw std::invalid_argument("sampling needs an integer q");
  return static_cast<int>(g.q.get_num().get_si());
}

}  // namespace

Partition markov_step(const Partition& rho, const CentralMeasure& meas, StepStream& rng, bool fast_path_counts) {
  const auto law = markov_conditional(rho, [&](const Partition& p) { return meas.cylinder(p); },
                                      sampler_counts(ground_q(meas.ground()), fast_path_counts));
  return sample_conditional(law, rng);
}

// ---------------------------------------------------------------------------------------------
// Hook-restricted r-function

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

Rational jacobi_trudi(const std::vector<int>& parts, const std::vector<Rational>& seq) {
  const std::size_t l = parts.size();
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const long k = parts[i] - static_cast<long>(i) + static_cast<long>(j);
      m[i][j] = k < 0 ? Rational(0) : seq.at(static_cast<std::size_t>(k));
    }
  return determinant(std::move(m));
}

}  // namespace

HookRFunction::HookRFunction(const ThomaSpec& spec, const Rational& t)
    : t_(t),
      rows_(0),
      cols_(0),
      mutex_(std::make_shared<std::shared_mutex>()),
      memo_(std::make_shared<std::map<Partition, Rational>>()) {
  if (spec.has_geometric() || spec.gamma != 0)
    throw std::invalid_argument("hook-restricted r needs atom entries and gamma = 0");
  for (const auto& a : spec.alphas) rows_ += a.value != 0;
  for (const auto& b : spec.betas) cols_ += b.value != 0;
  const int d = max_exact_degree();
  h_.assign(static_cast<std::size_t>(d) + 1, 0);
  e_.assign(static_cast<std::size_t>(d) + 1, 0);
  h_[0] = e_[0] = 1;
  std::vector<Rational> p(static_cast<std::size_t>(d) + 1);
  for (int m = 1; m <= d; ++m) p[static_cast<std::size_t>(m)] = power_sum_value(spec, m);
  for (int k = 1; k <= d; ++k) {
    Rational hs = 0, es = 0;
    for (int i = 1; i <= k; ++i) {
      hs += p[static_cast<std::size_t>(i)] * h_[static_cast<std::size_t>(k - i)];
      const Rational term = p[static_cast<std::size_t>(i)] * e_[static_cast<std::size_t>(k - i)];
      es += (i % 2 == 1) ? term : Rational(-term);
    }
    h_[static_cast<std::size_t>(k)] = hs / k;
    e_[static_cast<std::size_t>(k)] = es / k;
  }
}

Rational HookRFunction::schur(const Partition& lambda) const {
  if (lambda.length() > rows_ && lambda[static_cast<std::size_t>(rows_)] > cols_) return 0;
  check_degree(lambda.size());
  const std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (lambda.length() <= (lambda.length() == 0 ? 0 : lambda[0])) return jacobi_trudi(parts, h_);
  const Partition conj = conjugate(lambda);
  return jacobi_trudi(std::vector<int>(conj.parts().begin(), conj.parts().end()), e_);
}

Rational HookRFunction::r(const Partition& sigma) const {
  {
    std::shared_lock lock(*mutex_);
    if (auto it = memo_->find(sigma); it != memo_->end()) return it->second;
  }
  check_degree(sigma.size());
  const std::size_t hook_rows = static_cast<std::size_t>(rows_);
  const int hook_cols = cols_;
  std::map<std::vector<int>, std::vector<long long>> by_shape;
  std::vector<int> word;
  for_each_ssyt_with_content(
      sigma, [&](std::span<const int> lengths) { return lengths.size() <= hook_rows || lengths[hook_rows] <= hook_cols; },
      [&](std::span<const std::vector<int>> rows) {
        std::vector<int> shape;
        word.clear();
        for (const auto& row : rows) {
          shape.push_back(static_cast<int>(row.size()));
          for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
        }
        auto& poly = by_shape[shape];
        const long c = charge(std::span<const int>(word));
        if (poly.size() <= static_cast<std::size_t>(c)) poly.resize(static_cast<std::size_t>(c) + 1, 0);
        ++poly[static_cast<std::size_t>(c)];
      });
  Rational sum = 0;
  for (const auto& [shape, poly] : by_shape) {
    Rational k = 0, tp = 1;
    for (long long count : poly) {
      k += Rational(Integer(static_cast<long>(count))) * tp;
      tp *= t_;
    }
    if (k != 0) sum += k * schur(Partition(shape));
  }
  sum *= pow(t_, -n_stat(sigma));
  std::unique_lock lock(*mutex_);
  memo_->emplace(sigma, sum);
  return sum;
}

// ---------------------------------------------------------------------------------------------

FrequencyTargets expected_frequency_multiset(const ThomaSpec& spec, const Rational& t, int k_max) {
  if (spec.has_geometric()) throw std::invalid_argument("expected_frequency_multiset expects atom entries");
  FrequencyTargets out;
  for (const auto& a : spec.alphas) {
    if (a.value == 0) continue;
    Rational v = (1 - t) * a.value;
    for (int j = 0; j < k_max; ++j, v *= t) out.rows.push_back(v);
  }
  std::sort(out.rows.begin(), out.rows.end(), std::greater<>());
  if (static_cast<int>(out.rows.size()) > k_max) out.rows.resize(static_cast<std::size_t>(k_max));
  for (const auto& b : spec.betas) out.columns.push_back(b.value);
  return out;
}

FrequencySeries frequency_series(const std::vector<TrialPath>& paths, int n_max, int k_max, int record_every) {
  if (record_every < 1) throw std::invalid_argument("record_every must be positive");
  FrequencySeries fs;
  for (int n = record_every; n < n_max; n += record_every) fs.times.push_back(n);
  fs.times.push_back(n_max);
  const std::size_t nt = fs.times.size(), k = static_cast<std::size_t>(k_max);
  std::vector<std::vector<double>> rs(nt, std::vector<double>(k, 0.0)), rss = rs, cs = rs, css = rs;
  for (const auto& path : paths) {
    if (static_cast<int>(path.rows.size()) < n_max) throw std::invalid_argument("path shorter than n_max");
    std::vector<int> row_len, col_len;
    std::size_t ti = 0;
    for (int n = 1; n <= n_max; ++n) {
      const std::size_t r = path.rows[static_cast<std::size_t>(n - 1)];
      if (r > row_len.size()) throw std::logic_error("path is not a Young-lattice path");
      if (r == row_len.size()) row_len.push_back(0);
      if (r > 0 && row_len[r] == row_len[r - 1]) throw std::logic_error("path is not a Young-lattice path");
      const std::size_t c = static_cast<std::size_t>(row_len[r]);
      ++row_len[r];
      if (c == col_len.size()) col_len.push_back(0);
      ++col_len[c];
      if (ti < nt && n == fs.times[ti]) {
        for (std::size_t j = 0; j < k; ++j) {
          const double x = j < row_len.size() ? static_cast<double>(row_len[j]) / n : 0.0;
          const double y = j < col_len.size() ? static_cast<double>(col_len[j]) / n : 0.0;
          rs[ti][j] += x;
          rss[ti][j] += x * x;
          cs[ti][j] += y;
          css[ti][j] += y * y;
        }
        ++ti;
      }
    }
  }
  const double m = static_cast<double>(paths.size());
  auto finish = [&](const std::vector<std::vector<double>>& s, const std::vector<std::vector<double>>& ss,
                    std::vector<std::vector<double>>& mean, std::vector<std::vector<double>>& se) {
    mean.assign(nt, std::vector<double>(k, 0.0));
    se = mean;
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        mean[i][j] = s[i][j] / m;
        if (paths.size() > 1) {
          const double var = std::max(0.0, (ss[i][j] - m * mean[i][j] * mean[i][j]) / (m - 1));
          se[i][j] = std::sqrt(var / m);
        }
      }
  };
  if (!paths.empty()) {
    finish(rs, rss, fs.row_mean, fs.row_se);
    finish(cs, css, fs.col_mean, fs.col_se);
  }
  return fs;
}


namespace {

FrequencyReport run_lln_impl(const LlnConfig& config, bool parallel) {
  if (config.n_max < 1 || config.trials < 1 || config.k_max < 1) throw std::invalid_argument("n, trials and k must be positive");
  if (config.n_max > 65535) throw std::invalid_argument("n_max too large");
  const FieldCtx& F = field(config.q);
  const GroundParams ground = GroundParams::from_q(config.q);
  FrequencyReport report;
  report.config = config;
  if (config.threads > 0) omp_set_num_threads(config.threads);

  if (config.mode == LlnMode::haar) {
    long long guards = 0;
    report.trials = parallel ? kernels::haar_trials_omp(F, config.n_max, config.trials, config.seed, config.guard_interval, &guards)
                             : kernels::haar_trials_serial(F, config.n_max, config.trials, config.seed, config.guard_interval, &guards);
    report.guards_run = static_cast<int>(guards);
    report.targets = expected_frequency_multiset(ThomaSpec::from_atoms({1}), ground.t, config.k_max);
  } else {
    const int validated = extension_counts_validated_degree(config.q);
    if (!config.fast_path_counts && config.n_max - 1 > validated)
      throw RangeError("n = " + std::to_string(config.n_max) + " needs extension counts beyond the validated degree " +
                       std::to_string(validated) + " at q = " + std::to_string(config.q) + "; enable fast-path counts");
    check_degree(config.n_max);
    report.fast_path_counts = config.fast_path_counts && config.n_max - 1 > validated;
    CylinderFn cylinder;
    if (config.spec.gamma == 0 && !config.spec.has_geometric()) {
      auto r = std::make_shared<HookRFunction>(config.spec, ground.t);
      const Rational q = ground.q;
      cylinder = [r, q](const Partition& rho) -> Rational {
        const long n = rho.size();
        return r->r(rho) * pow(q, -n * (n - 1) / 2);
      };
    } else {
      auto meas = std::make_shared<CentralMeasure>(characteristic_measure(config.spec, ground));
      cylinder = [meas](const Partition& rho) { return meas->cylinder(rho); };
    }
    const CountFn counts = sampler_counts(config.q, config.fast_path_counts);
    report.trials = parallel ? kernels::markov_trials_omp(cylinder, counts, config.n_max, config.trials, config.seed)
                             : kernels::markov_trials_serial(cylinder, counts, config.n_max, config.trials, config.seed);
    report.targets = expected_frequency_multiset(config.spec, ground.t, config.k_max);
  }
  report.series = frequency_series(report.trials, config.n_max, config.k_max, config.record_every);
  return report;
}

}  // namespace

FrequencyReport run_lln(const LlnConfig& config) { return run_lln_impl(config, true); }
FrequencyReport run_lln_serial(const LlnConfig& config) { return run_lln_impl(config, false); }

}  // namespace vklab
