#include "vklab/symfun.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace vklab {

GroundParams GroundParams::from_q(const Rational& q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2, got " + to_string(q));
  return GroundParams{q, Rational(1) / q};
}

ThomaSpec ThomaSpec::from_atoms(std::vector<Rational> alphas, std::vector<Rational> betas, Rational gamma) {
  ThomaSpec s;
  for (auto& a : alphas) s.alphas.push_back({std::move(a), 0});
  for (auto& b : betas) s.betas.push_back({std::move(b), 0});
  s.gamma = std::move(gamma);
  return s;
}

bool ThomaSpec::has_geometric() const {
  auto g = [](const SpecEntry& e) { return e.geometric(); };
  return std::any_of(alphas.begin(), alphas.end(), g) || std::any_of(betas.begin(), betas.end(), g);
}

Rational ThomaSpec::total_mass() const {
  Rational s = gamma;
  for (const auto& e : alphas) s += e.value;
  for (const auto& e : betas) s += e.value;
  return s;
}

void ThomaSpec::validate() const {
  auto check_list = [](const std::vector<SpecEntry>& list, const char* name) {
    const Rational* prev_atom = nullptr;
    for (const auto& e : list) {
      if (e.value < 0) throw std::invalid_argument(std::string(name) + " entries must be nonnegative");
      if (e.ratio < 0 || e.ratio >= 1) throw std::invalid_argument(std::string(name) + " geometric ratio must lie in (0,1)");
      if (!e.geometric()) {
        if (prev_atom && e.value > *prev_atom)
          throw std::invalid_argument(std::string(name) + " atoms must be weakly decreasing");
        prev_atom = &e.value;
      }
    }
  };
  check_list(alphas, "alpha");
  check_list(betas, "beta");
  if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
  if (total_mass() != 1) throw std::invalid_argument("total mass is " + to_string(total_mass()) + ", expected 1");
}

namespace {

// Contribution Σ_j x_j^m of one entry, where x_j = (1-r) r^j value for a geometric entry.
Rational entry_power_sum(const SpecEntry& e, int m) {
  if (!e.geometric()) return pow(e.value, m);
  return pow((1 - e.ratio) * e.value, m) / (1 - pow(e.ratio, m));
}

}  // namespace

Rational power_sum_value(const ThomaSpec& spec, int m) {
  if (m < 1) throw std::invalid_argument("power sum index must be positive");
  Rational s = m == 1 ? spec.gamma : Rational(0);
  for (const auto& e : spec.alphas) s += entry_power_sum(e, m);
  const Rational sign = (m % 2 == 0) ? Rational(-1) : Rational(1);
  // -Σ (-b)^m = (-1)^{m+1} Σ b^m
  for (const auto& e : spec.betas) s += sign * entry_power_sum(e, m);
  return s;
}

namespace {

std::vector<SpecEntry> merge_list(const std::vector<SpecEntry>& list, const Rational& t, const char* name) {
  if (t <= 0 || t >= 1) throw std::invalid_argument("geometric ratio must lie in (0,1)");
  std::vector<SpecEntry> out;
  for (const auto& e : list) {
    if (e.geometric()) throw std::invalid_argument(std::string(name) + " already contains geometric entries");
    out.push_back({e.value, t});
  }
  return out;
}

}  // namespace

ThomaSpec geometric_merge(const ThomaSpec& spec, const Rational& t) {
  ThomaSpec out = spec;
  out.alphas = merge_list(spec.alphas, t, "alpha");
  return out;
}

ThomaSpec geometric_merge_beta(const ThomaSpec& spec, const Rational& t) {
  ThomaSpec out = spec;
  out.betas = merge_list(spec.betas, t, "beta");
  return out;
}

ThomaSpec power_substitution(const ThomaSpec& spec, int d) {
  if (d < 1) throw std::invalid_argument("power substitution needs d >= 1");
  if (d == 1) return spec;
  ThomaSpec out;
  for (const auto& e : spec.alphas) {
    if (!e.geometric()) {
      out.alphas.push_back({pow(e.value, d), 0});
    } else {
      const Rational rd = pow(e.ratio, d);
      out.alphas.push_back({pow((1 - e.ratio) * e.value, d) / (1 - rd), rd});
    }
  }
  const Rational sign = (d % 2 == 0) ? Rational(-1) : Rational(1);  // -(-1)^d
  for (const auto& e : spec.betas) {
    if (!e.geometric()) {
      out.betas.push_back({sign * pow(e.value, d), 0});
    } else {
      const Rational rd = pow(e.ratio, d);
      out.betas.push_back({sign * pow((1 - e.ratio) * e.value, d) / (1 - rd), rd});
    }
  }
  out.gamma = 0;
  return out;
}

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::schur: return "schur";
    case Basis::powersum: return "powersum";
    case Basis::hlP: return "hlP";
    case Basis::hlQ: return "hlQ";
  }
  return "?";
}

long charge(std::span<const int> word) {
  int k = 0;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("charge: letters must be positive");
    k = std::max(k, x);
  }
  std::vector<int> counts(static_cast<std::size_t>(k) + 1, 0);
  for (int x : word) ++counts[static_cast<std::size_t>(x)];
  for (int i = 2; i <= k; ++i)
    if (counts[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(i) - 1])
      throw std::invalid_argument("charge: content is not a partition");

  const std::size_t n = word.size();
  std::vector<char> used(n, 0);
  std::size_t remaining = n;
  long total = 0;
  while (remaining > 0) {
    int letters = 0;
    while (letters < k && counts[static_cast<std::size_t>(letters) + 1] > 0) ++letters;
    std::size_t pos = 0;
    long index = 0;
    for (int letter = 1; letter <= letters; ++letter) {
      // first unused occurrence at or after the start (letter 1) or strictly after pos, cyclically
      std::size_t start = letter == 1 ? 0 : pos + 1;
      std::size_t found = n;
      bool wrapped = false;
      for (std::size_t step = 0; step < n; ++step) {
        std::size_t j = (start + step) % n;
        if (!used[j] && word[j] == letter) {
          found = j;
          wrapped = letter > 1 && j < start;
          break;
        }
      }
      if (found == n) throw std::logic_error("charge: missing letter");
      if (wrapped) ++index;
      total += index;
      used[found] = 1;
      pos = found;
      --counts[static_cast<std::size_t>(letter)];
      --remaining;
    }
  }
  return total;
}

long charge(const Tableau& tableau) {
  const auto w = tableau.reading_word();
  return charge(std::span<const int>(w));
}

namespace {

// Charge distribution: for each (λ, μ), counts of tableaux by charge value.
struct ChargeTable {
  std::size_t size = 0;
  std::vector<std::vector<long long>> poly;  // index λ*size + μ

  const std::vector<long long>& at(std::size_t l, std::size_t m) const { return poly[l * size + m]; }
};

std::mutex g_charge_mutex;
std::map<int, std::unique_ptr<ChargeTable>> g_charge;

const ChargeTable& charge_table(int n) {
  check_degree(n);
  std::lock_guard lock(g_charge_mutex);
  auto& slot = g_charge[n];
  if (slot) return *slot;
  const auto& parts = enumerate_partitions(n);
  auto table = std::make_unique<ChargeTable>();
  table->size = parts.size();
  table->poly.resize(parts.size() * parts.size());
  std::vector<int> word;
  for (std::size_t m = 0; m < parts.size(); ++m) {
    for_each_ssyt_with_content(
        parts[m], [](std::span<const int>) { return true; },
        [&](std::span<const std::vector<int>> rows) {
          std::vector<int> shape;
          word.clear();
          for (const auto& row : rows) {
            shape.push_back(static_cast<int>(row.size()));
            for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
          }
          const std::size_t l = partition_index(Partition(shape));
          auto& p = table->poly[l * parts.size() + m];
          const long c = charge(std::span<const int>(word));
          if (p.size() <= static_cast<std::size_t>(c)) p.resize(static_cast<std::size_t>(c) + 1, 0);
          ++p[static_cast<std::size_t>(c)];
        });
  }
  slot = std::move(table);
  return *slot;
}

template <class T>
using Cache = std::map<std::pair<int, std::string>, std::unique_ptr<T>>;

std::mutex g_kf_mutex;
Cache<RatMatrix> g_kf;

std::mutex g_hl_mutex;
Cache<HLTransition> g_hl;

std::mutex g_kostka_mutex;
std::map<int, std::unique_ptr<RatMatrix>> g_kostka;

std::mutex g_pm_mutex;
std::map<int, std::unique_ptr<RatMatrix>> g_p_in_m;
std::map<int, std::unique_ptr<RatMatrix>> g_m_in_p;

// Number of ways to drop the parts of rho into bins with exact target sums `cap`.
Integer count_fillings(std::span<const int> rho, std::size_t next, std::vector<int>& cap,
                       std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
  if (next == rho.size()) {
    for (int c : cap)
      if (c != 0) return 0;
    return 1;
  }
  auto key = std::make_pair(next, cap);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  for (auto& c : cap) {
    if (c >= rho[next]) {
      c -= rho[next];
      total += count_fillings(rho, next + 1, cap, memo);
      c += rho[next];
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

const RatMatrix& kostka_numbers(int n) {
  const auto& table = charge_table(n);
  std::lock_guard lock(g_kostka_mutex);
  auto& slot = g_kostka[n];
  if (!slot) {
    auto k = std::make_unique<RatMatrix>(table.size, table.size);
    for (std::size_t l = 0; l < table.size; ++l)
      for (std::size_t m = 0; m < table.size; ++m) {
        long long s = 0;
        for (long long c : table.at(l, m)) s += c;
        (*k)(l, m) = Rational(static_cast<long>(s));
      }
    slot = std::move(k);
  }
  return *slot;
}

const RatMatrix& kostka_foulkes(int n, const Rational& t) {
  const auto& table = charge_table(n);
  std::lock_guard lock(g_kf_mutex);
  auto& slot = g_kf[{n, to_string(t)}];
  if (!slot) {
    auto k = std::make_unique<RatMatrix>(table.size, table.size);
    for (std::size_t l = 0; l < table.size; ++l)
      for (std::size_t m = 0; m < table.size; ++m) {
        const auto& p = table.at(l, m);
        Rational v = 0;
        for (std::size_t c = p.size(); c-- > 0;) v = v * t + Rational(static_cast<long>(p[c]));
        (*k)(l, m) = v;
      }
    slot = std::move(k);
  }
  return *slot;
}

Rational b_lambda(const Partition& lambda, const Rational& t) {
  Rational b = 1;
  for (int i = 1; i <= lambda[0]; ++i) {
    const int mi = lambda.multiplicity(i);
    for (int k = 1; k <= mi; ++k) b *= 1 - pow(t, k);
  }
  return b;
}

const HLTransition& hl_transition(int n, const Rational& t) {
  const RatMatrix& kf = kostka_foulkes(n, t);
  const RatMatrix& k = kostka_numbers(n);
  std::lock_guard lock(g_hl_mutex);
  auto& slot = g_hl[{n, to_string(t)}];
  if (!slot) {
    auto h = std::make_unique<HLTransition>();
    h->P_in_m = kf.inverse() * k;
    const auto& parts = enumerate_partitions(n);
    h->Q_in_m = h->P_in_m;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      h->b.push_back(b_lambda(parts[i], t));
      for (std::size_t j = 0; j < parts.size(); ++j) h->Q_in_m(i, j) *= h->b.back();
    }
    slot = std::move(h);
  }
  return *slot;
}

const RatMatrix& powersum_in_monomial(int n) {
  const auto& parts = enumerate_partitions(n);
  std::lock_guard lock(g_pm_mutex);
  auto& slot = g_p_in_m[n];
  if (!slot) {
    auto r = std::make_unique<RatMatrix>(parts.size(), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        std::vector<int> cap(parts[j].parts().begin(), parts[j].parts().end());
        std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
        (*r)(i, j) = Rational(count_fillings(parts[i].parts(), 0, cap, memo));
      }
    slot = std::move(r);
  }
  return *slot;
}

const RatMatrix& monomial_in_powersum(int n) {
  const RatMatrix& r = powersum_in_monomial(n);
  std::lock_guard lock(g_pm_mutex);
  auto& slot = g_m_in_p[n];
  if (!slot) slot = std::make_unique<RatMatrix>(r.inverse());
  return *slot;
}

namespace {

std::vector<Rational> to_vector(const SymFuncVec& f) {
  const auto& parts = enumerate_partitions(f.degree);
  std::vector<Rational> v(parts.size());
  for (const auto& [lambda, c] : f.coeffs) {
    if (lambda.size() != f.degree) throw std::invalid_argument("coefficient index has wrong degree");
    v[partition_index(lambda)] = c;
  }
  return v;
}

SymFuncVec from_vector(int degree, Basis basis, const Rational& t, const std::vector<Rational>& v) {
  SymFuncVec f{degree, basis, t, {}};
  const auto& parts = enumerate_partitions(degree);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.coeffs.emplace(parts[i], v[i]);
  return f;
}

// Row-vector times matrix.
std::vector<Rational> left_mul(const std::vector<Rational>& v, const RatMatrix& m) {
  std::vector<Rational> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[j] += v[i] * m(i, j);
  }
  return out;
}

std::vector<Rational> right_mul(const RatMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

SymFuncVec to_monomials(const SymFuncVec& f) {
  const auto v = to_vector(f);
  switch (f.basis) {
    case Basis::monomial: return f;
    case Basis::schur: return from_vector(f.degree, Basis::monomial, f.t, left_mul(v, kostka_numbers(f.degree)));
    case Basis::hlP:
      return from_vector(f.degree, Basis::monomial, f.t, left_mul(v, hl_transition(f.degree, f.t).P_in_m));
    case Basis::hlQ:
      return from_vector(f.degree, Basis::monomial, f.t, left_mul(v, hl_transition(f.degree, f.t).Q_in_m));
    case Basis::powersum:
      return from_vector(f.degree, Basis::monomial, f.t, left_mul(v, powersum_in_monomial(f.degree)));
  }
  throw std::logic_error("unknown basis");
}

SymFuncVec to_power_sums(const SymFuncVec& f) {
  if (f.basis == Basis::powersum) return f;
  const auto m = to_vector(to_monomials(f));
  return from_vector(f.degree, Basis::powersum, f.t, left_mul(m, monomial_in_powersum(f.degree)));
}

namespace {

std::vector<Rational> powersum_product_values(int n, const ThomaSpec& spec) {
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) p[static_cast<std::size_t>(m)] = power_sum_value(spec, m);
  const auto& parts = enumerate_partitions(n);
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& rho : parts) {
    Rational v = 1;
    for (int part : rho.parts()) v *= p[static_cast<std::size_t>(part)];
    out.push_back(v);
  }
  return out;
}

}  // namespace

Rational evaluate(const SymFuncVec& f, const ThomaSpec& spec) {
  const auto c = to_vector(to_power_sums(f));
  const auto pv = powersum_product_values(f.degree, spec);
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * pv[i];
  return s;
}

std::vector<Rational> monomial_values(int n, const ThomaSpec& spec) {
  return right_mul(monomial_in_powersum(n), powersum_product_values(n, spec));
}

std::vector<Rational> schur_values(int n, const ThomaSpec& spec) {
  return right_mul(kostka_numbers(n), monomial_values(n, spec));
}

Rational r_function(const Partition& rho, const ThomaSpec& spec, const Rational& t) {
  const int n = rho.size();
  const RatMatrix& kf = kostka_foulkes(n, t);
  const auto s = schur_values(n, spec);
  const std::size_t j = partition_index(rho);
  Rational sum = 0;
  for (std::size_t l = 0; l < s.size(); ++l) sum += kf(l, j) * s[l];
  return sum * pow(t, -n_stat(rho));
}

Rational hl_Q_value(const Partition& rho, const ThomaSpec& spec, const Rational& t) {
  const int n = rho.size();
  const auto& h = hl_transition(n, t);
  const auto m = monomial_values(n, spec);
  const std::size_t i = partition_index(rho);
  Rational sum = 0;
  for (std::size_t j = 0; j < m.size(); ++j) sum += h.Q_in_m(i, j) * m[j];
  return sum;
}

}  // namespace vklab
