#pragma once

// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "vklab/partitions.hpp"
#include "vklab/rational.hpp"
#include "vklab/symfun.hpp"

namespace oracle {

using vklab::Partition;
using vklab::RatMatrix;
using vklab::Rational;

inline std::vector<int> padded(const Partition& lambda, int nvars) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[i];
  return e;
}

/// m_μ(x) in finitely many variables, summing over distinct rearrangements of the exponents.
inline Rational monomial_at(const Partition& mu, const std::vector<Rational>& x) {
  if (mu.length() > static_cast<int>(x.size())) return 0;
  std::vector<int> e = padded(mu, static_cast<int>(x.size()));
  std::sort(e.begin(), e.end());
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i]) term *= vklab::pow(x[i], e[i]);
    total += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

/// P_λ(x; t) in |x| variables by symmetrizing x^λ Π_{i<j}(x_i - t x_j)/(x_i - x_j).
inline Rational hall_littlewood_P_at(const Partition& lambda, const std::vector<Rational>& x, const Rational& t) {
  const int n = static_cast<int>(x.size());
  const std::vector<int> e = padded(lambda, n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (int i = 0; i < n; ++i)
      if (e[static_cast<std::size_t>(i)]) term *= vklab::pow(x[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])], e[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Rational& xi = x[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
        const Rational& xj = x[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])];
        term *= (xi - t * xj) / (xi - xj);
      }
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  // v_λ(t) = Π over multiplicities (including zeros) of Π_{j=1}^{m} (1 - t^j)/(1 - t)
  std::map<int, int> mult;
  for (int v : e) ++mult[v];
  Rational v = 1;
  for (auto [part, m] : mult)
    for (int j = 1; j <= m; ++j) v *= (t == 1) ? Rational(j) : (1 - vklab::pow(t, j)) / (1 - t);
  return total / v;
}

/// Monomial coefficients of P_λ(x; t) for every λ ⊢ n, recovered from point values in n variables.
/// Row λ, column μ in enumerate_partitions order.
inline RatMatrix hall_littlewood_P_matrix(int n, const Rational& t) {
  const auto& parts = vklab::enumerate_partitions(n);
  const std::size_t k = parts.size();
  std::mt19937 gen(12345u + static_cast<unsigned>(n));
  std::uniform_int_distribution<int> dist(1, 97);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<std::vector<Rational>> points;
    for (std::size_t p = 0; p < k; ++p) {
      std::vector<Rational> x;
      while (static_cast<int>(x.size()) < n) {
        Rational v(dist(gen), dist(gen) % 7 + 1);
        v.canonicalize();
        if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
      }
      points.push_back(x);
    }
    RatMatrix A(k, k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t j = 0; j < k; ++j) A(p, j) = monomial_at(parts[j], points[p]);
    RatMatrix Ainv;
    try {
      Ainv = A.inverse();
    } catch (const std::domain_error&) {
      continue;
    }
    RatMatrix out(k, k);
    for (std::size_t l = 0; l < k; ++l) {
      std::vector<Rational> vals(k);
      for (std::size_t p = 0; p < k; ++p) vals[p] = hall_littlewood_P_at(parts[l], points[p], t);
      for (std::size_t j = 0; j < k; ++j) {
        Rational c = 0;
        for (std::size_t p = 0; p < k; ++p) c += Ainv(j, p) * vals[p];
        out(l, j) = c;
      }
    }
    return out;
  }
  throw std::runtime_error("no invertible evaluation system found");
}

/// m_μ evaluated at a finite list of variables (counts distinct monomials once).
inline Rational monomial_at_list(const Partition& mu, const std::vector<Rational>& x) {
  // distinct part values and their multiplicities
  std::vector<int> values;
  std::vector<int> counts;
  for (int p : mu.parts()) {
    if (values.empty() || values.back() != p) {
      values.push_back(p);
      counts.push_back(0);
    }
    ++counts.back();
  }
  std::map<std::pair<std::size_t, std::vector<int>>, Rational> memo;
  auto rec = [&](auto&& self, std::size_t var, std::vector<int>& left) -> Rational {
    bool done = std::all_of(left.begin(), left.end(), [](int c) { return c == 0; });
    if (done) return 1;
    if (var == x.size()) return 0;
    auto key = std::make_pair(var, left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational total = self(self, var + 1, left);
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (left[v] == 0) continue;
      --left[v];
      total += vklab::pow(x[var], values[v]) * self(self, var + 1, left);
      ++left[v];
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, 0, counts);
}

/// Random normalized spec with atom alphas and betas only (no gamma).
inline vklab::ThomaSpec random_atom_spec(std::mt19937& gen, bool with_betas) {
  std::uniform_int_distribution<int> count_a(1, 3);
  std::uniform_int_distribution<int> count_b(0, 2);
  std::uniform_int_distribution<int> weight(1, 9);
  const int na = count_a(gen);
  const int nb = with_betas ? count_b(gen) : 0;
  std::vector<int> wa, wb;
  int total = 0;
  for (int i = 0; i < na; ++i) total += wa.emplace_back(weight(gen));
  for (int i = 0; i < nb; ++i) total += wb.emplace_back(weight(gen));
  std::sort(wa.rbegin(), wa.rend());
  std::sort(wb.rbegin(), wb.rend());
  std::vector<Rational> a, b;
  for (int w : wa) a.emplace_back(Rational(w) / total);
  for (int w : wb) b.emplace_back(Rational(w) / total);
  for (auto& r : a) r.canonicalize();
  for (auto& r : b) r.canonicalize();
  return vklab::ThomaSpec::from_atoms(a, b);
}

}  // namespace oracle
