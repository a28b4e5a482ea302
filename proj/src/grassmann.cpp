#include "vklab/grassmann.hpp"

#include <stdexcept>

namespace vklab {

int SchubertSymbol::ones() const {
  int c = 0;
  for (int e : eps) c += e;
  return c;
}

std::string SchubertSymbol::to_string() const {
  std::string s;
  for (int e : eps) s += static_cast<char>('0' + e);
  if (tail == Tail::ones) s += "+1";
  return s;
}

SchubertSymbol SchubertSymbol::parse(std::string_view text) {
  SchubertSymbol out;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "+1") {
    out.tail = Tail::ones;
    text.remove_suffix(2);
  }
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("Schubert symbols are 0/1 words");
    out.eps.push_back(ch - '0');
  }
  return out;
}

CellDimension cell_dimension(const SchubertSymbol& eps) {
  CellDimension d;
  for (std::size_t i = 0; i < eps.eps.size(); ++i) {
    if (eps.eps[i] != 0 && eps.eps[i] != 1) throw std::invalid_argument("Schubert symbols are 0/1 words");
    d.value += static_cast<long>(i + 1) * eps.eps[i];
  }
  d.infinite = eps.tail == SchubertSymbol::Tail::ones;
  return d;
}

Rational cocycle(const SchubertSymbol& eps, const SchubertSymbol& eps2, const Rational& q) {
  if (eps.eps.size() != eps2.eps.size() || eps.tail != eps2.tail)
    throw std::invalid_argument("cocycle needs words of equal length and tail");
  if (eps.ones() != eps2.ones()) throw std::invalid_argument("symbols with different numbers of ones are not congruent");
  long e = 0;
  for (std::size_t i = 0; i < eps.eps.size(); ++i) e += static_cast<long>(i + 1) * (eps.eps[i] - eps2.eps[i]);
  return pow(q, e);
}

SchubertSymbol schubert_symbol(const MatGF& basis) {
  const std::size_t k = basis.rows(), n = basis.cols();
  SchubertSymbol out;
  // dim(V ∩ F_i) = k - rank of the columns i+1..n
  int prev = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    MatGF tail(basis.field(), k, n - i);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = i; c < n; ++c) tail.set(r, c - i, basis(r, c));
    const int dim = static_cast<int>(k) - (n - i == 0 ? 0 : rank(tail));
    out.eps.push_back(dim - prev);
    prev = dim;
  }
  return out;
}

Integer finite_cell_size(const SchubertSymbol& eps, int q) {
  const long k = eps.ones();
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(cell_dimension(eps).value - k * (k + 1) / 2));
  return v;
}

std::map<std::vector<int>, Integer> enumerate_schubert_cells(int n, int k, const FieldCtx& F) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (gaussian_binomial(n, k, Rational(F.q())) > 2000000) throw SizeLimitError("too many subspaces to enumerate");
  std::map<std::vector<int>, Integer> cells;
  for (const auto& basis : all_subspaces(F, n, k)) cells[schubert_symbol(basis).eps] += 1;
  return cells;
}

Rational grassmann_mass(int n, const Rational& alpha1, const Rational& alpha2, const Rational& q) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (alpha1 < 0 || alpha2 < 0) throw std::invalid_argument("weights must be nonnegative");
  Rational total = 0;
  for (int m = 0; m <= n; ++m) total += gaussian_binomial(n, m, q) * pow(alpha1, m) * pow(alpha2, n - m);
  return total;
}

Rational pascal_q_paths(int n, int k, const Rational& q) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const int cols = n - k;
  // w[i][j]: weight of paths to column i, height j
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(cols) + 1, std::vector<Rational>(static_cast<std::size_t>(k) + 1, 0));
  for (int i = 0; i <= cols; ++i)
    for (int j = 0; j <= k; ++j) {
      auto& cell = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == 0 && j == 0) {
        cell = 1;
        continue;
      }
      if (i > 0) cell += w[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
      if (j > 0) cell += pow(q, i) * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) - 1];
    }
  return w[static_cast<std::size_t>(cols)][static_cast<std::size_t>(k)];
}

long path_exponent(const std::vector<int>& eps) {
  long column = 0, e = 0;
  for (int x : eps) {
    if (x == 1)
      e += column;
    else
      ++column;
  }
  return e;
}

Rational bernoulli_symbol_measure(const Rational& alpha, const std::vector<int>& cylinder) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0,1]");
  Rational v = 1;
  for (int x : cylinder) {
    if (x == 1)
      v *= alpha;
    else if (x == 0)
      v *= 1 - alpha;
    else if (x != -1)
      throw std::invalid_argument("cylinder entries are 0, 1 or -1");
  }
  return v;
}

}  // namespace vklab
