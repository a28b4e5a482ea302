#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "vklab/grassmann.hpp"

using namespace vklab;

namespace {

std::vector<std::vector<int>> words(int n, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> w;
    for (int i = 0; i < n; ++i) w.push_back(static_cast<int>((mask >> i) & 1u));
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("cell dimensions and cocycle") {
  CHECK(cell_dimension(SchubertSymbol::parse("100")).value == 1);
  CHECK(cell_dimension(SchubertSymbol::parse("0000")).value == 0);
  CHECK(cell_dimension(SchubertSymbol::parse("01")).value == 2);
  CHECK_FALSE(cell_dimension(SchubertSymbol::parse("01")).infinite);
  CHECK(cell_dimension(SchubertSymbol::parse("01+1")).infinite);
  CHECK(SchubertSymbol::parse("0110+1").to_string() == "0110+1");
  CHECK_THROWS(SchubertSymbol::parse("012"));

  const auto a = SchubertSymbol::parse("10"), b = SchubertSymbol::parse("01");
  CHECK(cocycle(a, a, 7) == 1);
  CHECK(cocycle(a, b, 2) == Rational(1, 2));
  CHECK(cocycle(a, b, Rational(5, 3)) == Rational(3, 5));
  CHECK_THROWS(cocycle(a, SchubertSymbol::parse("11"), 2));
  CHECK_THROWS(cocycle(a, SchubertSymbol::parse("10+1"), 2));

  std::mt19937 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> base{1, 1, 1, 0, 0, 0, 0};
    SchubertSymbol s[3];
    for (auto& x : s) {
      std::shuffle(base.begin(), base.end(), gen);
      x.eps = base;
    }
    CHECK(cocycle(s[0], s[1], 3) * cocycle(s[1], s[2], 3) == cocycle(s[0], s[2], 3));
  }
}

TEST_CASE("brute-force Schubert cells") {
  const auto g12 = enumerate_schubert_cells(2, 1, field(2));
  CHECK(g12.size() == 2);
  CHECK(g12.at({1, 0}) == 1);
  CHECK(g12.at({0, 1}) == 2);
  for (int q : {2, 3}) {
    const FieldCtx& F = field(q);
    for (int n = 1; n <= 4; ++n) {
      const auto full = enumerate_schubert_cells(n, n, F);
      CHECK(full.size() == 1);
      CHECK(full.begin()->second == 1);
      for (int k = 0; k <= n; ++k) {
        const auto cells = enumerate_schubert_cells(n, k, F);
        CHECK(Integer(static_cast<long>(cells.size())) == binomial(n, k));
        Integer total = 0;
        for (const auto& [eps, size] : cells) {
          total += size;
          CHECK(size == finite_cell_size({eps}, q));
          CHECK(path_exponent(eps) == cell_dimension({eps}).value - k * (k + 1) / 2);
        }
        CHECK(Rational(total) == gaussian_binomial(n, k, q));
        // ratios of cell sizes are cocycle values
        for (const auto& [e1, s1] : cells)
          for (const auto& [e2, s2] : cells) CHECK(Rational(s1) / Rational(s2) == cocycle({e1}, {e2}, q));
      }
    }
  }
  CHECK_THROWS(enumerate_schubert_cells(3, 4, field(2)));
}

TEST_CASE("Pascal q-triangle and mass") {
  for (int q : {2, 3, 4})
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) CHECK(pascal_q_paths(n, k, q) == gaussian_binomial(n, k, q));
  CHECK(pascal_q_paths(4, 2, 2) == 35);
  CHECK(pascal_q_paths(5, 0, 3) == 1);
  CHECK(pascal_q_paths(2, 1, Rational(7, 2)) == Rational(9, 2));
  CHECK_THROWS(pascal_q_paths(2, 3, 2));

  const Rational a1(1, 3), a2(1, 5);
  CHECK(grassmann_mass(0, a1, a2, 2) == 1);
  CHECK(grassmann_mass(2, a1, a2, 2) == a2 * a2 + 3 * a1 * a2 + a1 * a1);
  CHECK(grassmann_mass(6, Rational(1, 4), Rational(3, 4), 1) == 1);
  CHECK_THROWS(grassmann_mass(2, -1, 1, 2));
  for (int q : {2, 3})
    for (int n = 0; n <= 5; ++n) {
      Rational sum = 0;
      for (int k = 0; k <= n; ++k)
        for (const auto& w : words(n, k)) sum += pow(a1, k) * pow(a2, n - k) * pow(Rational(q), path_exponent(w));
      CHECK(sum == grassmann_mass(n, a1, a2, q));
    }
}

TEST_CASE("Bernoulli symbol measure") {
  const Rational a(2, 7);
  CHECK(bernoulli_symbol_measure(a, {}) == 1);
  CHECK(bernoulli_symbol_measure(a, {1}) == a);
  CHECK(bernoulli_symbol_measure(a, {1, 0}) == a * (1 - a));
  CHECK(bernoulli_symbol_measure(a, {-1, 0}) == 1 - a);
  CHECK_THROWS(bernoulli_symbol_measure(Rational(3, 2), {1}));
  // the law of a finite prefix sums to one
  Rational total = 0;
  for (int k = 0; k <= 4; ++k)
    for (const auto& w : words(4, k)) total += bernoulli_symbol_measure(a, w);
  CHECK(total == 1);
}
