#include "doctest.h"
#include "oracles.hpp"
#include "vklab/symfun.hpp"

#include <cmath>
#include <random>

using namespace vklab;

namespace {

std::size_t idx(const Partition& p) { return partition_index(p); }

SymFuncVec single(int n, Basis b, const Partition& lambda, Rational t = Rational(1, 2)) {
  SymFuncVec f{n, b, t, {}};
  f.coeffs[lambda] = 1;
  return f;
}

}  // namespace

TEST_CASE("kostka numbers") {
  const RatMatrix& k = kostka_numbers(3);
  CHECK(k(idx({3}), idx({1, 1, 1})) == 1);
  CHECK(k(idx({2, 1}), idx({1, 1, 1})) == 2);
  for (int n = 1; n <= 6; ++n) {
    const RatMatrix& kn = kostka_numbers(n);
    for (std::size_t i = 0; i < kn.rows(); ++i) CHECK(kn(i, i) == 1);
  }
}

TEST_CASE("charge on small tableaux") {
  const auto col = enumerate_ssyt(Partition{1, 1, 1}, Partition{1, 1, 1});
  REQUIRE(col.size() == 1);
  CHECK(charge(col[0]) == 0);
  for (int n = 1; n <= 6; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    const auto row = enumerate_ssyt(Partition{n}, ones);
    REQUIRE(row.size() == 1);
    CHECK(charge(row[0]) == static_cast<long>(n) * (n - 1) / 2);
  }
  std::vector<long> charges;
  for (const auto& t : enumerate_ssyt(Partition{2, 1}, Partition{1, 1, 1})) charges.push_back(charge(t));
  std::sort(charges.begin(), charges.end());
  CHECK(charges == std::vector<long>{1, 2});
  const std::vector<int> bad{2, 2, 1};
  CHECK_THROWS(charge(std::span<const int>(bad)));
}

TEST_CASE("Kostka-Foulkes values") {
  const Rational t(1, 3);
  for (int n = 1; n <= 6; ++n) {
    const RatMatrix& kf = kostka_foulkes(n, t);
    for (const auto& rho : enumerate_partitions(n)) CHECK(kf(0, idx(rho)) == pow(t, n_stat(rho)));
    CHECK(kostka_foulkes(n, 1) == kostka_numbers(n));
    // unitriangular in the fixed order
    for (std::size_t i = 0; i < kf.rows(); ++i) {
      CHECK(kf(i, i) == 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(kf(i, j) == 0);
    }
  }
  CHECK(kostka_foulkes(3, t)(idx({1, 1, 1}), idx({1, 1, 1})) == 1);
  CHECK(kostka_foulkes(3, t)(idx({2, 1}), idx({1, 1, 1})) == t + t * t);
  CHECK(kostka_foulkes(4, t)(idx({2, 2}), idx({2, 1, 1})) == t);
  for (int n = 1; n <= 8; ++n) {
    const auto& parts = enumerate_partitions(n);
    const RatMatrix& kf = kostka_foulkes(n, Rational(1, 2));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (kf(i, j) != 0) CHECK(dominates(parts[i], parts[j]));
  }
}

TEST_CASE("Hall-Littlewood transition against symmetrization") {
  for (int n = 1; n <= 5; ++n) {
    const RatMatrix schur = oracle::hall_littlewood_P_matrix(n, 0);
    CHECK(schur == kostka_numbers(n));
    for (Rational t : {Rational(1, 2), Rational(1, 3)}) {
      const RatMatrix P = oracle::hall_littlewood_P_matrix(n, t);
      const auto& h = hl_transition(n, t);
      CHECK(h.P_in_m == P);
      // independent Kostka-Foulkes: s = K(t) P  =>  K(t) = S P^{-1}
      CHECK(schur * P.inverse() == kostka_foulkes(n, t));
    }
  }
  const auto& h3 = hl_transition(3, Rational(1, 2));
  for (std::size_t j = 0; j < 3; ++j) CHECK(h3.P_in_m(idx({1, 1, 1}), j) == (j == 2 ? 1 : 0));
  const auto& h1 = hl_transition(1, Rational(1, 3));
  CHECK(h1.Q_in_m(0, 0) == Rational(2, 3));
  CHECK(b_lambda(Partition{2, 1, 1}, Rational(1, 2)) == Rational(1, 2) * Rational(3, 4) * Rational(1, 2));
}

TEST_CASE("power sum expansions") {
  const auto s11 = to_power_sums(single(2, Basis::schur, {1, 1}));
  CHECK(s11.coeffs.at(Partition{1, 1}) == Rational(1, 2));
  CHECK(s11.coeffs.at(Partition{2}) == Rational(-1, 2));
  const auto m11 = to_power_sums(single(2, Basis::monomial, {1, 1}));
  CHECK(m11.coeffs == s11.coeffs);
  const auto p3 = to_power_sums(single(3, Basis::powersum, {3}));
  CHECK(p3.coeffs.size() == 1);
  CHECK(p3.coeffs.at(Partition{3}) == 1);
  // round trip through monomials
  for (int n = 1; n <= 6; ++n)
    CHECK(powersum_in_monomial(n) * monomial_in_powersum(n) == RatMatrix::identity(enumerate_partitions(n).size()));
}

TEST_CASE("power sums at specializations") {
  CHECK(power_sum_value(ThomaSpec::from_atoms({Rational(1, 2), Rational(1, 3)}, {Rational(1, 6)}), 1) == 1);
  ThomaSpec geo;
  geo.alphas.push_back({1, Rational(1, 2)});
  CHECK(power_sum_value(geo, 2) == Rational(1, 3));
  double partial = 0;
  for (int j = 0; j < 40; ++j) partial += std::pow(std::pow(0.5, j + 1), 2);
  CHECK(std::abs(partial - 1.0 / 3) < 1e-12);
  const Rational b(2, 5);
  CHECK(power_sum_value(ThomaSpec::from_atoms({}, {b}), 2) == -b * b);
  // gamma only enters p_1
  ThomaSpec g = ThomaSpec::from_atoms({Rational(1, 2)}, {}, Rational(1, 2));
  CHECK(power_sum_value(g, 1) == 1);
  CHECK(power_sum_value(g, 3) == Rational(1, 8));
}

TEST_CASE("evaluate at specializations") {
  const auto one = ThomaSpec::from_atoms({1});
  const auto beta_one = ThomaSpec::from_atoms({}, {1});
  for (int n = 1; n <= 6; ++n) CHECK(evaluate(single(n, Basis::schur, Partition{n}), one) == 1);
  CHECK(evaluate(single(2, Basis::schur, {1, 1}), one) == 0);
  CHECK(evaluate(single(2, Basis::schur, {1, 1}), beta_one) == 1);

  // consistency with explicit variables: atoms exactly, geometric families to 1e-12 at 60 terms
  std::mt19937 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ThomaSpec spec = oracle::random_atom_spec(gen, false);
    std::vector<Rational> vars;
    for (const auto& e : spec.alphas) vars.push_back(e.value);
    const ThomaSpec merged = geometric_merge(spec, Rational(1, 2));
    std::vector<Rational> geo_vars;
    for (const auto& e : merged.alphas) {
      Rational x = e.value / 2;
      for (int j = 0; j < 60; ++j, x /= 2) geo_vars.push_back(x);
    }
    for (int n = 1; n <= 5; ++n) {
      const auto sv = schur_values(n, spec);
      const auto mv = monomial_values(n, spec);
      const auto mgeo = monomial_values(n, merged);
      for (const auto& lambda : enumerate_partitions(n)) {
        CHECK(mv[idx(lambda)] == oracle::monomial_at_list(lambda, vars));
        CHECK(evaluate(single(n, Basis::monomial, lambda), spec) == mv[idx(lambda)]);
        CHECK(evaluate(single(n, Basis::schur, lambda), spec) == sv[idx(lambda)]);
        if (n <= 3) {
          const double approx = to_double(oracle::monomial_at_list(lambda, geo_vars));
          CHECK(std::abs(approx - to_double(mgeo[idx(lambda)])) < 1e-12);
        }
      }
    }
  }

  // betas act as the conjugate: s_λ(0; β) = s_{λ'}(β; 0)
  for (int trial = 0; trial < 10; ++trial) {
    const ThomaSpec a = oracle::random_atom_spec(gen, false);
    ThomaSpec b;
    b.betas = a.alphas;
    for (int n = 1; n <= 5; ++n) {
      const auto sa = schur_values(n, a);
      const auto sb = schur_values(n, b);
      for (const auto& lambda : enumerate_partitions(n)) CHECK(sb[idx(lambda)] == sa[idx(conjugate(lambda))]);
    }
  }
}

TEST_CASE("geometric merge") {
  const Rational t(1, 2);
  const auto merged = geometric_merge(ThomaSpec::from_atoms({Rational(3, 5), Rational(2, 5)}), t);
  CHECK(merged.total_mass() == 1);
  CHECK(merged.alphas.size() == 2);
  CHECK(merged.alphas[0].ratio == t);
  CHECK_THROWS(geometric_merge(merged, t));
  const auto empty = geometric_merge(ThomaSpec::from_atoms({}, {1}), t);
  CHECK(empty.alphas.empty());
  CHECK(empty.betas.size() == 1);
}

TEST_CASE("power substitution") {
  const Rational a(3, 7), b(2, 7);
  const auto spec = ThomaSpec::from_atoms({a, Rational(2, 7)}, {b});
  CHECK(power_sum_value(power_substitution(spec, 1), 3) == power_sum_value(spec, 3));
  const auto ab = ThomaSpec::from_atoms({a}, {b});
  CHECK(power_sum_value(power_substitution(ab, 2), 1) == a * a - b * b);
  for (int d : {2, 3}) {
    const Rational sign_d2 = (d % 2 == 0 ? -1 : 1);  // (-1)^{d+1}
    CHECK(sign_d2 * pow(b, d) == -pow(-b, d));
  }
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    ThomaSpec s = oracle::random_atom_spec(gen, true);
    if (trial % 2) s = geometric_merge(s, Rational(1, 3));
    if (trial % 3 == 0 && !s.betas.empty()) s = geometric_merge_beta(s, Rational(1, 2));
    for (int d = 1; d <= 12; ++d)
      for (int m = 1; m * d <= 12; ++m) CHECK(power_sum_value(power_substitution(s, d), m) == power_sum_value(s, m * d));
  }
}

TEST_CASE("r function") {
  const Rational t(1, 2);
  const auto one = ThomaSpec::from_atoms({1});
  for (int n = 1; n <= 6; ++n)
    for (const auto& rho : enumerate_partitions(n)) CHECK(r_function(rho, one, t) == 1);
  std::mt19937 gen(3);
  for (int i = 0; i < 5; ++i) CHECK(r_function({1}, oracle::random_atom_spec(gen, true), t) == 1);
  CHECK(r_function({1, 1}, ThomaSpec::from_atoms({}, {1}), t) == 2);
}
