#include "vklab/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace vklab {

Rational unipotent_dim(const Partition& lambda, const Rational& q) {
  const int n = lambda.size();
  Rational v = pow(q, n_stat(lambda));
  for (int j = 1; j <= n; ++j) v *= pow(q, j) - 1;
  for (int h : hook_lengths(lambda)) v /= pow(q, h) - 1;
  return v;
}

Integer sym_dim(const Partition& lambda) {
  Integer v = factorial(lambda.size());
  for (int h : hook_lengths(lambda)) v /= h;
  return v;
}

Rational induced_dim(const std::vector<int>& mu, const Rational& q) {
  for (int m : mu)
    if (m < 1) throw std::invalid_argument("composition parts must be positive");
  return gaussian_multinomial(mu, q);
}

namespace {

void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("partitions of different sizes");
}

}  // namespace

Rational chi_unipotent(const Partition& lambda, const Partition& rho, const Rational& q) {
  require_same_size(lambda, rho);
  const RatMatrix& kf = kostka_foulkes(lambda.size(), 1 / q);
  return pow(q, n_stat(rho)) * kf(partition_index(lambda), partition_index(rho));
}

RatMatrix chi_unipotent_matrix(int n, const Rational& q) {
  const auto& parts = enumerate_partitions(n);
  RatMatrix x = kostka_foulkes(n, 1 / q);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const Rational s = pow(q, n_stat(parts[j]));
    for (std::size_t i = 0; i < parts.size(); ++i) x(i, j) *= s;
  }
  return x;
}

Rational psi_unipotent(const std::vector<int>& mu, const Partition& rho, const Rational& q) {
  const Partition m = Partition::from_composition(mu);
  require_same_size(m, rho);
  const int n = rho.size();
  const RatMatrix& k = kostka_numbers(n);
  const std::size_t jm = partition_index(m);
  Rational v = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    const Rational& c = k(partition_index(lambda), jm);
    if (c != 0) v += c * chi_unipotent(lambda, rho, q);
  }
  return v;
}

Rational psi_at_primary(const Partition& nu, int d, const Partition& rho, const Rational& q) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (nu.size() != d * rho.size()) throw std::invalid_argument("|nu| must equal d |rho|");
  std::vector<int> mu;
  for (int part : nu.parts()) {
    if (part % d != 0) return 0;
    mu.push_back(part / d);
  }
  return psi_unipotent(mu, rho, pow(q, d));
}

Rational glb_character_unipotent(const ThomaSpec& spec, const Partition& rho, const GroundParams& ground) {
  return r_function(rho, spec, ground.t);
}

Rational glb_character_general(const ThomaSpec& spec, const ConjClassType& type, const GroundParams& ground) {
  Rational v = 1;
  for (const auto& [f, mu] : type) {
    const int d = poly_degree(f);
    v *= r_function(mu, power_substitution(spec, d), pow(ground.t, d));
  }
  return v;
}

Rational glb_character_via_flags(const ThomaSpec& spec, const MatGF& g) {
  const int n = static_cast<int>(g.rows());
  const auto m = monomial_values(n, spec);
  const auto& parts = enumerate_partitions(n);
  Rational v = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (m[i] == 0) continue;
    const std::vector<int> nu(parts[i].parts().begin(), parts[i].parts().end());
    v += Rational(count_fixed_flags(g, nu)) * m[i];
  }
  return v;
}

RatMatrix chi_via_flag_oracle(int n, const FieldCtx& F) {
  if (n > 5) throw SizeLimitError("flag oracle limited to n <= 5");
  const auto& parts = enumerate_partitions(n);
  const std::size_t k = parts.size();
  RatMatrix psi(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const MatGF u = canonical_unipotent(parts[j], F);
    for (std::size_t i = 0; i < k; ++i) {
      const std::vector<int> mu(parts[i].parts().begin(), parts[i].parts().end());
      psi(i, j) = Rational(count_fixed_flags(u, mu));
    }
  }
  return kostka_numbers(n).transpose().inverse() * psi;
}

bool frobenius_transition_check(int n, const Rational& q) {
  const auto& parts = enumerate_partitions(n);
  RatMatrix ptilde = hl_transition(n, 1 / q).P_in_m;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Rational s = pow(q, -n_stat(parts[i]));
    for (std::size_t j = 0; j < parts.size(); ++j) ptilde(i, j) *= s;
  }
  return chi_unipotent_matrix(n, q) * ptilde == kostka_numbers(n);
}

}  // namespace vklab
