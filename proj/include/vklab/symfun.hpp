#pragma once

#include <map>
#include <span>
#include <vector>

#include "vklab/partitions.hpp"
#include "vklab/rational.hpp"

namespace vklab {

/// Finite-field size q and t = 1/q.
struct GroundParams {
  Rational q;
  Rational t;

  static GroundParams from_q(const Rational& q);
};

/// One Thoma coordinate. ratio == 0 is a single atom; ratio r > 0 is the geometric family
/// (1-r) r^j value, j >= 0, whose total mass is `value`.
struct SpecEntry {
  Rational value;
  Rational ratio;

  bool geometric() const { return ratio != 0; }
};

struct ThomaSpec {
  std::vector<SpecEntry> alphas;
  std::vector<SpecEntry> betas;
  Rational gamma;

  static ThomaSpec from_atoms(std::vector<Rational> alphas, std::vector<Rational> betas = {},
                              Rational gamma = 0);

  bool has_geometric() const;
  Rational total_mass() const;
  /// Nonnegative entries, decreasing atoms within each list, total mass one.
  /// Throws std::invalid_argument with the first violated condition.
  void validate() const;
};

/// p_m at the specialization; gamma contributes to m = 1 only.
Rational power_sum_value(const ThomaSpec& spec, int m);

/// Replaces every alpha atom a by the geometric family (a, ratio t).
ThomaSpec geometric_merge(const ThomaSpec& spec, const Rational& t);
/// Same for beta atoms; used by the measure conventions.
ThomaSpec geometric_merge_beta(const ThomaSpec& spec, const Rational& t);

/// Specialization E_d with p_m(E_d) = p_{md}(spec): alpha -> alpha^d, beta -> -(-beta)^d,
/// geometric ratios r -> r^d, gamma kept only for d = 1.
ThomaSpec power_substitution(const ThomaSpec& spec, int d);

enum class Basis { monomial, schur, powersum, hlP, hlQ };

const char* basis_name(Basis b);

struct SymFuncVec {
  int degree = 0;
  Basis basis = Basis::monomial;
  Rational t;  // used by hlP / hlQ
  std::map<Partition, Rational> coeffs;
};

/// Kostka numbers; row λ, column μ in enumerate_partitions(n) order.
const RatMatrix& kostka_numbers(int n);

/// Charge of a word with partition content (letters 1..k, #1 >= #2 >= ...).
long charge(std::span<const int> word);
long charge(const Tableau& tableau);

/// K_{λμ}(t) = Σ_T t^{charge(T)}; rows λ, columns μ.
const RatMatrix& kostka_foulkes(int n, const Rational& t);

/// b_λ(t) = Π_i Π_{k=1}^{m_i(λ)} (1 - t^k).
Rational b_lambda(const Partition& lambda, const Rational& t);

struct HLTransition {
  RatMatrix P_in_m;  // row μ: coefficients of P_μ over monomials
  RatMatrix Q_in_m;
  std::vector<Rational> b;
};

const HLTransition& hl_transition(int n, const Rational& t);

/// R_{ρμ}: coefficient of m_μ in p_ρ.
const RatMatrix& powersum_in_monomial(int n);
/// Inverse of the above: row μ gives m_μ over power sums.
const RatMatrix& monomial_in_powersum(int n);

SymFuncVec to_monomials(const SymFuncVec& f);
SymFuncVec to_power_sums(const SymFuncVec& f);

/// Σ_ρ c_ρ Π_k p_{ρ_k}(spec), through the power-sum expansion.
Rational evaluate(const SymFuncVec& f, const ThomaSpec& spec);

/// Values of every m_λ, λ ⊢ n, at the specialization (enumerate_partitions order).
std::vector<Rational> monomial_values(int n, const ThomaSpec& spec);
/// Values of every s_λ, λ ⊢ n.
std::vector<Rational> schur_values(int n, const ThomaSpec& spec);

/// r_ρ = t^{-n(ρ)} Σ_λ K_{λρ}(t) s_λ(spec).
Rational r_function(const Partition& rho, const ThomaSpec& spec, const Rational& t);

/// Q_ρ(spec; t) evaluated through the monomial expansion.
Rational hl_Q_value(const Partition& rho, const ThomaSpec& spec, const Rational& t);

}  // namespace vklab
