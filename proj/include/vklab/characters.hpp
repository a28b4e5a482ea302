#pragma once

#include <vector>

#include "vklab/gflinalg.hpp"
#include "vklab/symfun.hpp"

namespace vklab {

/// Degree of the unipotent character χ^λ: q^{n(λ)} Π_{j≤n}(q^j - 1) / Π_b (q^{h(b)} - 1).
Rational unipotent_dim(const Partition& lambda, const Rational& q);

/// n! / Π h(b).
Integer sym_dim(const Partition& lambda);

/// Degree of the flag representation of type μ: the Gaussian multinomial [n]! / Π [μ_j]!.
Rational induced_dim(const std::vector<int>& mu, const Rational& q);

/// χ^λ_ρ(q) = q^{n(ρ)} K_{λρ}(1/q).
Rational chi_unipotent(const Partition& lambda, const Partition& rho, const Rational& q);

/// Matrix of χ^λ_ρ(q), rows λ, columns ρ.
RatMatrix chi_unipotent_matrix(int n, const Rational& q);

/// ψ^μ_ρ(q) = Σ_λ K_{λμ} χ^λ_ρ(q); the composition is sorted into a partition first.
Rational psi_unipotent(const std::vector<int>& mu, const Partition& rho, const Rational& q);

/// Flag character at a primary element of degree d with partition ρ: ψ^{ν/d}_ρ(q^d) when d
/// divides every part of ν, else 0.
Rational psi_at_primary(const Partition& nu, int d, const Partition& rho, const Rational& q);

/// χ^{(α;β)} at a unipotent class: r_ρ(α; β).
Rational glb_character_unipotent(const ThomaSpec& spec, const Partition& rho, const GroundParams& ground);

/// Π_f r_{φ(f)}(α^{d_f}; -(-β)^{d_f}; t^{d_f}).
Rational glb_character_general(const ThomaSpec& spec, const ConjClassType& type, const GroundParams& ground);

/// Σ_{ν ⊢ n} ψ^ν(g) m_ν(spec) with ψ^ν(g) counted as fixed flags of g.
Rational glb_character_via_flags(const ThomaSpec& spec, const MatGF& g);

/// χ^λ_ρ recovered from fixed-flag counts: solve ψ = Kᵀ χ. Rows λ, columns ρ.
RatMatrix chi_via_flag_oracle(int n, const FieldCtx& F);

/// Checks [s] = X [P̃] over monomials, P̃_ρ = q^{-n(ρ)} P_ρ(x; 1/q), X = χ matrix.
bool frobenius_transition_check(int n, const Rational& q);

}  // namespace vklab
