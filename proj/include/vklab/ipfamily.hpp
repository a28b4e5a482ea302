#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vklab/gflinalg.hpp"
#include "vklab/measures.hpp"

namespace vklab {

/// Finite group on indices 0..size-1. Elements carry a 64-bit canonical key (a matrix or a
/// permutation/value list); products are computed on keys and looked up.
class FiniteGroupTable {
 public:
  using Key = std::uint64_t;
  using KeyMul = std::function<Key(Key, Key)>;

  /// Checks closure (all pairs when size <= 5000, otherwise 20000 sampled pairs), associativity on
  /// 2000 sampled triples and that every element has an inverse; throws std::logic_error otherwise.
  FiniteGroupTable(std::string name, std::vector<Key> elements, KeyMul mul, Key identity);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(keys_.size()); }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  Key key(int i) const { return keys_[static_cast<std::size_t>(i)]; }
  /// -1 when the key is not an element.
  int index_of(Key k) const;
  int conjugate(int x, int g) const { return mul(mul(x, g), inv(x)); }
  /// Conjugacy classes as lists of element indices, ordered by smallest member.
  const std::vector<std::vector<int>>& classes() const;

 private:
  std::string name_;
  std::vector<Key> keys_;
  std::map<Key, int> index_;
  KeyMul mul_;
  int identity_ = 0;
  std::vector<int> inv_;
  mutable std::vector<std::vector<int>> classes_;
};

/// Matrix keys: entry (i,j) is the base-q digit at position i*n+j.
FiniteGroupTable::Key matrix_key(const MatGF& g);
MatGF matrix_from_key(FiniteGroupTable::Key key, int n, const FieldCtx& F);

std::shared_ptr<const FiniteGroupTable> general_linear_group(int n, const FieldCtx& F);
/// Z/k under addition.
std::shared_ptr<const FiniteGroupTable> cyclic_group(int k);
/// H wr S_n as monomial matrices: the element (π, h) has h_i at (i, π(i)).
std::shared_ptr<const FiniteGroupTable> wreath_group(int n, const FiniteGroupTable& H);

struct WreathElement {
  std::vector<int> perm;    ///< π(i), 0-based
  std::vector<int> values;  ///< indices into H
};
WreathElement decode_wreath(FiniteGroupTable::Key key, int n, int h_size);
FiniteGroupTable::Key encode_wreath(const WreathElement& w, int h_size);

/// One step G_m <- P_{m+1} ⊂ G_{m+1} of an IP-family.
struct IPLevel {
  enum class Kind { gl, affine, wreath };
  Kind kind;
  int m;
  std::shared_ptr<const FiniteGroupTable> G;       ///< G_{m+1}
  std::shared_ptr<const FiniteGroupTable> G_prev;  ///< G_m
  std::vector<int> P;                              ///< indices into G
  std::vector<int> pi;                             ///< pi[i] = π(P[i]), index into G_prev
  std::vector<int> N;                              ///< kernel of π, indices into G
  std::vector<int> section;                        ///< section[g] in P with π = g (block-diagonal lift)
  std::vector<char> in_P;                          ///< membership flags over G
  std::vector<int> pi_of;                          ///< π over G (-1 outside P)
};

/// GL levels: P = [[A, b], [0, a]], π = A. Needs |GL_{m+1}| <= 10^6.
IPLevel build_gl_ip_level(int m, const FieldCtx& F);
/// Affine levels: as the GL levels with a = 1.
IPLevel build_affine_ip_level(int m, const FieldCtx& F);
/// Wreath levels H ≀ S_m ⊂ H ≀ S_{m+1}: P fixes the last point, π forgets it.
IPLevel build_wreath_ip_level(int m, std::shared_ptr<const FiniteGroupTable> H);

/// Bookkeeping checks: π surjective, a homomorphism on P, N = π^{-1}(e), |P| = |G_m||N|.
bool verify_level(const IPLevel& level);

/// Finitely supported function on a group with rational coefficients.
struct GroupAlgElem {
  std::shared_ptr<const FiniteGroupTable> group;
  std::map<int, Rational> coeffs;

  static GroupAlgElem delta(std::shared_ptr<const FiniteGroupTable> group, int g);
  bool operator==(const GroupAlgElem& o) const;
};

GroupAlgElem convolve(const GroupAlgElem& a, const GroupAlgElem& b);
/// f^#(g) = conj f(g^{-1}); coefficients are rational so conj is the identity.
GroupAlgElem involution(const GroupAlgElem& a);

/// i(g) = (1/|N_m|) Σ_{h ∈ N_m} g̃ h, with g̃ = section lift, extended linearly.
GroupAlgElem embed_i(const GroupAlgElem& a, const IPLevel& level);
/// Same with the lift g̃ = section(g)·N[k] for a fixed kernel element index k.
GroupAlgElem embed_i_with_lift(const GroupAlgElem& a, const IPLevel& level, std::size_t kernel_index);

struct Verdict {
  bool ok = true;
  long checked = 0;
  std::string detail;
};

/// i(g)*i(g') = i(gg') and i(g)^# = i(g^{-1}) for all g, g' in G_m; i(e) idempotent, and the unit only when N is trivial.
Verdict embed_homomorphism_check(const IPLevel& level);

/// Borel subgroup G(1,m) of the GL family (invertible upper-triangular matrices) as indices into G.
std::vector<int> borel_subgroup(const FiniteGroupTable& G, int n, const FieldCtx& F);

/// Permutation character of G on G/B: #{x : x^{-1} g x ∈ B} / |B|, evaluated per element.
std::vector<Rational> permutation_character(const FiniteGroupTable& G, const std::vector<int>& B);

/// σ_m inflated to P_{m+1} and induced to G_{m+1}, compared with the number of g-invariant complete flags
/// on every conjugacy class of G_{m+1}.
Verdict flag_induction_check(int m, const FieldCtx& F);

/// Cylinder probabilities on G(1,m) = H^m constant on G_m-conjugacy classes, for a measure given on
/// value lists (indices into H).
Verdict central_check(int m, std::shared_ptr<const FiniteGroupTable> H,
                      const std::function<Rational(const std::vector<int>&)>& measure);
/// The product measure Π M0 is central and coherent (M_m(g) = Σ_{h ∈ N_m} M_{m+1}(g h)) at levels ≤ m.
Verdict de_finetti_central_check(int m, std::shared_ptr<const FiniteGroupTable> H, const std::vector<Rational>& M0);

/// Coherence of a central measure on GL levels, restricted to unitriangular elements:
/// M(g) = Σ_{h ∈ N, unitriangular} M(g̃ h) with M(g) = cylinder(Jordan type of g), for |g| < n_max.
/// Every group-level sum must also equal Σ_σ c_{ρσ} M_σ computed from extension counts.
Verdict coherence_bridge_check(const CylinderFn& cylinder, int n_max, const FieldCtx& F);

}  // namespace vklab
