#pragma once

#include <map>
#include <vector>

#include "vklab/gflinalg.hpp"

namespace vklab {

/// Finite 0/1 word ε_1..ε_N with a constant tail; symbols are compared only when their tails agree.
struct SchubertSymbol {
  enum class Tail { zeros, ones };
  std::vector<int> eps;
  Tail tail = Tail::zeros;

  int ones() const;
  std::string to_string() const;
  static SchubertSymbol parse(std::string_view text);  ///< "0110", optional suffix "+1" for a ones tail
};

struct CellDimension {
  long value = 0;         ///< Σ_{i≤N} i ε_i
  bool infinite = false;  ///< set when the tail is all ones
};

CellDimension cell_dimension(const SchubertSymbol& eps);

/// q^{Σ i(ε_i - ε'_i)}; throws std::invalid_argument unless both words have the same length, tail and
/// number of ones.
Rational cocycle(const SchubertSymbol& eps, const SchubertSymbol& eps2, const Rational& q);

/// Symbol of the subspace spanned by the rows of `basis` against the flag F_i = span(e_1..e_i):
/// ε_i = dim(V ∩ F_i) - dim(V ∩ F_{i-1}).
SchubertSymbol schubert_symbol(const MatGF& basis);

/// Size of the cell of a symbol in Gr_k(F_q^n): q^{Σ i ε_i - k(k+1)/2}. The offset k(k+1)/2 is the
/// dimension of the smallest cell (ones in the first k positions).
Integer finite_cell_size(const SchubertSymbol& eps, int q);

/// Brute force: every k-subspace of F_q^n sorted into its cell. Limited to 2·10^6 subspaces.
std::map<std::vector<int>, Integer> enumerate_schubert_cells(int n, int k, const FieldCtx& F);

/// Σ_m [n choose m]_q α1^m α2^{n-m}.
Rational grassmann_mass(int n, const Rational& alpha1, const Rational& alpha2, const Rational& q);

/// Weighted count of monotone paths from (0,0) to (n-k, k) in the Pascal q-triangle where a vertical
/// step taken in column j has weight q^j.
Rational pascal_q_paths(int n, int k, const Rational& q);

/// Path weight of a single word read as a lattice path (1 = vertical, 0 = horizontal): q^{Σ columns}.
long path_exponent(const std::vector<int>& eps);

/// Bernoulli(α) product measure of a cylinder; entries 0/1 are constraints, -1 leaves a position free.
Rational bernoulli_symbol_measure(const Rational& alpha, const std::vector<int>& cylinder);

}  // namespace vklab
