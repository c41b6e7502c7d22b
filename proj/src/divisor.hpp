#pragma once

// Divisor classes on blow-ups of P^n at general points, and the exact
// combinatorics of their base loci: containment multiplicities of linear
// spans and of joins of secant varieties of the rational normal curve, and
// the strict-transform bookkeeping after blowing those cycles up.

#include <compare>
#include <optional>
#include <vector>

#include "ints.hpp"

namespace fatpoints {

// Subset sweeps are 2^s bitmask loops; anything past this cap is refused
// instead of silently grinding. All regimes of interest have s <= n + 3.
inline constexpr int kSubsetCap = 20;

// dH - sum m_i E_i on the blow-up of P^n at s points in general position.
struct DivisorClass {
  int n = 1;               // ambient dimension
  Int d = 0;               // degree
  std::vector<Int> mults;  // m_1 .. m_s

  DivisorClass() = default;
  DivisorClass(int n_, Int d_, std::vector<Int> mults_);

  int s() const { return static_cast<int>(mults.size()); }
  Int mult_sum() const;
};

// Names the join J(L_I, sigma_t): the cone over the t-th secant variety of
// the rational normal curve with vertex the span of the points indexed by I.
// (I, 0) is the linear span itself; (empty, t) is sigma_t; (empty, 0) is the
// empty cycle of dimension -1.
struct CycleIndex {
  std::vector<int> indices;  // sorted, duplicate-free, 1-based
  int secant_level = 0;      // t

  CycleIndex() = default;
  CycleIndex(std::vector<int> idx, int t);

  int size() const { return static_cast<int>(indices.size()); }
  int dim() const { return size() + 2 * secant_level - 1; }
  bool operator==(const CycleIndex& o) const = default;
  // Order: by dimension, then lexicographically on the index list, then t.
  std::strong_ordering operator<=>(const CycleIndex& o) const;
};

struct BaseLocusEntry {
  CycleIndex cycle;
  Int multiplicity;        // >= 1
  bool divisorial = false; // dim == n-1: a fixed divisor, not a blow-up center
};

struct BaseLocusDecomposition {
  std::vector<BaseLocusEntry> entries;  // sorted by cycle order, no duplicates

  bool empty() const { return entries.empty(); }
  const BaseLocusEntry* find(const CycleIndex& c) const;
  int max_dim() const;  // -1 when empty
};

// Strict transform on the iterated blow-up: base class plus one coefficient
// per exceptional divisor of a blown-up cycle (dim <= n-2). Divisorial fixed
// components subtracted along the way are recorded in `subtracted`.
struct StrictTransformClass {
  DivisorClass base;
  std::vector<std::pair<CycleIndex, Int>> exceptional;  // sorted, coefficients >= 1
  std::vector<BaseLocusEntry> subtracted;               // dim n-1 components removed

  Int exceptional_coeff(const CycleIndex& c) const;
};

int join_dimension(const CycleIndex& c);

// k_I = max{0, sum_{i in I} m_i - (|I|-1) d}, the multiplicity of containment
// of the span L_I in the base locus of the general member of |D|.
Int linear_multiplicity(const DivisorClass& D, const std::vector<int>& I);

// Unclamped value of the same expression; the clamp is what the geometry
// sees, the raw value is what the difference identities are stated for.
Int linear_multiplicity_raw(const DivisorClass& D, const std::vector<int>& I);

// k_{I,sigma_t} = max{0, t*sum m_i + sum_{i in I} m_i - ((n+1)t + |I| - 1) d}.
// For (empty, 0) returns d itself (the convention that keeps the leading
// term of virtual-dimension sums equal to binom(n+d, n)).
Int join_multiplicity(const DivisorClass& D, const CycleIndex& c);
Int join_multiplicity_raw(const DivisorClass& D, const CycleIndex& c);

// All cycles of dimension 1..n-1 with positive containment multiplicity.
// include_secants requires s == n+3 and adds the joins J(L_I, sigma_t), t>=1.
// Entries of dimension n-1 are flagged divisorial.
BaseLocusDecomposition base_locus(const DivisorClass& D, bool include_secants);

// Strict transform after blowing up every base-locus cycle of dimension <= r
// (as exceptional coefficients, up to dim n-2) and, when r == n-1,
// subtracting the divisorial fixed components from the base class.
// r == -1 returns D unchanged.
StrictTransformClass strict_transform(const DivisorClass& D, int r, bool include_secants);

DivisorClass scale(const DivisorClass& D, const Int& m);

// c1*D1 + c2*D2, coefficientwise; requires matching n and s.
DivisorClass combine(const DivisorClass& D1, const DivisorClass& D2, const Int& c1,
                     const Int& c2);

// The divisor class cut out by the join J(L_I, sigma_t) when it has
// dimension n-1: degree t+1, multiplicity t+1 at the vertex points and t at
// the others. For t == 0 this is the hyperplane through the n points of I.
DivisorClass divisorial_cycle_class(int n, int s, const CycleIndex& c);

// Validation helpers shared by the other modules.
void check_index_set(const std::vector<int>& I, int s, bool allow_empty = false);
std::vector<int> sorted_index_set(std::vector<int> I, int s, bool allow_empty = false);

}  // namespace fatpoints
