#pragma once

// The moduli space of stable rational curves with n+3 marked points, seen as
// P^n blown up along all linear spans of n+2 general points up to dimension
// n-2 (the Kapranov model distinguished by the last marked point). Boundary
// divisors, Cremona images of the hyperplane class, F-curve intersection
// numbers, and membership in the cone of F-nef divisors.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "divisor.hpp"
#include "positivity.hpp"

namespace fatpoints {

// dH - sum m_I E_I with I running over nonempty subsets of the n+2 model
// points, |I| <= n-1. Missing keys are zero coefficients.
struct MZeroDivisor {
  int n = 2;
  Int d = 0;
  std::map<std::vector<int>, Int> coeffs;

  MZeroDivisor() = default;
  MZeroDivisor(int n_, Int d_);

  int model_points() const { return n + 2; }
  int marked_points() const { return n + 3; }
  Int coeff(const std::vector<int>& I) const;
  void set_coeff(std::vector<int> I, Int value);  // erases zeros
};

// A one-dimensional boundary stratum: a partition of the n+3 marked points
// into four nonempty blocks, blocks ordered by least element.
struct FCurve {
  std::array<std::vector<int>, 4> blocks;

  FCurve(std::array<std::vector<int>, 4> blocks_, int n_plus_3);
};

// Class of the boundary divisor indexed by I (2 <= |I|, 2 <= |I^c|), in the
// model basis: the exceptional class of a blown-up span, or the strict
// transform of the hyperplane through n of the model points. Invariant under
// complementing I.
MZeroDivisor boundary_divisor(std::vector<int> I, int n);

// Proper transform of the standard Cremona image of the hyperplane class
// based on the points of J: (|J|-1) h - sum_{J' subset J, |J'| < |J|-1}
// (|J|-|J'|-1) e_{J'}.
MZeroDivisor cremona_hyperplane(std::vector<int> J, int n);

// Intersection of an F-curve with a boundary divisor: 1 when I (up to
// complement) is a union of two blocks, -1 when it is a block, 0 otherwise.
int fcurve_intersect_boundary(const FCurve& F, std::vector<int> I, int n);

// Intersection of D with the F-curve whose block containing the last marked
// point is exactly {n+3}; G, J, L partition the n+2 model points.
Int A_coefficient(const MZeroDivisor& D, const std::vector<int>& G, const std::vector<int>& J,
                  const std::vector<int>& L);

// Intersection of D with the F-curve lying on the exceptional divisor E_I;
// I, G, J, L partition the n+2 model points and the last marked point rides
// on the I block.
Int B_coefficient(const MZeroDivisor& D, const std::vector<int>& I, const std::vector<int>& G,
                  const std::vector<int>& J, const std::vector<int>& L);

struct FnefViolation {
  char kind = 'A';                        // 'A' or 'B'
  std::vector<std::vector<int>> blocks;   // the violating partition (I first for B)
  Int value = 0;
};

struct FnefResult {
  bool fnef = false;
  std::optional<FnefViolation> violation;  // canonical-order first violator
};

// Full sweep over 3-block partitions (A) and distinguished 4-block
// partitions (B) of the model points. Honors FATPOINTS_THREADS; a parallel
// sweep still reports the canonical-order first violator.
FnefResult is_fnef(const MZeroDivisor& D);

// Strict transform of an effective divisor class on s = n+2 points, as a
// divisor on the model: m_I = linear containment multiplicity for |I| >= 2.
// Requires m_i >= 0 and the effectivity inequalities.
MZeroDivisor embed_strict_transform(const DivisorClass& D);

struct FultonReport {
  bool globally_generated = false;
  bool nef = false;
  bool f_nef = false;
  bool consistent = false;
  std::optional<FnefViolation> violation;
  std::optional<std::vector<int>> gg_witness;
};

// Certifies that the strict transform is F-nef and that the three positivity
// notions agree on it. An F-nef failure for a globally generated transform
// is an internal error, not a verdict.
FultonReport fulton_certify(const DivisorClass& D);

}  // namespace fatpoints
