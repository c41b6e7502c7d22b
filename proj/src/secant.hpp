#pragma once

// The n+3-point theory: virtual dimension counts that see the rational
// normal curve and the joins of its secant varieties, pairwise intersections
// of those joins, and the decomposition of a divisor against the fixed
// divisor swept out by the middle secant stratum.

#include <map>
#include <optional>
#include <vector>

#include "divisor.hpp"

namespace fatpoints::secant {

using fatpoints::CycleIndex;
using fatpoints::DivisorClass;
using fatpoints::Int;

// Secant linear virtual dimension: the alternating binomial sum over all
// cycles (I, t), 0 <= t <= ceil(n/2), |I| <= n-2t. Predicts h^0 for s = n+3.
Int sldim(const DivisorClass& D);

// The t = 0 truncation: linear spans only; defined for any number of points.
Int ldim(const DivisorClass& D);

struct JoinIntersection {
  std::vector<CycleIndex> components;  // empty means empty intersection
};

// Pairwise intersection of two joins of the same dimension, as a union of
// joins. Inputs must satisfy one of the proved applicability gates:
// disjoint vertex sets with r <= n-1 and 2r <= 2n - (|I1|+|I2|), or a common
// vertex with 2r <= n-1 (the reduction J -> J u I12 applies).
JoinIntersection join_intersection(const CycleIndex& c1, const CycleIndex& c2, int n);

// The fixed divisor swept by the middle secant stratum: for n = 2v the
// strict transform of sigma_v, for n = 2v+1 the cone over sigma_v with
// vertex the first point.
DivisorClass sigma_class(int n);  // n even: (v+1)H - v sum E_i on 2v+3 points
DivisorClass gamma_class(int n);  // n odd: (v+1)H - (v+1)E_1 - v sum_{i>=2} E_i

// Containment multiplicities of cycles in that fixed divisor, in closed
// form: max{0, v - |I| - t + 1} (+1 when n is odd and 1 is a vertex index).
Int k_on_fixed_divisor(const CycleIndex& c, int n);

struct IntInterval {
  Int lo = 0;
  Int hi = -1;
  bool empty() const { return lo > hi; }
};

// Admissible coefficients for subtracting the fixed divisor:
// ceil(k_C / v) <= a <= min_i { floor(m_i / v), d - m_i }   (n even),
// with denominator v+1 at the vertex point when n is odd.
IntInterval alpha_interval(const DivisorClass& D);
IntInterval beta_interval(const DivisorClass& D);

struct Decomposition {
  DivisorClass residual_divisor;            // D' = D - a * fixed
  std::map<CycleIndex, Int> residuals;      // nonzero exceptional balances
  Int fixed_coefficient = 0;                // the a used
};

// D = D' + a*(fixed divisor) + exceptional residuals. Verifies that every
// residual is nonnegative, that k_C(D') = 0 and that D' has only linear base
// locus; a violation means a bound was broken upstream and is an internal
// error.
Decomposition decompose(const DivisorClass& D, const Int& a);

// The cycles blown up in the secant resolution for the given parity
// (vertex-size/secant-level ranges of the even and odd constructions).
std::vector<CycleIndex> resolution_cycles(int n);

}  // namespace fatpoints::secant
