#pragma once

// Log pairs (X, eps*D) on the blown-up projective space: canonical and
// adjoint classes, the coefficient inequalities that force log-canonicity,
// and the discrepancy computation over the resolved base locus.

#include <optional>
#include <vector>

#include "divisor.hpp"

namespace fatpoints::logpairs {

using fatpoints::CycleIndex;
using fatpoints::DivisorClass;
using fatpoints::Int;
using fatpoints::Rat;

struct LogPair {
  DivisorClass divisor;
  Rat epsilon;  // exact; 0 <= epsilon (and <= 1 for discrepancy work)

  LogPair(DivisorClass D, Rat eps);
};

enum class Space { X, Y, Ysigma };

// Integral class record in the basis (H; E_i; E_cycle), coefficients ON the
// generators: K = h*H + point_coeff * sum E_i + sum c * E_cycle.
struct CanonicalClass {
  int n = 1;
  Int h = 0;
  Int point_coeff = 0;
  std::vector<std::pair<CycleIndex, Int>> exceptional;  // n - r - 1 per center
};

CanonicalClass canonical_class(Space space, int n, int s, const std::vector<CycleIndex>& centers);

// K_X + eps*D = (eps d - n - 1) H + sum (n - 1 - eps m_i) E_i, exact.
struct AdjointClass {
  Rat h;
  std::vector<Rat> points;  // coefficient on each E_i
};

AdjointClass adjoint_class(const LogPair& p);

struct AbundanceCheck {
  bool holds = false;
  std::optional<int> point_witness;                 // eps*m_i < n-1
  std::optional<std::pair<int, int>> pair_witness;  // eps*(m_i+m_j-d) > n-3
};

// eps*m_i >= n-1 for all i and eps*(m_i+m_j-d) <= n-3 for all i != j.
AbundanceCheck abundance_condition(const LogPair& p);

struct DerivedBoundsReport {
  int cycles_checked = 0;
  Rat max_point_slack = 0;  // max of eps*(m_i - d); must stay <= -2
};

// Consequences of the abundance inequalities: eps*(m_i - d) <= -2 and
// eps * k_{I,sigma_t} <= max{0, n - 1 - 2r} for every cycle of dimension
// 1..n-1. These are proved, so a failure is an internal error.
DerivedBoundsReport derived_bounds(const LogPair& p);

struct DiscrepancyEntry {
  CycleIndex cycle;
  Int multiplicity;  // containment multiplicity k
  Rat a;             // discrepancy coefficient n - r - 1 - eps*k
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;        // blown-up centers, dim 1..n-2
  std::vector<DiscrepancyEntry> divisorial;     // fixed components, a = 1 - eps*k
  bool boundary_coefficients_ok = true;         // every eps*k <= 1 on fixed parts
  Rat discrep = 1;
  bool lc = false;
};

// Discrepancies over the log resolution of the pair. epsilon must lie in
// [0, 1]; include_secants requires s = n+3.
DiscrepancyReport discrepancies(const LogPair& p, bool include_secants);

// discrepancies(...).lc, with the theorem guarantee asserted: a pair
// satisfying the abundance inequalities that computes as non-lc is a bug.
bool is_lc(const LogPair& p, bool include_secants);

}  // namespace fatpoints::logpairs
