#pragma once

// Decides global generation of strict transforms. The classification is an
// iff only when the degree dominates the multiplicities (the b0 gate below);
// outside that range the verdict is OutOfTheoremRange, never a guess.

#include <optional>
#include <vector>

#include "divisor.hpp"

namespace fatpoints {

enum class GGStatus { GloballyGenerated, NotGloballyGenerated, OutOfTheoremRange };

struct GGVerdict {
  GGStatus status = GGStatus::OutOfTheoremRange;
  // Violated inequality: a single index {i} for the 0 <= m_i <= d family, an
  // index set I for the degree family. Present iff NotGloballyGenerated.
  std::optional<std::vector<int>> witness;
};

const char* to_string(GGStatus s);

// b0 threshold. Multiplicities are sorted descending before testing the
// special branch m_1 = d-1, m_i = 1 for i >= 2.
Int b_zero(const DivisorClass& D);

// true iff s <= n+1 or sum m_i - n d <= b0.
bool gg_degree_bound(const DivisorClass& D);

// The coefficient bounds under which the vanishing theorem applies.
bool vanishing_bound_check(const DivisorClass& D);

// Global generation of D_(r) on the blow-up along base cycles of dim <= r:
// 0 <= m_i <= d for all i and (r+1) d >= sum_{i in I} m_i for all |I| = r+2.
GGVerdict is_globally_generated(const DivisorClass& D, int r);

// Base-point freeness of the full transform (r = n-1, with divisorial
// subtraction): top condition n d >= sum_{i in I} m_i over |I| = n+1.
GGVerdict is_bpf_full_transform(const DivisorClass& D);

// The inequality families alone, without the degree gate; used where
// effectivity is known by hypothesis.
GGVerdict gg_inequalities(const DivisorClass& D, int r);
GGVerdict bpf_inequalities(const DivisorClass& D);

}  // namespace fatpoints
