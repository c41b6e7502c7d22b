#include "positivity.hpp"

#include <algorithm>

namespace fatpoints {

const char* to_string(GGStatus s) {
  switch (s) {
    case GGStatus::GloballyGenerated: return "GloballyGenerated";
    case GGStatus::NotGloballyGenerated: return "NotGloballyGenerated";
    case GGStatus::OutOfTheoremRange: return "OutOfTheoremRange";
  }
  return "?";
}

Int b_zero(const DivisorClass& D) {
  const int n = D.n, s = D.s();
  if (s <= n + 2) return -1;
  std::vector<Int> m = D.mults;
  std::sort(m.begin(), m.end(), std::greater<Int>());
  bool special = m[0] == D.d - 1;
  for (std::size_t i = 1; i < m.size() && special; ++i) special = m[i] == 1;
  const Int cap = special ? Int(n - 1) : Int(n);
  return std::min(cap, Int(s - n - 2)) - 1;
}

bool gg_degree_bound(const DivisorClass& D) {
  if (D.s() <= D.n + 1) return true;
  return D.mult_sum() - Int(D.n) * D.d <= b_zero(D);
}

bool vanishing_bound_check(const DivisorClass& D) {
  const int n = D.n, s = D.s();
  for (const Int& m : D.mults)
    if (m < 0) return false;
  if (s >= 2) {
    // max two multiplicities suffice for the pairwise bound
    Int top1 = D.mults[0], top2 = D.mults[1];
    if (top1 < top2) std::swap(top1, top2);
    for (int i = 2; i < s; ++i) {
      if (D.mults[i] > top1) { top2 = top1; top1 = D.mults[i]; }
      else if (D.mults[i] > top2) top2 = D.mults[i];
    }
    if (top1 + top2 > D.d + 1) return false;
  }
  Int bonus;
  if (s <= n + 1) bonus = D.d >= 2 ? Int(n) : Int(1);
  else if (s == n + 2) bonus = 1;
  else {
    Int s_d = 0;
    for (const Int& m : D.mults)
      if (m == D.d) ++s_d;
    bonus = std::min(Int(n) - s_d, Int(s - n - 2));
  }
  return D.mult_sum() <= Int(n) * D.d + bonus;
}

namespace {

// First violated inequality in canonical order: the m-range family in point
// order, then the degree family over size-(r+2) subsets in lex order.
GGVerdict inequality_check(const DivisorClass& D, int subset_size, const Int& degree_bound) {
  for (int i = 0; i < D.s(); ++i) {
    if (D.mults[i] < 0 || D.mults[i] > D.d)
      return {GGStatus::NotGloballyGenerated, std::vector<int>{i + 1}};
  }
  const int s = D.s();
  if (subset_size <= s) {
    std::vector<int> pick(subset_size);
    for (int i = 0; i < subset_size; ++i) pick[i] = i;
    while (true) {
      Int sum = 0;
      for (int i : pick) sum += D.mults[i];
      if (sum > degree_bound) {
        std::vector<int> witness(pick.begin(), pick.end());
        for (int& v : witness) ++v;
        return {GGStatus::NotGloballyGenerated, witness};
      }
      int i = subset_size - 1;
      while (i >= 0 && pick[i] == s - subset_size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < subset_size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {GGStatus::GloballyGenerated, std::nullopt};
}

}  // namespace

GGVerdict gg_inequalities(const DivisorClass& D, int r) {
  return inequality_check(D, r + 2, Int(r + 1) * D.d);
}

GGVerdict bpf_inequalities(const DivisorClass& D) {
  return inequality_check(D, D.n + 1, Int(D.n) * D.d);
}

GGVerdict is_globally_generated(const DivisorClass& D, int r) {
  require(r >= 0 && r <= D.n - 1, errc::invalid_argument, "r must satisfy 0 <= r <= n-1");
  if (!gg_degree_bound(D)) return {GGStatus::OutOfTheoremRange, std::nullopt};
  return gg_inequalities(D, r);
}

GGVerdict is_bpf_full_transform(const DivisorClass& D) {
  if (!gg_degree_bound(D)) return {GGStatus::OutOfTheoremRange, std::nullopt};
  return bpf_inequalities(D);
}

}  // namespace fatpoints
