#include "divisor.hpp"

#include <algorithm>

namespace fatpoints {

DivisorClass::DivisorClass(int n_, Int d_, std::vector<Int> mults_)
    : n(n_), d(std::move(d_)), mults(std::move(mults_)) {
  require(n >= 1, errc::invalid_argument, "ambient dimension must be >= 1");
  require(!mults.empty(), errc::invalid_argument, "at least one point is required");
}

Int DivisorClass::mult_sum() const {
  Int t = 0;
  for (const Int& m : mults) t += m;
  return t;
}

CycleIndex::CycleIndex(std::vector<int> idx, int t) : indices(std::move(idx)), secant_level(t) {
  require(t >= 0, errc::invalid_argument, "secant level must be >= 0");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] >= 1, errc::invalid_argument, "cycle indices are 1-based");
    require(i == 0 || indices[i - 1] < indices[i], errc::invalid_argument,
            "cycle indices must be sorted and duplicate-free");
  }
}

std::strong_ordering CycleIndex::operator<=>(const CycleIndex& o) const {
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  if (auto c = indices <=> o.indices; c != 0) return c;
  return secant_level <=> o.secant_level;
}

const BaseLocusEntry* BaseLocusDecomposition::find(const CycleIndex& c) const {
  for (const auto& e : entries)
    if (e.cycle == c) return &e;
  return nullptr;
}

int BaseLocusDecomposition::max_dim() const {
  int r = -1;
  for (const auto& e : entries) r = std::max(r, e.cycle.dim());
  return r;
}

Int StrictTransformClass::exceptional_coeff(const CycleIndex& c) const {
  for (const auto& [cycle, k] : exceptional)
    if (cycle == c) return k;
  return 0;
}

void check_index_set(const std::vector<int>& I, int s, bool allow_empty) {
  require(allow_empty || !I.empty(), errc::invalid_argument, "index set must be nonempty");
  for (std::size_t i = 0; i < I.size(); ++i) {
    require(I[i] >= 1 && I[i] <= s, errc::invalid_argument, "point index out of range");
    require(i == 0 || I[i - 1] < I[i], errc::invalid_argument,
            "index set must be sorted and duplicate-free");
  }
}

std::vector<int> sorted_index_set(std::vector<int> I, int s, bool allow_empty) {
  std::sort(I.begin(), I.end());
  check_index_set(I, s, allow_empty);
  return I;
}

int join_dimension(const CycleIndex& c) { return c.dim(); }

Int linear_multiplicity_raw(const DivisorClass& D, const std::vector<int>& I) {
  check_index_set(I, D.s());
  Int sum = 0;
  for (int i : I) sum += D.mults[i - 1];
  return sum - (Int(I.size()) - 1) * D.d;
}

Int linear_multiplicity(const DivisorClass& D, const std::vector<int>& I) {
  return max0(linear_multiplicity_raw(D, I));
}

Int join_multiplicity_raw(const DivisorClass& D, const CycleIndex& c) {
  const int t = c.secant_level;
  if (t == 0) {
    if (c.indices.empty()) return D.d;  // k_{empty,sigma_0} = d
    return linear_multiplicity_raw(D, c.indices);
  }
  require(D.s() == D.n + 3, errc::invalid_argument,
          "secant cycles exist only for s = n + 3 points");
  require(c.dim() <= D.n - 1, errc::invalid_argument,
          "join dimension exceeds n - 1: no such proper cycle");
  check_index_set(c.indices, D.s(), /*allow_empty=*/true);
  Int sum_I = 0;
  for (int i : c.indices) sum_I += D.mults[i - 1];
  return Int(t) * D.mult_sum() + sum_I -
         (Int(D.n + 1) * t + Int(c.size()) - 1) * D.d;
}

Int join_multiplicity(const DivisorClass& D, const CycleIndex& c) {
  if (c.secant_level == 0 && c.indices.empty()) return D.d;
  return max0(join_multiplicity_raw(D, c));
}

namespace {

std::vector<int> mask_to_indices(unsigned mask, int s) {
  std::vector<int> out;
  for (int i = 0; i < s; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

}  // namespace

BaseLocusDecomposition base_locus(const DivisorClass& D, bool include_secants) {
  const int s = D.s();
  const int n = D.n;
  require(s <= kSubsetCap, errc::invalid_argument,
          "subset enumeration is capped at s <= 20 points");
  if (include_secants)
    require(s == n + 3, errc::invalid_argument,
            "secant cycles exist only for s = n + 3 points");

  BaseLocusDecomposition out;
  // Linear spans: dimension |I|-1 between 1 and n-1.
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    const int sz = __builtin_popcount(mask);
    if (sz < 2 || sz > n) continue;
    CycleIndex c(mask_to_indices(mask, s), 0);
    Int k = linear_multiplicity(D, c.indices);
    if (k > 0) out.entries.push_back({c, k, c.dim() == n - 1});
  }
  if (include_secants) {
    for (int t = 1; 2 * t - 1 <= n - 1; ++t) {
      for (unsigned mask = 0; mask < (1u << s); ++mask) {
        const int sz = __builtin_popcount(mask);
        if (sz + 2 * t - 1 > n - 1) continue;
        CycleIndex c(mask_to_indices(mask, s), t);
        Int k = join_multiplicity(D, c);
        if (k > 0) out.entries.push_back({c, k, c.dim() == n - 1});
      }
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const BaseLocusEntry& a, const BaseLocusEntry& b) { return a.cycle < b.cycle; });
  return out;
}

DivisorClass divisorial_cycle_class(int n, int s, const CycleIndex& c) {
  require(c.dim() == n - 1, errc::invalid_argument, "not a divisorial cycle");
  const int t = c.secant_level;
  std::vector<Int> m(s, Int(t));
  for (int i : c.indices) m[i - 1] = t + 1;
  return DivisorClass(n, Int(t + 1), std::move(m));
}

StrictTransformClass strict_transform(const DivisorClass& D, int r, bool include_secants) {
  const int n = D.n;
  require(r >= -1 && r <= n - 1, errc::invalid_argument, "blow-up level r out of range");
  StrictTransformClass out;
  out.base = D;
  if (r == -1) return out;

  BaseLocusDecomposition bl = base_locus(D, include_secants);
  for (const auto& e : bl.entries) {
    if (e.cycle.dim() <= std::min(r, n - 2))
      out.exceptional.emplace_back(e.cycle, e.multiplicity);
  }
  if (r == n - 1) {
    // Divisorial fixed components are subtracted, not blown up. Each one
    // removes k copies of its class from the base and k copies of its own
    // containment multiplicities from every smaller exceptional coefficient.
    for (const auto& e : bl.entries) {
      if (!e.divisorial) continue;
      out.subtracted.push_back(e);
      DivisorClass cls = divisorial_cycle_class(n, D.s(), e.cycle);
      out.base = combine(out.base, cls, 1, -e.multiplicity);
      for (auto& [cycle, k] : out.exceptional)
        k -= e.multiplicity * join_multiplicity(cls, cycle);
    }
    std::erase_if(out.exceptional, [](const auto& p) { return p.second <= 0; });
  }
  return out;
}

DivisorClass scale(const DivisorClass& D, const Int& m) {
  require(m >= 1, errc::invalid_argument, "scale factor must be >= 1");
  DivisorClass out = D;
  out.d *= m;
  for (Int& mi : out.mults) mi *= m;
  return out;
}

DivisorClass combine(const DivisorClass& D1, const DivisorClass& D2, const Int& c1,
                     const Int& c2) {
  require(D1.n == D2.n && D1.s() == D2.s(), errc::invalid_argument,
          "combine requires matching ambient dimension and point count");
  DivisorClass out = D1;
  out.d = c1 * D1.d + c2 * D2.d;
  for (int i = 0; i < D1.s(); ++i) out.mults[i] = c1 * D1.mults[i] + c2 * D2.mults[i];
  return out;
}

}  // namespace fatpoints
