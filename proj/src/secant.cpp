#include "secant.hpp"

#include <algorithm>

namespace fatpoints::secant {

namespace {

std::vector<int> mask_to_indices(unsigned mask, int s) {
  std::vector<int> out;
  for (int i = 0; i < s; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

int sign_of(int set_size) { return set_size % 2 == 0 ? 1 : -1; }

}  // namespace

Int sldim(const DivisorClass& D) {
  const int n = D.n, s = D.s();
  require(s == n + 3, errc::invalid_argument,
          "the secant virtual dimension is defined for s = n + 3");
  require(s <= kSubsetCap, errc::invalid_argument, "subset enumeration capped at s <= 20");
  Int total = binomial(Int(n) + D.d, n);  // the (empty, 0) term
  for (int t = 0; t <= (n + 1) / 2; ++t) {  // t ranges to ceil(n/2)
    const int max_size = n - 2 * t;
    if (max_size < 0) continue;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      const int sz = __builtin_popcount(mask);
      if (sz > max_size) continue;
      if (t == 0 && sz == 0) continue;  // already counted
      CycleIndex c(mask_to_indices(mask, s), t);
      const Int k = join_multiplicity(D, c);
      if (k == 0) continue;  // binom argument below n
      total += sign_of(sz) * binomial(Int(n) + k - c.dim() - 1, n);
    }
  }
  return total;
}

Int ldim(const DivisorClass& D) {
  const int n = D.n, s = D.s();
  require(s <= kSubsetCap, errc::invalid_argument, "subset enumeration capped at s <= 20");
  Int total = binomial(Int(n) + D.d, n);
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    const int sz = __builtin_popcount(mask);
    if (sz > n) continue;
    const Int k = linear_multiplicity(D, mask_to_indices(mask, s));
    if (k == 0) continue;
    total += sign_of(sz) * binomial(Int(n) + k - sz, n);
  }
  return total;
}

namespace {

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int symmetric_difference_size(const std::vector<int>& a, const std::vector<int>& b) {
  return (int)a.size() + (int)b.size() - 2 * (int)set_intersection(a, b).size();
}

// Core enumeration for disjoint vertex sets: J runs over subsets of I1 u I2
// whose symmetric difference with each vertex set has size (|I1|+|I2|)/2,
// with the secant level forced by the dimension equation. Every component is
// coned back over `vertex` (the shared vertex stripped before reduction;
// empty in the genuinely disjoint case).
std::vector<CycleIndex> enumerate_components(const CycleIndex& c1, const CycleIndex& c2,
                                             const std::vector<int>& vertex) {
  const int size_sum = c1.size() + c2.size();
  std::vector<CycleIndex> out;
  const std::vector<int> pool = set_union(c1.indices, c2.indices);
  const int p = (int)pool.size();
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) J.push_back(pool[i]);
    if (2 * symmetric_difference_size(c1.indices, J) != size_sum) continue;
    if (2 * symmetric_difference_size(c2.indices, J) != size_sum) continue;
    // 2 r_J = 2r - (|I1|+|I2|); t_J = t1 + |I1 n J| - |J| comes out integral.
    const int t_J = c1.secant_level + (int)set_intersection(c1.indices, J).size() - (int)J.size();
    if (t_J < 0) continue;
    CycleIndex comp(set_union(J, vertex), t_J);
    if (comp.dim() < 0) continue;  // the empty cycle: no incidence
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

JoinIntersection join_intersection(const CycleIndex& c1, const CycleIndex& c2, int n) {
  require(n >= 1, errc::invalid_argument, "ambient dimension must be >= 1");
  require(c1.dim() == c2.dim(), errc::out_of_range,
          "join intersection: the two cycles must have equal dimension");
  const std::vector<int> common = set_intersection(c1.indices, c2.indices);
  JoinIntersection out;
  if (common.empty()) {
    const int r = c1.dim();
    require(r <= n - 1, errc::out_of_range, "join intersection: dimension exceeds n-1");
    require(2 * r <= 2 * n - c1.size() - c2.size(), errc::out_of_range,
            "join intersection: outside the proved disjoint-vertex range");
    out.components = enumerate_components(c1, c2, {});
    return out;
  }
  require(2 * c1.dim() <= n - 1, errc::out_of_range,
          "join intersection: common vertices need 2r <= n-1");
  // Strip the shared vertex, intersect, then cone back over it.
  CycleIndex r1(set_difference(c1.indices, common), c1.secant_level);
  CycleIndex r2(set_difference(c2.indices, common), c2.secant_level);
  out.components = enumerate_components(r1, r2, common);
  return out;
}

DivisorClass sigma_class(int n) {
  require(n >= 2 && n % 2 == 0, errc::invalid_argument,
          "the secant fixed divisor needs even n >= 2");
  const int v = n / 2;
  return DivisorClass(n, Int(v + 1), std::vector<Int>(n + 3, Int(v)));
}

DivisorClass gamma_class(int n) {
  require(n >= 3 && n % 2 == 1, errc::invalid_argument,
          "the coned secant fixed divisor needs odd n >= 3");
  const int v = (n - 1) / 2;
  std::vector<Int> m(n + 3, Int(v));
  m[0] = v + 1;
  return DivisorClass(n, Int(v + 1), std::move(m));
}

Int k_on_fixed_divisor(const CycleIndex& c, int n) {
  require(n >= 2, errc::invalid_argument, "need n >= 2");
  if (n % 2 == 0) {
    const int v = n / 2;
    return max0(Int(v) - c.size() - c.secant_level + 1);
  }
  const int v = (n - 1) / 2;
  const int delta = std::binary_search(c.indices.begin(), c.indices.end(), 1) ? 1 : 0;
  return max0(Int(v) - c.size() - c.secant_level + 1 + delta);
}

namespace {

void check_interval_preconditions(const DivisorClass& D, bool want_even) {
  require(D.s() == D.n + 3, errc::invalid_argument, "decomposition needs s = n + 3");
  require((D.n % 2 == 0) == want_even, errc::invalid_argument,
          want_even ? "alpha interval is the even-dimension case"
                    : "beta interval is the odd-dimension case");
}

}  // namespace

IntInterval alpha_interval(const DivisorClass& D) {
  check_interval_preconditions(D, true);
  const int v = D.n / 2;
  IntInterval out;
  out.lo = ceil_div(join_multiplicity(D, CycleIndex({}, 1)), Int(v));
  out.hi = floor_div(D.mults[0], Int(v));
  for (int i = 0; i < D.s(); ++i) {
    out.hi = std::min(out.hi, floor_div(D.mults[i], Int(v)));
    out.hi = std::min(out.hi, Int(D.d - D.mults[i]));
  }
  return out;
}

IntInterval beta_interval(const DivisorClass& D) {
  check_interval_preconditions(D, false);
  const int v = (D.n - 1) / 2;
  IntInterval out;
  out.lo = ceil_div(join_multiplicity(D, CycleIndex({}, 1)), Int(v));
  out.hi = std::min(floor_div(D.mults[0], Int(v + 1)), Int(D.d - D.mults[0]));
  for (int i = 1; i < D.s(); ++i) {
    out.hi = std::min(out.hi, floor_div(D.mults[i], Int(v)));
    out.hi = std::min(out.hi, Int(D.d - D.mults[i]));
  }
  return out;
}

std::vector<CycleIndex> resolution_cycles(int n) {
  require(n >= 2, errc::invalid_argument, "need n >= 2");
  const int s = n + 3;
  require(s <= kSubsetCap, errc::invalid_argument, "subset enumeration capped at s <= 20");
  const bool even = n % 2 == 0;
  const int v = even ? n / 2 : (n - 1) / 2;
  std::vector<CycleIndex> out;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::vector<int> I = mask_to_indices(mask, s);
    const int sz = (int)I.size();
    const bool pointed = sz == 0 || (!even && sz == 1 && I[0] == 1);
    for (int t = 0;; ++t) {
      CycleIndex c(I, t);
      if (c.dim() > n - 2) break;
      if (c.dim() < 1) continue;
      if (pointed) {
        if (t < 1 || t > v - 1) continue;
      } else {
        if (sz + 2 * t > (even ? v : v + 1)) continue;
      }
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition decompose(const DivisorClass& D, const Int& a) {
  const bool even = D.n % 2 == 0;
  const IntInterval range = even ? alpha_interval(D) : beta_interval(D);
  require(!range.empty() && a >= range.lo && a <= range.hi, errc::invalid_argument,
          "coefficient outside the admissible interval");
  const DivisorClass fixed = even ? sigma_class(D.n) : gamma_class(D.n);

  Decomposition out;
  out.fixed_coefficient = a;
  out.residual_divisor = combine(D, fixed, 1, -a);
  const DivisorClass& Dp = out.residual_divisor;

  require(join_multiplicity(Dp, CycleIndex({}, 1)) == 0, errc::internal,
          "residual divisor still contains the rational normal curve");

  // Exceptional balance on each blown-up cycle plus the point classes:
  // residual = k(D') + a*k(fixed) - k(D), nonnegative by the containment
  // bounds; a negative value means a bound was violated upstream.
  std::vector<CycleIndex> cycles = resolution_cycles(D.n);
  for (int i = 1; i <= D.s(); ++i) cycles.emplace_back(std::vector<int>{i}, 0);
  for (const auto& c : cycles) {
    if (c.secant_level >= 1)
      require(join_multiplicity(Dp, c) == 0, errc::internal,
              "residual divisor has non-linear base locus");
    const Int residual =
        join_multiplicity(Dp, c) + a * k_on_fixed_divisor(c, D.n) - join_multiplicity(D, c);
    require(residual >= 0, errc::internal, "negative exceptional residual in decomposition");
    if (residual != 0) out.residuals[c] = residual;
  }
  return out;
}

}  // namespace fatpoints::secant
