#include <doctest.h>

#include "logpairs.hpp"
#include "oracle.hpp"

using namespace fatpoints;
namespace lp = fatpoints::logpairs;

namespace {

DivisorClass make(int n, long long d, std::vector<long long> m) {
  return DivisorClass(n, Int(d), std::vector<Int>(m.begin(), m.end()));
}

}  // namespace

TEST_CASE("canonical classes") {
  auto kx = lp::canonical_class(lp::Space::X, 3, 5, {});
  CHECK(kx.h == -4);
  CHECK(kx.point_coeff == 2);

  auto ky = lp::canonical_class(lp::Space::Y, 3, 5, {CycleIndex({1, 2}, 0)});
  REQUIRE(ky.exceptional.size() == 1);
  CHECK(ky.exceptional[0].second == 1);  // n - r - 1 with r = 1

  auto kys = lp::canonical_class(lp::Space::Ysigma, 4, 7, {CycleIndex({}, 1)});
  REQUIRE(kys.exceptional.size() == 1);
  CHECK(kys.exceptional[0].second == 2);

  CHECK_THROWS_AS((void)lp::canonical_class(lp::Space::Y, 3, 5, {CycleIndex({}, 1)}), error);
}

TEST_CASE("adjoint class in exact rationals") {
  lp::LogPair zero(make(3, 2, {1, 1}), Rat(0));
  auto k = lp::adjoint_class(zero);
  CHECK(k.h == -4);
  CHECK(k.points[0] == 2);

  lp::LogPair p(make(5, 26, {16, 16, 16, 16, 16, 16, 16}), Rat(1, 4));
  auto adj = lp::adjoint_class(p);
  CHECK(adj.h == Rat(1, 2));
  for (const auto& c : adj.points) CHECK(c == 0);
}

TEST_CASE("adjoint class is K_X plus epsilon D, exactly and linearly") {
  auto D = make(4, 7, {3, 2, 5, 1, 1});
  for (auto eps : {Rat(0), Rat(1, 3), Rat(2, 7), Rat(1)}) {
    lp::LogPair p(D, eps);
    auto adj = lp::adjoint_class(p);
    CHECK(adj.h - Rat(-(D.n + 1)) == eps * Rat(D.d));
    for (int i = 0; i < D.s(); ++i)
      CHECK(adj.points[i] - Rat(D.n - 1) == -eps * Rat(D.mults[i]));
  }
  // linearity in epsilon
  lp::LogPair p1(D, Rat(1, 3));
  lp::LogPair p2(D, Rat(2, 3));
  auto a1 = lp::adjoint_class(p1);
  auto a2 = lp::adjoint_class(p2);
  auto a0 = lp::adjoint_class(lp::LogPair(D, Rat(0)));
  CHECK(a2.h - a0.h == 2 * (a1.h - a0.h));
  for (int i = 0; i < D.s(); ++i)
    CHECK(a2.points[i] - a0.points[i] == 2 * (a1.points[i] - a0.points[i]));
}

TEST_CASE("abundance condition") {
  lp::LogPair good(make(5, 26, {16, 16, 16, 16, 16, 16, 16}), Rat(1, 4));
  CHECK(lp::abundance_condition(good).holds);

  lp::LogPair zero(make(5, 26, {16, 16}), Rat(0));
  auto c = lp::abundance_condition(zero);
  CHECK_FALSE(c.holds);
  CHECK(c.point_witness == 1);

  lp::LogPair heavy(make(5, 10, {40, 40, 40}), Rat(1, 4));
  auto c2 = lp::abundance_condition(heavy);
  CHECK_FALSE(c2.holds);
  REQUIRE(c2.pair_witness.has_value());
  CHECK(c2.pair_witness->first == 1);
  CHECK(c2.pair_witness->second == 2);
}

TEST_CASE("derived bounds") {
  lp::LogPair p(make(5, 26, {16, 16, 16, 16, 16, 16, 16}), Rat(1, 4));
  auto rep = lp::derived_bounds(p);
  CHECK(rep.max_point_slack == Rat(-5, 2));
  CHECK(rep.max_point_slack <= -2);
  CHECK_THROWS_AS((void)lp::derived_bounds(lp::LogPair(make(5, 1, {1}), Rat(0))), error);
}

TEST_CASE("discrepancies") {
  // empty base locus: only the moving-part coefficient matters
  lp::LogPair simple(make(3, 3, {1, 1, 1, 1}), Rat(1, 5));
  auto rep = lp::discrepancies(simple, false);
  CHECK(rep.entries.empty());
  CHECK(rep.discrep == Rat(4, 5));
  CHECK(rep.lc);

  // seven sixteens: the lines carry k = 6 and a = 3/2
  lp::LogPair p(make(5, 26, {16, 16, 16, 16, 16, 16, 16}), Rat(1, 4));
  auto rep2 = lp::discrepancies(p, false);
  bool found_line = false;
  for (const auto& e : rep2.entries)
    if (e.cycle.size() == 2 && e.cycle.secant_level == 0) {
      CHECK(e.multiplicity == 6);
      CHECK(e.a == Rat(3, 2));
      found_line = true;
    }
  CHECK(found_line);
  CHECK(rep2.lc);

  // force a deep discrepancy: eps*k beyond n-r makes the pair non-lc
  lp::LogPair bad(make(3, 2, {3, 3}), Rat(1));
  auto rep3 = lp::discrepancies(bad, false);
  CHECK_FALSE(rep3.lc);
  CHECK(rep3.discrep == Rat(-3));

  CHECK_THROWS_AS((void)lp::discrepancies(lp::LogPair(make(3, 2, {1, 1}), Rat(3, 2)), false),
                  error);
}

TEST_CASE("is_lc and the abundance guarantee") {
  lp::LogPair p(make(5, 26, {16, 16, 16, 16, 16, 16, 16}), Rat(1, 4));
  CHECK(lp::is_lc(p, false));

  lp::LogPair q(make(5, 26, {16, 16, 16, 16, 16, 16, 16, 16}), Rat(1, 4));
  CHECK(lp::is_lc(q, true));
  CHECK(lp::is_lc(q, false));

  lp::LogPair bad(make(3, 2, {3, 3}), Rat(1));
  CHECK_FALSE(lp::is_lc(bad, false));
}

TEST_CASE("sampled abundance pairs are always lc") {
  oracle::Rng rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + (int)rng.below(5);
    const int s = 2 + (int)rng.below(n + 2);  // up to n+3
    const long long q = 2 * n * n + (long long)rng.below(50);
    std::vector<long long> m;
    long long top1 = 0, top2 = 0;
    for (int i = 0; i < s; ++i) {
      long long v = (n - 1) * q + (long long)rng.below(2 * q);
      m.push_back(v);
      if (v >= top1) { top2 = top1; top1 = v; }
      else if (v > top2) top2 = v;
    }
    const long long d = top1 + top2 - (n - 3) * q + (long long)rng.below(q);
    lp::LogPair p(make(n, d, m), Rat(1, q));
    REQUIRE(lp::abundance_condition(p).holds);
    (void)lp::derived_bounds(p);  // throws on violation
    CHECK(lp::is_lc(p, s == n + 3));
    CHECK(lp::is_lc(p, false));
    auto rep = lp::discrepancies(p, s == n + 3);
    // no divisorial fixed component can appear under the movability bound
    CHECK(rep.divisorial.empty());
    // the proofs' arithmetic: eps * k <= n - r on every blown-up cycle
    // (for joins n - r equals n - |I| - 2t + 1)
    for (const auto& e : rep.entries)
      CHECK(p.epsilon * Rat(e.multiplicity) <= Rat(n - e.cycle.dim()));
  }
}
