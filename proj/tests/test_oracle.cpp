#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "positivity.hpp"
#include "secant.hpp"

using namespace fatpoints;
using namespace fatpoints::oracle;

namespace {

// Independent 3x3 determinant mod p, no elimination machinery shared with
// the library path.
u64 det3(const std::vector<std::vector<u64>>& pts, int a, int b, int c, const Fp& f) {
  auto m = [&](int r, int i) { return pts[r][i]; };
  u64 pos = f.mul(m(a, 0), f.mul(m(b, 1), m(c, 2)));
  pos = f.add(pos, f.mul(m(a, 1), f.mul(m(b, 2), m(c, 0))));
  pos = f.add(pos, f.mul(m(a, 2), f.mul(m(b, 0), m(c, 1))));
  u64 neg = f.mul(m(a, 2), f.mul(m(b, 1), m(c, 0)));
  neg = f.add(neg, f.mul(m(a, 0), f.mul(m(b, 2), m(c, 1))));
  neg = f.add(neg, f.mul(m(a, 1), f.mul(m(b, 0), m(c, 2))));
  return f.sub(pos, neg);
}

DivisorClass make(int n, long long d, std::vector<long long> m) {
  return DivisorClass(n, Int(d), std::vector<Int>(m.begin(), m.end()));
}

}  // namespace

TEST_CASE("configuration sampling and the generality certificate") {
  auto cfg = sample_config(2, 5, 1);
  CHECK(cfg.points.size() == 5);
  // no three collinear, re-verified by plain determinants
  const Fp f{cfg.prime};
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) CHECK(det3(cfg.points, a, b, c, f) != 0);

  auto tiny = sample_config(1, 2, 42);
  CHECK(tiny.points[0] != tiny.points[1]);

  // determinism: byte-identical configurations from the same seed
  auto again = sample_config(3, 6, 12345);
  auto again2 = sample_config(3, 6, 12345);
  CHECK(again.points == again2.points);
  CHECK(again.retries == again2.retries);
}

TEST_CASE("conditions matrix shape") {
  auto cfg = sample_config(3, 1, 2);
  auto m1 = conditions_matrix(cfg, 1, {1});
  CHECK(m1.rows == 1);
  CHECK(m1.cols == 4);
  // the simple-point row is the evaluation row: the point's monomials
  bool all_match = true;
  // columns are x0^1..x3^1 in graded-lex: exponents (1,0,0,0)...(0,0,0,1)
  for (int c = 0; c < 4; ++c)
    if (m1.at(0, c) != cfg.points[0][c]) all_match = false;
  CHECK(all_match);

  auto cfg2 = sample_config(2, 2, 3);
  auto m2 = conditions_matrix(cfg2, 2, {2, 2});
  CHECK(m2.rows == 6);  // three rows per double point
  CHECK(m2.cols == 6);
  CHECK(rank_mod_p(m2, Fp{cfg2.prime}) == 5);  // the double line eats one section
}

TEST_CASE("worked h0 values") {
  auto cfg = sample_config(2, 2, 17);
  CHECK(h0(cfg, 2, {2, 2}).h0 == 1);
  CHECK(h0(cfg, 3, {2, 2}).h0 == 4);
  auto cfg5 = sample_config(2, 5, 17);
  CHECK(h0(cfg5, 2, {1, 1, 1, 1, 1}).h0 == 1);
}

TEST_CASE("h0 basics and monotonicity") {
  auto cfg = sample_config(3, 4, 5);
  CHECK(h0(cfg, 3, {0, 0, 0, 0}).h0 == binomial(Int(6), 3));
  long long prev = h0(cfg, 3, {0, 0, 0, 0}).h0;
  for (int m = 1; m <= 3; ++m) {
    long long cur = h0(cfg, 3, {m, 1, 1, 0}).h0;
    CHECK(cur <= prev);
    prev = cur;
  }
  // adding a point never raises h0 (same seed extends the configuration
  // only statistically, so compare against the formulaic ceiling instead:
  // a fresh config with one more simple point)
  auto five = h0(sample_config(2, 5, 8), 3, {1, 1, 1, 1, 1});
  auto four = h0(sample_config(2, 4, 8), 3, {1, 1, 1, 1});
  CHECK(five.h0 <= four.h0);

  // determinism of the full result
  auto a = h0(sample_config(2, 4, 99), 3, {2, 1, 1, 1});
  auto b = h0(sample_config(2, 4, 99), 3, {2, 1, 1, 1});
  CHECK(a.h0 == b.h0);
  CHECK(a.rank == b.rank);
  CHECK(a.ncols == b.ncols);
  CHECK(a.seed == b.seed);
}

TEST_CASE("two primes agree") {
  for (auto spec : {std::tuple<int, int, std::vector<int>>{2, 4, {3, 2, 1, 1, 1}},
                    {3, 3, {2, 2, 1, 1, 1, 1}}}) {
    const auto [n, d, m] = spec;
    auto ra = h0(sample_config(n, (int)m.size(), 7, kPrimeA), d, m);
    auto rb = h0(sample_config(n, (int)m.size(), 7, kPrimeB), d, m);
    CHECK(ra.h0 == rb.h0);
  }
}

TEST_CASE("h0 equals the linear formula inside the vanishing bounds") {
  // a sample of the proven regime; the exhaustive grid lives in acceptance
  Rng rng(2026);
  int tested = 0;
  while (tested < 25) {
    const int n = 2 + (int)rng.below(2);
    const int s = 1 + (int)rng.below(n + 2);
    const int d = 1 + (int)rng.below(5);
    std::vector<int> m;
    for (int i = 0; i < s; ++i) m.push_back(1 + (int)rng.below(3));
    auto D = make(n, d, std::vector<long long>(m.begin(), m.end()));
    if (!vanishing_bound_check(D)) continue;
    ++tested;
    auto cfg = sample_config(n, s, rng.next() | 1);
    const Int expected = max0(secant::ldim(D));
    CHECK(Int(h0(cfg, d, m).h0) == expected);
  }
}

TEST_CASE("probe measures containment multiplicities") {
  auto cfg = sample_config(2, 2, 23);
  CHECK(base_point_probe(cfg, 2, {2, 2}, CycleIndex({1, 2}, 0), 1) == 2);

  // a cycle with zero multiplicity: imposing its generic point costs a
  // section immediately
  auto cfg4 = sample_config(3, 4, 29);
  CHECK(base_point_probe(cfg4, 2, {1, 1, 1, 1}, CycleIndex({1, 2}, 0), 2) == 0);

  // the double conic: quartics with five double points
  auto cfg5 = sample_config(2, 5, 31);
  CHECK(base_point_probe(cfg5, 4, {2, 2, 2, 2, 2}, CycleIndex({}, 1), 3) == 2);
  CHECK(h0(cfg5, 4, {2, 2, 2, 2, 2}).h0 == 1);

  // an empty system saturates the probe: every order passes vacuously
  CHECK(h0(cfg5, 2, {2, 1, 1, 1, 1}).h0 == 0);
  CHECK(base_point_probe(cfg5, 2, {2, 1, 1, 1, 1}, CycleIndex({}, 1), 3) == 3);
}

TEST_CASE("the fitted curve passes through all n+3 points") {
  for (int n : {2, 3, 4}) {
    auto cfg = sample_config(n, n + 3, 7 + n);
    auto curve = fit_rnc(cfg);
    const Fp f{cfg.prime};
    // base parameters hit the first n+1 points projectively
    for (int i = 0; i <= n; ++i) {
      auto pt = curve.eval(curve.base_params[i], f);
      // proportionality: cross-ratios of coordinates vanish
      int pivot = -1;
      for (int j = 0; j <= n; ++j)
        if (cfg.points[i][j] != 0) pivot = j;
      const u64 scale = f.mul(pt[pivot], f.inv(cfg.points[i][pivot]));
      for (int j = 0; j <= n; ++j) CHECK(pt[j] == f.mul(scale, cfg.points[i][j]));
    }
    // the last point sits at parameter 0
    auto p0 = curve.eval(0, f);
    int pivot = -1;
    for (int j = 0; j <= n; ++j)
      if (cfg.points[n + 2][j] != 0) pivot = j;
    const u64 scale = f.mul(p0[pivot], f.inv(cfg.points[n + 2][pivot]));
    for (int j = 0; j <= n; ++j) CHECK(p0[j] == f.mul(scale, cfg.points[n + 2][j]));
    // degree-n curve: n+1 generic curve points are independent, n+2 never
    // (they span the whole space, not more)
    Rng rng(5);
    Matrix span;
    span.rows = n + 2;
    span.cols = n + 1;
    span.a.assign((std::size_t)(n + 2) * (n + 1), 0);
    for (int r = 0; r < n + 2; ++r) {
      auto pt = curve.eval(1000 + rng.below(100000), f);
      for (int c = 0; c <= n; ++c) span.at(r, c) = pt[c];
    }
    CHECK(rank_mod_p(span, f) == n + 1);
  }
}

TEST_CASE("generic point drop detects base-point-free transforms") {
  auto cfg = sample_config(3, 4, 77);
  CHECK(generic_point_drop(cfg, 2, {1, 1, 1, 1}, 9) == 1);
}

TEST_CASE("verify_dimension") {
  auto rep = verify_dimension(make(2, 2, {2, 2}), 3, DimFormula::ldim, 1);
  CHECK(rep.agree);
  CHECK(rep.modal_h0 == 1);

  auto rep2 = verify_dimension(make(2, 2, {2, 1, 1, 1, 1}), 3, DimFormula::sldim, 1);
  CHECK(rep2.agree);
  CHECK(rep2.modal_h0 == 0);

  auto rep3 = verify_dimension(make(3, 2, {1, 1, 1, 1, 1, 1}), 2, DimFormula::sldim, 1);
  CHECK(rep3.agree);
  CHECK(rep3.modal_h0 == 4);

  CHECK_THROWS_AS((void)verify_dimension(make(8, 40, {1}), 1, DimFormula::ldim, 1), error);
}
