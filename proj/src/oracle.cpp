#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "positivity.hpp"
#include "secant.hpp"

namespace fatpoints::oracle {

u64 Fp::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

long long rank_mod_p(Matrix m, const Fp& f) {
  long long rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    const u64 inv = f.inv(m.at(row, col));
    for (int r = row + 1; r < m.rows; ++r) {
      const u64 factor = m.at(r, col);
      if (factor == 0) continue;
      const u64 scaled = f.mul(factor, inv);
      m.at(r, col) = 0;
      for (int c = col + 1; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(scaled, m.at(row, c)));
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

void normalize_point(std::vector<u64>& pt, const Fp& f) {
  int piv = -1;
  for (int i = (int)pt.size() - 1; i >= 0; --i)
    if (pt[i] != 0) { piv = i; break; }
  require(piv >= 0, errc::internal, "zero vector sampled as a projective point");
  const u64 inv = f.inv(pt[piv]);
  for (auto& c : pt) c = f.mul(c, inv);
}

int pivot_coordinate(const std::vector<u64>& pt) {
  for (int i = (int)pt.size() - 1; i >= 0; --i)
    if (pt[i] != 0) return i;
  return -1;
}

// Exponent vectors of degree-d monomials in n+1 variables, graded-lex
// (lexicographic within the fixed degree, largest first coordinate first).
std::vector<std::vector<int>> monomials(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n + 1, 0);
  // Recursive lex enumeration unrolled with an explicit stack is overkill;
  // n and d stay small, recursion is fine.
  struct Gen {
    int n, d;
    std::vector<std::vector<int>>& out;
    std::vector<int>& cur;
    void go(int pos, int left) {
      if (pos == n) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        go(pos + 1, left - e);
      }
    }
  } gen{n, d, out, cur};
  gen.go(0, d);
  return out;
}

// Derivative multi-indices of total order < m over the variables other than
// the chart coordinate, increasing order first, lex within each order.
std::vector<std::vector<int>> derivative_indices(int n_plus_1, int chart, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n_plus_1, 0);
  struct Gen {
    int n_plus_1, chart;
    std::vector<std::vector<int>>& out;
    std::vector<int>& cur;
    void go(int pos, int left) {
      if (pos == n_plus_1) {
        if (left == 0) out.push_back(cur);
        return;
      }
      if (pos == chart) {
        cur[pos] = 0;
        go(pos + 1, left);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        go(pos + 1, left - e);
      }
      cur[pos] = 0;
    }
  };
  for (int order = 0; order < m; ++order) {
    Gen g{n_plus_1, chart, out, cur};
    g.go(0, order);
  }
  return out;
}

u64 falling_factorial_mod(int a, int b, const Fp& f) {
  u64 r = 1;
  for (int i = 0; i < b; ++i) r = f.mul(r, (u64)(a - i));
  return r;
}

// One block of rows: vanishing of all derivatives of order < m at pt.
void append_point_conditions(Matrix& mat, const std::vector<std::vector<int>>& mons,
                             const std::vector<u64>& pt, int m, const Fp& f) {
  if (m <= 0) return;
  const int n_plus_1 = (int)pt.size();
  const int chart = pivot_coordinate(pt);
  const auto derivs = derivative_indices(n_plus_1, chart, m);
  const int base = mat.rows;
  mat.rows += (int)derivs.size();
  mat.a.resize((std::size_t)mat.rows * mat.cols, 0);
  for (int r = 0; r < (int)derivs.size(); ++r) {
    const auto& beta = derivs[r];
    for (int c = 0; c < mat.cols; ++c) {
      const auto& alpha = mons[c];
      u64 val = 1;
      bool zero = false;
      for (int j = 0; j < n_plus_1 && !zero; ++j) {
        if (beta[j] > alpha[j]) { zero = true; break; }
        if (beta[j] > 0) val = f.mul(val, falling_factorial_mod(alpha[j], beta[j], f));
        const int e = alpha[j] - beta[j];
        if (e > 0) val = f.mul(val, f.pow(pt[j], (u64)e));
      }
      mat.at(base + r, c) = zero ? 0 : val;
    }
  }
}

}  // namespace

bool general_position_certificate(const PointConfiguration& cfg) {
  const Fp f{cfg.prime};
  const int n = cfg.n, s = cfg.s;
  const int k = std::min(s, n + 1);
  // Every k-subset independent; subsets of an independent set are
  // independent, so checking the maximal size suffices.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Matrix m;
    m.rows = k;
    m.cols = n + 1;
    m.a.assign((std::size_t)k * (n + 1), 0);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c <= n; ++c) m.at(r, c) = cfg.points[pick[r]][c];
    if (rank_mod_p(m, f) < k) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == s - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

PointConfiguration sample_config(int n, int s, u64 seed, u64 prime) {
  require(n >= 1 && s >= 1, errc::invalid_argument, "need n >= 1 and s >= 1");
  constexpr int kRetryBudget = 64;
  const Fp f{prime};
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Rng rng(seed ^ (0xa0761d6478bd642fULL * (u64)(attempt + 1)));
    PointConfiguration cfg;
    cfg.n = n;
    cfg.s = s;
    cfg.prime = prime;
    cfg.seed = seed;
    cfg.retries = attempt;
    cfg.points.resize(s);
    for (auto& pt : cfg.points) {
      pt.resize(n + 1);
      do {
        for (auto& c : pt) c = rng.below(prime);
      } while (std::all_of(pt.begin(), pt.end(), [](u64 c) { return c == 0; }));
      normalize_point(pt, f);
    }
    if (general_position_certificate(cfg)) return cfg;
  }
  fail(errc::invalid_argument, "could not sample points in general position (pathological seed)");
}

Matrix conditions_matrix(const PointConfiguration& cfg, int d, const std::vector<int>& mults) {
  require((int)mults.size() == cfg.s, errc::invalid_argument,
          "one multiplicity per configuration point required");
  require(d >= 0 && (u64)d < cfg.prime, errc::invalid_argument, "degree must satisfy 0 <= d < p");
  for (int m : mults) require(m >= 0, errc::invalid_argument, "oracle multiplicities must be >= 0");
  const Fp f{cfg.prime};
  const auto mons = monomials(cfg.n, d);
  Matrix mat;
  mat.rows = 0;
  mat.cols = (int)mons.size();
  for (int i = 0; i < cfg.s; ++i) append_point_conditions(mat, mons, cfg.points[i], mults[i], f);
  return mat;
}

InterpolationResult h0(const PointConfiguration& cfg, int d, const std::vector<int>& mults) {
  const Fp f{cfg.prime};
  Matrix mat = conditions_matrix(cfg, d, mults);
  InterpolationResult res;
  res.ncols = mat.cols;
  res.rank = rank_mod_p(std::move(mat), f);
  res.h0 = res.ncols - res.rank;
  res.seed = cfg.seed;
  return res;
}

RncCurve fit_rnc(const PointConfiguration& cfg) {
  const int n = cfg.n;
  require(cfg.s == n + 3, errc::invalid_argument,
          "the rational normal curve needs exactly n + 3 points");
  const Fp f{cfg.prime};

  // Move the first n+2 points to the standard frame (e_1..e_{n+1}, all-ones):
  // solve P lambda = p_{n+2}, then A = (P diag(lambda))^{-1}.
  const int N = n + 1;
  Matrix sys;
  sys.rows = N;
  sys.cols = N + 1;
  sys.a.assign((std::size_t)N * (N + 1), 0);
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) sys.at(r, c) = cfg.points[c][r];
    sys.at(r, N) = cfg.points[N][r];
  }
  // Solve by elimination; the frame matrix is invertible by general position.
  std::vector<u64> lambda(N, 0);
  {
    Matrix m = sys;
    for (int col = 0; col < N; ++col) {
      int piv = -1;
      for (int r = col; r < N; ++r)
        if (m.at(r, col) != 0) { piv = r; break; }
      require(piv >= 0, errc::internal, "frame matrix singular despite certificate");
      if (piv != col)
        for (int c = 0; c <= N; ++c) std::swap(m.at(piv, c), m.at(col, c));
      const u64 inv = f.inv(m.at(col, col));
      for (int c = col; c <= N; ++c) m.at(col, c) = f.mul(m.at(col, c), inv);
      for (int r = 0; r < N; ++r) {
        if (r == col || m.at(r, col) == 0) continue;
        const u64 factor = m.at(r, col);
        for (int c = col; c <= N; ++c)
          m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(col, c)));
      }
    }
    for (int r = 0; r < N; ++r) lambda[r] = m.at(r, N);
  }
  for (u64 l : lambda)
    require(l != 0, errc::internal, "degenerate frame: unit point on a coordinate hyperplane");

  // M = P diag(lambda) maps the standard frame to the points; columns of M.
  std::vector<std::vector<u64>> M(N, std::vector<u64>(N));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) M[r][c] = f.mul(cfg.points[c][r], lambda[c]);

  // Frame coordinates of the last point: solve M q = p_{n+3}.
  std::vector<u64> q(N, 0);
  {
    Matrix m;
    m.rows = N;
    m.cols = N + 1;
    m.a.assign((std::size_t)N * (N + 1), 0);
    for (int r = 0; r < N; ++r) {
      for (int c = 0; c < N; ++c) m.at(r, c) = M[r][c];
      m.at(r, N) = cfg.points[N + 1][r];
    }
    for (int col = 0; col < N; ++col) {
      int piv = -1;
      for (int r = col; r < N; ++r)
        if (m.at(r, col) != 0) { piv = r; break; }
      require(piv >= 0, errc::internal, "frame matrix singular despite certificate");
      if (piv != col)
        for (int c = 0; c <= N; ++c) std::swap(m.at(piv, c), m.at(col, c));
      const u64 inv = f.inv(m.at(col, col));
      for (int c = col; c <= N; ++c) m.at(col, c) = f.mul(m.at(col, c), inv);
      for (int r = 0; r < N; ++r) {
        if (r == col || m.at(r, col) == 0) continue;
        const u64 factor = m.at(r, col);
        for (int c = col; c <= N; ++c)
          m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(col, c)));
      }
    }
    for (int r = 0; r < N; ++r) q[r] = m.at(r, N);
  }
  // In frame coordinates the curve is u -> (prod_{j != i} (u - a_i))_i with
  // a_i = -1/q_i; it hits e_i at a_i, the unit point at infinity, q at 0.
  // General position makes the q_i nonzero and pairwise distinct.
  std::vector<u64> a(N);
  for (int i = 0; i < N; ++i) {
    require(q[i] != 0, errc::internal, "curve fit: point on a coordinate hyperplane");
    a[i] = f.sub(0, f.inv(q[i]));
  }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      require(a[i] != a[j], errc::internal, "curve fit: coincident parameters");

  RncCurve curve;
  curve.base_params = a;
  curve.basis = M;
  return curve;
}

std::vector<u64> RncCurve::eval(u64 u, const Fp& f) const {
  const int N = (int)base_params.size();
  std::vector<u64> frame(N);
  for (int i = 0; i < N; ++i) {
    u64 v = 1;
    for (int j = 0; j < N; ++j)
      if (j != i) v = f.mul(v, f.sub(u, base_params[j]));
    frame[i] = v;
  }
  std::vector<u64> out(N, 0);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) out[r] = f.add(out[r], f.mul(basis[r][c], frame[c]));
  return out;
}

std::vector<u64> sample_join_point(const PointConfiguration& cfg, const CycleIndex& cycle,
                                   Rng& rng) {
  const Fp f{cfg.prime};
  const int N = cfg.n + 1;
  std::vector<std::vector<u64>> spanning;
  for (int i : cycle.indices) {
    require(i >= 1 && i <= cfg.s, errc::invalid_argument, "cycle index out of range");
    spanning.push_back(cfg.points[i - 1]);
  }
  if (cycle.secant_level > 0) {
    RncCurve curve = fit_rnc(cfg);
    std::vector<u64> used = curve.base_params;
    for (int t = 0; t < cycle.secant_level; ++t) {
      u64 u;
      bool fresh;
      do {
        u = rng.below(cfg.prime);
        fresh = u != 0 && std::find(used.begin(), used.end(), u) == used.end();
      } while (!fresh);
      used.push_back(u);
      spanning.push_back(curve.eval(u, f));
    }
  }
  require(!spanning.empty(), errc::invalid_argument, "cannot sample a point of the empty cycle");
  std::vector<u64> pt(N, 0);
  for (const auto& v : spanning) {
    const u64 c = 1 + rng.below(cfg.prime - 1);  // nonzero: stay off smaller joins
    for (int j = 0; j < N; ++j) pt[j] = f.add(pt[j], f.mul(c, v[j]));
  }
  normalize_point(pt, f);
  return pt;
}

namespace {

long long h0_with_extra_point(const PointConfiguration& cfg, int d,
                              const std::vector<int>& mults, const std::vector<u64>& pt,
                              int order) {
  const Fp f{cfg.prime};
  Matrix mat = conditions_matrix(cfg, d, mults);
  const auto mons = monomials(cfg.n, d);
  append_point_conditions(mat, mons, pt, order, f);
  const long long cols = mat.cols;
  return cols - rank_mod_p(std::move(mat), f);
}

}  // namespace

long long base_point_probe(const PointConfiguration& cfg, int d, const std::vector<int>& mults,
                           const CycleIndex& cycle, u64 probe_seed) {
  Rng rng(probe_seed ^ 0x6a09e667f3bcc909ULL);
  const std::vector<u64> pt = sample_join_point(cfg, cycle, rng);
  const long long base = h0(cfg, d, mults).h0;
  long long measured = 0;
  for (int order = 1; order <= d + 1; ++order) {
    if (h0_with_extra_point(cfg, d, mults, pt, order) != base) break;
    measured = order;
  }
  return measured;
}

long long generic_point_drop(const PointConfiguration& cfg, int d, const std::vector<int>& mults,
                             u64 probe_seed) {
  Rng rng(probe_seed ^ 0xbb67ae8584caa73bULL);
  const Fp f{cfg.prime};
  std::vector<u64> pt(cfg.n + 1);
  do {
    for (auto& c : pt) c = rng.below(cfg.prime);
  } while (std::all_of(pt.begin(), pt.end(), [](u64 c) { return c == 0; }));
  normalize_point(pt, f);
  const long long base = h0(cfg, d, mults).h0;
  return base - h0_with_extra_point(cfg, d, mults, pt, 1);
}

VerifyReport verify_dimension(const DivisorClass& D, int trials, DimFormula mode, u64 seed,
                              std::vector<u64> primes) {
  require(trials >= 1, errc::invalid_argument, "need at least one trial");
  const int d = as_int(D.d, "degree");
  require(binomial(Int(D.n) + d, D.n) <= 10000, errc::invalid_argument,
          "desk-scale gate: binom(n+d, n) must be <= 10^4");
  const std::vector<int> mults = as_int_vec(D.mults, "multiplicity");
  for (int m : mults)
    require(m >= 0, errc::invalid_argument, "oracle requires nonnegative multiplicities");

  VerifyReport rep;
  rep.primes = primes;
  Int formula = mode == DimFormula::ldim ? secant::ldim(D) : secant::sldim(D);
  rep.expected = as_int(max0(formula), "expected dimension");

  std::map<long long, int> votes;
  for (u64 p : primes) {
    for (int t = 0; t < trials; ++t) {
      const u64 trial_seed = seed + (u64)t;
      PointConfiguration cfg = sample_config(D.n, D.s(), trial_seed, p);
      InterpolationResult r = h0(cfg, d, mults);
      rep.seeds.push_back(trial_seed);
      rep.h0s.push_back(r.h0);
      ++votes[r.h0];
    }
  }
  long long best = 0;
  int best_count = -1;
  for (auto& [value, count] : votes)
    if (count > best_count) { best = value; best_count = count; }
  rep.modal_h0 = best;
  rep.agree = rep.modal_h0 == rep.expected;
  if (!rep.agree && mode == DimFormula::ldim && vanishing_bound_check(D)) {
    // The linear formula is proved in this range; a disagreement on every
    // trial cannot be unlucky sampling.
    const bool all_disagree =
        std::all_of(rep.h0s.begin(), rep.h0s.end(),
                    [&](long long v) { return v != rep.expected; });
    require(!all_disagree, errc::internal,
            "oracle disagrees with the proved linear dimension formula: bug");
  }
  return rep;
}

int as_int(const Int& v, const char* what) {
  require(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(),
          errc::invalid_argument, std::string(what) + " too large for the oracle");
  return (int)v.convert_to<long long>();
}

std::vector<int> as_int_vec(const std::vector<Int>& v, const char* what) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(as_int(x, what));
  return out;
}

}  // namespace fatpoints::oracle
