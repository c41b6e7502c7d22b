#pragma once

// Brute-force ground truth for the dimension formulas: h^0 of a linear
// system with fat-point conditions, computed as an exact matrix rank over a
// large prime field. Also realizes the rational normal curve through n+3
// points so that containment multiplicities of joins can be measured by
// imposing infinitesimal conditions at sampled points.

#include <cstdint>
#include <vector>

#include "divisor.hpp"

namespace fatpoints::oracle {

using u64 = std::uint64_t;

inline constexpr u64 kPrimeA = 2147483647ULL;  // 2^31 - 1
inline constexpr u64 kPrimeB = 2147483629ULL;

// Deterministic 64-bit stream; the standard splitmix64 step. Every random
// choice in this module is derived from a caller-supplied seed through it.
struct Rng {
  u64 state;
  explicit Rng(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u64 below(u64 bound) { return next() % bound; }  // bound << 2^64: bias negligible
};

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 c = a + b; return c >= p ? c - p : c; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (unsigned __int128)a * b % p; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

struct PointConfiguration {
  int n = 0;
  int s = 0;
  u64 prime = kPrimeA;
  u64 seed = 0;
  int retries = 0;  // resamples needed before the certificate passed
  std::vector<std::vector<u64>> points;  // s rows of n+1 coordinates, last nonzero = 1
};

struct InterpolationResult {
  long long h0 = 0;
  long long ncols = 0;
  long long rank = 0;
  u64 seed = 0;
};

// Row-major dense matrix over F_p.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<u64> a;
  u64& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
  u64 at(int r, int c) const { return a[(std::size_t)r * cols + c]; }
};

long long rank_mod_p(Matrix m, const Fp& f);

// Points in linearly general position: every subset of at most n+1 of the
// coordinate vectors is independent. Deterministic in (n, s, seed, prime);
// resamples (bounded) until the certificate passes.
PointConfiguration sample_config(int n, int s, u64 seed, u64 prime = kPrimeA);

bool general_position_certificate(const PointConfiguration& cfg);

// Fat-point interpolation matrix: one row per derivative-vanishing condition
// of order < m_i at p_i (taken in the affine chart where the point's pivot
// coordinate is 1), one column per degree-d monomial in graded-lex order.
Matrix conditions_matrix(const PointConfiguration& cfg, int d, const std::vector<int>& mults);

InterpolationResult h0(const PointConfiguration& cfg, int d, const std::vector<int>& mults);

// The rational normal curve of degree n through the configuration's n+3
// points, with the parameter values realizing each base point.
struct RncCurve {
  std::vector<std::vector<u64>> basis;  // n+1 columns: curve = basis * veronese(u)
  std::vector<u64> base_params;         // n+1 finite parameters; p_{n+2} at infinity,
                                        // p_{n+3} at 0
  std::vector<u64> eval(u64 u, const Fp& f) const;
};

RncCurve fit_rnc(const PointConfiguration& cfg);

// A point of J(L_I, sigma_t) sampled away from every smaller join: random
// nonzero combination of the vertex points and of t fresh curve points.
std::vector<u64> sample_join_point(const PointConfiguration& cfg, const CycleIndex& cycle,
                                   Rng& rng);

// Largest w such that imposing multiplicity w at a generic point of the
// cycle leaves h^0 unchanged; equals the containment multiplicity of the
// cycle in the base locus of the general member.
long long base_point_probe(const PointConfiguration& cfg, int d, const std::vector<int>& mults,
                           const CycleIndex& cycle, u64 probe_seed);

// Drop in h^0 when one simple base point is imposed at a random point away
// from all the blown-up cycles (1 = no base point there, 0 = base point).
long long generic_point_drop(const PointConfiguration& cfg, int d, const std::vector<int>& mults,
                             u64 probe_seed);

enum class DimFormula { ldim, sldim };

struct VerifyReport {
  long long expected = 0;   // max{0, formula}
  long long modal_h0 = 0;
  bool agree = false;
  std::vector<u64> primes;
  std::vector<u64> seeds;
  std::vector<long long> h0s;  // one per (prime, trial), primes outer
};

// Runs `trials` independent configurations per prime and compares the modal
// h^0 with the formula. The desk-scale gate binom(n+d, n) <= 10^4 applies.
VerifyReport verify_dimension(const DivisorClass& D, int trials, DimFormula mode, u64 seed,
                              std::vector<u64> primes = {kPrimeA, kPrimeB});

// Small-int view of a DivisorClass for the oracle (which works in machine
// integers); rejects coefficients that do not fit.
int as_int(const Int& v, const char* what);
std::vector<int> as_int_vec(const std::vector<Int>& v, const char* what);

}  // namespace fatpoints::oracle
