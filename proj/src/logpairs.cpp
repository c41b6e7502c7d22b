#include "logpairs.hpp"

#include <algorithm>

namespace fatpoints::logpairs {

LogPair::LogPair(DivisorClass D, Rat eps) : divisor(std::move(D)), epsilon(std::move(eps)) {
  require(epsilon >= 0, errc::invalid_argument, "epsilon must be >= 0");
}

CanonicalClass canonical_class(Space space, int n, int s, const std::vector<CycleIndex>& centers) {
  require(n >= 1 && s >= 1, errc::invalid_argument, "need n >= 1 and s >= 1");
  CanonicalClass out;
  out.n = n;
  out.h = -(n + 1);
  out.point_coeff = n - 1;
  if (space == Space::X) {
    require(centers.empty(), errc::invalid_argument, "X carries no higher blow-up centers");
    return out;
  }
  for (const auto& c : centers) {
    const int r = c.dim();
    require(r >= 1 && r <= n - 2, errc::invalid_argument,
            "blow-up centers must have dimension 1..n-2");
    if (space == Space::Y)
      require(c.secant_level == 0, errc::invalid_argument, "Y is blown up along linear cycles only");
    out.exceptional.emplace_back(c, Int(n - r - 1));
  }
  std::sort(out.exceptional.begin(), out.exceptional.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

AdjointClass adjoint_class(const LogPair& p) {
  const DivisorClass& D = p.divisor;
  AdjointClass out;
  out.h = p.epsilon * Rat(D.d) - (D.n + 1);
  out.points.reserve(D.s());
  for (const Int& m : D.mults) out.points.push_back(Rat(D.n - 1) - p.epsilon * Rat(m));
  return out;
}

AbundanceCheck abundance_condition(const LogPair& p) {
  const DivisorClass& D = p.divisor;
  const Rat& eps = p.epsilon;
  AbundanceCheck out;
  for (int i = 0; i < D.s(); ++i) {
    if (eps * Rat(D.mults[i]) < D.n - 1) {
      out.point_witness = i + 1;
      return out;
    }
  }
  for (int i = 0; i < D.s(); ++i)
    for (int j = i + 1; j < D.s(); ++j) {
      if (eps * Rat(D.mults[i] + D.mults[j] - D.d) > D.n - 3) {
        out.pair_witness = {i + 1, j + 1};
        return out;
      }
    }
  out.holds = true;
  return out;
}

DerivedBoundsReport derived_bounds(const LogPair& p) {
  require(abundance_condition(p).holds, errc::invalid_argument,
          "derived bounds presuppose the abundance inequalities");
  const DivisorClass& D = p.divisor;
  const int n = D.n;
  const Rat& eps = p.epsilon;
  DerivedBoundsReport rep;

  rep.max_point_slack = eps * Rat(D.mults[0] - D.d);
  for (const Int& m : D.mults)
    rep.max_point_slack = std::max(rep.max_point_slack, eps * Rat(m - D.d));
  require(rep.max_point_slack <= -2, errc::internal,
          "derived bound eps*(m_i - d) <= -2 failed: implementation bug");

  const bool secants = D.s() == n + 3;
  BaseLocusDecomposition bl = base_locus(D, secants);
  for (const auto& e : bl.entries) {
    const int r = e.cycle.dim();
    const Rat cap = std::max(0, n - 1 - 2 * r);
    require(eps * Rat(e.multiplicity) <= cap, errc::internal,
            "derived bound eps*k <= max{0, n-1-2r} failed: implementation bug");
    ++rep.cycles_checked;
  }
  return rep;
}

DiscrepancyReport discrepancies(const LogPair& p, bool include_secants) {
  const DivisorClass& D = p.divisor;
  const int n = D.n;
  require(p.epsilon <= 1, errc::invalid_argument,
          "discrepancy formula needs boundary coefficients <= 1: epsilon must be <= 1");
  if (include_secants)
    require(D.s() == n + 3, errc::invalid_argument, "secant cycles exist only for s = n + 3");

  DiscrepancyReport rep;
  rep.discrep = 1;
  BaseLocusDecomposition bl = base_locus(D, include_secants);
  for (const auto& e : bl.entries) {
    const int r = e.cycle.dim();
    if (e.divisorial) {
      // A fixed divisorial component of multiplicity k contributes the
      // boundary coefficient eps*k, not an exceptional discrepancy.
      const Rat coeff = p.epsilon * Rat(e.multiplicity);
      rep.divisorial.push_back({e.cycle, e.multiplicity, Rat(1) - coeff});
      if (coeff > 1) rep.boundary_coefficients_ok = false;
      rep.discrep = std::min(rep.discrep, Rat(1) - coeff);
      continue;
    }
    DiscrepancyEntry entry;
    entry.cycle = e.cycle;
    entry.multiplicity = e.multiplicity;
    entry.a = Rat(n - r - 1) - p.epsilon * Rat(e.multiplicity);
    rep.discrep = std::min(rep.discrep, entry.a);
    rep.entries.push_back(std::move(entry));
  }
  // The moving part of the boundary carries coefficient eps itself.
  rep.discrep = std::min(rep.discrep, Rat(1) - p.epsilon);
  rep.lc = rep.boundary_coefficients_ok && rep.discrep >= -1;
  return rep;
}

bool is_lc(const LogPair& p, bool include_secants) {
  DiscrepancyReport rep = discrepancies(p, include_secants);
  if (abundance_condition(p).holds)
    require(rep.lc, errc::internal,
            "pair satisfying the abundance inequalities computed as non-lc: bug");
  return rep.lc;
}

}  // namespace fatpoints::logpairs
