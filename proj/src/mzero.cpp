#include "mzero.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace fatpoints {

MZeroDivisor::MZeroDivisor(int n_, Int d_) : n(n_), d(std::move(d_)) {
  require(n >= 2, errc::invalid_argument, "the model needs dimension n >= 2");
}

Int MZeroDivisor::coeff(const std::vector<int>& I) const {
  auto it = coeffs.find(I);
  return it == coeffs.end() ? Int(0) : it->second;
}

void MZeroDivisor::set_coeff(std::vector<int> I, Int value) {
  I = sorted_index_set(std::move(I), model_points());
  require((int)I.size() <= n - 1, errc::invalid_argument,
          "model coefficients are indexed by subsets of size <= n-1");
  if (value == 0)
    coeffs.erase(I);
  else
    coeffs[std::move(I)] = std::move(value);
}

FCurve::FCurve(std::array<std::vector<int>, 4> blocks_, int n_plus_3) : blocks(std::move(blocks_)) {
  std::vector<char> seen(n_plus_3 + 1, 0);
  int total = 0;
  for (auto& b : blocks) {
    require(!b.empty(), errc::invalid_argument, "F-curve blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      require(i >= 1 && i <= n_plus_3, errc::invalid_argument, "F-curve index out of range");
      require(!seen[i], errc::invalid_argument, "F-curve blocks must be disjoint");
      seen[i] = 1;
      ++total;
    }
  }
  require(total == n_plus_3, errc::invalid_argument, "F-curve blocks must cover all marked points");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

MZeroDivisor boundary_divisor(std::vector<int> I, int n) {
  const int m = n + 3;
  I = sorted_index_set(std::move(I), m);
  require((int)I.size() >= 2 && (int)I.size() <= m - 2, errc::invalid_argument,
          "boundary index needs 2 <= |I| <= n+1 on both sides");
  // Normalize to the representative containing the last marked point; the
  // class depends only on {I, I^c}.
  if (std::find(I.begin(), I.end(), m) == I.end()) {
    std::vector<int> comp;
    std::vector<char> in(m + 1, 0);
    for (int i : I) in[i] = 1;
    for (int i = 1; i <= m; ++i)
      if (!in[i]) comp.push_back(i);
    I = std::move(comp);
  }
  std::vector<int> J(I.begin(), I.end());
  J.pop_back();  // drop the marked point m = n+3 (largest)

  MZeroDivisor out(n, 0);
  if ((int)J.size() <= n - 1) {
    // The exceptional divisor over the span of J, taken with its effective
    // orientation: 0*H - (-1)*E_J.
    out.set_coeff(J, -1);
    return out;
  }
  // |J| == n: the hyperplane through the points of J, minus every blown-up
  // span it contains, i.e. every proper nonempty subset of J.
  out.d = 1;
  const int k = (int)J.size();
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(J[i]);
    out.set_coeff(sub, 1);
  }
  return out;
}

MZeroDivisor cremona_hyperplane(std::vector<int> J, int n) {
  J = sorted_index_set(std::move(J), n + 2);
  const int k = (int)J.size();
  require(k >= 2, errc::invalid_argument, "Cremona base needs at least two points");
  require(k <= n + 1, errc::invalid_argument, "Cremona base exceeds the model point set");
  MZeroDivisor out(n, k - 1);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const int sz = __builtin_popcount(mask);
    if (sz >= k - 1) continue;
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(J[i]);
    out.set_coeff(sub, k - sz - 1);
  }
  return out;
}

int fcurve_intersect_boundary(const FCurve& F, std::vector<int> I, int n) {
  const int m = n + 3;
  I = sorted_index_set(std::move(I), m);
  require((int)I.size() >= 2 && (int)I.size() <= m - 2, errc::invalid_argument,
          "boundary index needs 2 <= |I| <= n+1 on both sides");
  auto matches = [&](const std::vector<int>& set) {
    if (set == I) return true;
    if ((int)set.size() + (int)I.size() != m) return false;
    // complement test: disjoint and covering
    std::vector<char> in(m + 1, 0);
    for (int i : I) in[i] = 1;
    for (int i : set)
      if (in[i]) return false;
    return true;
  };
  for (const auto& b : F.blocks)
    if (matches(b)) return -1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> u;
      std::merge(F.blocks[i].begin(), F.blocks[i].end(), F.blocks[j].begin(), F.blocks[j].end(),
                 std::back_inserter(u));
      if (matches(u)) return 1;
    }
  return 0;
}

namespace {

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

// Gated coefficient lookup: subsets of size >= n contribute nothing.
Int gated(const MZeroDivisor& D, const std::vector<int>& I) {
  if ((int)I.size() > D.n - 1) return 0;
  return D.coeff(I);
}

void check_partition(const std::vector<const std::vector<int>*>& blocks, int universe) {
  std::vector<char> seen(universe + 1, 0);
  int total = 0;
  for (const auto* b : blocks) {
    require(!b->empty(), errc::invalid_argument, "partition blocks must be nonempty");
    for (std::size_t i = 0; i < b->size(); ++i) {
      int v = (*b)[i];
      require(v >= 1 && v <= universe, errc::invalid_argument, "partition index out of range");
      require(i == 0 || (*b)[i - 1] < v, errc::invalid_argument, "blocks must be sorted");
      require(!seen[v], errc::invalid_argument, "partition blocks must be disjoint");
      seen[v] = 1;
      ++total;
    }
  }
  require(total == universe, errc::invalid_argument, "partition must cover the model points");
}

// Partitions of {1..m} into exactly k blocks, enumerated as restricted
// growth strings in lexicographic order; blocks come out ordered by least
// element. fn returns false to stop early.
template <typename Fn>
void for_each_partition(int m, int k, Fn&& fn) {
  std::vector<int> label(m, 0);
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int pos, int used) -> bool {
    if (pos == m) {
      if (used != k) return true;
      blocks.assign(k, {});
      for (int i = 0; i < m; ++i) blocks[label[i]].push_back(i + 1);
      return fn(blocks);
    }
    if (used + (m - pos) < k) return true;  // cannot reach k blocks anymore
    const int top = std::min(used, k - 1);
    for (int v = 0; v <= top; ++v) {
      label[pos] = v;
      if (!self(self, pos + 1, std::max(used, v + 1))) return false;
    }
    return true;
  };
  rec(rec, 1, 1);  // label[0] = 0 always
}

}  // namespace

Int A_coefficient(const MZeroDivisor& D, const std::vector<int>& G, const std::vector<int>& J,
                  const std::vector<int>& L) {
  check_partition({&G, &J, &L}, D.model_points());
  return D.d - gated(D, G) - gated(D, J) - gated(D, L) + gated(D, set_union(J, L)) +
         gated(D, set_union(J, G)) + gated(D, set_union(L, G));
}

Int B_coefficient(const MZeroDivisor& D, const std::vector<int>& I, const std::vector<int>& G,
                  const std::vector<int>& J, const std::vector<int>& L) {
  check_partition({&I, &G, &J, &L}, D.model_points());
  return gated(D, I) - gated(D, set_union(I, G)) - gated(D, set_union(I, J)) -
         gated(D, set_union(I, L)) + gated(D, set_union(set_union(I, J), L)) +
         gated(D, set_union(set_union(I, G), J)) + gated(D, set_union(set_union(I, G), L));
}

namespace {

int thread_count_from_env() {
  const char* env = std::getenv("FATPOINTS_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v < 1) return 1;
  return std::min(v, 64);
}

struct SweepItem {
  char kind;
  std::vector<std::vector<int>> blocks;  // A: G,J,L; B: I,G,J,L with I first
};

Int evaluate(const MZeroDivisor& D, const SweepItem& item) {
  if (item.kind == 'A') return A_coefficient(D, item.blocks[0], item.blocks[1], item.blocks[2]);
  return B_coefficient(D, item.blocks[0], item.blocks[1], item.blocks[2], item.blocks[3]);
}

std::vector<SweepItem> fnef_sweep_items(int model_points) {
  std::vector<SweepItem> items;
  for_each_partition(model_points, 3, [&](const std::vector<std::vector<int>>& blocks) {
    items.push_back({'A', blocks});
    return true;
  });
  for_each_partition(model_points, 4, [&](const std::vector<std::vector<int>>& blocks) {
    for (int i = 0; i < 4; ++i) {
      SweepItem item{'B', {}};
      item.blocks.push_back(blocks[i]);
      for (int j = 0; j < 4; ++j)
        if (j != i) item.blocks.push_back(blocks[j]);
      items.push_back(std::move(item));
    }
    return true;
  });
  return items;
}

}  // namespace

FnefResult is_fnef(const MZeroDivisor& D) {
  const auto items = fnef_sweep_items(D.model_points());
  const int threads = std::min<int>(thread_count_from_env(), (int)items.size());
  std::size_t first_bad = items.size();
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (evaluate(D, items[i]) < 0) {
        first_bad = i;
        break;
      }
    }
  } else {
    // parallel search reducing to the minimum violating index
    std::atomic<std::size_t> best(items.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < items.size(); i += threads) {
          if (i >= best.load()) continue;
          if (evaluate(D, items[i]) < 0) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {}
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    first_bad = best.load();
  }
  if (first_bad == items.size()) return {true, std::nullopt};
  const SweepItem& item = items[first_bad];
  return {false, FnefViolation{item.kind, item.blocks, evaluate(D, item)}};
}

MZeroDivisor embed_strict_transform(const DivisorClass& D) {
  const int n = D.n;
  require(D.s() == n + 2, errc::invalid_argument, "the model embeds divisors on n+2 points");
  for (int i = 0; i < D.s(); ++i)
    require(D.mults[i] >= 0, errc::invalid_argument,
            "effectivity precondition failed: m_" + std::to_string(i + 1) + " < 0");
  require(D.mult_sum() <= Int(n) * D.d, errc::invalid_argument,
          "effectivity precondition failed: sum m_i > n d");
  Int min_m = D.mults[0];
  for (const Int& m : D.mults) min_m = std::min(min_m, m);
  require(D.mult_sum() - min_m <= Int(n) * D.d, errc::invalid_argument,
          "effectivity precondition failed: sum over n+1 points exceeds n d");

  // The full strict transform, fixed hyperplanes subtracted; a class with a
  // divisorial component is never nef, so the subtracted transform is the
  // object the nefness statements are about.
  StrictTransformClass st = strict_transform(D, n - 1, false);
  MZeroDivisor out(n, st.base.d);
  for (int i = 1; i <= D.s(); ++i) out.set_coeff({i}, st.base.mults[i - 1]);
  for (const auto& [cycle, k] : st.exceptional)
    if (cycle.size() <= n - 1) out.set_coeff(cycle.indices, k);
  return out;
}

FultonReport fulton_certify(const DivisorClass& D) {
  MZeroDivisor embedded = embed_strict_transform(D);  // validates effectivity
  FultonReport rep;
  // Under the effectivity preconditions the classification theorem applies;
  // global generation of the full transform is the two inequality families.
  GGVerdict gg = bpf_inequalities(D);
  rep.globally_generated = gg.status == GGStatus::GloballyGenerated;
  rep.gg_witness = gg.witness;
  rep.nef = rep.globally_generated;
  FnefResult fnef = is_fnef(embedded);
  rep.f_nef = fnef.fnef;
  rep.violation = fnef.violation;
  rep.consistent = !rep.globally_generated || rep.f_nef;
  require(rep.consistent, errc::internal,
          "globally generated strict transform failed the F-nef sweep");
  return rep;
}

}  // namespace fatpoints
