#pragma once

// Brute-force reference implementations used by the tests. None of these call
// into the library's algorithms; they only use KSubset as a container.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "wsq/ksubset.hpp"

namespace wsq::testing {

inline bool all_below(const std::vector<int>& lo, const std::vector<int>& hi) {
  for (int a : lo)
    for (int b : hi)
      if (!(a < b)) return false;
  return true;
}

inline std::vector<int> difference(const KSubset& a, const KSubset& b) {
  std::vector<int> out;
  for (int x : a.indices())
    if (!b.contains(x)) out.push_back(x);
  return out;
}

// One case of the definition: |I| >= |J| and J-I splits as J' u J'' with
// J' < I-J < J''. Every one of the 2^|J-I| splits is tried.
inline bool def2_case(const KSubset& i, const KSubset& j) {
  if (i.size() < j.size()) return false;
  const auto middle = difference(i, j);
  const auto outer = difference(j, i);
  const std::size_t splits = std::size_t{1} << outer.size();
  for (std::size_t mask = 0; mask < splits; ++mask) {
    std::vector<int> lower;
    std::vector<int> upper;
    for (std::size_t p = 0; p < outer.size(); ++p)
      ((mask >> p) & 1U ? upper : lower).push_back(outer[p]);
    if (all_below(lower, middle) && all_below(middle, upper)) return true;
  }
  return false;
}

inline bool def2_weakly_separated(const KSubset& i, const KSubset& j) {
  return def2_case(i, j) || def2_case(j, i);
}

// Smallest cyclic interval containing the set, by scanning every start and length.
inline int brute_diameter(const KSubset& s) {
  const int n = s.n();
  for (int len = 1; len <= n; ++len) {
    for (int start = 1; start <= n; ++start) {
      bool inside = true;
      for (int x : s.indices()) {
        const int offset = ((x - start) % n + n) % n;
        if (offset >= len) inside = false;
      }
      if (inside) return len;
    }
  }
  return n;
}

// Explicit permutations of [1..n]: rho(i) = i+1 (n -> 1) and sigma swapping
// 1 <-> 2, 3 <-> n, 4 <-> n-1, ...
inline std::vector<int> rho_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = i == n ? 1 : i + 1;
  return p;
}

inline std::vector<int> sigma_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = ((3 - i) % n + n - 1) % n + 1;
  return p;
}

inline std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
  std::vector<int> out(g.size());
  for (std::size_t i = 1; i < g.size(); ++i) out[i] = g[static_cast<std::size_t>(h[i])];
  return out;
}

inline KSubset permute(const std::vector<int>& p, const KSubset& s) {
  std::vector<int> out;
  for (int x : s.indices()) out.push_back(p[static_cast<std::size_t>(x)]);
  return KSubset::from_indices(s.n(), out);
}

/// All 2n permutations generated by rho and sigma, by closure.
inline std::set<std::vector<int>> dihedral_permutations(int n) {
  std::vector<int> id(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  const auto gens = {rho_perm(n), sigma_perm(n)};
  while (!todo.empty()) {
    const auto g = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      auto h = compose(s, g);
      if (seen.insert(h).second) todo.push_back(h);
    }
  }
  return seen;
}

// Cofactor expansion; small matrices only.
inline mpq_class cofactor_det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      auto& row = minor.emplace_back();
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
    }
    const mpq_class term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return total;
}

inline std::vector<std::vector<mpq_class>> submatrix(const std::vector<std::vector<mpq_class>>& m,
                                                     const std::vector<int>& rows,
                                                     const std::vector<int>& cols) {
  std::vector<std::vector<mpq_class>> out;
  for (int r : rows) {
    auto& row = out.emplace_back();
    for (int c : cols) row.push_back(m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
  }
  return out;
}

/// Every maximal family of pairwise weakly separated k-subsets of [1..n]
/// (Bron-Kerbosch on the compatibility graph built from def2_weakly_separated).
inline std::set<std::vector<KSubset>> maximal_families(int k, int n) {
  std::vector<KSubset> all;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> gen = [&](int pos, int next) {
    if (pos == k) {
      all.push_back(KSubset::from_indices(n, idx));
      return;
    }
    for (int x = next; x <= n; ++x) {
      idx[static_cast<std::size_t>(pos)] = x;
      gen(pos + 1, x + 1);
    }
  };
  gen(0, 1);
  const std::size_t v = all.size();
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b)
      adj[a][b] = a != b && def2_weakly_separated(all[a], all[b]);

  std::set<std::vector<KSubset>> out;
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)>
      bk = [&](std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          std::vector<KSubset> fam;
          for (auto i : r) fam.push_back(all[i]);
          std::sort(fam.begin(), fam.end());
          out.insert(fam);
          return;
        }
        while (!p.empty()) {
          const auto u = p.back();
          p.pop_back();
          std::vector<std::size_t> p2;
          std::vector<std::size_t> x2;
          for (auto w : p)
            if (adj[u][w]) p2.push_back(w);
          for (auto w : x)
            if (adj[u][w]) x2.push_back(w);
          r.push_back(u);
          bk(r, p2, x2);
          r.pop_back();
          x.push_back(u);
        }
      };
  std::vector<std::size_t> r;
  std::vector<std::size_t> p(v);
  for (std::size_t i = 0; i < v; ++i) p[i] = i;
  bk(r, p, {});
  return out;
}

inline long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace wsq::testing
