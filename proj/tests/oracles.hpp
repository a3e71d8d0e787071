#pragma once

// Independent oracles for the test suite. These deliberately avoid the
// library's own search paths: subspaces by spanning every small tuple,
// subbraces by power-set filtering, brace enumeration by lambda-assignment
// backtracking over automorphisms found by raw permutation filtering.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "bracelab/bracelab.hpp"

namespace oracle {

using namespace bracelab;

/// Every subspace of F_p^d, as canonical echelon bases, found by spanning
/// all tuples of up to d vectors. Feasible for p^d small.
inline std::vector<Subspace> all_subspaces(int p, int d) {
  long long total = vector_count(p, d);
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<Subspace> out;
  auto push = [&](const std::vector<std::vector<int>>& gens) {
    Subspace s = Subspace::span(p, d, gens);
    if (seen.insert(s.basis()).second) out.push_back(s);
  };
  push({});
  for (long long i = 1; i < total; ++i) {
    FpVector a = vector_at(p, d, i);
    push({a.coords});
    for (long long j = i + 1; j < total; ++j) {
      FpVector b = vector_at(p, d, j);
      push({a.coords, b.coords});
      if (d >= 3)
        for (long long k = j + 1; k < total; ++k)
          push({a.coords, b.coords, vector_at(p, d, k).coords});
    }
  }
  return out;
}

/// Power-set subbrace filter; usable for order <= 16.
inline std::vector<SubsetMask> naive_subbraces(const FiniteBrace& br) {
  int n = br.order();
  std::vector<SubsetMask> out;
  for (unsigned bits = 1; bits < (1u << n); ++bits) {
    if (!(bits & 1)) continue;  // must contain 0
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (bits & (1u << i)) elems.push_back(i);
    bool closed = true;
    for (int a : elems) {
      for (int b : elems) {
        if (!(bits & (1u << br.add(a, b))) || !(bits & (1u << br.mul(a, b)))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(SubsetMask::of(n, elems));
  }
  return out;
}

/// Additive automorphisms by filtering all permutations of {0..n-1}.
/// Usable for n <= 8.
inline std::vector<std::vector<int>> naive_automorphisms(const FiniteBrace& g) {
  int n = g.order();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n; ++b)
        if (perm[g.add(a, b)] != g.add(perm[a], perm[b])) {
          hom = false;
          break;
        }
    if (hom) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Every brace multiplication on the additive group of `base`: backtracking
/// over lambda assignments with forward propagation of the closure law
/// lambda_{a + lambda_a(b)} = lambda_a lambda_b. Returns sorted tables.
inline std::vector<std::vector<int>> lambda_dfs_mul_tables(
    const FiniteBrace& base) {
  int n = base.order();
  std::vector<std::vector<int>> autos = naive_automorphisms(base);
  int na = static_cast<int>(autos.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < na; ++i) index[autos[i]] = i;
  int id = index.at([&] {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i;
    return e;
  }());

  std::vector<int> lam(n, -1);
  lam[0] = id;
  std::vector<std::vector<int>> found;

  // compose and look up; all automorphism products stay in the group
  auto compose = [&](int i, int j) {
    std::vector<int> c(n);
    for (int x = 0; x < n; ++x) c[x] = autos[i][autos[j][x]];
    return index.at(c);
  };

  // propagate all products among assigned elements; returns false on clash
  std::function<bool(std::vector<int>&)> propagate =
      [&](std::vector<int>& trail) -> bool {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> present;
      for (int a = 0; a < n; ++a)
        if (lam[a] != -1) present.push_back(a);
      for (int a : present)
        for (int b : present) {
          int prod = base.add(a, autos[lam[a]][b]);  // a . b
          int comp = compose(lam[a], lam[b]);
          if (lam[prod] == -1) {
            lam[prod] = comp;
            trail.push_back(prod);
            grew = true;
          } else if (lam[prod] != comp) {
            return false;
          }
        }
    }
    return true;
  };

  std::function<void()> dfs = [&]() {
    int next = -1;
    for (int a = 0; a < n; ++a)
      if (lam[a] == -1) {
        next = a;
        break;
      }
    if (next == -1) {
      std::vector<int> mul(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = base.add(a, autos[lam[a]][b]);
      found.push_back(std::move(mul));
      return;
    }
    for (int cand = 0; cand < na; ++cand) {
      std::vector<int> trail;
      lam[next] = cand;
      trail.push_back(next);
      if (propagate(trail)) dfs();
      for (int x : trail) lam[x] = -1;
    }
  };
  dfs();
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace oracle
