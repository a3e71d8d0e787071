#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bracelab/brace.hpp"

namespace bracelab {

/// Total map r on pairs over {0..n-1}, stored row-major: entry x*n + y.
struct SolutionMap {
  int n = 0;
  std::vector<std::pair<int, int>> r;

  std::pair<int, int> apply(int x, int y) const { return r[x * n + y]; }

  bool pair_bijective() const {
    std::vector<char> hit(static_cast<size_t>(n) * n, 0);
    for (const auto& [u, v] : r) {
      size_t idx = static_cast<size_t>(u) * n + v;
      if (hit[idx]) return false;
      hit[idx] = 1;
    }
    return true;
  }

  static SolutionMap from_table(int n, std::vector<std::pair<int, int>> table) {
    SolutionMap s{n, std::move(table)};
    if (static_cast<int>(s.r.size()) != n * n || !s.pair_bijective())
      throw std::invalid_argument("solution table is not a bijection on pairs");
    return s;
  }
};

/// The involutive solution attached to a brace:
/// r(x, y) = (u, v) with u = lambda_x(y) and v = lambda_{u^{-1}}(x).
/// The defining identity uv = xy is certified on every pair.
inline SolutionMap associated_solution(const FiniteBrace& br) {
  int n = br.order();
  std::vector<std::pair<int, int>> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = br.lambda(x, y);
      int v = br.lambda(br.inv(u), x);
      if (br.mul(u, v) != br.mul(x, y))
        throw internal_error("associated solution violates uv = xy");
      table[x * n + y] = {u, v};
    }
  return SolutionMap::from_table(n, std::move(table));
}

/// Braid relation on all triples, involutivity on all pairs, and
/// non-degeneracy of both component maps. Witnesses are the least violating
/// triple or pair in scan order.
struct SolutionReport {
  bool braid = false;
  bool involutive = false;
  bool nondegenerate = false;
  std::optional<std::array<int, 3>> braid_witness;
  std::optional<std::array<int, 2>> involutive_witness;
  std::optional<std::array<int, 2>> nondegenerate_witness;

  bool all() const { return braid && involutive && nondegenerate; }
};

inline SolutionReport check_solution(const SolutionMap& s) {
  int n = s.n;
  SolutionReport rep;

  rep.braid = true;
  auto r12 = [&](std::array<int, 3> t) {
    auto [u, v] = s.apply(t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto r23 = [&](std::array<int, 3> t) {
    auto [u, v] = s.apply(t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int x = 0; x < n && rep.braid; ++x)
    for (int y = 0; y < n && rep.braid; ++y)
      for (int z = 0; z < n; ++z) {
        std::array<int, 3> t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
          rep.braid = false;
          rep.braid_witness = t;
          break;
        }
      }

  rep.involutive = true;
  for (int x = 0; x < n && rep.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      if (s.apply(u, v) != std::make_pair(x, y)) {
        rep.involutive = false;
        rep.involutive_witness = {x, y};
        break;
      }
    }

  rep.nondegenerate = true;
  std::vector<char> hit(n);
  for (int x = 0; x < n && rep.nondegenerate; ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int y = 0; y < n; ++y) {
      int u = s.apply(x, y).first;
      if (hit[u]) {
        rep.nondegenerate = false;
        rep.nondegenerate_witness = {x, y};
        break;
      }
      hit[u] = 1;
    }
  }
  for (int y = 0; y < n && rep.nondegenerate; ++y) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int x = 0; x < n; ++x) {
      int v = s.apply(x, y).second;
      if (hit[v]) {
        rep.nondegenerate = false;
        rep.nondegenerate_witness = {x, y};
        break;
      }
      hit[v] = 1;
    }
  }
  return rep;
}

}  // namespace bracelab
