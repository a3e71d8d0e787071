#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bracelab/brace.hpp"

namespace bracelab {

/// Finite abelian group as its invariant-factor chain, largest factor first,
/// each factor divisible by the next. Arbitrary factor lists are
/// canonicalized through the primary decomposition.
struct AbelianGroupSpec {
  std::vector<int> factors;

  static AbelianGroupSpec from_factors(const std::vector<int>& raw) {
    for (int f : raw)
      if (f < 2) throw std::invalid_argument("cyclic factors must be >= 2");
    // primary decomposition: per prime, a descending exponent partition
    std::map<int, std::vector<int>> parts;
    for (int f : raw) {
      int m = f;
      for (int d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        int e = 0;
        while (m % d == 0) {
          m /= d;
          ++e;
        }
        parts[d].push_back(e);
      }
      if (m > 1) parts[m].push_back(1);
    }
    size_t width = 0;
    for (auto& [p, es] : parts) {
      std::sort(es.rbegin(), es.rend());
      width = std::max(width, es.size());
    }
    std::vector<int> canon;
    for (size_t j = 0; j < width; ++j) {
      long long d = 1;
      for (auto& [p, es] : parts)
        if (j < es.size())
          for (int k = 0; k < es[j]; ++k) d *= p;
      canon.push_back(static_cast<int>(d));
    }
    return AbelianGroupSpec{canon};
  }

  static AbelianGroupSpec parse(const std::string& text) {
    std::vector<int> raw;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      raw.push_back(std::stoi(tok));
    }
    if (raw.empty())
      throw std::invalid_argument("empty additive group specification");
    return from_factors(raw);
  }

  int order() const {
    long long n = 1;
    for (int f : factors) n *= f;
    return static_cast<int>(n);
  }

  std::string display() const {
    if (factors.empty()) return "C1";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " x ";
      out += "C" + std::to_string(factors[i]);
    }
    return out;
  }
};

/// The trivial (abelian) brace on the group: both tables are the mixed-radix
/// componentwise addition.
inline FiniteBrace abelian_brace(const AbelianGroupSpec& g) {
  int n = g.order();
  TupleCodec codec{g.factors.empty() ? std::vector<int>{1} : g.factors};
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> da = codec.decode(a);
    for (int b = 0; b < n; ++b) {
      std::vector<int> db = codec.decode(b);
      std::vector<int> s(da.size());
      for (size_t i = 0; i < da.size(); ++i)
        s[i] = (da[i] + db[i]) % codec.radices[i];
      table[a * n + b] = codec.encode(s);
    }
  }
  std::vector<int> mul_table = table;
  FiniteBrace out =
      FiniteBrace::unchecked(n, std::move(table), std::move(mul_table));
  out.codec = codec;
  return out;
}

/// Complete automorphism group of (G, +) as permutations of element ids,
/// found by mapping the canonical generating tuple to every relation
/// preserving image. Identity first, then sorted.
inline std::vector<std::vector<int>> automorphisms(const AbelianGroupSpec& g,
                                                   int cap = 64) {
  int n = g.order();
  if (n > cap)
    throw cap_exceeded("automorphism enumeration at order " +
                       std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  FiniteBrace base = abelian_brace(g);
  int d = static_cast<int>(base.codec.radices.size());

  // generator e_i = unit tuple in coordinate i; its image must be killed by
  // the factor order
  std::vector<int> gens(d);
  std::vector<std::vector<int>> candidates(d);
  for (int i = 0; i < d; ++i) {
    std::vector<int> unit(d, 0);
    unit[i] = 1;
    gens[i] = base.codec.encode(unit);
    for (int y = 0; y < n; ++y)
      if (base.codec.radices[i] % base.add_order(y) == 0)
        candidates[i].push_back(y);
  }

  double estimate = 1;
  for (int i = 0; i < d; ++i) estimate *= candidates[i].size();
  if (estimate > 5e7)
    throw cap_exceeded("automorphism candidate space too large");

  std::vector<std::vector<int>> autos;
  std::vector<int> choice(d, 0);
  std::vector<int> image(d, 0);
  auto emit = [&]() {
    std::vector<int> perm(n);
    std::vector<char> hit(n, 0);
    for (int a = 0; a < n; ++a) {
      std::vector<int> digits = base.codec.decode(a);
      int acc = 0;
      for (int i = 0; i < d; ++i)
        acc = base.add(acc, base.add_pow(image[i], digits[i]));
      perm[a] = acc;
      if (hit[acc]) return;  // not bijective
      hit[acc] = 1;
    }
    autos.push_back(std::move(perm));
  };
  // odometer over candidate tuples
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<long long>(candidates[i].size());
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int i = d - 1; i >= 0; --i) {
      image[i] = candidates[i][rest % candidates[i].size()];
      rest /= candidates[i].size();
    }
    emit();
  }
  std::sort(autos.begin(), autos.end());
  return autos;
}

namespace detail {

/// Holomorph element (t, alpha) acting by x -> t + alpha(x); alpha indexed
/// into a fixed automorphism list.
struct Holomorph {
  const FiniteBrace& base;
  std::vector<std::vector<int>> autos;
  std::unordered_map<size_t, int> auto_index;  // hash of perm -> index

  static size_t perm_hash(const std::vector<int>& p) {
    size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

  explicit Holomorph(const FiniteBrace& b, std::vector<std::vector<int>> au)
      : base(b), autos(std::move(au)) {
    for (size_t i = 0; i < autos.size(); ++i)
      auto_index.emplace(perm_hash(autos[i]), static_cast<int>(i));
    if (size() <= 4096) {
      int s = size();
      comp_.assign(static_cast<size_t>(s) * s, -1);
      for (int h1 = 0; h1 < s; ++h1)
        for (int h2 = 0; h2 < s; ++h2)
          comp_[static_cast<size_t>(h1) * s + h2] = compose_slow(h1, h2);
    }
  }

  int n() const { return base.order(); }
  int size() const { return n() * static_cast<int>(autos.size()); }
  int id() const {
    return find_auto(identity_perm());
  }

  std::vector<int> identity_perm() const {
    std::vector<int> p(n());
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  int find_auto(const std::vector<int>& perm) const {
    auto it = auto_index.find(perm_hash(perm));
    if (it == auto_index.end() || autos[it->second] != perm)
      throw internal_error("automorphism composition left the group");
    return it->second;
  }

  int trans(int h) const { return h / static_cast<int>(autos.size()); }
  int aut(int h) const { return h % static_cast<int>(autos.size()); }
  int make(int t, int a) const { return t * static_cast<int>(autos.size()) + a; }

  int apply(int h, int x) const {
    return base.add(trans(h), autos[aut(h)][x]);
  }

  int compose_slow(int h1, int h2) const {
    // (t1, a1)(t2, a2) : x -> t1 + a1(t2 + a2 x)
    const std::vector<int>& a1 = autos[aut(h1)];
    const std::vector<int>& a2 = autos[aut(h2)];
    int t = base.add(trans(h1), a1[trans(h2)]);
    std::vector<int> comp(n());
    for (int x = 0; x < n(); ++x) comp[x] = a1[a2[x]];
    return make(t, find_auto(comp));
  }

  int compose(int h1, int h2) const {
    if (!comp_.empty())
      return comp_[static_cast<size_t>(h1) * size() + h2];
    return compose_slow(h1, h2);
  }

  std::vector<int> comp_;

  bool fixed_point_free(int h) const {
    for (int x = 0; x < n(); ++x)
      if (apply(h, x) == x) return false;
    return true;
  }
};

}  // namespace detail

/// Isomorphism-class representatives of a brace list, keeping the first
/// (least, when the input is sorted) member of each class. Braces are
/// bucketed by cheap invariants so only same-bucket pairs are searched.
inline std::vector<FiniteBrace> deduplicate_up_to_iso(
    std::vector<FiniteBrace> braces) {
  auto key_of = [](const FiniteBrace& br) {
    std::vector<long long> key;
    auto fps = detail::IsoSearcher::fingerprints(br);
    std::sort(fps.begin(), fps.end());
    for (const auto& fp : fps)
      for (int v : fp) key.push_back(v);
    key.push_back(detail::IsoSearcher::star_symmetry_count(br));
    SubsetMask full = SubsetMask::full(br.order());
    key.push_back(subset_star(br, full, full).count());
    return key;
  };
  std::map<std::vector<long long>, std::vector<size_t>> buckets;
  std::vector<FiniteBrace> reps;
  for (FiniteBrace& br : braces) {
    std::vector<size_t>& bucket = buckets[key_of(br)];
    bool fresh = true;
    for (size_t idx : bucket) {
      IsoResult r = isomorphism_search(br, reps[idx]);
      if (r.outcome == SearchOutcome::budget_exceeded)
        throw cap_exceeded("isomorphism dedup exceeded its search budget");
      if (r.outcome == SearchOutcome::found) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(br));
    }
  }
  return reps;
}

/// All braces whose additive group is G, one per regular subgroup of the
/// holomorph of (G, +). Subgroups are grown from generator sets over the
/// fixed-point-free elements; a subgroup of order |G| all of whose non-trivial
/// elements act freely is regular. With up_to_iso the list is deduplicated by
/// isomorphism search, keeping the least multiplication table of each class.
inline std::vector<FiniteBrace> enumerate_braces(const AbelianGroupSpec& g,
                                                 bool up_to_iso,
                                                 int cap = 16) {
  int n = g.order();
  if (n > cap)
    throw cap_exceeded("brace enumeration at order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  FiniteBrace base = abelian_brace(g);
  if (n == 1) return {base};

  std::vector<std::vector<int>> autos = automorphisms(g, std::max(cap, 64));
  if (static_cast<long long>(n) * autos.size() > 4096)
    throw cap_exceeded("holomorph of " + g.display() + " has " +
                       std::to_string(n * autos.size()) +
                       " elements; the regular-subgroup search supports at "
                       "most 4096");
  detail::Holomorph hol(base, std::move(autos));
  int identity = hol.make(0, hol.find_auto(hol.identity_perm()));

  std::vector<int> pool;
  for (int h = 0; h < hol.size(); ++h)
    if (h != identity && hol.fixed_point_free(h)) pool.push_back(h);

  // non-free elements can never sit inside a regular subgroup
  std::vector<char> free_element(hol.size(), 0);
  for (int h : pool) free_element[h] = 1;
  free_element[identity] = 1;

  // close a generator set; empty result means a non-free element appeared.
  // membership scratch is reused across calls via an epoch stamp.
  std::vector<int> stamp(hol.size(), -1);
  int epoch = -1;
  auto close = [&](const std::vector<int>& gens) -> std::vector<int> {
    ++epoch;
    std::vector<int> members{identity};
    stamp[identity] = epoch;
    std::vector<int> work;
    for (int gen : gens)
      if (stamp[gen] != epoch) {
        stamp[gen] = epoch;
        members.push_back(gen);
        work.push_back(gen);
      }
    while (!work.empty()) {
      int u = work.back();
      work.pop_back();
      for (size_t i = 0; i < members.size(); ++i) {
        for (int prod : {hol.compose(u, members[i]), hol.compose(members[i], u)}) {
          if (stamp[prod] == epoch) continue;
          if (!free_element[prod]) return {};
          stamp[prod] = epoch;
          if (static_cast<int>(members.size()) >= n) return {};
          members.push_back(prod);
          work.push_back(prod);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
      size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::deque<std::vector<int>> frontier;
  std::vector<std::vector<int>> regular;

  auto consider = [&](std::vector<int> subgroup) {
    if (subgroup.empty()) return;
    int sz = static_cast<int>(subgroup.size());
    if (sz > n || n % sz != 0) return;
    if (!seen.insert(subgroup).second) return;
    if (sz == n)
      regular.push_back(subgroup);
    else
      frontier.push_back(std::move(subgroup));
  };

  for (int gen : pool) consider(close({gen}));
  while (!frontier.empty()) {
    std::vector<int> s = frontier.front();
    frontier.pop_front();
    for (int gen : pool) {
      if (std::binary_search(s.begin(), s.end(), gen)) continue;
      std::vector<int> gens = s;
      gens.push_back(gen);
      consider(close(gens));
    }
  }

  std::vector<FiniteBrace> braces;
  for (const std::vector<int>& sub : regular) {
    // key each subgroup element by its translation part
    std::vector<int> auto_of(n, -1);
    bool ok = true;
    for (int h : sub) {
      int t = hol.trans(h);
      if (auto_of[t] != -1) {
        ok = false;
        break;
      }
      auto_of[t] = hol.aut(h);
    }
    if (!ok)
      throw internal_error("free subgroup of full order is not regular");
    std::vector<int> mul_table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      const std::vector<int>& lam = hol.autos[auto_of[a]];
      for (int b = 0; b < n; ++b) mul_table[a * n + b] = base.add(a, lam[b]);
    }
    FiniteBrace br =
        FiniteBrace::validate(n, base.add_table(), std::move(mul_table));
    br.codec = base.codec;
    braces.push_back(std::move(br));
  }

  std::sort(braces.begin(), braces.end(),
            [](const FiniteBrace& a, const FiniteBrace& b) {
              return a.mul_table() < b.mul_table();
            });

  if (!up_to_iso) return braces;
  return deduplicate_up_to_iso(std::move(braces));
}

}  // namespace bracelab
