#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bracelab/errors.hpp"
#include "bracelab/mask.hpp"

namespace bracelab {

inline constexpr int kDefaultMaxOrder = 4096;

/// Bijection between element ids and mixed-radix tuples; the first tuple
/// entry is the most significant digit, so printed tuples match id order.
struct TupleCodec {
  std::vector<int> radices;

  long long size() const {
    long long n = 1;
    for (int r : radices) n *= r;
    return n;
  }

  int encode(const std::vector<int>& digits) const {
    long long id = 0;
    for (size_t i = 0; i < radices.size(); ++i) id = id * radices[i] + digits[i];
    return static_cast<int>(id);
  }

  std::vector<int> decode(int id) const {
    std::vector<int> digits(radices.size(), 0);
    for (size_t i = radices.size(); i-- > 0;) {
      digits[i] = id % radices[i];
      id /= radices[i];
    }
    return digits;
  }

  std::string label(int id) const {
    if (radices.size() <= 1) return std::to_string(id);
    std::vector<int> d = decode(id);
    std::string out = "(";
    for (size_t i = 0; i < d.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(d[i]);
    }
    return out + ")";
  }
};

/// Invariant factors (largest first, each divisible by the next) of a finite
/// abelian group given by its table, identity 0. Recovered from the counts
/// of elements killed by prime powers.
template <class Op>
std::vector<int> abelian_invariant_factors(int n, Op op) {
  std::vector<int> ord(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = op(x, a);
      ++k;
    }
    ord[a] = k;
  }
  std::vector<int> primes;
  int m = n;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);

  // parts_per_prime[i] = exponent partition of the p_i-component, descending
  std::vector<std::vector<int>> parts_per_prime;
  for (int p : primes) {
    std::vector<int> killed_log;  // killed_log[k] = log_p #{a : p^k * a = 0}
    killed_log.push_back(0);
    long long pk = 1;
    while (true) {
      pk *= p;
      int cnt = 0;
      for (int a = 0; a < n; ++a) {
        // killed by p^k  <=>  ord[a] divides p^k
        int o = ord[a];
        while (o % p == 0) o /= p;
        long long ppart = ord[a] / o;
        if (o == 1 && ppart <= pk) ++cnt;
      }
      int lg = 0;
      int c = cnt;
      while (c > 1) {
        c /= p;
        ++lg;
      }
      killed_log.push_back(lg);
      if (killed_log.back() == killed_log[killed_log.size() - 2]) break;
    }
    std::vector<int> parts;
    for (size_t k = 1; k < killed_log.size(); ++k) {
      int at_least_k = killed_log[k] - killed_log[k - 1];
      // at_least_k = number of cyclic parts with exponent >= k
      while (static_cast<int>(parts.size()) < at_least_k) parts.push_back(0);
      for (int i = 0; i < at_least_k; ++i) parts[i] = static_cast<int>(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    parts_per_prime.push_back(std::move(parts));
  }

  size_t max_parts = 0;
  for (const auto& parts : parts_per_prime)
    max_parts = std::max(max_parts, parts.size());
  std::vector<int> factors;
  for (size_t j = 0; j < max_parts; ++j) {
    long long d = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
      int e = j < parts_per_prime[i].size() ? parts_per_prime[i][j] : 0;
      for (int k = 0; k < e; ++k) d *= primes[i];
    }
    if (d > 1) factors.push_back(static_cast<int>(d));
  }
  return factors;  // descending, d_{i+1} | d_i
}

/// A finite left brace: an abelian group table and a group table on the same
/// ids, sharing identity 0 and satisfying a(b+c) = ab + ac - a. Values are
/// immutable after construction; all operations here are pure.
class FiniteBrace {
 public:
  /// Full axiom check over all triples; throws validation_error with a
  /// machine-readable kind and witness on the first violation found.
  static FiniteBrace validate(int n, std::vector<int> add_table,
                              std::vector<int> mul_table) {
    check_shape(n, add_table, mul_table);
    using K = validation_error::Kind;

    int e_add = find_identity(n, add_table);
    if (e_add < 0)
      throw validation_error(K::add_not_group, "addition has no identity");
    int e_mul = find_identity(n, mul_table);
    if (e_mul < 0)
      throw validation_error(K::mul_not_group, "multiplication has no identity");
    if (e_add != e_mul)
      throw validation_error(K::identities_differ,
                             "additive identity " + std::to_string(e_add) +
                                 " differs from multiplicative identity " +
                                 std::to_string(e_mul),
                             {e_add, e_mul, -1});
    if (e_add != 0)
      throw validation_error(K::identity_not_zero,
                             "shared identity is element " +
                                 std::to_string(e_add) + ", not 0",
                             {e_add, -1, -1});

    check_latin(n, add_table, K::add_not_group, "addition");
    check_latin(n, mul_table, K::mul_not_group, "multiplication");

    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (add_table[a * n + b] != add_table[b * n + a])
          throw validation_error(K::add_not_abelian,
                                 "addition is not commutative at (" +
                                     std::to_string(a) + "," +
                                     std::to_string(b) + ")",
                                 {a, b, -1});

    check_associative(n, add_table, K::add_not_group, "addition");
    check_associative(n, mul_table, K::mul_not_group, "multiplication");

    FiniteBrace br = unchecked(n, std::move(add_table), std::move(mul_table));
    const int* ad = br.add_.data();
    const int* mu = br.mul_.data();
    for (int a = 0; a < n; ++a) {
      int na = br.neg_[a];
      for (int b = 0; b < n; ++b) {
        int ab = mu[a * n + b];
        for (int c = 0; c < n; ++c) {
          int lhs = mu[a * n + ad[b * n + c]];
          int rhs = ad[ad[ab * n + mu[a * n + c]] * n + na];
          if (lhs != rhs)
            throw validation_error(
                K::brace_law,
                "a(b+c) != ab + ac - a at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")",
                {a, b, c});
        }
      }
    }
    return br;
  }

  /// Constructs without the O(n^3) axiom scan. Callers must hold a proof
  /// that the tables are a valid brace (componentwise products, quotients by
  /// certified ideals, constructions valid by theorem).
  static FiniteBrace unchecked(int n, std::vector<int> add_table,
                               std::vector<int> mul_table) {
    check_shape(n, add_table, mul_table);
    FiniteBrace br;
    br.n_ = n;
    br.add_ = std::move(add_table);
    br.mul_ = std::move(mul_table);
    br.neg_.assign(n, -1);
    br.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (br.add_[a * n + b] == 0) br.neg_[a] = b;
        if (br.mul_[a * n + b] == 0) br.inv_[a] = b;
      }
      if (br.neg_[a] < 0 || br.inv_[a] < 0)
        throw validation_error(validation_error::Kind::malformed,
                               "element " + std::to_string(a) +
                                   " has no inverse in a table row");
    }
    br.codec.radices = {n};
    br.shape_ = abelian_invariant_factors(
        n, [&br](int a, int b) { return br.add(a, b); });
    return br;
  }

  int order() const { return n_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }
  int sub(int a, int b) const { return add_[a * n_ + neg_[b]]; }

  /// a * b = ab - a - b
  int star(int a, int b) const { return sub(sub(mul(a, b), a), b); }

  /// lambda_a(b) = ab - a; an automorphism of the additive group.
  int lambda(int a, int b) const { return sub(mul(a, b), a); }

  std::vector<int> lambda_map(int a) const {
    std::vector<int> perm(n_);
    for (int b = 0; b < n_; ++b) perm[b] = lambda(a, b);
    return perm;
  }

  /// k*a in the additive group; k may be negative.
  int add_pow(int a, long long k) const {
    int base = k < 0 ? neg_[a] : a;
    if (k < 0) k = -k;
    int acc = 0;
    for (long long i = 0; i < k; ++i) acc = add(acc, base);
    return acc;
  }

  /// a^k in the multiplicative group; k may be negative.
  int mul_pow(int a, long long k) const {
    int base = k < 0 ? inv_[a] : a;
    if (k < 0) k = -k;
    int acc = 0;
    for (long long i = 0; i < k; ++i) acc = mul(acc, base);
    return acc;
  }

  int add_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
      x = add(x, a);
      ++k;
    }
    return k;
  }

  int mul_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool is_abelian() const { return add_ == mul_; }

  /// Invariant factors of the additive group, largest first.
  const std::vector<int>& additive_shape() const { return shape_; }

  std::vector<int> primes() const {
    std::vector<int> ps;
    int m = n_;
    for (int d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        ps.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) ps.push_back(m);
    return ps;
  }

  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& mul_table() const { return mul_; }

  std::string label(int a) const { return codec.label(a); }

  TupleCodec codec;

 private:
  static void check_shape(int n, const std::vector<int>& add_table,
                          const std::vector<int>& mul_table) {
    using K = validation_error::Kind;
    if (n < 1) throw validation_error(K::malformed, "order must be >= 1");
    if (static_cast<long long>(add_table.size()) !=
            static_cast<long long>(n) * n ||
        static_cast<long long>(mul_table.size()) !=
            static_cast<long long>(n) * n)
      throw validation_error(K::malformed, "tables are not n x n");
    for (int v : add_table)
      if (v < 0 || v >= n)
        throw validation_error(K::malformed, "addition entry out of range");
    for (int v : mul_table)
      if (v < 0 || v >= n)
        throw validation_error(K::malformed, "multiplication entry out of range");
  }

  static int find_identity(int n, const std::vector<int>& t) {
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = t[e * n + x] == x && t[x * n + e] == x;
      if (ok) return e;
    }
    return -1;
  }

  static void check_latin(int n, const std::vector<int>& t,
                          validation_error::Kind kind, const std::string& name) {
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n; ++b) {
        int v = t[a * n + b];
        if (seen[v])
          throw validation_error(kind, name + " row " + std::to_string(a) +
                                           " is not a permutation",
                                 {a, b, -1});
        seen[v] = 1;
      }
    }
    for (int b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int a = 0; a < n; ++a) {
        int v = t[a * n + b];
        if (seen[v])
          throw validation_error(kind, name + " column " + std::to_string(b) +
                                           " is not a permutation",
                                 {a, b, -1});
        seen[v] = 1;
      }
    }
  }

  static void check_associative(int n, const std::vector<int>& t,
                                validation_error::Kind kind,
                                const std::string& name) {
    const int* tt = t.data();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = tt[a * n + b];
        for (int c = 0; c < n; ++c)
          if (tt[ab * n + c] != tt[a * n + tt[b * n + c]])
            throw validation_error(kind, name + " is not associative at (" +
                                             std::to_string(a) + "," +
                                             std::to_string(b) + "," +
                                             std::to_string(c) + ")",
                                   {a, b, c});
      }
  }

  int n_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
  std::vector<int> shape_;
};

/// Additive subgroup generated by the seed mask. Because the additive group
/// is abelian, the closure grows one cyclic coset block at a time.
inline SubsetMask additive_span(const FiniteBrace& a, const SubsetMask& seed) {
  SubsetMask t = SubsetMask::singleton(a.order(), 0);
  seed.for_each([&](int g) {
    if (t.test(g)) return;
    std::vector<int> base = t.elements();
    int m = g;
    while (m != 0) {
      if (!t.test(m))
        for (int s : base) t.set(a.add(s, m));
      m = a.add(m, g);
    }
  });
  return t;
}

inline SubsetMask additive_span(const FiniteBrace& a,
                                const std::vector<int>& gens) {
  return additive_span(a, SubsetMask::of(a.order(), gens));
}

/// X * Y: the additive subgroup generated by all x * y, x in X, y in Y.
inline SubsetMask subset_star(const FiniteBrace& a, const SubsetMask& x,
                              const SubsetMask& y) {
  SubsetMask gens(a.order());
  x.for_each([&](int u) { y.for_each([&](int v) { gens.set(a.star(u, v)); }); });
  return additive_span(a, gens);
}

/// Greedy additive generating set: repeatedly adjoin the least element not
/// yet in the additive span. Deterministic and small (at most log2 n).
inline std::vector<int> additive_generating_set(const FiniteBrace& a) {
  std::vector<int> gens;
  SubsetMask span = SubsetMask::singleton(a.order(), 0);
  for (int x = 1; x < a.order(); ++x) {
    if (span.test(x)) continue;
    gens.push_back(x);
    SubsetMask seed = span;
    seed.set(x);
    span = additive_span(a, seed);
  }
  return gens;
}

/// A map between braces, stored as the image list of every source element.
struct BraceHom {
  std::vector<int> map;
};

inline bool is_hom(const FiniteBrace& a, const FiniteBrace& b,
                   const BraceHom& h) {
  if (static_cast<int>(h.map.size()) != a.order()) return false;
  for (int x : h.map)
    if (x < 0 || x >= b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      if (h.map[a.add(x, y)] != b.add(h.map[x], h.map[y])) return false;
      if (h.map[a.mul(x, y)] != b.mul(h.map[x], h.map[y])) return false;
    }
  return true;
}

inline bool is_isomorphism(const FiniteBrace& a, const FiniteBrace& b,
                           const BraceHom& h) {
  if (a.order() != b.order() || !is_hom(a, b, h)) return false;
  std::vector<char> hit(b.order(), 0);
  for (int x : h.map) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

/// Componentwise direct product. Element (x, y) has id x*|B| + y, and the
/// tuple codec concatenates both factors' codecs.
inline FiniteBrace direct_product(const FiniteBrace& a, const FiniteBrace& b,
                                  int max_order = kDefaultMaxOrder) {
  long long n = static_cast<long long>(a.order()) * b.order();
  if (n > max_order)
    throw cap_exceeded("direct product order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(max_order));
  int na = a.order(), nb = b.order(), nn = static_cast<int>(n);
  std::vector<int> add_table(static_cast<size_t>(nn) * nn);
  std::vector<int> mul_table(static_cast<size_t>(nn) * nn);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int u = x1 * nb + y1, v = x2 * nb + y2;
          add_table[static_cast<size_t>(u) * nn + v] =
              a.add(x1, x2) * nb + b.add(y1, y2);
          mul_table[static_cast<size_t>(u) * nn + v] =
              a.mul(x1, x2) * nb + b.mul(y1, y2);
        }
  FiniteBrace out =
      FiniteBrace::unchecked(nn, std::move(add_table), std::move(mul_table));
  out.codec.radices = a.codec.radices;
  out.codec.radices.insert(out.codec.radices.end(), b.codec.radices.begin(),
                           b.codec.radices.end());
  return out;
}

enum class SearchOutcome { found, none, budget_exceeded };

struct IsoResult {
  SearchOutcome outcome;
  std::optional<BraceHom> hom;
};

namespace detail {

struct IsoSearcher {
  const FiniteBrace& a;
  const FiniteBrace& b;
  long long budget;
  long long nodes = 0;

  std::vector<int> gens;
  std::vector<std::vector<int>> cands;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<int> domain_;

  IsoSearcher(const FiniteBrace& a_, const FiniteBrace& b_, long long budget_)
      : a(a_), b(b_), budget(budget_) {}

  // (additive order, multiplicative order, additive order of a*a, star
  // annihilator counts on both sides): preserved by any brace isomorphism.
  static std::vector<std::array<int, 5>> fingerprints(const FiniteBrace& x) {
    int n = x.order();
    std::vector<std::array<int, 5>> fp(n);
    for (int e = 0; e < n; ++e)
      fp[e] = {x.add_order(e), x.mul_order(e), x.add_order(x.star(e, e)), 0, 0};
    for (int e = 0; e < n; ++e)
      for (int b = 0; b < n; ++b) {
        if (x.star(e, b) == 0) ++fp[e][3];
        if (x.star(b, e) == 0) ++fp[b][4];
      }
    return fp;
  }

  // number of star-commuting pairs; a brace-level isomorphism invariant
  static long long star_symmetry_count(const FiniteBrace& x) {
    long long c = 0;
    for (int a = 0; a < x.order(); ++a)
      for (int b = 0; b < x.order(); ++b)
        if (x.star(a, b) == x.star(b, a)) ++c;
    return c;
  }

  bool extend(int u0, int v0, std::vector<int>& log) {
    std::vector<std::pair<int, int>> work{{u0, v0}};
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      if (map_[u] != -1) {
        if (map_[u] != v) return false;
        continue;
      }
      if (used_[v]) return false;
      map_[u] = v;
      used_[v] = 1;
      domain_.push_back(u);
      log.push_back(u);
      for (size_t i = 0; i < domain_.size(); ++i) {
        int x = domain_[i];
        work.push_back({a.add(x, u), b.add(map_[x], v)});
      }
    }
    return true;
  }

  void undo(const std::vector<int>& log, size_t domain_before) {
    for (int u : log) {
      used_[map_[u]] = 0;
      map_[u] = -1;
    }
    domain_.resize(domain_before);
  }

  // Multiplicative consistency over pairs that involve a newly mapped
  // element. Pairs whose product is not yet in the domain are deferred to
  // the full check at the leaf.
  bool partial_mul_ok(size_t new_from) const {
    for (size_t i = new_from; i < domain_.size(); ++i) {
      int x = domain_[i];
      for (size_t j = 0; j < domain_.size(); ++j) {
        int y = domain_[j];
        int p1 = a.mul(x, y), p2 = a.mul(y, x);
        if (map_[p1] != -1 && map_[p1] != b.mul(map_[x], map_[y])) return false;
        if (map_[p2] != -1 && map_[p2] != b.mul(map_[y], map_[x])) return false;
      }
    }
    return true;
  }

  SearchOutcome dfs(size_t i, BraceHom& out) {
    if (i == gens.size()) {
      if (static_cast<int>(domain_.size()) != a.order())
        throw internal_error("isomorphism search: generators did not span");
      for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
          if (map_[a.mul(x, y)] != b.mul(map_[x], map_[y]))
            return SearchOutcome::none;
      out.map = map_;
      return SearchOutcome::found;
    }
    for (int h : cands[i]) {
      if (used_[h]) continue;
      if (++nodes > budget) return SearchOutcome::budget_exceeded;
      // star relations among generators whose values are already mapped
      // must be respected; rejects most candidates without an extension
      int g = gens[i];
      int ss = a.star(g, g);
      if (map_[ss] != -1 && map_[ss] != b.star(h, h)) continue;
      bool quick_ok = true;
      for (size_t j = 0; quick_ok && j < i; ++j) {
        int hj = map_[gens[j]];
        int s1 = a.star(g, gens[j]);
        int s2 = a.star(gens[j], g);
        if (map_[s1] != -1 && map_[s1] != b.star(h, hj)) quick_ok = false;
        if (quick_ok && map_[s2] != -1 && map_[s2] != b.star(hj, h))
          quick_ok = false;
      }
      if (!quick_ok) continue;
      std::vector<int> log;
      size_t domain_before = domain_.size();
      bool ok = extend(gens[i], h, log) && partial_mul_ok(domain_before);
      if (ok) {
        SearchOutcome r = dfs(i + 1, out);
        if (r != SearchOutcome::none) return r;
      }
      undo(log, domain_before);
    }
    return SearchOutcome::none;
  }

  IsoResult run() {
    if (a.order() != b.order()) return {SearchOutcome::none, std::nullopt};
    if (a.additive_shape() != b.additive_shape())
      return {SearchOutcome::none, std::nullopt};
    auto fpa = fingerprints(a);
    auto fpb = fingerprints(b);
    {
      auto sa = fpa, sb = fpb;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return {SearchOutcome::none, std::nullopt};
    }
    SubsetMask full = SubsetMask::full(a.order());
    if (subset_star(a, full, full).count() !=
        subset_star(b, full, full).count())
      return {SearchOutcome::none, std::nullopt};
    if (star_symmetry_count(a) != star_symmetry_count(b))
      return {SearchOutcome::none, std::nullopt};

    gens = additive_generating_set(a);
    cands.resize(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
      for (int h = 0; h < b.order(); ++h)
        if (fpb[h] == fpa[gens[i]]) cands[i].push_back(h);

    map_.assign(a.order(), -1);
    used_.assign(b.order(), 0);
    map_[0] = 0;
    used_[0] = 1;
    domain_ = {0};

    BraceHom out;
    SearchOutcome r = dfs(0, out);
    if (r == SearchOutcome::found) {
      if (!is_isomorphism(a, b, out))
        throw internal_error("isomorphism search produced an invalid witness");
      return {r, out};
    }
    return {r, std::nullopt};
  }
};

}  // namespace detail

/// Backtracking search for a brace isomorphism A -> B over images of an
/// additive generating set, smallest image first, pruned by element
/// invariants. Returns a verified witness, a definite "none" after
/// exhausting the tree, or a distinct budget-exceeded outcome.
inline IsoResult isomorphism_search(const FiniteBrace& a, const FiniteBrace& b,
                                    long long budget = 2'000'000) {
  detail::IsoSearcher s(a, b, budget);
  return s.run();
}

}  // namespace bracelab
