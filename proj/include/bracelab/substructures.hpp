#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bracelab/brace.hpp"

namespace bracelab {

enum class ClosureKind { additive, multiplicative, brace };

/// Least superset of `seed` closed under the requested operations (and, by
/// finiteness, the corresponding inverses). Fixed-point worklist; each new
/// element is paired with every current member exactly once.
inline SubsetMask closure(const FiniteBrace& a, const SubsetMask& seed,
                          ClosureKind kind) {
  if (kind == ClosureKind::additive) return additive_span(a, seed);
  SubsetMask t = SubsetMask::singleton(a.order(), 0);
  std::vector<int> members{0};
  std::vector<int> work;
  seed.for_each([&](int g) {
    if (!t.test(g)) {
      t.set(g);
      members.push_back(g);
      work.push_back(g);
    }
  });
  auto push = [&](int x) {
    if (!t.test(x)) {
      t.set(x);
      members.push_back(x);
      work.push_back(x);
    }
  };
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int v = members[i];
      push(a.mul(u, v));
      push(a.mul(v, u));
      if (kind == ClosureKind::brace) {
        push(a.add(u, v));
      }
    }
  }
  return t;
}

enum class SubsetViolation {
  none,
  missing_zero,
  add_escape,     // a + b outside, (a, b) in S x S
  mul_escape,     // a b outside, (a, b) in S x S
  lambda_escape,  // lambda_a(s) outside, (a, s) in A x S
  normality_escape,  // a s a^-1 outside, (a, s) in A x S
  star_escape,       // x * y outside, x in A and y in S or vice versa
};

struct SubsetCheck {
  bool ok;
  SubsetViolation violation = SubsetViolation::none;
  int witness_a = -1;
  int witness_b = -1;
};

/// S is a subbrace: contains 0 and is closed under both operations
/// (subgroups follow by finiteness). Witness is the least violating pair in
/// lexicographic scan order.
inline SubsetCheck is_subbrace(const FiniteBrace& br, const SubsetMask& s) {
  if (!s.test(0)) return {false, SubsetViolation::missing_zero, 0, 0};
  std::vector<int> elems = s.elements();
  for (int a : elems)
    for (int b : elems) {
      if (!s.test(br.add(a, b)))
        return {false, SubsetViolation::add_escape, a, b};
      if (!s.test(br.mul(a, b)))
        return {false, SubsetViolation::mul_escape, a, b};
    }
  return {true};
}

/// Left ideal: subbrace invariant under every lambda map.
inline SubsetCheck is_left_ideal(const FiniteBrace& br, const SubsetMask& s) {
  SubsetCheck sub = is_subbrace(br, s);
  if (!sub.ok) return sub;
  std::vector<int> elems = s.elements();
  for (int a = 0; a < br.order(); ++a)
    for (int x : elems)
      if (!s.test(br.lambda(a, x)))
        return {false, SubsetViolation::lambda_escape, a, x};
  return {true};
}

namespace detail {

inline SubsetCheck ideal_by_definition(const FiniteBrace& br,
                                       const SubsetMask& s) {
  SubsetCheck li = is_left_ideal(br, s);
  if (!li.ok) return li;
  std::vector<int> elems = s.elements();
  for (int a = 0; a < br.order(); ++a)
    for (int x : elems)
      if (!s.test(br.mul(br.mul(a, x), br.inv(a))))
        return {false, SubsetViolation::normality_escape, a, x};
  return {true};
}

inline SubsetCheck ideal_by_star_inclusion(const FiniteBrace& br,
                                           const SubsetMask& s) {
  SubsetCheck sub = is_subbrace(br, s);
  if (!sub.ok) return sub;
  // least violating pair over all (u, v) with u in A, v in S or u in S, v in A
  for (int u = 0; u < br.order(); ++u)
    for (int v = 0; v < br.order(); ++v) {
      if (s.test(v) && !s.test(br.star(u, v)))
        return {false, SubsetViolation::star_escape, u, v};
      if (s.test(u) && !s.test(br.star(u, v)))
        return {false, SubsetViolation::star_escape, u, v};
    }
  return {true};
}

}  // namespace detail

/// Ideal test, run through both the definition (lambda-invariant subbrace
/// whose multiplicative group is normal) and the star characterization
/// (A*I and I*A inside I). The two are equivalent; a disagreement is an
/// engine bug and raises internal_error. The reported witness comes from
/// the star scan.
inline SubsetCheck is_ideal(const FiniteBrace& br, const SubsetMask& s) {
  SubsetCheck by_def = detail::ideal_by_definition(br, s);
  SubsetCheck by_star = detail::ideal_by_star_inclusion(br, s);
  if (by_def.ok != by_star.ok)
    throw internal_error("ideal criteria disagree on a subset of order " +
                         std::to_string(s.count()));
  return by_star;
}

struct Annihilators {
  SubsetMask left, right, full;
};

/// Left:  { a : a * x = 0 for all x in S }.
/// Right: { a : x * a = 0 for all x in S }.
/// Full:  both, intersected with { a : ax = xa for all x in S }.
inline Annihilators annihilators(const FiniteBrace& br, const SubsetMask& s) {
  if (s.none()) throw std::invalid_argument("annihilators of the empty set");
  int n = br.order();
  Annihilators out{SubsetMask(n), SubsetMask(n), SubsetMask(n)};
  std::vector<int> elems = s.elements();
  for (int a = 0; a < n; ++a) {
    bool left = true, right = true, comm = true;
    for (int x : elems) {
      if (left && br.star(a, x) != 0) left = false;
      if (right && br.star(x, a) != 0) right = false;
      if (comm && br.mul(a, x) != br.mul(x, a)) comm = false;
      if (!left && !right) break;
    }
    if (left) out.left.set(a);
    if (right) out.right.set(a);
    if (left && right && comm) out.full.set(a);
  }
  return out;
}

struct SocFixCentre {
  SubsetMask soc, fix, centre;
};

/// Socle, fix and centre: the annihilators of the whole brace. Socle and
/// centre are certified ideals and fix a certified left ideal before
/// returning; failures would be engine bugs.
inline SocFixCentre socle_fix_centre(const FiniteBrace& br) {
  Annihilators ann = annihilators(br, SubsetMask::full(br.order()));
  if (!is_ideal(br, ann.left).ok)
    throw internal_error("socle is not an ideal");
  if (!is_ideal(br, ann.full).ok)
    throw internal_error("centre is not an ideal");
  if (!is_left_ideal(br, ann.right).ok)
    throw internal_error("fix is not a left ideal");
  return {ann.left, ann.right, ann.full};
}

/// A certified closed subset with its derived flags.
struct Subbrace {
  SubsetMask mask;
  bool is_additive_subgroup = false;
  bool is_multiplicative_subgroup = false;
  bool is_lambda_invariant = false;
  bool is_ideal = false;
};

/// Every subbrace of `br`. Since subbraces are exactly the multiplicatively
/// closed additive subgroups, all additive subgroups are generated first
/// (growing by one cyclic block at a time, deduplicated) and then filtered.
/// Output is sorted by (size, bit pattern as integer).
inline std::vector<Subbrace> all_subbraces(const FiniteBrace& br,
                                           int cap = 128) {
  int n = br.order();
  if (n > cap)
    throw cap_exceeded("subbrace enumeration at order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));

  std::unordered_set<SubsetMask, SubsetMask::Hash> seen;
  std::deque<SubsetMask> queue;
  std::vector<SubsetMask> groups;
  SubsetMask zero = SubsetMask::singleton(n, 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    SubsetMask s = queue.front();
    queue.pop_front();
    groups.push_back(s);
    std::vector<int> base = s.elements();
    for (int x = 1; x < n; ++x) {
      if (s.test(x)) continue;
      SubsetMask t = s;
      int m = x;
      while (m != 0) {
        if (!t.test(m))
          for (int e : base) t.set(br.add(e, m));
        m = br.add(m, x);
      }
      if (seen.insert(t).second) queue.push_back(t);
    }
  }

  std::vector<Subbrace> out;
  for (const SubsetMask& s : groups) {
    bool closed = true;
    std::vector<int> elems = s.elements();
    for (int a : elems) {
      for (int b : elems)
        if (!s.test(br.mul(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    Subbrace sb{s, true, true, false, false};
    sb.is_lambda_invariant = is_left_ideal(br, s).ok;
    sb.is_ideal = is_ideal(br, s).ok;
    out.push_back(std::move(sb));
  }
  std::sort(out.begin(), out.end(), [](const Subbrace& a, const Subbrace& b) {
    return SubsetMask::size_value_less(a.mask, b.mask);
  });
  return out;
}

struct SylowComponent {
  int prime;
  SubsetMask mask;
  bool ideal;
};

struct SylowDecomposition {
  std::vector<SylowComponent> components;
  /// True when every component is an ideal and the components realize A as
  /// their direct sum (pairwise trivial intersections, orders multiply).
  bool direct_sum_certified;
};

inline SylowDecomposition sylow_decomposition(const FiniteBrace& br) {
  int n = br.order();
  SylowDecomposition out;
  out.direct_sum_certified = true;
  long long product = 1;
  for (int p : br.primes()) {
    SubsetMask m(n);
    for (int a = 0; a < n; ++a) {
      int o = br.add_order(a);
      while (o % p == 0) o /= p;
      if (o == 1) m.set(a);
    }
    bool ideal = is_ideal(br, m).ok;
    product *= m.count();
    out.components.push_back({p, m, ideal});
    if (!ideal) out.direct_sum_certified = false;
  }
  if (product != n) out.direct_sum_certified = false;
  for (size_t i = 0; i < out.components.size() && out.direct_sum_certified; ++i)
    for (size_t j = i + 1; j < out.components.size(); ++j)
      if ((out.components[i].mask & out.components[j].mask).count() != 1)
        out.direct_sum_certified = false;
  return out;
}

struct QuotientResult {
  FiniteBrace quotient;
  BraceHom projection;  // element -> coset id in the quotient
};

/// Quotient by an ideal. Cosets are numbered by ascending least
/// representative, so the coset of 0 (the ideal itself) is element 0. The
/// projection is verified to preserve both operations before returning.
inline QuotientResult quotient(const FiniteBrace& br, const SubsetMask& ideal) {
  SubsetCheck chk = is_ideal(br, ideal);
  if (!chk.ok)
    throw std::invalid_argument(
        "quotient by a non-ideal (witness pair " +
        std::to_string(chk.witness_a) + ", " + std::to_string(chk.witness_b) +
        ")");
  int n = br.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> rep;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    int id = static_cast<int>(rep.size());
    rep.push_back(a);
    ideal.for_each([&](int i) { coset_of[br.add(a, i)] = id; });
    if (coset_of[a] != id)
      throw internal_error("quotient cosets do not partition the brace");
  }
  int q = static_cast<int>(rep.size());
  std::vector<int> qadd(static_cast<size_t>(q) * q), qmul(qadd.size());
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      qadd[i * q + j] = coset_of[br.add(rep[i], rep[j])];
      qmul[i * q + j] = coset_of[br.mul(rep[i], rep[j])];
    }
  FiniteBrace qb = FiniteBrace::unchecked(q, std::move(qadd), std::move(qmul));
  BraceHom proj{coset_of};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (proj.map[br.add(a, b)] != qb.add(proj.map[a], proj.map[b]) ||
          proj.map[br.mul(a, b)] != qb.mul(proj.map[a], proj.map[b]))
        throw internal_error("quotient projection is not a homomorphism");
    }
  return {std::move(qb), std::move(proj)};
}

struct InducedSubbrace {
  FiniteBrace brace;
  std::vector<int> elements;  // ascending ids in the parent
};

/// The subbrace on `mask` as a standalone brace, elements relabeled in
/// ascending order (0 stays 0).
inline InducedSubbrace induced_subbrace(const FiniteBrace& br,
                                        const SubsetMask& mask) {
  SubsetCheck chk = is_subbrace(br, mask);
  if (!chk.ok)
    throw std::invalid_argument("induced_subbrace on a non-subbrace mask");
  std::vector<int> elems = mask.elements();
  int k = static_cast<int>(elems.size());
  std::vector<int> index(br.order(), -1);
  for (int i = 0; i < k; ++i) index[elems[i]] = i;
  std::vector<int> add_table(static_cast<size_t>(k) * k), mul_table(add_table.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      add_table[i * k + j] = index[br.add(elems[i], elems[j])];
      mul_table[i * k + j] = index[br.mul(elems[i], elems[j])];
    }
  return {FiniteBrace::unchecked(k, std::move(add_table), std::move(mul_table)),
          std::move(elems)};
}

}  // namespace bracelab
