#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracelab/substructures.hpp"

namespace bracelab {

enum class SeriesKind { left, right, socle, central, fix };

/// One computed series. Descending kinds (left/right) start at A and stop at
/// the first repeat; ascending kinds (socle/central/fix) start at 0. Every
/// term is certified for the structure its definition promises.
struct SeriesChain {
  SeriesKind kind;
  std::vector<SubsetMask> terms;
  bool reached_terminal;  // 0 for descending kinds, A for ascending kinds

  /// Number of non-stabilized steps: terms.size() - 1.
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

inline SeriesChain compute_series(const FiniteBrace& br, SeriesKind kind) {
  int n = br.order();
  SubsetMask full = SubsetMask::full(n);
  SubsetMask zero = SubsetMask::singleton(n, 0);
  SeriesChain chain{kind, {}, false};

  auto certify_additive = [&](const SubsetMask& t) {
    SubsetCheck c = is_subbrace(br, t);
    if (!c.ok && c.violation == SubsetViolation::add_escape)
      throw internal_error("series term is not an additive subgroup");
  };

  switch (kind) {
    case SeriesKind::left:
    case SeriesKind::right: {
      chain.terms.push_back(full);
      while (true) {
        const SubsetMask& last = chain.terms.back();
        SubsetMask next = kind == SeriesKind::left
                              ? subset_star(br, full, last)
                              : subset_star(br, last, full);
        if (next == last) break;
        certify_additive(next);
        chain.terms.push_back(next);
      }
      chain.reached_terminal = chain.terms.back() == zero;
      break;
    }
    case SeriesKind::fix: {
      chain.terms.push_back(zero);
      while (true) {
        const SubsetMask& last = chain.terms.back();
        SubsetMask next(n);
        for (int a = 0; a < n; ++a) {
          bool in = true;
          for (int x = 0; x < n && in; ++x)
            in = last.test(br.star(x, a));
          if (in) next.set(a);
        }
        if (next == last) break;
        if (!is_left_ideal(br, next).ok)
          throw internal_error("fix series term is not a left ideal");
        chain.terms.push_back(next);
      }
      chain.reached_terminal = chain.terms.back() == full;
      break;
    }
    case SeriesKind::socle:
    case SeriesKind::central: {
      chain.terms.push_back(zero);
      while (true) {
        const SubsetMask& last = chain.terms.back();
        if (last == full) break;
        QuotientResult q = quotient(br, last);
        SocFixCentre sfc = socle_fix_centre(q.quotient);
        const SubsetMask& target =
            kind == SeriesKind::socle ? sfc.soc : sfc.centre;
        SubsetMask next(n);
        for (int a = 0; a < n; ++a)
          if (target.test(q.projection.map[a])) next.set(a);
        if (next == last) break;
        if (!is_ideal(br, next).ok)
          throw internal_error("ascending series term is not an ideal");
        chain.terms.push_back(next);
      }
      chain.reached_terminal = chain.terms.back() == full;
      break;
    }
  }
  return chain;
}

/// Nilpotency decisions. Each flag is established by two equivalent
/// criteria (a descending star series and an ascending series); levels are
/// the lengths of the ascending series. The trivial brace has every level 0.
struct NilpotencyReport {
  bool left_nilpotent = false;
  int left_level = -1;
  bool right_nilpotent = false;
  int right_level = -1;
  bool centrally_nilpotent = false;
  int central_level = -1;
  std::optional<int> multipermutation_level;
};

inline NilpotencyReport nilpotency_report(const FiniteBrace& br) {
  SeriesChain left = compute_series(br, SeriesKind::left);
  SeriesChain right = compute_series(br, SeriesKind::right);
  SeriesChain fix = compute_series(br, SeriesKind::fix);
  SeriesChain soc = compute_series(br, SeriesKind::socle);
  SeriesChain central = compute_series(br, SeriesKind::central);

  if (left.reached_terminal != fix.reached_terminal)
    throw internal_error("left nilpotency criteria disagree");
  if (right.reached_terminal != soc.reached_terminal)
    throw internal_error("right nilpotency criteria disagree");
  bool centrally = left.reached_terminal && right.reached_terminal;
  if (central.reached_terminal != centrally)
    throw internal_error("central nilpotency criteria disagree");

  NilpotencyReport rep;
  rep.left_nilpotent = left.reached_terminal;
  if (rep.left_nilpotent) rep.left_level = fix.length();
  rep.right_nilpotent = right.reached_terminal;
  if (rep.right_nilpotent) rep.right_level = soc.length();
  rep.centrally_nilpotent = centrally;
  if (centrally) rep.central_level = central.length();
  if (soc.reached_terminal) rep.multipermutation_level = soc.length();
  return rep;
}

struct DedekindResult {
  bool dedekind;
  std::optional<Subbrace> witness;  // least non-ideal subbrace when false
};

/// Every subbrace is an ideal. The witness, when present, is the least
/// non-ideal subbrace in the canonical (size, bit pattern) order.
inline DedekindResult is_dedekind(const FiniteBrace& br, int cap = 128) {
  for (const Subbrace& s : all_subbraces(br, cap))
    if (!s.is_ideal) return {false, s};
  return {true, std::nullopt};
}

/// A = E + Z with B = A*A inside E. For a Dedekind brace with elementary
/// abelian additive group this realizes the structure decomposition: E is
/// trivial or strong extraspecial, Z is central, and B has order 1 or p.
struct DedekindDecomposition {
  SubsetMask E, Z, B;
  bool certified;
};

inline DedekindDecomposition dedekind_structure_decompose(
    const FiniteBrace& br, int cap = 128) {
  int n = br.order();
  // elementary abelian additive group: every nonzero element has order p
  int p = n > 1 ? br.add_order(1) : 2;
  for (int a = 1; a < n; ++a)
    if (br.add_order(a) != p)
      throw std::invalid_argument(
          "structure decomposition requires an elementary abelian additive "
          "group");
  if (n > 1 && !is_prime(p))
    throw std::invalid_argument(
        "structure decomposition requires an elementary abelian additive "
        "group");
  DedekindResult ded = is_dedekind(br, cap);
  if (!ded.dedekind)
    throw std::invalid_argument("structure decomposition requires a Dedekind brace");

  SubsetMask full = SubsetMask::full(n);
  SubsetMask zero = SubsetMask::singleton(n, 0);

  if (br.is_abelian())
    return {zero, full, zero, true};

  SubsetMask b_mask = subset_star(br, full, full);
  if (b_mask.count() != p)
    throw internal_error("A*A does not have order p in a Dedekind brace with "
                         "elementary abelian additive group");
  SocFixCentre sfc = socle_fix_centre(br);
  if (!(sfc.soc == sfc.centre))
    throw internal_error("socle and centre differ in a Dedekind brace with "
                         "elementary abelian additive group");
  const SubsetMask& soc = sfc.soc;

  // Z: least basis extension of B inside Soc(A).
  SubsetMask span = b_mask;
  std::vector<int> z_gens;
  std::vector<int> soc_elems = soc.elements();
  for (int s : soc_elems) {
    if (span.test(s)) continue;
    z_gens.push_back(s);
    SubsetMask seed = span;
    seed.set(s);
    span = additive_span(br, seed);
  }
  SubsetMask z_mask = additive_span(br, z_gens);

  // E: B extended by least representatives independent modulo Soc(A).
  span = soc;
  std::vector<int> e_gens = b_mask.elements();
  for (int a = 0; a < n; ++a) {
    if (span.test(a)) continue;
    e_gens.push_back(a);
    SubsetMask seed = span;
    seed.set(a);
    span = additive_span(br, seed);
  }
  SubsetMask e_mask = additive_span(br, e_gens);

  // certification of the decomposition
  bool ok = true;
  ok = ok && (e_mask & z_mask).count() == 1;
  ok = ok && static_cast<long long>(e_mask.count()) * z_mask.count() == n;
  ok = ok && is_ideal(br, e_mask).ok && is_ideal(br, z_mask).ok;
  ok = ok && e_mask.contains(b_mask) && soc.contains(z_mask);
  SubsetMask e_star = subset_star(br, e_mask, e_mask);
  ok = ok && e_star == b_mask;
  SubsetMask z_plus_b = additive_span(br, z_mask | b_mask);
  ok = ok && z_plus_b == soc && (z_mask & b_mask).count() == 1;
  if (!ok)
    throw internal_error("structure decomposition certification failed");
  return {e_mask, z_mask, b_mask, true};
}

}  // namespace bracelab
