#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bracelab/enumeration.hpp"
#include "bracelab/extraspecial.hpp"
#include "bracelab/io.hpp"
#include "bracelab/series.hpp"
#include "bracelab/ybe.hpp"

namespace bracelab {

/// Outcome of one named verification sweep: instance tally plus the least
/// counterexamples found (at most a handful are kept).
struct CheckResult {
  std::string name;
  bool passed = true;
  long long instances = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  void fail(const std::string& msg) {
    passed = false;
    if (failures.size() < 8) failures.push_back(msg);
  }
};

namespace detail {

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace detail

/// Every abelian group of the given order, as canonical invariant-factor
/// specs: the cross product of exponent partitions per prime.
inline std::vector<AbelianGroupSpec> all_abelian_groups(int order) {
  std::vector<std::pair<int, int>> primes;  // (p, e)
  int m = order;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      primes.push_back({d, e});
    }
  if (m > 1) primes.push_back({m, 1});

  std::vector<std::vector<int>> combos{{}};  // flattened primary factor lists
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> next;
    for (const auto& part : detail::partitions(e))
      for (const auto& base : combos) {
        std::vector<int> ext = base;
        for (int k : part) {
          int q = 1;
          for (int i = 0; i < k; ++i) q *= p;
          ext.push_back(q);
        }
        next.push_back(std::move(ext));
      }
    combos = std::move(next);
  }
  std::vector<AbelianGroupSpec> out;
  for (const auto& c : combos)
    out.push_back(c.empty() ? AbelianGroupSpec{{}} : AbelianGroupSpec::from_factors(c));
  return out;
}

/// The verification corpus: every brace on every abelian group of order up
/// to enum_max (both the raw regular-subgroup list and isomorphism-class
/// representatives), the three families over small primes, and a few direct
/// products that mix primes.
struct Corpus {
  struct Entry {
    FiniteBrace brace;
    std::string name;
  };
  std::vector<Entry> enumerated;      // one per regular subgroup
  std::vector<Entry> enumerated_iso;  // deduplicated up to isomorphism
  std::vector<Entry> families;        // with their FamilySpec
  std::vector<FamilySpec> family_specs;
  std::vector<Entry> products;
};

inline Corpus build_corpus(int enum_max = 9, int family_p_max = 5) {
  Corpus c;
  for (int order = 1; order <= enum_max; ++order)
    for (const AbelianGroupSpec& g : all_abelian_groups(order)) {
      // stay within the holomorph size the subgroup search is designed for;
      // at orders up to 16 this only skips the elementary abelian 2-group
      // of rank 4, whose holomorph has 322560 elements
      if (order > 1 &&
          static_cast<long long>(order) *
                  automorphisms(g, std::max(enum_max, 64)).size() >
              4096)
        continue;
      std::vector<FiniteBrace> all = enumerate_braces(g, false, enum_max);
      std::vector<FiniteBrace> iso = deduplicate_up_to_iso(all);
      for (size_t i = 0; i < all.size(); ++i)
        c.enumerated.push_back(
            {std::move(all[i]), g.display() + "#" + std::to_string(i)});
      for (size_t i = 0; i < iso.size(); ++i)
        c.enumerated_iso.push_back(
            {std::move(iso[i]), g.display() + "/iso#" + std::to_string(i)});
    }
  for (int p : {2, 3, 5, 7}) {
    if (p > family_p_max) break;
    for (int m = 1; m < p; ++m)
      c.family_specs.push_back({Family::E0, m, p});
    for (int m = 0; m < p; ++m) c.family_specs.push_back({Family::E1, m, p});
    for (int m = 0; m < p; ++m) c.family_specs.push_back({Family::E2, m, p});
  }
  for (const FamilySpec& spec : c.family_specs)
    c.families.push_back({family_brace(spec), spec.display()});

  FiniteBrace e012 = family_brace({Family::E0, 1, 2});
  c.products.push_back({direct_product(e012, abelian_brace(AbelianGroupSpec{{2}})),
                        "E0(1,2)+C2"});
  c.products.push_back({direct_product(e012, abelian_brace(AbelianGroupSpec{{3}})),
                        "E0(1,2)+C3"});
  c.products.push_back(
      {direct_product(e012, abelian_brace(AbelianGroupSpec::from_factors({2, 2}))),
       "E0(1,2)+C2xC2"});
  c.products.push_back({direct_product(e012, abelian_brace(AbelianGroupSpec{{4}})),
                        "E0(1,2)+C4"});
  c.products.push_back(
      {direct_product(e012, family_brace({Family::E0, 1, 3})), "E0(1,2)+E0(1,3)"});
  return c;
}

namespace detail {

template <class F>
CheckResult timed_check(const std::string& name, F body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

inline bool elementary_abelian(const FiniteBrace& br) {
  if (br.order() == 1) return true;
  int p = br.add_order(1);
  if (!is_prime(p)) return false;
  for (int a = 1; a < br.order(); ++a)
    if (br.add_order(a) != p) return false;
  return true;
}

/// All subgroups of the multiplicative group, by generator growth.
inline std::vector<SubsetMask> multiplicative_subgroups(const FiniteBrace& br) {
  int n = br.order();
  std::unordered_set<SubsetMask, SubsetMask::Hash> seen;
  std::deque<SubsetMask> queue;
  std::vector<SubsetMask> out;
  SubsetMask zero = SubsetMask::singleton(n, 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    SubsetMask s = queue.front();
    queue.pop_front();
    out.push_back(s);
    for (int x = 1; x < n; ++x) {
      if (s.test(x)) continue;
      SubsetMask seed = s;
      seed.set(x);
      SubsetMask t = closure(br, seed, ClosureKind::multiplicative);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return out;
}

inline bool multiplicative_group_dedekind(const FiniteBrace& br) {
  for (const SubsetMask& s : multiplicative_subgroups(br)) {
    std::vector<int> elems = s.elements();
    for (int a = 0; a < br.order(); ++a)
      for (int x : elems)
        if (!s.test(br.mul(br.mul(a, x), br.inv(a)))) return false;
  }
  return true;
}

}  // namespace detail

/// Criterion: every family member over p in {2,3,5,7} and all legal m passes
/// the full table validation, brace law included.
inline CheckResult check_family_validity() {
  return detail::timed_check("family-validity", [](CheckResult& r) {
    for (int p : {2, 3, 5, 7}) {
      std::vector<FamilySpec> specs;
      for (int m = 1; m < p; ++m) specs.push_back({Family::E0, m, p});
      for (int m = 0; m < p; ++m) specs.push_back({Family::E1, m, p});
      for (int m = 0; m < p; ++m) specs.push_back({Family::E2, m, p});
      for (const FamilySpec& spec : specs) {
        ++r.instances;
        FiniteBrace br = family_brace(spec);
        try {
          FiniteBrace::validate(br.order(), br.add_table(), br.mul_table());
        } catch (const validation_error& e) {
          r.fail(spec.display() + ": " + e.what());
        }
      }
    }
  });
}

/// Criterion: the polynomial criterion decides Dedekind membership for every
/// family member over p in {2,3,5,7}; in particular E1(m,5) is Dedekind
/// exactly for m in {2,3}.
inline CheckResult check_dedekind_criterion() {
  return detail::timed_check("dedekind-criterion", [](CheckResult& r) {
    for (int p : {2, 3, 5, 7}) {
      std::vector<FamilySpec> specs;
      for (int m = 1; m < p; ++m) specs.push_back({Family::E0, m, p});
      for (int m = 0; m < p; ++m) specs.push_back({Family::E1, m, p});
      for (int m = 0; m < p; ++m) specs.push_back({Family::E2, m, p});
      for (const FamilySpec& spec : specs) {
        ++r.instances;
        bool predicted = dedekind_criterion(spec);
        bool actual = is_dedekind(family_brace(spec), 512).dedekind;
        if (predicted != actual)
          r.fail(spec.display() + ": criterion says " +
                 (predicted ? "true" : "false") + ", enumeration says " +
                 (actual ? "true" : "false"));
      }
    }
    for (int m = 1; m < 5; ++m) {
      bool expect = m == 2 || m == 3;
      if (dedekind_criterion({Family::E1, m, 5}) != expect)
        r.fail("E1(" + std::to_string(m) + ",5) criterion mismatch");
    }
  });
}

/// Criterion: over the full enumeration of braces of order <= max_order on
/// all abelian additive groups, every Dedekind brace is centrally nilpotent.
inline CheckResult check_central_nilpotency(const Corpus& corpus,
                                            int max_order = 8) {
  return detail::timed_check("central-nilpotency", [&](CheckResult& r) {
    for (const Corpus::Entry& e : corpus.enumerated) {
      if (e.brace.order() > max_order) continue;
      ++r.instances;
      if (!is_dedekind(e.brace, 512).dedekind) continue;
      if (!nilpotency_report(e.brace).centrally_nilpotent)
        r.fail(e.name + ": Dedekind but not centrally nilpotent");
    }
  });
}

namespace detail {

/// Dedekind braces with elementary abelian additive group: the enumerated
/// elementary abelian orders plus every Dedekind family member.
inline std::vector<Corpus::Entry> dedekind_elementary_corpus(
    const Corpus& corpus) {
  std::vector<Corpus::Entry> out;
  for (const Corpus::Entry& e : corpus.enumerated_iso) {
    if (!elementary_abelian(e.brace)) continue;
    if (e.brace.order() == 1) continue;
    if (is_dedekind(e.brace, 512).dedekind) out.push_back(e);
  }
  for (const Corpus::Entry& e : corpus.families)
    if (is_dedekind(e.brace, 512).dedekind) out.push_back(e);
  return out;
}

}  // namespace detail

/// Criterion: for every Dedekind corpus brace with elementary abelian
/// additive group, the socle and upper central series agree term by term.
inline CheckResult check_soc_equals_zeta(const Corpus& corpus) {
  return detail::timed_check("soc-equals-zeta", [&](CheckResult& r) {
    for (const Corpus::Entry& e : detail::dedekind_elementary_corpus(corpus)) {
      ++r.instances;
      SeriesChain soc = compute_series(e.brace, SeriesKind::socle);
      SeriesChain cen = compute_series(e.brace, SeriesKind::central);
      if (soc.terms.size() != cen.terms.size()) {
        r.fail(e.name + ": series lengths differ");
        continue;
      }
      for (size_t i = 0; i < soc.terms.size(); ++i)
        if (soc.terms[i] != cen.terms[i]) {
          r.fail(e.name + ": term " + std::to_string(i) + " differs");
          break;
        }
    }
  });
}

/// Criterion: the same braces reach the whole brace at the second socle term.
inline CheckResult check_soc2_reaches_A(const Corpus& corpus) {
  return detail::timed_check("soc2-reaches-A", [&](CheckResult& r) {
    for (const Corpus::Entry& e : detail::dedekind_elementary_corpus(corpus)) {
      ++r.instances;
      SeriesChain soc = compute_series(e.brace, SeriesKind::socle);
      if (!soc.reached_terminal || soc.length() > 2)
        r.fail(e.name + ": socle series does not reach A in two steps");
    }
  });
}

/// Criterion: the structure decomposition succeeds on every Dedekind
/// elementary abelian corpus brace: A = E + Z certified, E trivial or strong
/// extraspecial, A*A of order 1 or p, and Z + E*E = centre = socle.
inline CheckResult check_structure_decomposition(const Corpus& corpus) {
  return detail::timed_check("structure-decomposition", [&](CheckResult& r) {
    for (const Corpus::Entry& e : detail::dedekind_elementary_corpus(corpus)) {
      ++r.instances;
      try {
        DedekindDecomposition d = dedekind_structure_decompose(e.brace, 512);
        if (!d.certified) {
          r.fail(e.name + ": decomposition not certified");
          continue;
        }
        int p = e.brace.order() > 1 ? e.brace.add_order(1) : 2;
        int bsize = d.B.count();
        if (bsize != 1 && bsize != p)
          r.fail(e.name + ": |A*A| = " + std::to_string(bsize));
        if (d.E.count() > 1) {
          InducedSubbrace sub = induced_subbrace(e.brace, d.E);
          auto cert = recognize_extraspecial(sub.brace);
          if (!cert || !cert->strong)
            r.fail(e.name + ": E is neither trivial nor strong extraspecial");
        }
      } catch (const std::exception& ex) {
        r.fail(e.name + ": " + ex.what());
      }
    }
  });
}

/// Criterion: twenty direct sums E + Z, with E ranging over every strong
/// family member for p <= 5 and Z an elementary abelian p-group of order at
/// most 9, are all Dedekind.
inline CheckResult check_sufficiency() {
  return detail::timed_check("sufficiency", [](CheckResult& r) {
    std::vector<FamilySpec> strong;
    for (int p : {2, 3, 5}) {
      for (int m = 1; m < p; ++m) strong.push_back({Family::E0, m, p});
      for (int m = 0; m < p; ++m)
        for (Family f : {Family::E1, Family::E2}) {
          FamilySpec spec{f, m, p};
          if (is_strong_nondegenerate(family_form(spec))) strong.push_back(spec);
        }
    }
    struct Combo {
      FamilySpec spec;
      std::vector<int> z_factors;  // empty = trivial Z
    };
    std::vector<Combo> combos;
    for (const FamilySpec& spec : strong) combos.push_back({spec, {}});
    combos.push_back({{Family::E0, 1, 2}, {2}});
    combos.push_back({{Family::E0, 1, 2}, {2, 2}});
    combos.push_back({{Family::E2, 1, 2}, {2}});
    combos.push_back({{Family::E0, 1, 3}, {3}});
    combos.push_back({{Family::E0, 2, 3}, {3, 3}});
    combos.push_back({{Family::E1, 1, 3}, {3}});
    combos.push_back({{Family::E0, 1, 5}, {5}});
    while (combos.size() > 20) combos.pop_back();
    if (combos.size() < 20)
      r.fail("fewer than 20 combinations available");
    for (const Combo& combo : combos) {
      ++r.instances;
      FiniteBrace a = family_brace(combo.spec);
      if (!combo.z_factors.empty())
        a = direct_product(
            a, abelian_brace(AbelianGroupSpec::from_factors(combo.z_factors)));
      DedekindResult ded = is_dedekind(a, 512);
      if (!ded.dedekind)
        r.fail(combo.spec.display() + " + Z: not Dedekind");
    }
  });
}

/// Criterion: every brace built from a strong non-degenerate form of
/// dimension <= 2 over F_2, F_3, F_5 classifies into a family with a
/// machine-verified isomorphism, and its order never exceeds p^3.
inline CheckResult check_classification() {
  return detail::timed_check("classification", [](CheckResult& r) {
    for (int p : {2, 3, 5}) {
      std::vector<BilinearForm> forms;
      for (int m = 1; m < p; ++m) forms.push_back(BilinearForm(p, {{m}}));
      long long total = 1;
      for (int i = 0; i < 4; ++i) total *= p;
      for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        int a = static_cast<int>(rest % p); rest /= p;
        int b = static_cast<int>(rest % p); rest /= p;
        int c = static_cast<int>(rest % p); rest /= p;
        int d = static_cast<int>(rest % p);
        BilinearForm phi(p, {{a, b}, {c, d}});
        if (is_strong_nondegenerate(phi)) forms.push_back(std::move(phi));
      }
      for (const BilinearForm& phi : forms) {
        ++r.instances;
        FiniteBrace br = brace_from_form(phi);
        long long p3 = static_cast<long long>(p) * p * p;
        if (br.order() > p3) {
          r.fail("form brace exceeds p^3 at p=" + std::to_string(p));
          continue;
        }
        auto cert = recognize_extraspecial(br);
        if (!cert || !cert->strong) {
          r.fail("strong form did not give a strong extraspecial brace (p=" +
                 std::to_string(p) + ")");
          continue;
        }
        try {
          Classification cls = classify_strong(br);
          if (!is_isomorphism(br, cls.representative, cls.witness))
            r.fail("witness for " + cls.spec.display() + " failed re-check");
        } catch (const std::exception& ex) {
          r.fail(std::string("classification error: ") + ex.what());
        }
      }
    }
  });
}

/// Criterion: no bilinear form of dimension 3 over a small prime field is
/// anisotropic: exhaustive over all 512 forms at p=2, and at least 2000
/// seeded random forms each over F_3 and F_5.
inline CheckResult check_chevalley_bound() {
  return detail::timed_check("chevalley-bound", [](CheckResult& r) {
    for (int bits = 0; bits < 512; ++bits) {
      std::vector<std::vector<int>> m(3, std::vector<int>(3));
      for (int i = 0; i < 9; ++i) m[i / 3][i % 3] = (bits >> i) & 1;
      ++r.instances;
      if (!find_isotropic(BilinearForm(2, m)))
        r.fail("anisotropic 3-dim form over F_2 found");
    }
    std::mt19937 rng(0x5eed);
    for (int p : {3, 5}) {
      std::uniform_int_distribution<int> dist(0, p - 1);
      for (int k = 0; k < 2000; ++k) {
        std::vector<std::vector<int>> m(3, std::vector<int>(3));
        for (auto& row : m)
          for (int& e : row) e = dist(rng);
        ++r.instances;
        if (!find_isotropic(BilinearForm(p, m)))
          r.fail("anisotropic 3-dim form over F_" + std::to_string(p));
      }
    }
  });
}

/// Criterion: the associated solutions of all corpus braces of order <= 16
/// and all family braces for p <= 5 pass the braid, involutivity and
/// non-degeneracy checks.
inline CheckResult check_ybe(const Corpus& corpus) {
  return detail::timed_check("ybe-checks", [&](CheckResult& r) {
    auto run = [&](const Corpus::Entry& e) {
      ++r.instances;
      SolutionReport rep = check_solution(associated_solution(e.brace));
      if (!rep.all()) r.fail(e.name + ": solution checks failed");
    };
    for (const Corpus::Entry& e : corpus.enumerated_iso)
      if (e.brace.order() <= 16) run(e);
    for (const Corpus::Entry& e : corpus.products)
      if (e.brace.order() <= 16) run(e);
    for (size_t i = 0; i < corpus.families.size(); ++i)
      if (corpus.family_specs[i].p <= 5) run(corpus.families[i]);
  });
}

/// Criterion: enumeration recovers the two stated counterexamples: a brace
/// on C4 x C2 with multiplicative group C4 x C2 that is not Dedekind with an
/// order-2 non-ideal subbrace, and a brace on C6 with non-abelian
/// multiplicative group whose order-2 subbrace is not an ideal.
inline CheckResult check_counterexamples() {
  return detail::timed_check("counterexamples", [](CheckResult& r) {
    {
      ++r.instances;
      bool found = false;
      AbelianGroupSpec g = AbelianGroupSpec::from_factors({4, 2});
      for (const FiniteBrace& br : enumerate_braces(g, true, 16)) {
        bool mul_abelian = true;
        for (int a = 0; a < br.order() && mul_abelian; ++a)
          for (int b = a + 1; b < br.order(); ++b)
            if (br.mul(a, b) != br.mul(b, a)) {
              mul_abelian = false;
              break;
            }
        if (!mul_abelian) continue;
        std::vector<int> shape = abelian_invariant_factors(
            br.order(), [&br](int a, int b) { return br.mul(a, b); });
        if (shape != std::vector<int>{4, 2}) continue;
        DedekindResult ded = is_dedekind(br, 512);
        if (ded.dedekind) continue;
        for (const Subbrace& s : all_subbraces(br, 512))
          if (s.mask.count() == 2 && !s.is_ideal) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found)
        r.fail("no non-Dedekind C4xC2-multiplicative brace with an order-2 "
               "non-ideal subbrace on C4 x C2");
    }
    {
      ++r.instances;
      bool found = false;
      AbelianGroupSpec g{{6}};
      for (const FiniteBrace& br : enumerate_braces(g, true, 16)) {
        bool mul_abelian = true;
        for (int a = 0; a < br.order() && mul_abelian; ++a)
          for (int b = a + 1; b < br.order(); ++b)
            if (br.mul(a, b) != br.mul(b, a)) {
              mul_abelian = false;
              break;
            }
        if (mul_abelian) continue;
        // the unique order-2 additive subgroup
        SubsetMask two(br.order());
        two.set(0);
        for (int a = 1; a < br.order(); ++a)
          if (br.add_order(a) == 2) two.set(a);
        if (two.count() == 2 && is_subbrace(br, two).ok &&
            !is_ideal(br, two).ok) {
          found = true;
          break;
        }
      }
      if (!found)
        r.fail("no C6 brace with non-abelian multiplicative group and an "
               "order-2 non-ideal subbrace");
    }
  });
}

/// Every corpus brace with cyclic additive group and Dedekind multiplicative
/// group is Dedekind.
inline CheckResult check_cyclic_dedekind(const Corpus& corpus) {
  return detail::timed_check("cyclic-dedekind", [&](CheckResult& r) {
    for (const Corpus::Entry& e : corpus.enumerated_iso) {
      if (e.brace.additive_shape().size() > 1) continue;  // cyclic only
      if (!detail::multiplicative_group_dedekind(e.brace)) continue;
      ++r.instances;
      if (!is_dedekind(e.brace, 512).dedekind)
        r.fail(e.name + ": cyclic additive + Dedekind multiplicative, but "
                        "not Dedekind");
    }
  });
}

/// Every Dedekind corpus brace splits as the direct sum of its additive
/// Sylow subgroups, each an ideal.
inline CheckResult check_sylow_decomposition(const Corpus& corpus) {
  return detail::timed_check("sylow-decomposition", [&](CheckResult& r) {
    auto run = [&](const Corpus::Entry& e) {
      if (!is_dedekind(e.brace, 512).dedekind) return;
      ++r.instances;
      SylowDecomposition d = sylow_decomposition(e.brace);
      if (!d.direct_sum_certified)
        r.fail(e.name + ": Sylow decomposition not certified");
    };
    for (const Corpus::Entry& e : corpus.enumerated_iso) run(e);
    for (const Corpus::Entry& e : corpus.products) run(e);
  });
}

/// The identity and lemma suites: the two star expansions, the lambda
/// bookkeeping, cyclic subbraces at star-square zero, annihilator subgroup
/// and normality statements, agreement of the paired nilpotency criteria,
/// and the orthogonal-complement dimension identity.
inline CheckResult check_identity_suites(const Corpus& corpus) {
  return detail::timed_check("identity-suites", [&](CheckResult& r) {
    std::vector<const Corpus::Entry*> braces;
    for (const Corpus::Entry& e : corpus.enumerated_iso) braces.push_back(&e);
    for (const Corpus::Entry& e : corpus.families) braces.push_back(&e);
    for (const Corpus::Entry& e : corpus.products) braces.push_back(&e);

    for (const Corpus::Entry* pe : braces) {
      const FiniteBrace& br = pe->brace;
      int n = br.order();
      ++r.instances;

      // star expansions and lambda multiplicativity over all triples
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
          int ab = br.mul(a, b);
          for (int c = 0; c < n; ++c) {
            if (br.star(a, br.add(b, c)) !=
                br.add(br.star(a, b), br.star(a, c))) {
              r.fail(pe->name + ": a*(b+c) identity fails");
              ok = false;
              break;
            }
            int sbc = br.star(b, c);
            if (br.star(ab, c) !=
                br.add(br.add(br.star(a, sbc), sbc), br.star(a, c))) {
              r.fail(pe->name + ": (ab)*c identity fails");
              ok = false;
              break;
            }
            if (br.lambda(ab, c) != br.lambda(a, br.lambda(b, c))) {
              r.fail(pe->name + ": lambda is not multiplicative");
              ok = false;
              break;
            }
          }
        }

      // lambda consistency on pairs
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n; ++b) {
          if (br.mul(a, b) != br.add(a, br.lambda(a, b)) ||
              br.star(a, b) != br.sub(br.lambda(a, b), b)) {
            r.fail(pe->name + ": lambda consistency fails");
            ok = false;
            break;
          }
        }

      // cyclic subbrace at a*a = 0: one closure, equal in all three senses,
      // with a^n = na and a^-1 = -a
      for (int a = 0; a < n && ok; ++a) {
        if (br.star(a, a) != 0) continue;
        SubsetMask seed = SubsetMask::singleton(n, a);
        SubsetMask addc = closure(br, seed, ClosureKind::additive);
        SubsetMask mulc = closure(br, seed, ClosureKind::multiplicative);
        SubsetMask brc = closure(br, seed, ClosureKind::brace);
        if (!(addc == mulc) || !(addc == brc)) {
          r.fail(pe->name + ": cyclic closures differ at a*a = 0");
          ok = false;
          break;
        }
        if (br.inv(a) != br.neg(a)) {
          r.fail(pe->name + ": a^-1 != -a at a*a = 0");
          ok = false;
          break;
        }
        for (int k = 1; k <= br.add_order(a); ++k)
          if (br.mul_pow(a, k) != br.add_pow(a, k)) {
            r.fail(pe->name + ": a^n != na at a*a = 0");
            ok = false;
            break;
          }
      }

      // annihilator statements over a deterministic family of subsets
      std::vector<SubsetMask> subsets;
      subsets.push_back(SubsetMask::full(n));
      SocFixCentre sfc = socle_fix_centre(br);
      subsets.push_back(sfc.soc);
      subsets.push_back(sfc.centre);
      for (int a = 0; a < std::min(n, 3); ++a)
        subsets.push_back(SubsetMask::singleton(n, a));
      if (n <= 16)
        for (const Subbrace& s : all_subbraces(br, 512))
          subsets.push_back(s.mask);
      for (const SubsetMask& s : subsets) {
        if (s.none()) continue;
        Annihilators ann = annihilators(br, s);
        std::vector<int> left = ann.left.elements();
        for (int a : left)
          for (int b : left)
            if (!ann.left.test(br.mul(a, b))) {
              r.fail(pe->name + ": left annihilator not a multiplicative subgroup");
              ok = false;
            }
        std::vector<int> right = ann.right.elements();
        for (int a : right)
          for (int b : right)
            if (!ann.right.test(br.add(a, b))) {
              r.fail(pe->name + ": right annihilator not an additive subgroup");
              ok = false;
            }
        std::vector<int> full = ann.full.elements();
        for (int a : full) {
          for (int b : full)
            if (!ann.full.test(br.mul(a, b))) {
              r.fail(pe->name + ": annihilator not a multiplicative subgroup");
              ok = false;
            }
          s.for_each([&](int x) {
            if (br.mul(a, x) != br.mul(x, a)) {
              r.fail(pe->name + ": annihilator escapes the centraliser");
              ok = false;
            }
          });
        }
        if (is_ideal(br, s).ok) {
          for (int a = 0; a < n; ++a)
            for (int x : left)
              if (!ann.left.test(br.mul(br.mul(a, x), br.inv(a)))) {
                r.fail(pe->name + ": left annihilator of an ideal not normal");
                ok = false;
              }
          for (int a = 0; a < n; ++a)
            for (int x : full)
              if (!ann.full.test(br.mul(br.mul(a, x), br.inv(a)))) {
                r.fail(pe->name + ": annihilator of an ideal not normal");
                ok = false;
              }
        }
        if (!ok) break;
      }

      // paired nilpotency criteria agree (the report throws on mismatch)
      try {
        nilpotency_report(br);
      } catch (const internal_error& ex) {
        r.fail(pe->name + ": " + ex.what());
      }
    }

    // orthogonal-complement dimension identity, exhaustive at p = 2, 3 and
    // sampled at p = 5
    std::mt19937 rng(0xd1);
    for (int p : {2, 3, 5}) {
      for (int dim = 1; dim <= 3; ++dim) {
        long long entries = 1;
        for (int i = 0; i < dim * dim; ++i) entries *= p;
        bool exhaustive = p <= 3;
        long long samples = exhaustive ? entries : 400;
        std::uniform_int_distribution<long long> dist(0, entries - 1);
        for (long long k = 0; k < samples; ++k) {
          long long idx = exhaustive ? k : dist(rng);
          std::vector<std::vector<int>> m(dim, std::vector<int>(dim));
          long long rest = idx;
          for (int i = 0; i < dim * dim; ++i) {
            m[i / dim][i % dim] = static_cast<int>(rest % p);
            rest /= p;
          }
          BilinearForm phi(p, m);
          ++r.instances;
          Subspace vspace = Subspace::full(p, dim);
          Subspace vperp = orthogonal(phi, vspace, OrthogonalSide::right);
          // subspaces as spans of random vector subsets
          for (int t = 0; t < 6; ++t) {
            std::vector<std::vector<int>> gens;
            for (int g = 0; g < t % 4; ++g) {
              std::vector<int> v(dim);
              for (int& x : v)
                x = static_cast<int>(rng() % p);
              gens.push_back(std::move(v));
            }
            Subspace u = Subspace::span(p, dim, gens);
            Subspace lperp = orthogonal(phi, u, OrthogonalSide::left);
            Subspace meet = Subspace::intersection(u, vperp);
            if (u.dim() + lperp.dim() - meet.dim() != dim) {
              r.fail("dimension identity fails at p=" + std::to_string(p));
              break;
            }
            if (is_nondegenerate(phi, u)) {
              if (Subspace::sum(u, lperp).dim() != dim ||
                  Subspace::intersection(u, lperp).dim() != 0) {
                r.fail("direct sum fails at p=" + std::to_string(p));
                break;
              }
            }
          }
        }
      }
    }
  });
}

inline std::vector<std::string> verify_theorem_names() {
  return {"central-nilpotency", "soc-equals-zeta",     "soc2-reaches-A",
          "structure-decomposition", "sylow-decomposition", "dedekind-criterion",
          "classification",     "chevalley-bound",     "ybe-checks",
          "cyclic-dedekind",    "counterexamples"};
}

/// Dispatch for the command-line harness. Unknown names throw
/// invalid_argument. max_order applies to the checks that enumerate.
inline std::vector<CheckResult> run_verify(const std::string& name,
                                           int max_order = 8) {
  auto corpus = [&]() { return build_corpus(std::max(max_order, 9), 7); };
  if (name == "central-nilpotency") {
    Corpus c = build_corpus(max_order);
    return {check_central_nilpotency(c, max_order)};
  }
  if (name == "soc-equals-zeta") {
    Corpus c = corpus();
    return {check_soc_equals_zeta(c)};
  }
  if (name == "soc2-reaches-A") {
    Corpus c = corpus();
    return {check_soc2_reaches_A(c)};
  }
  if (name == "structure-decomposition") {
    Corpus c = corpus();
    return {check_structure_decomposition(c), check_sufficiency()};
  }
  if (name == "sylow-decomposition") {
    Corpus c = corpus();
    return {check_sylow_decomposition(c)};
  }
  if (name == "dedekind-criterion") return {check_dedekind_criterion()};
  if (name == "classification") return {check_classification()};
  if (name == "chevalley-bound") return {check_chevalley_bound()};
  if (name == "ybe-checks") {
    Corpus c = build_corpus(std::max(max_order, 16), 7);
    return {check_ybe(c)};
  }
  if (name == "cyclic-dedekind") {
    Corpus c = corpus();
    return {check_cyclic_dedekind(c)};
  }
  if (name == "counterexamples") return {check_counterexamples()};
  throw std::invalid_argument("unknown theorem name: " + name);
}

}  // namespace bracelab
