#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace bracelab;
using testutil::el;

TEST_CASE("series of E0(1,3)", "[series]") {
  FiniteBrace e013 = family_brace({Family::E0, 1, 3});
  SubsetMask line = additive_span(e013, std::vector<int>{el(e013, {0, 1})});

  SeriesChain soc = compute_series(e013, SeriesKind::socle);
  REQUIRE(soc.terms.size() == 3);
  CHECK(soc.terms[0] == SubsetMask::singleton(9, 0));
  CHECK(soc.terms[1] == line);
  CHECK(soc.terms[2] == SubsetMask::full(9));
  CHECK(soc.reached_terminal);
  CHECK(soc.length() == 2);

  SeriesChain left = compute_series(e013, SeriesKind::left);
  REQUIRE(left.terms.size() == 3);
  CHECK(left.terms[0] == SubsetMask::full(9));
  CHECK(left.terms[1] == line);
  CHECK(left.terms[2] == SubsetMask::singleton(9, 0));
  CHECK(left.reached_terminal);
}

TEST_CASE("fix series of an abelian brace", "[series]") {
  FiniteBrace c6 = testutil::cyclic(6);
  SeriesChain fix = compute_series(c6, SeriesKind::fix);
  REQUIRE(fix.terms.size() == 2);
  CHECK(fix.terms[0] == SubsetMask::singleton(6, 0));
  CHECK(fix.terms[1] == SubsetMask::full(6));
  CHECK(fix.length() == 1);
}

TEST_CASE("the non-abelian C6 brace is right but not left nilpotent",
          "[series]") {
  FiniteBrace s3 = testutil::c6_nonabelian_brace();
  // socle is the even part, the quotient is abelian of order 2
  SeriesChain soc = compute_series(s3, SeriesKind::socle);
  CHECK(soc.reached_terminal);
  CHECK(soc.length() == 2);
  CHECK(soc.terms[1].count() == 3);
  // the left series stalls at the even part
  SeriesChain left = compute_series(s3, SeriesKind::left);
  CHECK_FALSE(left.reached_terminal);
  CHECK(left.terms.back().count() == 3);
  NilpotencyReport rep = nilpotency_report(s3);
  CHECK_FALSE(rep.left_nilpotent);
  CHECK(rep.right_nilpotent);
  CHECK_FALSE(rep.centrally_nilpotent);
  CHECK(rep.multipermutation_level == 2);
}

TEST_CASE("nilpotency report", "[series]") {
  for (int n : {2, 3, 5, 6, 8}) {
    NilpotencyReport rep = nilpotency_report(testutil::cyclic(n));
    CHECK(rep.left_nilpotent);
    CHECK(rep.right_nilpotent);
    CHECK(rep.centrally_nilpotent);
    CHECK(rep.left_level == 1);
    CHECK(rep.right_level == 1);
    CHECK(rep.central_level == 1);
    CHECK(rep.multipermutation_level == 1);
  }
  {
    NilpotencyReport rep = nilpotency_report(family_brace({Family::E0, 1, 3}));
    CHECK(rep.centrally_nilpotent);
    CHECK(rep.central_level == 2);
  }
  {
    NilpotencyReport rep = nilpotency_report(testutil::trivial_brace());
    CHECK(rep.centrally_nilpotent);
    CHECK(rep.central_level == 0);
    CHECK(rep.multipermutation_level == 0);
  }
}

TEST_CASE("ascending and descending levels agree", "[series][property]") {
  for (const FiniteBrace& br : testutil::small_corpus()) {
    SeriesChain left = compute_series(br, SeriesKind::left);
    SeriesChain fix = compute_series(br, SeriesKind::fix);
    REQUIRE(left.reached_terminal == fix.reached_terminal);
    if (left.reached_terminal) CHECK(left.length() == fix.length());
    SeriesChain right = compute_series(br, SeriesKind::right);
    SeriesChain soc = compute_series(br, SeriesKind::socle);
    REQUIRE(right.reached_terminal == soc.reached_terminal);
    if (right.reached_terminal) CHECK(right.length() == soc.length());
  }
}

TEST_CASE("dedekind decision", "[series]") {
  for (int n : {2, 4, 6, 8}) CHECK(is_dedekind(testutil::cyclic(n)).dedekind);
  CHECK(is_dedekind(family_brace({Family::E0, 1, 3})).dedekind);

  FiniteBrace e115 = family_brace({Family::E1, 1, 5});
  DedekindResult ded = is_dedekind(e115, 512);
  REQUIRE_FALSE(ded.dedekind);
  REQUIRE(ded.witness.has_value());
  // the least non-ideal subbrace is the line through (2,1,0)
  SubsetMask expected =
      additive_span(e115, std::vector<int>{el(e115, {2, 1, 0})});
  CHECK(ded.witness->mask == expected);

  CHECK_FALSE(is_dedekind(testutil::c6_nonabelian_brace()).dedekind);
}

TEST_CASE("structure decomposition", "[series]") {
  {
    FiniteBrace ab = testutil::elementary(3, 2);
    DedekindDecomposition d = dedekind_structure_decompose(ab);
    CHECK(d.certified);
    CHECK(d.E == SubsetMask::singleton(9, 0));
    CHECK(d.Z == SubsetMask::full(9));
    CHECK(d.B.count() == 1);
  }
  {
    FiniteBrace e125 = family_brace({Family::E1, 2, 5});
    DedekindDecomposition d = dedekind_structure_decompose(e125, 512);
    CHECK(d.certified);
    CHECK(d.E == SubsetMask::full(125));
    CHECK(d.Z == SubsetMask::singleton(125, 0));
    CHECK(d.B.count() == 5);
  }
  {
    FiniteBrace e013 = family_brace({Family::E0, 1, 3});
    FiniteBrace prod = direct_product(e013, testutil::cyclic(3));
    DedekindDecomposition d = dedekind_structure_decompose(prod, 512);
    CHECK(d.certified);
    CHECK(d.E.count() == 9);
    CHECK(d.Z.count() == 3);
    InducedSubbrace e = induced_subbrace(prod, d.E);
    CHECK(isomorphism_search(e.brace, e013).outcome == SearchOutcome::found);
    InducedSubbrace z = induced_subbrace(prod, d.Z);
    CHECK(z.brace.is_abelian());
    CHECK(z.brace.additive_shape() == std::vector<int>{3});
  }
  // preconditions: non-Dedekind and non-elementary-abelian inputs
  CHECK_THROWS_AS(
      dedekind_structure_decompose(family_brace({Family::E1, 1, 5}), 512),
      std::invalid_argument);
  CHECK_THROWS_AS(dedekind_structure_decompose(testutil::cyclic(4)),
                  std::invalid_argument);
}

TEST_CASE("order-p subbraces of Dedekind p-braces sit in the socle",
          "[series][property]") {
  for (const FamilySpec spec :
       {FamilySpec{Family::E0, 1, 2}, FamilySpec{Family::E0, 1, 3},
        FamilySpec{Family::E2, 1, 2}, FamilySpec{Family::E1, 1, 3},
        FamilySpec{Family::E1, 2, 5}}) {
    FiniteBrace br = family_brace(spec);
    if (!is_dedekind(br, 512).dedekind) continue;
    int p = br.add_order(1);
    SocFixCentre sfc = socle_fix_centre(br);
    for (const Subbrace& s : all_subbraces(br, 512))
      if (s.mask.count() == p) CHECK(sfc.soc.contains(s.mask));
  }
}
