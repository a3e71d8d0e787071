#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace bracelab;
using testutil::el;

TEST_CASE("form braces and the three families", "[extraspecial]") {
  for (int p : {2, 3, 5})
    for (int m = 1; m < p; ++m) {
      FiniteBrace from_form = brace_from_form(BilinearForm(p, {{m}}));
      FiniteBrace fam = family_brace({Family::E0, m, p});
      CHECK(from_form.add_table() == fam.add_table());
      CHECK(from_form.mul_table() == fam.mul_table());
      CHECK(fam.order() == p * p);
    }
  for (int p : {2, 3, 5})
    for (int m = 0; m < p; ++m) {
      FiniteBrace from_form =
          brace_from_form(BilinearForm(p, {{m, 0}, {0, 1}}));
      FiniteBrace fam = family_brace({Family::E1, m, p});
      CHECK(from_form.add_table() == fam.add_table());
      CHECK(from_form.mul_table() == fam.mul_table());
      CHECK(fam.order() == p * p * p);
    }

  // zero form: the product degenerates to the sum
  FiniteBrace zero = brace_from_form(BilinearForm(3, {{0, 0}, {0, 0}}));
  CHECK(zero.is_abelian());
  CHECK_FALSE(recognize_extraspecial(zero).has_value());

  FiniteBrace e212 = family_brace({Family::E2, 1, 2});
  CHECK(e212.star(el(e212, {1, 0, 0}), el(e212, {0, 1, 0})) ==
        el(e212, {0, 0, 1}));

  CHECK_NOTHROW(family_brace({Family::E1, 0, 5}));
  CHECK_THROWS_AS(family_brace({Family::E0, 0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(family_brace({Family::E0, 5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(family_brace({Family::E1, 1, 6}), std::invalid_argument);
}

TEST_CASE("family star products match their formulas", "[extraspecial][property]") {
  for (int p : {2, 3, 5})
    for (int m = 0; m < p; ++m) {
      PrimeField f(p);
      if (m > 0) {
        FiniteBrace e0 = family_brace({Family::E0, m, p});
        for (int k1 = 0; k1 < p; ++k1)
          for (int k2 = 0; k2 < p; ++k2)
            for (int t1 = 0; t1 < p; ++t1)
              for (int t2 = 0; t2 < p; ++t2)
                CHECK(e0.star(el(e0, {k1, k2}), el(e0, {t1, t2})) ==
                      el(e0, {0, f.mul(m, f.mul(k1, t1))}));
      }
      FiniteBrace e1 = family_brace({Family::E1, m, p});
      FiniteBrace e2 = family_brace({Family::E2, m, p});
      for (int k1 = 0; k1 < p; ++k1)
        for (int k2 = 0; k2 < p; ++k2)
          for (int t1 = 0; t1 < p; ++t1)
            for (int t2 = 0; t2 < p; ++t2) {
              int mk1t1 = f.mul(m, f.mul(k1, t1));
              int k2t2 = f.mul(k2, t2);
              CHECK(e1.star(el(e1, {k1, k2, 0}), el(e1, {t1, t2, 0})) ==
                    el(e1, {0, 0, f.add(mk1t1, k2t2)}));
              CHECK(e2.star(el(e2, {k1, k2, 0}), el(e2, {t1, t2, 0})) ==
                    el(e2, {0, 0, f.add(f.add(mk1t1, f.mul(k1, t2)), k2t2)}));
            }
    }
}

TEST_CASE("extraspecial recognition", "[extraspecial]") {
  CHECK_FALSE(recognize_extraspecial(testutil::cyclic(4)).has_value());
  CHECK_FALSE(recognize_extraspecial(testutil::elementary(3, 2)).has_value());
  CHECK_FALSE(recognize_extraspecial(testutil::c6_nonabelian_brace()).has_value());

  {
    FiniteBrace e013 = family_brace({Family::E0, 1, 3});
    auto cert = recognize_extraspecial(e013);
    REQUIRE(cert.has_value());
    CHECK(cert->c == el(e013, {0, 1}));
    CHECK(cert->strong);
  }
  {
    FiniteBrace e105 = family_brace({Family::E1, 0, 5});
    auto cert = recognize_extraspecial(e105);
    REQUIRE(cert.has_value());
    CHECK(cert->c == el(e105, {0, 0, 1}));
    CHECK_FALSE(cert->strong);
  }
}

TEST_CASE("strongness matches the polynomial conditions",
          "[extraspecial][property]") {
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m < p; ++m) {
      auto cert = recognize_extraspecial(family_brace({Family::E0, m, p}));
      REQUIRE(cert.has_value());
      CHECK(cert->strong);
    }
    for (int m = 0; m < p; ++m) {
      auto cert1 = recognize_extraspecial(family_brace({Family::E1, m, p}));
      REQUIRE(cert1.has_value());
      bool strong1 =
          m != 0 && poly_roots(FpPoly::make(p, {1, 0, m})).empty();
      CHECK(cert1->strong == strong1);
      CHECK(cert1->strong ==
            is_strong_nondegenerate(family_form({Family::E1, m, p})));

      auto cert2 = recognize_extraspecial(family_brace({Family::E2, m, p}));
      REQUIRE(cert2.has_value());
      bool strong2 =
          m != 0 && poly_roots(FpPoly::make(p, {1, 1, m})).empty();
      CHECK(cert2->strong == strong2);
      CHECK(cert2->strong ==
            is_strong_nondegenerate(family_form({Family::E2, m, p})));
    }
  }
}

TEST_CASE("every extraspecial brace has A*A = C and second socle everything",
          "[extraspecial][property]") {
  for (int p : {2, 3, 5})
    for (int m = 0; m < p; ++m)
      for (Family f : {Family::E0, Family::E1, Family::E2}) {
        if (f == Family::E0 && m == 0) continue;
        FiniteBrace br = family_brace({f, m, p});
        auto cert = recognize_extraspecial(br);
        if (!cert) continue;
        SubsetMask full = SubsetMask::full(br.order());
        CHECK(subset_star(br, full, full) == cert->C);
        SeriesChain soc = compute_series(br, SeriesKind::socle);
        CHECK(soc.reached_terminal);
        CHECK(soc.length() <= 2);
        if (cert->strong) {
          SocFixCentre sfc = socle_fix_centre(br);
          CHECK(sfc.soc == sfc.centre);
        }
      }
}

TEST_CASE("form extraction", "[extraspecial]") {
  for (int p : {2, 3, 5})
    for (int m = 1; m < p; ++m) {
      FiniteBrace e0 = family_brace({Family::E0, m, p});
      auto cert = recognize_extraspecial(e0);
      REQUIRE(cert.has_value());
      BilinearForm phi = extract_form(e0, *cert);
      REQUIRE(phi.dim() == 1);
      CHECK(phi.at(0, 0) == m);
    }

  // representatives ascend by id, so E2 extracts with the coordinates swapped
  for (int p : {2, 3, 5})
    for (int m = 1; m < p; ++m) {
      FiniteBrace e2 = family_brace({Family::E2, m, p});
      auto cert = recognize_extraspecial(e2);
      REQUIRE(cert.has_value());
      BilinearForm phi = extract_form(e2, *cert);
      REQUIRE(phi.dim() == 2);
      CHECK(phi.matrix() == std::vector<std::vector<int>>{{1, 0}, {1, m}});
      // congruent to the defining matrix: the rebuilt brace is isomorphic
      FiniteBrace rebuilt = brace_from_form(phi);
      CHECK(isomorphism_search(rebuilt, e2).outcome == SearchOutcome::found);
    }

  // stale certificate: a certificate for another brace is rejected
  FiniteBrace e013 = family_brace({Family::E0, 1, 3});
  FiniteBrace e113 = family_brace({Family::E1, 1, 3});
  auto cert = recognize_extraspecial(e113);
  REQUIRE(cert.has_value());
  CHECK_THROWS_AS(extract_form(e013, *cert), std::invalid_argument);
}

TEST_CASE("the carried form is bilinear: star is biadditive",
          "[extraspecial][property]") {
  for (int p : {2, 3, 5})
    for (int m = 0; m < p; ++m)
      for (Family f : {Family::E0, Family::E1, Family::E2}) {
        if (f == Family::E0 && m == 0) continue;
        FiniteBrace br = family_brace({f, m, p});
        if (!recognize_extraspecial(br)) continue;
        int n = br.order();
        for (int x = 0; x < n; ++x)
          for (int xp = 0; xp < n; ++xp)
            for (int y = 0; y < n; ++y) {
              CHECK(br.star(br.add(x, xp), y) ==
                    br.add(br.star(x, y), br.star(xp, y)));
              CHECK(br.star(y, br.add(x, xp)) ==
                    br.add(br.star(y, x), br.star(y, xp)));
            }
      }
}

TEST_CASE("round trip through the form", "[extraspecial][property]") {
  for (int p : {2, 3, 5})
    for (int m = 0; m < p; ++m)
      for (Family f : {Family::E0, Family::E1, Family::E2}) {
        if (f == Family::E0 && m == 0) continue;
        FiniteBrace br = family_brace({f, m, p});
        auto cert = recognize_extraspecial(br);
        if (!cert) continue;
        BilinearForm phi = extract_form(br, *cert);
        // bilinearity on coset representatives is structural in the matrix;
        // the rebuilt brace must be isomorphic to the original
        FiniteBrace rebuilt = brace_from_form(phi);
        CHECK(isomorphism_search(rebuilt, br).outcome == SearchOutcome::found);
      }
}

TEST_CASE("classification of strong braces", "[extraspecial]") {
  {
    FiniteBrace e025 = family_brace({Family::E0, 2, 5});
    Classification cls = classify_strong(e025);
    CHECK(cls.spec.family == Family::E0);
    CHECK(cls.spec.p == 5);
    CHECK(is_isomorphism(e025, cls.representative, cls.witness));
  }
  {
    // all E0(m,p) for fixed p are isomorphic, so the scan returns m = 1
    FiniteBrace e023 = family_brace({Family::E0, 2, 3});
    Classification cls = classify_strong(e023);
    CHECK(cls.spec.family == Family::E0);
    CHECK(cls.spec.m == 1);
    Classification cls1 = classify_strong(family_brace({Family::E0, 1, 3}));
    CHECK(cls1.spec.m == 1);
  }
  {
    BilinearForm phi(5, {{1, 1}, {0, 1}});
    REQUIRE(is_strong_nondegenerate(phi));
    FiniteBrace br = brace_from_form(phi);
    Classification cls = classify_strong(br);
    CHECK((cls.spec.family == Family::E1 || cls.spec.family == Family::E2));
    CHECK(is_isomorphism(br, cls.representative, cls.witness));
  }
  CHECK_THROWS_AS(classify_strong(testutil::cyclic(4)), std::invalid_argument);
  CHECK_THROWS_AS(classify_strong(family_brace({Family::E1, 0, 3})),
                  std::invalid_argument);
}

TEST_CASE("dedekind criterion", "[extraspecial]") {
  for (int p : {2, 3, 5, 7})
    for (int m = 1; m < p; ++m) CHECK(dedekind_criterion({Family::E0, m, p}));

  CHECK_FALSE(dedekind_criterion({Family::E1, 1, 5}));
  CHECK(dedekind_criterion({Family::E1, 2, 5}));
  CHECK(dedekind_criterion({Family::E1, 3, 5}));
  CHECK_FALSE(dedekind_criterion({Family::E1, 4, 5}));
  CHECK(dedekind_criterion({Family::E2, 1, 2}));
  // the split-off-centre edge: E1(0,p) is Dedekind, E2(0,p) never is
  for (int p : {2, 3, 5}) {
    CHECK(dedekind_criterion({Family::E1, 0, p}));
    CHECK_FALSE(dedekind_criterion({Family::E2, 0, p}));
  }
}

TEST_CASE("criterion equals the exhaustive decision", "[extraspecial][property]") {
  for (int p : {2, 3, 5})
    for (Family f : {Family::E0, Family::E1, Family::E2})
      for (int m = f == Family::E0 ? 1 : 0; m < p; ++m) {
        FamilySpec spec{f, m, p};
        CHECK(dedekind_criterion(spec) ==
              is_dedekind(family_brace(spec), 512).dedekind);
      }
}
