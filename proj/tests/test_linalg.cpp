#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace bracelab;

TEST_CASE("form evaluation", "[linalg]") {
  BilinearForm one3(3, {{1}});
  CHECK(form_eval(one3, FpVector::make(3, {2}), FpVector::make(3, {2})) == 1);

  BilinearForm diag21(5, {{2, 0}, {0, 1}});
  CHECK(form_eval(diag21, FpVector::make(5, {1, 1}), FpVector::make(5, {1, 1})) == 3);

  // zero argument kills the value for any form
  for (const auto& m : std::vector<std::vector<std::vector<int>>>{
           {{1}}, {{2, 1}, {0, 4}}, {{0, 0}, {0, 0}}}) {
    BilinearForm phi(5, m);
    FpVector zero = FpVector::make(5, std::vector<int>(phi.dim(), 0));
    for (long long i = 0; i < vector_count(5, phi.dim()); ++i) {
      CHECK(phi.eval(zero, vector_at(5, phi.dim(), i)) == 0);
      CHECK(phi.eval(vector_at(5, phi.dim(), i), zero) == 0);
    }
  }

  CHECK_THROWS_AS(form_eval(diag21, FpVector::make(5, {1}), FpVector::make(5, {1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(form_eval(diag21, FpVector::make(3, {1, 1}), FpVector::make(5, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("orthogonal complements", "[linalg]") {
  BilinearForm phi(3, {{1, 0}, {0, 0}});
  Subspace e1 = Subspace::span(3, 2, {{1, 0}});
  Subspace e2 = Subspace::span(3, 2, {{0, 1}});

  Subspace left_e1 = orthogonal(phi, e1, OrthogonalSide::left);
  CHECK(left_e1 == e2);

  Subspace left_e2 = orthogonal(phi, e2, OrthogonalSide::left);
  CHECK(left_e2 == Subspace::full(3, 2));

  // non-degenerate form: the complement of the full space is zero
  BilinearForm nondeg(5, {{2, 0}, {0, 1}});
  CHECK(orthogonal(nondeg, Subspace::full(5, 2), OrthogonalSide::left).dim() == 0);
  CHECK(orthogonal(nondeg, Subspace::full(5, 2), OrthogonalSide::right).dim() == 0);
}

TEST_CASE("restriction non-degeneracy", "[linalg]") {
  for (int p : {2, 3, 5, 7})
    for (int m = 1; m < p; ++m)
      CHECK(is_nondegenerate(BilinearForm(p, {{m}}), Subspace::full(p, 1)));

  BilinearForm deg(3, {{1, 0}, {0, 0}});
  CHECK_FALSE(is_nondegenerate(deg, Subspace::full(3, 2)));

  BilinearForm diag21(5, {{2, 0}, {0, 1}});
  CHECK(is_nondegenerate(diag21, Subspace::span(5, 2, {{1, 1}})));
}

TEST_CASE("strong non-degeneracy and isotropic search", "[linalg]") {
  for (int p : {2, 3, 5, 7})
    for (int m = 1; m < p; ++m)
      CHECK(is_strong_nondegenerate(BilinearForm(p, {{m}})));

  BilinearForm id2(2, {{1, 0}, {0, 1}});
  CHECK_FALSE(is_strong_nondegenerate(id2));
  auto iso = find_isotropic(id2);
  REQUIRE(iso.has_value());
  CHECK(iso->coords == std::vector<int>{1, 1});

  BilinearForm diag21(5, {{2, 0}, {0, 1}});
  CHECK(is_strong_nondegenerate(diag21));
  CHECK_FALSE(find_isotropic(diag21).has_value());

  CHECK_FALSE(find_isotropic(BilinearForm(3, {{2}})).has_value());
}

TEST_CASE("triangularization", "[linalg]") {
  for (int p : {3, 5})
    for (int m = 1; m < p; ++m) {
      auto basis = triangularize(BilinearForm(p, {{m}}));
      REQUIRE(basis.has_value());
      REQUIRE(basis->size() == 1);
      CHECK((*basis)[0].coords == std::vector<int>{1});
    }

  BilinearForm diag21(5, {{2, 0}, {0, 1}});
  auto basis = triangularize(diag21);
  REQUIRE(basis.has_value());
  REQUIRE(basis->size() == 2);
  // strictly lower entries vanish in the new basis
  for (size_t i = 0; i < basis->size(); ++i)
    for (size_t j = 0; j < i; ++j)
      CHECK(diag21.eval((*basis)[i], (*basis)[j]) == 0);
  // change of basis is invertible
  std::vector<std::vector<int>> rows;
  for (const auto& v : *basis) rows.push_back(v.coords);
  CHECK(static_cast<int>(rref(rows, 5, 2).size()) == 2);

  CHECK_FALSE(triangularize(BilinearForm(2, {{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("triangularize succeeds on every anisotropic form, dim <= 2",
          "[linalg][property]") {
  for (int p : {2, 3, 5}) {
    long long total = vector_count(p, 4);
    for (long long idx = 0; idx < total; ++idx) {
      FpVector entries = vector_at(p, 4, idx);
      BilinearForm phi(p, {{entries.coords[0], entries.coords[1]},
                           {entries.coords[2], entries.coords[3]}});
      bool strong = is_strong_nondegenerate(phi);
      auto basis = triangularize(phi);
      if (strong) {
        REQUIRE(basis.has_value());
        for (size_t i = 0; i < basis->size(); ++i)
          for (size_t j = 0; j < i; ++j)
            CHECK(phi.eval((*basis)[i], (*basis)[j]) == 0);
      }
    }
  }
}

TEST_CASE("polynomial roots", "[linalg]") {
  CHECK(poly_roots(FpPoly::make(3, {0, 1})) == std::vector<int>{0});
  CHECK(poly_roots(FpPoly::make(5, {1, 0, 1})) == std::vector<int>{2, 3});
  CHECK(poly_roots(FpPoly::make(2, {1, 1, 1})).empty());
  CHECK_THROWS_AS(poly_roots(FpPoly::make(3, {0, 0})), std::invalid_argument);
}

TEST_CASE("dimension identity and direct sums", "[linalg][property]") {
  for (int p : {2, 3}) {
    for (int dim = 1; dim <= 3; ++dim) {
      std::vector<Subspace> spaces = oracle::all_subspaces(p, dim);
      long long forms = vector_count(p, dim * dim);
      for (long long idx = 0; idx < forms; ++idx) {
        FpVector entries = vector_at(p, dim * dim, idx);
        std::vector<std::vector<int>> m(dim, std::vector<int>(dim));
        for (int i = 0; i < dim * dim; ++i) m[i / dim][i % dim] = entries.coords[i];
        BilinearForm phi(p, m);
        Subspace vperp =
            orthogonal(phi, Subspace::full(p, dim), OrthogonalSide::right);
        for (const Subspace& u : spaces) {
          Subspace lperp = orthogonal(phi, u, OrthogonalSide::left);
          Subspace meet = Subspace::intersection(u, vperp);
          REQUIRE(u.dim() + lperp.dim() - meet.dim() == dim);
          if (is_nondegenerate(phi, u)) {
            REQUIRE(Subspace::sum(u, lperp).dim() == dim);
            REQUIRE(Subspace::intersection(u, lperp).dim() == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("strong non-degeneracy equals the subspace definition",
          "[linalg][property]") {
  for (int p : {2, 3}) {
    for (int dim = 1; dim <= 3; ++dim) {
      std::vector<Subspace> spaces = oracle::all_subspaces(p, dim);
      long long forms = vector_count(p, dim * dim);
      for (long long idx = 0; idx < forms; ++idx) {
        FpVector entries = vector_at(p, dim * dim, idx);
        std::vector<std::vector<int>> m(dim, std::vector<int>(dim));
        for (int i = 0; i < dim * dim; ++i) m[i / dim][i % dim] = entries.coords[i];
        BilinearForm phi(p, m);

        bool by_isotropic = is_strong_nondegenerate(phi);
        CHECK(by_isotropic == !find_isotropic(phi).has_value());

        bool by_lines = true;
        bool by_all = true;
        for (const Subspace& u : spaces) {
          if (u.dim() == 0) continue;
          bool nd = is_nondegenerate(phi, u);
          if (u.dim() == 1 && !nd) by_lines = false;
          if (!nd) by_all = false;
        }
        REQUIRE(by_isotropic == by_all);
        REQUIRE(by_isotropic == by_lines);
      }
    }
  }
}

TEST_CASE("no anisotropic form in dimension 3 over tiny fields",
          "[linalg][property]") {
  for (int bits = 0; bits < 512; ++bits) {
    std::vector<std::vector<int>> m(3, std::vector<int>(3));
    for (int i = 0; i < 9; ++i) m[i / 3][i % 3] = (bits >> i) & 1;
    CHECK(find_isotropic(BilinearForm(2, m)).has_value());
  }
}
