#include <doctest.h>

#include "lefschetz/corpus_io.hpp"
#include "lefschetz/graded_algebra.hpp"
#include "test_support.hpp"

using namespace lefschetz;

namespace {

AlgebraElement basis_elt(const GradedAlgebra& a, int degree, int index) {
  AlgebraElement e{degree, std::vector<Rational>(static_cast<std::size_t>(a.dim(degree)))};
  e.coords[static_cast<std::size_t>(index)] = Rational(1);
  return e;
}

}  // namespace

TEST_CASE("exterior algebra on two generators validates") {
  const auto t2 = exterior_algebra(2);
  CHECK(t2.n() == 1);
  CHECK(t2.space().dims == std::vector<int>{1, 2, 1});
  CHECK(validate_algebra(t2).ok());

  // x*y = -y*x and x*x = 0, checked through the product table.
  const auto x = basis_elt(t2, 1, 0);
  const auto y = basis_elt(t2, 1, 1);
  const auto xy = multiply(t2, x, y);
  const auto yx = multiply(t2, y, x);
  CHECK(xy.coords == std::vector<Rational>{Rational(1)});
  CHECK(yx.coords == std::vector<Rational>{Rational(-1)});
  CHECK(multiply(t2, x, x).is_zero());
}

TEST_CASE("flipping any one odd-odd structure constant is caught") {
  for (int m : {2, 4}) {
    const auto pristine = exterior_algebra(m);
    int mutations = 0;
    for (const auto& entry : pristine.sorted_products()) {
      if (entry.d1 % 2 == 0 || entry.d2 % 2 == 0) continue;
      if (entry.d1 == entry.d2 && entry.i == entry.j) continue;
      bool nonzero = false;
      for (const auto& c : entry.coeffs) nonzero = nonzero || !c.is_zero();
      if (!nonzero) continue;
      auto mutated = pristine;
      auto coeffs = entry.coeffs;
      for (auto& cc : coeffs) cc = -cc;
      mutated.set_product(entry.d1, entry.i, entry.d2, entry.j, coeffs);
      ++mutations;
      const auto report = validate_algebra(mutated);
      REQUIRE_FALSE(report.ok());
      bool has_comm_issue = false;
      for (const auto& issue : report.issues)
        has_comm_issue =
            has_comm_issue || issue.kind == ValidationIssue::Kind::GradedCommutativity;
      CHECK(has_comm_issue);
    }
    CHECK(mutations > 0);
  }
}

TEST_CASE("unit violations are caught") {
  AlgebraBuilder b(1, {1, 0, 1}, {{"1"}, {}, {"t"}});
  auto a = b.build();
  a.set_product(0, 0, 2, 0, {Rational(2)});  // unit * t = 2t
  const auto report = validate_algebra(a);
  CHECK_FALSE(report.ok());
  CHECK(report.issues.front().kind == ValidationIssue::Kind::Unit);
}

TEST_CASE("connected-sum ring validates and multiplies as expected") {
  const auto a = cp2cp2_algebra();
  CHECK(validate_algebra(a).ok());

  const auto one = basis_elt(a, 0, 0);
  const auto cls_a = basis_elt(a, 2, 0);
  const auto cls_b = basis_elt(a, 2, 1);
  CHECK(multiply(a, one, cls_b).coords == cls_b.coords);
  CHECK(multiply(a, cls_a, cls_b).is_zero());
  CHECK(multiply(a, cls_a, cls_a).coords == std::vector<Rational>{Rational(1)});
  CHECK_THROWS_AS(multiply(a, AlgebraElement{2, {Rational(1)}}, one), std::invalid_argument);
}

TEST_CASE("lefschetz matrices") {
  SUBCASE("power zero is the identity") {
    const auto a = cp2cp2_algebra();
    const EulerClass e{{Rational(1), Rational(0)}};
    CHECK(lefschetz_matrix(a, e, 2, 0) == RationalMatrix::identity(2));
    CHECK(lefschetz_matrix(a, e, -5, 0) == RationalMatrix::zeros(0, 0));
  }
  SUBCASE("connected sum: L^2 on H^0 is the top generator") {
    const auto a = cp2cp2_algebra();
    const EulerClass e{{Rational(1), Rational(0)}};
    CHECK(lefschetz_matrix(a, e, 0, 2) == RationalMatrix{{Rational(1)}});
  }
  SUBCASE("4-torus with square-zero euler class") {
    const auto a = exterior_algebra(4);
    std::vector<Rational> coords(static_cast<std::size_t>(a.dim(2)));
    coords[0] = Rational(1);  // x1x2
    CHECK(lefschetz_matrix(a, EulerClass{coords}, 0, 2) == RationalMatrix{{Rational(0)}});
  }
}

TEST_CASE("lefschetz operator power law on corpus algebras") {
  for (const auto& entry : bundled_corpus()) {
    const auto& a = entry.model.algebra;
    const EulerClass& e = entry.model.euler;
    const int top = a.top_degree();
    for (int k = 0; k <= top; ++k)
      for (int p = 0; k + 2 * p <= top + 2 && p <= 3; ++p)
        for (int q = 0; q + p <= 3; ++q) {
          const auto lhs = lefschetz_matrix(a, e, k, p + q);
          const auto rhs = lefschetz_matrix(a, e, k + 2 * p, q) * lefschetz_matrix(a, e, k, p);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("pairing data") {
  SUBCASE("torus pairing is nonsingular") {
    const auto pd = build_pairing(exterior_algebra(2));
    REQUIRE(pd);
    CHECK(pd->nonsingular_everywhere());
  }
  SUBCASE("no top class means not applicable") {
    AlgebraBuilder b(1, {1, 1, 0}, {{"1"}, {"t"}, {}});
    CHECK_FALSE(build_pairing(b.build()));
  }
  SUBCASE("connected sum pairing in degree 2 is diag(1,1)") {
    const auto pd = build_pairing(cp2cp2_algebra());
    REQUIRE(pd);
    CHECK(pd->matrices[2] == RationalMatrix::identity(2));
    CHECK(pd->nonsingular_everywhere());
  }
  SUBCASE("nonsingular pairing forces dimension symmetry") {
    for (const auto& entry : bundled_corpus()) {
      const auto pd = build_pairing(entry.model.algebra);
      REQUIRE(pd);
      if (!pd->nonsingular_everywhere()) continue;
      const auto& dims = entry.model.algebra.space().dims;
      const int top = entry.model.algebra.top_degree();
      for (int k = 0; k <= top; ++k)
        CHECK(dims[static_cast<std::size_t>(k)] == dims[static_cast<std::size_t>(top - k)]);
    }
  }
}
