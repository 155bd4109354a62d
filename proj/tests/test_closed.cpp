#include <doctest.h>

#include "modkalt/closed.hpp"
#include "modkalt/errors.hpp"
#include "oracles.hpp"

using namespace modkalt;

namespace {
const IntPoly kOneMinusT{1, -1};
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian(0) == IntPoly(1));
  CHECK(eulerian(1) == IntPoly(1));
  CHECK(eulerian(2) == IntPoly{1, 1});
  CHECK(eulerian(3) == IntPoly{1, 4, 1});
  CHECK(eulerian(4) == IntPoly{1, 11, 11, 1});
  CHECK(eulerian(5) == IntPoly{1, 26, 66, 26, 1});
}

TEST_CASE("eulerian recurrence matches brute-force descent counts") {
  for (int n = 1; n <= 7; ++n) {
    const IntPoly brute = testing::sum_over_sn(
        n, [](const Perm& p) { return des(p); }, [](const Perm&) { return BigInt(1); });
    CHECK(eulerian(n) == brute);
  }
}

TEST_CASE("eulerian polynomials are palindromic") {
  for (int n = 1; n <= 10; ++n) {
    const IntPoly a = eulerian(n);
    const int degree = *a.degree();
    for (int i = 0; i <= degree; ++i) CHECK(a.coeff(i) == a.coeff(degree - i));
  }
}

TEST_CASE("brute enumerator over the 4-element family") {
  CHECK(exc_poly_brute(FamilySpec(5, 3, 1), true) == IntPoly{1, -2, 1});
  CHECK(exc_poly_brute(FamilySpec(5, 3, 1), false) == IntPoly{1, 2, 1});
  CHECK(exc_poly_brute(FamilySpec(1, 1, 1), true) == IntPoly(1));
  CHECK_THROWS_AS(exc_poly_brute(FamilySpec(12, 1, 1), true, 1000), SizeLimitError);
}

TEST_CASE("signed closed form") {
  CHECK(signed_exc_poly(5, 3, 1) == pow(kOneMinusT, 2));
  CHECK(signed_exc_poly(6, 3, 2) == IntPoly::monomial(2) * pow(kOneMinusT, 3));
  CHECK(signed_exc_poly(4, 1, 1) == pow(kOneMinusT, 3));
  CHECK(signed_exc_poly(2, 5, 1) == IntPoly(1));  // n < k: the identity alone
  CHECK(signed_exc_poly(5, 3, 2).is_zero());
  CHECK_THROWS_AS(signed_exc_poly(5, 3, 4), InvalidSpecError);
}

TEST_CASE("unsigned closed form") {
  CHECK(exc_poly(5, 3, 1) == IntPoly{1, 2, 1});
  CHECK(exc_poly(6, 3, 2) == IntPoly::monomial(2) * pow(IntPoly{1, 1}, 3));
  CHECK(exc_poly(6, 3, 1) == pow(IntPoly{1, 1}, 3));
  CHECK(exc_poly(2, 5, 1) == IntPoly(1));
  CHECK(exc_poly(7, 3, 3).is_zero());
}

TEST_CASE("derangement closed form") {
  CHECK(signed_derangement_exc_poly(3, 1, 1) == IntPoly{0, 1, 1});
  CHECK(signed_derangement_exc_poly(3, 2, 1).is_zero());
  CHECK(signed_derangement_exc_poly(6, 3, 2) ==
        IntPoly::monomial(2) * pow(kOneMinusT, 3));
  CHECK(signed_derangement_exc_poly(6, 3, 1) == -IntPoly::monomial(3));
  CHECK(signed_derangement_exc_poly(2, 5, 1).is_zero());  // identity only, no derangement
}

TEST_CASE("closed forms match brute force on the full small grid") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= k; ++r) {
        CHECK(signed_exc_poly(n, k, r) == exc_poly_brute(FamilySpec(n, k, r), true));
        CHECK(exc_poly(n, k, r) == exc_poly_brute(FamilySpec(n, k, r), false));
        CHECK(signed_derangement_exc_poly(n, k, r) ==
              exc_poly_brute(FamilySpec(n, k, r, true), true));
      }
}

TEST_CASE("k = 1 specializations") {
  for (int n = 2; n <= 9; ++n) {
    CHECK(signed_exc_poly(n, 1, 1) == pow(kOneMinusT, n - 1));
    IntPoly derange = IntPoly::monomial(1) * q_bracket(n - 1);
    CHECK(signed_derangement_exc_poly(n, 1, 1) == (n % 2 == 0 ? -derange : derange));
  }
}

TEST_CASE("unsigned enumerator at the identity-only corner") {
  // constant term 1 exactly when r = 1: only the identity avoids excedances
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= k; ++r) {
        const IntPoly p = exc_poly(n, k, r);
        if (r == 1)
          CHECK(p.coeff(0) == 1);
        else if (!p.is_zero()) {
          CHECK(p.coeff(0) == 0);
          CHECK(*p.min_degree() == k + 1 - r);
        }
      }
}

TEST_CASE("signed descent enumerator") {
  CHECK(signed_des_poly(1) == IntPoly(1));
  CHECK(signed_des_poly(2) == IntPoly{1, -1});
  CHECK(signed_des_poly(3) == IntPoly{1, 0, -1});
  CHECK(signed_des_poly(4) == kOneMinusT * kOneMinusT * IntPoly{1, 1});
  for (int n = 1; n <= 7; ++n) {
    const IntPoly brute = testing::sum_over_sn(
        n, [](const Perm& p) { return des(p); },
        [](const Perm& p) { return BigInt(sgn(p)); });
    CHECK(signed_des_poly(n) == brute);
  }
}
