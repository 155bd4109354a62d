#include <doctest.h>

#include <random>

#include "modkalt/closed.hpp"
#include "modkalt/errors.hpp"
#include "modkalt/families.hpp"
#include "modkalt/polymat.hpp"
#include "oracles.hpp"

using namespace modkalt;

using testing::expected_relabeled;
using testing::poly_identity;

namespace {

const IntPoly kT = IntPoly::monomial(1);
const IntPoly kOneMinusT{1, -1};

}  // namespace

TEST_CASE("family matrix construction") {
  CHECK(poly_mat_equal(family_matrix(3, 1, 1), eulerian_matrix(3)));

  const PolyMatrix checker = family_matrix(4, 2, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(checker(i, j).is_zero() == (((i - j) % 2 + 2) % 2 == 1));

  const PolyMatrix m632 = family_matrix(6, 3, 2);
  CHECK(m632(0, 1) == kT);
  CHECK(m632(0, 0).is_zero());
  CHECK(m632(2, 0) == IntPoly(1));

  CHECK_THROWS_AS(family_matrix(5, 3, 2), InvalidSpecError);
  CHECK_THROWS_AS(family_matrix(4, 2, 3), InvalidSpecError);
}

TEST_CASE("derangement matrix") {
  const PolyMatrix d = derangement_matrix(3, 1);
  for (int i = 0; i < 3; ++i) CHECK(d(i, i).is_zero());
  CHECK(d(1, 0) == IntPoly(1));
  CHECK(d(0, 1) == kT);
  CHECK(det(d) == IntPoly{0, 1, 1});  // t + t^2

  // rows of singleton residue classes have no support at all
  const PolyMatrix d53 = derangement_matrix(5, 3);
  for (int j = 0; j < 5; ++j) CHECK(d53(2, j).is_zero());
}

TEST_CASE("determinants of the building blocks") {
  for (int size = 1; size <= 8; ++size) {
    CHECK(det(eulerian_matrix(size)) == pow(kOneMinusT, size - 1));
    IntPoly shifted = kT * pow(kOneMinusT, size - 1);
    CHECK(det(eulerian_matrix_shifted(size)) == (size % 2 == 0 ? -shifted : shifted));
    IntPoly derange = kT * q_bracket(size - 1);
    CHECK(det(derangement_block(size)) == (size % 2 == 0 ? -derange : derange));
  }
}

TEST_CASE("determinant examples") {
  CHECK(det(poly_identity(4)) == IntPoly(1));
  CHECK(det(PolyMatrix(0, 0)) == IntPoly(1));
  CHECK(det(family_matrix(5, 3, 1)) == pow(kOneMinusT, 2));
  CHECK(det(family_matrix(6, 3, 2)) == IntPoly::monomial(2) * pow(kOneMinusT, 3));
  CHECK(det(family_matrix(6, 3, 3)) == -(kT * pow(kOneMinusT, 3)));
}

TEST_CASE("fraction-free and cofactor engines agree") {
  std::mt19937 rng(23);
  for (int size = 1; size <= 5; ++size)
    for (int trial = 0; trial < 20; ++trial) {
      const PolyMatrix m = testing::random_poly_matrix(rng, size, 2, 2);
      CHECK(det(m) == det_cofactor(m));
    }
  // sparse matrices exercise the zero-pivot handling
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    PolyMatrix m = testing::random_poly_matrix(rng, 5, 1, 2);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (coin(rng) != 0) m(i, j) = IntPoly();
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("permanent examples") {
  CHECK(permanent(poly_identity(5)) == IntPoly(1));
  CHECK(permanent(eulerian_matrix(2)) == IntPoly{1, 1});
  CHECK(permanent(family_matrix(5, 3, 1)) == IntPoly{1, 2, 1});
  CHECK_THROWS_AS(permanent(poly_identity(13)), SizeLimitError);
  CHECK_NOTHROW(permanent(poly_identity(13), 13));
}

TEST_CASE("determinant size limit is configurable") {
  CHECK_THROWS_AS(det(poly_identity(65)), SizeLimitError);
  CHECK(det(poly_identity(65), 65) == IntPoly(1));
  CHECK(det(poly_identity(10), 10) == IntPoly(1));
}

TEST_CASE("Ryser agrees with the defining sum") {
  std::mt19937 rng(29);
  for (int size = 1; size <= 6; ++size)
    for (int trial = 0; trial < 10; ++trial) {
      const PolyMatrix m = testing::random_poly_matrix(rng, size, 2, 2);
      CHECK(permanent(m) == testing::permanent_naive(m));
    }
}

TEST_CASE("permanent of the eulerian block is the Eulerian polynomial") {
  for (int size = 1; size <= 7; ++size) {
    CHECK(permanent(eulerian_matrix(size)) == eulerian(size));
    CHECK(permanent(eulerian_matrix_shifted(size)) == kT * eulerian(size));
  }
}

TEST_CASE("kronecker product") {
  std::mt19937 seed_rng(31);
  const PolyMatrix a = testing::random_poly_matrix(seed_rng, 2, 2, 2);
  CHECK(poly_mat_equal(kronecker(a, poly_identity(1)), a));
  CHECK(kronecker(a, poly_identity(3)).rows() == 6);

  CHECK(det(kronecker(eulerian_matrix(2), poly_identity(2))) == pow(kOneMinusT, 2));

  std::mt19937 rng(37);
  std::uniform_int_distribution<int> size_dist(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int an = size_dist(rng), bn = size_dist(rng);
    const PolyMatrix a2 = testing::random_poly_matrix(rng, an, 1, 2);
    const PolyMatrix b2 = testing::random_poly_matrix(rng, bn, 1, 2);
    CHECK(det(kronecker(a2, b2)) == pow(det(a2), bn) * pow(det(b2), an));
  }
}

TEST_CASE("relabel produces the block forms") {
  SUBCASE("k does not divide n") {
    CHECK(poly_mat_equal(relabel(family_matrix(5, 3, 1), 5, 3, 1),
                         expected_relabeled(5, 3, 1, false)));
    CHECK(poly_mat_equal(relabel(derangement_matrix(5, 3), 5, 3, 1),
                         expected_relabeled(5, 3, 1, true)));
    CHECK(poly_mat_equal(relabel(family_matrix(7, 3, 1), 7, 3, 1),
                         expected_relabeled(7, 3, 1, false)));
    CHECK(poly_mat_equal(relabel(family_matrix(7, 5, 1), 7, 5, 1),
                         expected_relabeled(7, 5, 1, false)));
  }
  SUBCASE("k divides n") {
    CHECK(poly_mat_equal(relabel(family_matrix(6, 3, 1), 6, 3, 1),
                         expected_relabeled(6, 3, 1, false)));
    CHECK(poly_mat_equal(relabel(family_matrix(6, 3, 2), 6, 3, 2),
                         expected_relabeled(6, 3, 2, false)));
    CHECK(poly_mat_equal(relabel(family_matrix(6, 3, 3), 6, 3, 3),
                         expected_relabeled(6, 3, 3, false)));
    CHECK(poly_mat_equal(relabel(family_matrix(8, 4, 3), 8, 4, 3),
                         expected_relabeled(8, 4, 3, false)));
    CHECK(poly_mat_equal(relabel(derangement_matrix(6, 3), 6, 3, 1),
                         expected_relabeled(6, 3, 1, true)));
  }
  SUBCASE("identity is fixed by conjugation") {
    CHECK(poly_mat_equal(relabel(poly_identity(6), 6, 3, 1), poly_identity(6)));
    CHECK(poly_mat_equal(relabel(poly_identity(7), 7, 3, 1), poly_identity(7)));
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(relabel(poly_identity(5), 5, 3, 2), InvalidSpecError);
    CHECK_THROWS_AS(relabel(poly_identity(4), 5, 3, 1), InvalidSpecError);
  }
}

TEST_CASE("relabel preserves determinant and permanent") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= k; ++r) {
        if (r >= 2 && n % k != 0) continue;
        const PolyMatrix m = family_matrix(n, k, r);
        const PolyMatrix moved = relabel(m, n, k, r);
        CHECK(det(moved) == det(m));
        CHECK(permanent(moved) == permanent(m));
      }
}

TEST_CASE("tridiagonal determinant") {
  CHECK(tridiag_det({IntPoly(5)}, {}, {}) == IntPoly(5));
  CHECK(tridiag_det({}, {}, {}) == IntPoly(1));
  CHECK_THROWS_AS(tridiag_det({IntPoly(1), IntPoly(2)}, {IntPoly(1)}, {}),
                  LengthMismatchError);

  // size k-2 band matrix with diagonal -1-t, superdiagonal t, subdiagonal 1
  // has determinant (-1)^{k-4} (1 + t + ... + t^{k-2}); k = 5 here
  const IntPoly diag{-1, -1};
  const std::vector<IntPoly> c(3, diag);
  const std::vector<IntPoly> a(2, kT);
  const std::vector<IntPoly> b(2, IntPoly(1));
  CHECK(tridiag_det(c, a, b) == -q_bracket(4));
}

TEST_CASE("tridiagonal recurrence agrees with the general engine") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> size_dist(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size_dist(rng);
    std::vector<IntPoly> c, a, b;
    for (int i = 0; i < n; ++i) c.push_back(testing::random_poly(rng, 1, 2));
    for (int i = 0; i + 1 < n; ++i) {
      a.push_back(testing::random_poly(rng, 1, 2));
      b.push_back(testing::random_poly(rng, 1, 2));
    }
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = c[static_cast<size_t>(i)];
      if (i + 1 < n) {
        m(i, i + 1) = a[static_cast<size_t>(i)];
        m(i + 1, i) = b[static_cast<size_t>(i)];
      }
    }
    CHECK(tridiag_det(c, a, b) == det(m));
  }
}

TEST_CASE("matrix enumerators match family sums") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= k; ++r) {
        if (r >= 2 && n % k != 0) continue;
        const PolyMatrix m = family_matrix(n, k, r);
        CHECK(det(m) == exc_poly_brute(FamilySpec(n, k, r), true));
        CHECK(permanent(m) == exc_poly_brute(FamilySpec(n, k, r), false));
      }
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= 4; ++k)
      CHECK(det(derangement_matrix(n, k)) ==
            exc_poly_brute(FamilySpec(n, k, 1, true), true));
}
