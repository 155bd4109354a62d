#ifndef MODKALT_POLYMAT_HPP
#define MODKALT_POLYMAT_HPP

#include <Eigen/Core>

#include <vector>

#include "modkalt/poly.hpp"

namespace Eigen {

template <typename S>
struct NumTraits<modkalt::Polynomial<S>>
    : GenericNumTraits<modkalt::Polynomial<S>> {
  using Real = modkalt::Polynomial<S>;
  using NonInteger = modkalt::Polynomial<S>;
  using Literal = modkalt::Polynomial<S>;
  using Nested = modkalt::Polynomial<S>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace modkalt {

/// Square matrix over exact integer polynomials.
using PolyMatrix = Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic>;

bool poly_mat_equal(const PolyMatrix& a, const PolyMatrix& b);

// -- Builders ---------------------------------------------------------------

/// n x n matrix whose determinant / permanent enumerate the family (n, k, r)
/// by signed / unsigned excedance count. Entry (i, j) is zero unless
/// j - i = r - 1 (mod k); within the support it is t when i < j and 1 when
/// i >= j. For r >= 2 the matrix is only defined when k divides n.
PolyMatrix family_matrix(int n, int k, int r);

/// Like family_matrix(n, k, 1) but with a zero diagonal, so the determinant
/// enumerates the derangement subfamily.
PolyMatrix derangement_matrix(int n, int k);

/// m x m block: ones on and below the diagonal, t above. Its permanent is
/// the Eulerian polynomial A_m(t); its determinant is (1-t)^{m-1}.
PolyMatrix eulerian_matrix(int m);

/// Variant with t on the diagonal as well: permanent t*A_m(t),
/// determinant (-1)^{m-1} t (1-t)^{m-1}.
PolyMatrix eulerian_matrix_shifted(int m);

/// Variant with a zero diagonal: determinant (-1)^{m-1} t [m-1]_t.
PolyMatrix derangement_block(int m);

// -- Exact engines ----------------------------------------------------------

inline constexpr int kDefaultDeterminantLimit = 64;

/// Exact determinant by fraction-free (Bareiss) elimination with exact
/// division, pivoting on the lowest-degree nonzero entry. Falls back to
/// cofactor expansion if elimination is ever defeated. Throws
/// SizeLimitError above `size_limit`.
IntPoly det(const PolyMatrix& m, int size_limit = kDefaultDeterminantLimit);

/// Cofactor expansion along the first column; independent of det() and
/// usable as an oracle. Exponential cost, intended for small matrices.
IntPoly det_cofactor(const PolyMatrix& m);

inline constexpr int kDefaultPermanentLimit = 12;

/// Exact permanent by Ryser's inclusion-exclusion with Gray-code subset
/// updates; O(2^n * n) ring operations. Throws SizeLimitError above
/// `size_limit`.
IntPoly permanent(const PolyMatrix& m, int size_limit = kDefaultPermanentLimit);

/// Kronecker product [a_ij * B].
PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

/// Applies the block-diagonalizing relabeling for (n, k) simultaneously to
/// rows and columns (determinant and permanent are unchanged). Applied to
/// family_matrix(n, k, 1) with k not dividing n the result is
/// diag(A_{m+1} x j copies, A_m x (k-j) copies); applied to
/// family_matrix(n, k, r) with k | n the copies of the shifted block land
/// in the anti-diagonal block pattern. Throws InvalidSpecError for
/// inconsistent (n, k, r).
PolyMatrix relabel(const PolyMatrix& m, int n, int k, int r);

/// Determinant of the tridiagonal matrix with diagonal c (length n),
/// superdiagonal a (length n-1) and subdiagonal b (entries b_2..b_n,
/// length n-1), via f_i = c_i f_{i-1} - b_i a_{i-1} f_{i-2}.
IntPoly tridiag_det(const std::vector<IntPoly>& c, const std::vector<IntPoly>& a,
                    const std::vector<IntPoly>& b);

}  // namespace modkalt

#endif  // MODKALT_POLYMAT_HPP
