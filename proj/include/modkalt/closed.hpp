#ifndef MODKALT_CLOSED_HPP
#define MODKALT_CLOSED_HPP

#include "modkalt/families.hpp"
#include "modkalt/poly.hpp"

namespace modkalt {

inline constexpr long long kDefaultBruteBudget = 10'000'000;

/// Eulerian polynomial A_n(t), descent generating polynomial of S_n,
/// by the triangular recurrence A_{n,k} = (k+1) A_{n-1,k} + (n-k) A_{n-1,k-1}.
/// A_0 = 1 by convention.
IntPoly eulerian(int n);

/// Sum of (sign if with_sign) * t^exc over the family, by enumeration.
/// The independent reference for every closed form below. Throws
/// SizeLimitError when the family cardinality bound exceeds the budget.
IntPoly exc_poly_brute(const FamilySpec& spec, bool with_sign,
                       long long budget = kDefaultBruteBudget);

/// Signed excedance enumerator of the family (n, k, r), closed form:
///   r = 1, n >= k:  (1-t)^{n-k}
///   r = 1, n < k:   1            (the family is the identity alone)
///   r >= 2, k | n:  (-1)^{(mr-1)(k-r+1)} t^{k-r+1} (1-t)^{n-k},  m = n/k
///   r >= 2, else:   0            (empty family)
IntPoly signed_exc_poly(int n, int k, int r);

/// Unsigned excedance enumerator, closed form:
///   r = 1:          A_{m+1}(t)^j A_m(t)^{k-j},  n = mk + j
///   r >= 2, k | n:  t^{k+1-r} A_m(t)^k
///   r >= 2, else:   0
IntPoly exc_poly(int n, int k, int r);

/// Signed excedance enumerator over the derangements of the family:
///   r = 1:   (-1)^n (-t)^k [m]_t^j [m-1]_t^{k-j},  n = mk + j (zero if m = 0)
///   r >= 2:  signed_exc_poly(n, k, r)   (every member is a derangement)
IntPoly signed_derangement_exc_poly(int n, int k, int r);

/// Signed descent enumerator of S_n, closed form:
/// (1-t)^m A_m(t) for n = 2m, (1-t)^m A_{m+1}(t) for n = 2m+1.
IntPoly signed_des_poly(int n);

/// Sum of (sign if with_sign) * t^des over all of S_n, by enumeration.
IntPoly des_poly_brute(int n, bool with_sign);

}  // namespace modkalt

#endif  // MODKALT_CLOSED_HPP
