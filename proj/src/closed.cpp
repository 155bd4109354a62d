#include "modkalt/closed.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "modkalt/errors.hpp"
#include "modkalt/perm.hpp"

namespace modkalt {

namespace {

const IntPoly kOneMinusT{1, -1};

}  // namespace

IntPoly eulerian(int n) {
  if (n < 0) throw InvalidSpecError("eulerian index must be non-negative");
  std::vector<BigInt> row{1};  // A_0
  for (int size = 1; size <= n; ++size) {
    const int prev_len = static_cast<int>(row.size());
    std::vector<BigInt> next(static_cast<size_t>(std::max(size, 1)), 0);
    for (int d = 0; d < static_cast<int>(next.size()); ++d) {
      BigInt v = 0;
      if (d < prev_len) v += BigInt(d + 1) * row[static_cast<size_t>(d)];
      if (d >= 1 && d - 1 < prev_len) v += BigInt(size - d) * row[static_cast<size_t>(d) - 1];
      next[static_cast<size_t>(d)] = v;
    }
    row = std::move(next);
  }
  return IntPoly::from_coeffs(std::move(row));
}

IntPoly exc_poly_brute(const FamilySpec& spec, bool with_sign, long long budget) {
  if (family_count_bound(spec) > budget)
    throw SizeLimitError("family too large for the enumeration budget");
  std::vector<BigInt> coeffs(static_cast<size_t>(spec.n), 0);
  for_each_member(spec, [&](const Perm& p) {
    const int e = exc(p);
    if (with_sign)
      coeffs[static_cast<size_t>(e)] += sgn(p);
    else
      coeffs[static_cast<size_t>(e)] += 1;
  });
  return IntPoly::from_coeffs(std::move(coeffs));
}

IntPoly signed_exc_poly(int n, int k, int r) {
  FamilySpec check(n, k, r);  // validates the parameters
  if (r == 1) {
    if (n < k) return IntPoly(1);
    return pow(kOneMinusT, n - k);
  }
  if (n % k != 0) return IntPoly();
  const int m = n / k;
  const long long exponent = static_cast<long long>(m) * r - 1;
  const bool negative = (exponent * (k - r + 1)) % 2 != 0;
  IntPoly result = IntPoly::monomial(k - r + 1) * pow(kOneMinusT, n - k);
  return negative ? -result : result;
}

IntPoly exc_poly(int n, int k, int r) {
  FamilySpec check(n, k, r);
  const int m = n / k;
  const int j = n % k;
  if (r == 1) return pow(eulerian(m + 1), j) * pow(eulerian(m), k - j);
  if (j != 0) return IntPoly();
  return IntPoly::monomial(k + 1 - r) * pow(eulerian(m), k);
}

IntPoly signed_derangement_exc_poly(int n, int k, int r) {
  FamilySpec check(n, k, r);
  if (r >= 2) return signed_exc_poly(n, k, r);
  const int m = n / k;
  const int j = n % k;
  if (m == 0) return IntPoly();  // family is {identity}, which is no derangement
  IntPoly result =
      IntPoly::monomial(k) * pow(q_bracket(m), j) * pow(q_bracket(m - 1), k - j);
  return (n + k) % 2 != 0 ? -result : result;  // (-1)^n (-1)^k
}

IntPoly signed_des_poly(int n) {
  if (n < 1) throw InvalidSpecError("signed descent enumerator needs n >= 1");
  const int m = n / 2;
  return pow(kOneMinusT, m) * eulerian(n % 2 == 0 ? m : m + 1);
}

IntPoly des_poly_brute(int n, bool with_sign) {
  std::vector<BigInt> coeffs(static_cast<size_t>(n), 0);
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    const Perm p(word);
    if (with_sign)
      coeffs[static_cast<size_t>(des(p))] += sgn(p);
    else
      coeffs[static_cast<size_t>(des(p))] += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return IntPoly::from_coeffs(std::move(coeffs));
}

}  // namespace modkalt
