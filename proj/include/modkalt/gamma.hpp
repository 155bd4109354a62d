#ifndef MODKALT_GAMMA_HPP
#define MODKALT_GAMMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "modkalt/poly.hpp"

namespace modkalt {

/// Exact rational with denominator 1 or 2; symmetry centers are always
/// integers or half-integers and must never round.
struct HalfInt {
  long long twice = 0;  // the value is twice/2

  static HalfInt of(long long numerator, long long denominator);
  static HalfInt whole(long long v) { return HalfInt{2 * v}; }

  bool is_integral() const { return twice % 2 == 0; }
  std::string str() const;  // "4" or "9/2"

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
  friend HalfInt operator*(long long s, HalfInt a) { return HalfInt{s * a.twice}; }
};

enum class PalindromeStatus { palindromic, not_palindromic, zero };

/// Result of the palindromicity test. For a nonzero polynomial with lowest
/// exponent r and degree n, palindromic means a_{r+i} = a_{n-i} for all i;
/// the center of symmetry is then (n + r)/2. The zero polynomial gets the
/// distinguished `zero` verdict (vacuously symmetric, no center).
struct PalindromeProfile {
  PalindromeStatus status = PalindromeStatus::zero;
  int r_min = 0;
  int n_max = 0;
  HalfInt center{0};

  bool palindromic() const { return status == PalindromeStatus::palindromic; }
};

PalindromeProfile palindromic_profile(const IntPoly& f);

/// Coefficients gamma_i of f = sum_i gamma_i t^{r_min+i} (1+t)^{n_max-r_min-2i}.
struct GammaVector {
  int r_min = 0;
  int n_max = 0;
  std::vector<BigInt> gammas;

  HalfInt center() const { return HalfInt{r_min + n_max}; }

  friend bool operator==(const GammaVector& a, const GammaVector& b) {
    return a.r_min == b.r_min && a.n_max == b.n_max && a.gammas == b.gammas;
  }
};

/// Rebuilds the polynomial from its gamma coefficients.
IntPoly gamma_reconstruct(const GammaVector& gv);

/// Unique gamma coefficients of a palindromic polynomial, by peeling from
/// the lowest exponent upward. Zero input yields the empty vector. Throws
/// NotPalindromicError otherwise.
GammaVector gamma_decompose(const IntPoly& f);

struct GammaCheck {
  bool positive = false;
  std::optional<GammaVector> witness;       // set when positive (empty for zero input)
  std::optional<int> violating_index;       // first i with gamma_i < 0, when decomposable
};

/// True iff f is palindromic (or zero) with all gamma coefficients
/// non-negative. Zero is vacuously gamma-positive.
GammaCheck is_gamma_positive(const IntPoly& f);

enum class Parity { even, odd };

/// Excedance enumerator over the family members of the given sign class:
/// (unsigned +- signed enumerator) / 2, an always-exact halving.
IntPoly parity_exc_poly(int n, int k, int r, Parity parity);

/// Same quantity by direct enumeration of the family filtered by sign.
IntPoly parity_exc_poly_brute(int n, int k, int r, Parity parity,
                              long long budget = 10'000'000);

/// One certified (r, parity) pair.
struct GammaCertRow {
  int r = 1;
  Parity parity = Parity::even;
  IntPoly poly;
  bool palindromic = false;
  bool gamma_nonnegative = false;
  std::optional<GammaVector> gamma;
  std::optional<HalfInt> observed_center;
  HalfInt claimed_center{0};     // (n-k)/2 for r = 1, (n+1-r)/2 for r >= 2
  bool center_matches = false;
  bool pass = false;             // palindromic && gamma_nonnegative && center_matches
};

struct GammaCertReport {
  int n = 0;
  int k = 0;
  bool hypothesis_ok = false;    // n = k (mod 2k) and n >= 5k
  std::vector<GammaCertRow> rows;
  bool all_pass = false;
};

/// Checks gamma-positivity and the claimed symmetry centers of the even and
/// odd excedance enumerators for every r in 1..k. Throws
/// HypothesisViolatedError when (n, k) fails the hypothesis, unless `force`
/// is set, in which case the verdicts are reported anyway.
GammaCertReport certify_gamma_positivity(int n, int k, bool force = false);

/// Product lemma check: for gamma-positive f, g the product must be
/// gamma-positive with the centers added. Throws PreconditionUnmetError if
/// f or g is zero or not gamma-positive; returns whether the conclusion
/// holds (expected: always true).
bool check_product_lemma(const IntPoly& f, const IntPoly& g);

/// Power lemma check: if f + g and f - g are gamma-positive with the same
/// center a, then f^r + g^r and f^r - g^r must be gamma-positive with
/// center r*a. Zero polynomials pass vacuously with any center.
bool check_power_lemma(const IntPoly& f, const IntPoly& g, int r);

}  // namespace modkalt

#endif  // MODKALT_GAMMA_HPP
