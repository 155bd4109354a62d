#include "modkalt/gamma.hpp"

#include <stdexcept>

#include "modkalt/closed.hpp"
#include "modkalt/errors.hpp"

namespace modkalt {

HalfInt HalfInt::of(long long numerator, long long denominator) {
  if (denominator == 1) return HalfInt{2 * numerator};
  if (denominator == 2) return HalfInt{numerator};
  if (denominator == -1 || denominator == -2) return of(-numerator, -denominator);
  throw InvalidSpecError("symmetry centers are multiples of 1/2");
}

std::string HalfInt::str() const {
  if (is_integral()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

PalindromeProfile palindromic_profile(const IntPoly& f) {
  PalindromeProfile profile;
  if (f.is_zero()) {
    profile.status = PalindromeStatus::zero;
    return profile;
  }
  const int r = *f.min_degree();
  const int n = *f.degree();
  for (int i = 0; i <= (n - r) / 2; ++i) {
    if (f.coeff(r + i) != f.coeff(n - i)) {
      profile.status = PalindromeStatus::not_palindromic;
      return profile;
    }
  }
  profile.status = PalindromeStatus::palindromic;
  profile.r_min = r;
  profile.n_max = n;
  profile.center = HalfInt{n + r};
  return profile;
}

IntPoly gamma_reconstruct(const GammaVector& gv) {
  const IntPoly one_plus_t{1, 1};
  IntPoly acc;
  for (size_t i = 0; i < gv.gammas.size(); ++i) {
    const int shift = gv.r_min + static_cast<int>(i);
    const int width = gv.n_max - gv.r_min - 2 * static_cast<int>(i);
    acc += IntPoly::monomial(shift, gv.gammas[i]) * pow(one_plus_t, width);
  }
  return acc;
}

GammaVector gamma_decompose(const IntPoly& f) {
  const PalindromeProfile profile = palindromic_profile(f);
  if (profile.status == PalindromeStatus::zero) return GammaVector{};
  if (profile.status == PalindromeStatus::not_palindromic)
    throw NotPalindromicError("no gamma decomposition for a non-palindromic polynomial");
  GammaVector gv{profile.r_min, profile.n_max, {}};
  const IntPoly one_plus_t{1, 1};
  IntPoly rest = f;
  for (int i = 0; i <= (profile.n_max - profile.r_min) / 2; ++i) {
    const BigInt g = rest.coeff(profile.r_min + i);
    gv.gammas.push_back(g);
    if (g != 0)
      rest -= IntPoly::monomial(profile.r_min + i, g) *
              pow(one_plus_t, profile.n_max - profile.r_min - 2 * i);
  }
  // palindromicity guarantees the peeling terminates exactly
  if (!rest.is_zero()) throw std::logic_error("gamma peeling left a remainder");
  return gv;
}

GammaCheck is_gamma_positive(const IntPoly& f) {
  GammaCheck check;
  if (f.is_zero()) {
    check.positive = true;
    check.witness = GammaVector{};
    return check;
  }
  if (!palindromic_profile(f).palindromic()) return check;  // not positive, no witness
  GammaVector gv = gamma_decompose(f);
  for (size_t i = 0; i < gv.gammas.size(); ++i) {
    if (gv.gammas[i] < 0) {
      check.violating_index = static_cast<int>(i);
      return check;
    }
  }
  check.positive = true;
  check.witness = std::move(gv);
  return check;
}

IntPoly parity_exc_poly(int n, int k, int r, Parity parity) {
  const IntPoly unsigned_poly = exc_poly(n, k, r);
  const IntPoly signed_poly = signed_exc_poly(n, k, r);
  // a NotDivisibleError escaping here would mean a closed-form bug
  if (parity == Parity::even) return exact_div_by_int(unsigned_poly + signed_poly, 2LL);
  return exact_div_by_int(unsigned_poly - signed_poly, 2LL);
}

IntPoly parity_exc_poly_brute(int n, int k, int r, Parity parity, long long budget) {
  const FamilySpec spec(n, k, r);
  if (family_count_bound(spec) > budget)
    throw SizeLimitError("family too large for the enumeration budget");
  std::vector<BigInt> coeffs(static_cast<size_t>(n), 0);
  const int wanted = (parity == Parity::even) ? 1 : -1;
  for_each_member(spec, [&](const Perm& p) {
    if (sgn(p) == wanted) coeffs[static_cast<size_t>(exc(p))] += 1;
  });
  return IntPoly::from_coeffs(std::move(coeffs));
}

GammaCertReport certify_gamma_positivity(int n, int k, bool force) {
  if (n < 1 || k < 1) throw InvalidSpecError("n and k must be positive");
  GammaCertReport report;
  report.n = n;
  report.k = k;
  report.hypothesis_ok = (n % (2 * k) == k) && n >= 5 * k;
  if (!report.hypothesis_ok && !force)
    throw HypothesisViolatedError("requires n = k (mod 2k) and n >= 5k; pass force to probe");
  for (int r = 1; r <= k; ++r) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      GammaCertRow row;
      row.r = r;
      row.parity = parity;
      row.poly = parity_exc_poly(n, k, r, parity);
      row.claimed_center = (r == 1) ? HalfInt::of(n - k, 2) : HalfInt::of(n + 1 - r, 2);
      const PalindromeProfile profile = palindromic_profile(row.poly);
      if (profile.status == PalindromeStatus::zero) {
        // empty sign class: vacuously gamma-positive, no center to compare
        row.palindromic = true;
        row.gamma_nonnegative = true;
        row.gamma = GammaVector{};
        row.center_matches = true;
      } else if (profile.palindromic()) {
        row.palindromic = true;
        row.observed_center = profile.center;
        GammaCheck check = is_gamma_positive(row.poly);
        row.gamma_nonnegative = check.positive;
        if (check.positive)
          row.gamma = std::move(*check.witness);
        else
          row.gamma = gamma_decompose(row.poly);
        row.center_matches = (profile.center == row.claimed_center);
      }
      row.pass = row.palindromic && row.gamma_nonnegative && row.center_matches;
      report.rows.push_back(std::move(row));
    }
  }
  report.all_pass = true;
  for (const GammaCertRow& row : report.rows)
    if (!row.pass) report.all_pass = false;
  return report;
}

bool check_product_lemma(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw PreconditionUnmetError("product lemma needs nonzero inputs");
  const GammaCheck cf = is_gamma_positive(f);
  const GammaCheck cg = is_gamma_positive(g);
  if (!cf.positive || !cg.positive)
    throw PreconditionUnmetError("product lemma needs gamma-positive inputs");
  const HalfInt expected = cf.witness->center() + cg.witness->center();
  const GammaCheck cp = is_gamma_positive(f * g);
  return cp.positive && cp.witness->center() == expected;
}

namespace {

// Gamma-positive with a center that is either `a` or vacuous (zero poly).
bool gamma_positive_with_center(const IntPoly& f, HalfInt a) {
  const GammaCheck check = is_gamma_positive(f);
  if (!check.positive) return false;
  if (f.is_zero()) return true;
  return check.witness->center() == a;
}

}  // namespace

bool check_power_lemma(const IntPoly& f, const IntPoly& g, int r) {
  if (r < 1) throw InvalidSpecError("power lemma exponent must be positive");
  const IntPoly sum = f + g;
  const IntPoly diff = f - g;
  if (sum.is_zero() && diff.is_zero()) return true;  // f = g = 0, all powers zero
  const PalindromeProfile pf = palindromic_profile(f);
  const PalindromeProfile pg = palindromic_profile(g);
  if (pf.status == PalindromeStatus::not_palindromic ||
      pg.status == PalindromeStatus::not_palindromic)
    throw PreconditionUnmetError("power lemma needs palindromic f and g");
  if (pf.palindromic() && pg.palindromic() && pf.center != pg.center)
    throw PreconditionUnmetError("power lemma needs equal centers for f and g");
  const GammaCheck cs = is_gamma_positive(sum);
  const GammaCheck cd = is_gamma_positive(diff);
  if (!cs.positive || !cd.positive)
    throw PreconditionUnmetError("power lemma needs gamma-positive f+g and f-g");
  HalfInt a{0};
  if (!sum.is_zero())
    a = cs.witness->center();
  else
    a = cd.witness->center();
  if (!sum.is_zero() && !diff.is_zero() && cs.witness->center() != cd.witness->center())
    throw PreconditionUnmetError("power lemma needs one shared center");
  const IntPoly fr = pow(f, r);
  const IntPoly gr = pow(g, r);
  return gamma_positive_with_center(fr + gr, r * a) &&
         gamma_positive_with_center(fr - gr, r * a);
}

}  // namespace modkalt
