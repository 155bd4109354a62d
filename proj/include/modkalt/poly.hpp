#ifndef MODKALT_POLY_HPP
#define MODKALT_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "modkalt/errors.hpp"

namespace modkalt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in t over an exact integer scalar.
///
/// Coefficients are stored lowest degree first. Canonical form: the
/// coefficient vector is either empty (the zero polynomial) or ends in a
/// nonzero entry. All operations return canonical values, so equality is
/// plain coefficient-wise comparison.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  /// Constant polynomial; implicit so scalars mix into ring expressions.
  Polynomial(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  Polynomial(int c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  /// Coefficients, lowest degree first; trailing zeros are trimmed.
  Polynomial(std::initializer_list<Scalar> cs) : coeffs_(cs) { trim(); }

  static Polynomial from_coeffs(std::vector<Scalar> cs) {
    Polynomial p;
    p.coeffs_ = std::move(cs);
    p.trim();
    return p;
  }

  /// c * t^degree.
  static Polynomial monomial(int degree, Scalar c = Scalar(1)) {
    Polynomial p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<size_t>(degree) + 1, Scalar(0));
      p.coeffs_.back() = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }

  /// Lowest exponent with a nonzero coefficient, or nullopt for zero.
  std::optional<int> min_degree() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
  }

  /// Coefficient of t^i (zero outside the stored range).
  Scalar coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Scalar(0);
    return coeffs_[static_cast<size_t>(i)];
  }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();  // cannot actually lose the lead term over an integral domain
    return p;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form, e.g. "1 - 2*t + t^2"; "0" for zero.
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (size_t i = 0; i < p.coeffs_.size(); ++i) {
      const Scalar& c = p.coeffs_[i];
      if (c == 0) continue;
      Scalar mag = c < 0 ? Scalar(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (i == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<BigInt>;

template <typename S>
std::string to_string(const Polynomial<S>& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

/// a^e by binary powering; pow(a, 0) == 1 for every a (empty product).
template <typename S>
Polynomial<S> pow(const Polynomial<S>& a, int e) {
  if (e < 0) throw InvalidSpecError("polynomial exponent must be non-negative");
  Polynomial<S> result(1);
  Polynomial<S> base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// [n]_t = 1 + t + ... + t^{n-1}; the empty sum [0]_t is 0.
inline IntPoly q_bracket(int n) {
  if (n < 0) throw InvalidSpecError("q_bracket argument must be non-negative");
  return IntPoly::from_coeffs(std::vector<BigInt>(static_cast<size_t>(n), BigInt(1)));
}

/// Coefficient-wise exact quotient by a nonzero integer.
template <typename S>
Polynomial<S> exact_div_by_int(const Polynomial<S>& a, const S& d) {
  if (d == 0) throw NotDivisibleError("division by zero");
  std::vector<S> out;
  out.reserve(a.coeffs().size());
  for (const S& c : a.coeffs()) {
    if (c % d != 0) throw NotDivisibleError("coefficient not divisible by integer");
    out.push_back(c / d);
  }
  return Polynomial<S>::from_coeffs(std::move(out));
}

template <typename S>
Polynomial<S> exact_div_by_int(const Polynomial<S>& a, long long d) {
  return exact_div_by_int(a, S(d));
}

/// Exact quotient in the polynomial ring; throws unless b divides a.
template <typename S>
Polynomial<S> exact_div(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (b.is_zero()) throw NotDivisibleError("division by the zero polynomial");
  if (a.is_zero()) return Polynomial<S>();
  const int da = *a.degree(), db = *b.degree();
  if (da < db) throw NotDivisibleError("degree of dividend below divisor");
  const S lead_b = b.coeff(db);
  std::vector<S> rem(a.coeffs());
  std::vector<S> quot(static_cast<size_t>(da - db) + 1, S(0));
  for (int d = da - db; d >= 0; --d) {
    const S& top = rem[static_cast<size_t>(d + db)];
    if (top == 0) continue;
    if (top % lead_b != 0) throw NotDivisibleError("leading coefficient does not divide");
    S q = top / lead_b;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(d + j)] -= q * b.coeff(j);
    quot[static_cast<size_t>(d)] = std::move(q);
  }
  for (const S& c : rem)
    if (c != 0) throw NotDivisibleError("nonzero remainder in exact division");
  return Polynomial<S>::from_coeffs(std::move(quot));
}

}  // namespace modkalt

#endif  // MODKALT_POLY_HPP
