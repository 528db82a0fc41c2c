#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace ammann {

using Rational = mpq_class;

/// Element a + b*phi of the golden field Q(phi), phi^2 = phi + 1.
///
/// Coefficients are arbitrary-precision rationals kept in lowest terms, so
/// equality is structural. Ordering is the real ordering under the embedding
/// phi = (1 + sqrt 5) / 2 and is decided with rational arithmetic only.
class Golden {
 public:
  Golden() = default;
  Golden(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  Golden(Rational a, Rational b = 0);

  /// Builds a/a_den + (b/b_den) phi; denominators must be nonzero.
  static Golden from_fractions(long a_num, long a_den, long b_num, long b_den);
  static Golden phi() { return Golden(0, 1); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  /// -1, 0 or +1.
  int sign() const;

  /// Galois conjugate: phi -> 1 - phi.
  Golden conj() const { return Golden(a_ + b_, -b_); }

  /// Field norm x * conj(x) = a^2 + ab - b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  /// Multiplicative inverse, or nullopt for zero.
  std::optional<Golden> inverse() const;

  /// (value at phi = (1+sqrt5)/2, value at phi = (1-sqrt5)/2).
  std::pair<double, double> embed() const;
  double to_double() const { return embed().first; }

  /// Human-readable exact form, e.g. "4 - 2φ", "-1/2 + 3/2φ", "φ".
  std::string str() const;

  Golden operator-() const { return Golden(-a_, -b_); }
  Golden& operator+=(const Golden& o);
  Golden& operator-=(const Golden& o);
  Golden& operator*=(const Golden& o);
  Golden& operator/=(const Golden& o);

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  /// Throws DivisionByZero; see checked_div for the non-throwing form.
  friend Golden operator/(Golden x, const Golden& y) { return x /= y; }

  friend bool operator==(const Golden& x, const Golden& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Golden& x, const Golden& y);

 private:
  Rational a_{0};
  Rational b_{0};
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(phi)") {}
};

/// x / y, or nullopt when y == 0.
std::optional<Golden> checked_div(const Golden& x, const Golden& y);

Golden abs(const Golden& x);

/// Exact sign of p + q*sqrt(5) for rationals p, q.
int sign_with_sqrt5(const Rational& p, const Rational& q);

/// Parses "3", "-3/2" into a rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::size_t hash_value(const Golden& x);

}  // namespace ammann

template <>
struct std::hash<ammann::Golden> {
  std::size_t operator()(const ammann::Golden& x) const { return ammann::hash_value(x); }
};
