#include "ammann/golden.hpp"

#include <cmath>
#include <sstream>

namespace ammann {

namespace {

constexpr double kSqrt5 = 2.2360679774997896964;

void append_rational(std::ostringstream& os, const Rational& q) { os << q.get_str(); }

}  // namespace

Golden::Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Golden Golden::from_fractions(long a_num, long a_den, long b_num, long b_den) {
  if (a_den == 0 || b_den == 0) throw DivisionByZero();
  return Golden(Rational(a_num, a_den), Rational(b_num, b_den));
}

int sign_with_sqrt5(const Rational& p, const Rational& q) {
  const int sp = sgn(p);
  const int sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against 5 q^2.
  const int c = cmp(Rational(p * p), Rational(5 * q * q));
  if (c == 0) return 0;  // unreachable for rational p, q != 0
  return sp > 0 ? c : -c;
}

int Golden::sign() const {
  // 2 (a + b phi) = (2a + b) + b sqrt5
  return sign_with_sqrt5(Rational(2 * a_ + b_), b_);
}

std::optional<Golden> Golden::inverse() const {
  if (is_zero()) return std::nullopt;
  const Rational n = norm();
  const Golden c = conj();
  return Golden(Rational(c.a_ / n), Rational(c.b_ / n));
}

std::pair<double, double> Golden::embed() const {
  const double a = a_.get_d();
  const double b = b_.get_d();
  return {a + b * (1.0 + kSqrt5) / 2.0, a + b * (1.0 - kSqrt5) / 2.0};
}

std::string Golden::str() const {
  std::ostringstream os;
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) {
    append_rational(os, a_);
    return os.str();
  }
  Rational coeff = b_;
  if (sa != 0) {
    append_rational(os, a_);
    os << (sb > 0 ? " + " : " - ");
    coeff = abs(b_);
  }
  if (coeff == -1) {
    os << "-";
  } else if (coeff != 1) {
    append_rational(os, coeff);
  }
  os << "φ";
  return os.str();
}

Golden& Golden::operator+=(const Golden& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Golden& Golden::operator-=(const Golden& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Golden& Golden::operator*=(const Golden& o) {
  // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ + bd;
  Rational b = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Golden& Golden::operator/=(const Golden& o) {
  auto inv = o.inverse();
  if (!inv) throw DivisionByZero();
  return *this *= *inv;
}

std::strong_ordering operator<=>(const Golden& x, const Golden& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Golden> checked_div(const Golden& x, const Golden& y) {
  auto inv = y.inverse();
  if (!inv) return std::nullopt;
  return x * *inv;
}

Golden abs(const Golden& x) { return x.sign() < 0 ? -x : x; }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::size_t hash_value(const Golden& x) {
  std::size_t h = std::hash<std::string>{}(x.a().get_str());
  h ^= std::hash<std::string>{}(x.b().get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace ammann
