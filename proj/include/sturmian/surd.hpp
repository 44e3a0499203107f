#pragma once

// Exact quadratic surds (p + q*sqrt(d)) / r over arbitrary-precision integers.

#include "numeric.hpp"

#include <cmath>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sturmian {

class QuadraticSurd {
 public:
  /// Largest radicand accepted; square-freeness is checked by trial division.
  static constexpr long long kMaxRadicand = 1'000'000'000'000LL;

  QuadraticSurd() = default;
  QuadraticSurd(long long n) : p_(n) {}  // NOLINT(google-explicit-constructor)
  explicit QuadraticSurd(const Integer& n) : p_(n) {}
  explicit QuadraticSurd(const Rational& x) : p_(numerator(x)), r_(denominator(x)) {}

  QuadraticSurd(Integer p, Integer q, Integer d, Integer r)
      : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ == 0) throw std::invalid_argument("surd with zero denominator");
    if (d_ < 0) throw std::invalid_argument("surd with negative radicand");
    if (d_ > kMaxRadicand) throw std::invalid_argument("radicand too large");
    if (d_ > 1 && !square_free(d_)) throw std::invalid_argument("radicand " + d_.str() + " is not square-free");
    normalize();
  }

  static QuadraticSurd rational(const Integer& p, const Integer& r) { return {p, 0, 0, r}; }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& d() const { return d_; }
  const Integer& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return Rational(p_, r_);
  }

  int sign() const { return sign_of(p_, q_, d_); }

  Integer floor() const {
    Integer t = isqrt(q_ * q_ * d_);
    Integer fq;
    if (q_ >= 0) {
      fq = t;
    } else {
      fq = (t * t == q_ * q_ * d_) ? Integer(-t) : Integer(-t - 1);
    }
    return floor_div(p_ + fq, r_);
  }

  Integer ceil() const { return -(-*this).floor(); }

  /// Fractional part x - floor(x), in [0, 1).
  QuadraticSurd frac() const { return *this - QuadraticSurd(floor()); }

  QuadraticSurd reciprocal() const {
    if (sign() == 0) throw std::domain_error("reciprocal of zero");
    // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
    Integer den = p_ * p_ - q_ * q_ * d_;
    return {r_ * p_, -r_ * q_, d_, den, Trusted{}};
  }

  /// Partial quotients [a0; a1, a2, ...] of this number, at most `terms`.
  /// Terminates early for rationals.
  std::vector<Integer> continued_fraction(std::size_t terms) const {
    std::vector<Integer> out;
    QuadraticSurd x = *this;
    for (std::size_t i = 0; i < terms; ++i) {
      Integer a = x.floor();
      out.push_back(a);
      QuadraticSurd rest = x - QuadraticSurd(a);
      if (rest.sign() == 0) break;
      x = rest.reciprocal();
    }
    return out;
  }

  /// Rational enclosure [lo, hi] of width at most 2^-bits.
  RationalInterval enclosure(unsigned bits) const {
    Integer scale = ipow(2, bits);
    Integer f = (*this * QuadraticSurd(scale)).floor();
    Rational lo(f, scale);
    if (is_rational() && Rational(p_, r_) == lo) return {lo, lo};
    return {lo, Rational(f + 1, scale)};
  }

  double approx() const {
    return static_cast<double>(p_) / static_cast<double>(r_) +
           static_cast<double>(q_) / static_cast<double>(r_) * std::sqrt(static_cast<double>(d_));
  }

  /// "p/q" for rationals, otherwise "(p+q*sqrt(d))/r".
  std::string str() const {
    if (is_rational()) return to_string(Rational(p_, r_));
    std::string s = "(" + p_.str() + (q_ < 0 ? "-" : "+") + Integer(abs(q_)).str() + "*sqrt(" + d_.str() + "))";
    if (r_ != 1) s += "/" + r_.str();
    return s;
  }

  friend QuadraticSurd operator-(const QuadraticSurd& x) { return {-x.p_, -x.q_, x.d_, x.r_, Trusted{}}; }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    Integer d = common_radicand(x, y);
    return {x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_, d, x.r_ * y.r_, Trusted{}};
  }

  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    Integer d = common_radicand(x, y);
    return {x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, d, x.r_ * y.r_, Trusted{}};
  }

  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) { return x * y.reciprocal(); }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.d_ == y.d_ && x.r_ == y.r_;
  }

  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y); }

  static std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational() || y.is_rational() || x.d_ == y.d_) {
      int s = (x - y).sign();
      return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    // Distinct irrational radicands: the values differ, so dyadic refinement
    // separates them eventually.
    for (unsigned bits = 0;; bits += 16) {
      Integer scale = ipow(2, bits);
      Integer fx = (x * QuadraticSurd(scale)).floor();
      Integer fy = (y * QuadraticSurd(scale)).floor();
      if (fx != fy) return fx < fy ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }

 private:
  struct Trusted {};
  // Radicand already validated; used by arithmetic on existing surds.
  QuadraticSurd(Integer p, Integer q, Integer d, Integer r, Trusted)
      : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ == 0) throw std::domain_error("surd with zero denominator");
    normalize();
  }

  static bool square_free(const Integer& d) {
    for (Integer k = 2; k * k <= d; ++k) {
      if (d % (k * k) == 0) return false;
    }
    return true;
  }

  /// Sign of a + b sqrt(d).
  static int sign_of(const Integer& a, const Integer& b, const Integer& d) {
    int sa = a > 0 ? 1 : a < 0 ? -1 : 0;
    int sb = (b == 0 || d == 0) ? 0 : (b > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Integer lhs = a * a;
    Integer rhs = b * b * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  static Integer common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational() || x.d_ == y.d_) return x.d_;
    throw std::domain_error("surd arithmetic across different radicands " + x.d_.str() + " and " + y.d_.str());
  }

  void normalize() {
    if (r_ < 0) {
      p_ = -p_;
      q_ = -q_;
      r_ = -r_;
    }
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
    }
    if (d_ == 0) q_ = 0;
    if (q_ == 0) d_ = 0;
    Integer g = gcd(gcd(p_, q_), r_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
      r_ /= g;
    }
  }

  Integer p_{0};
  Integer q_{0};
  Integer d_{0};
  Integer r_{1};
};

}  // namespace sturmian
