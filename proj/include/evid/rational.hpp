#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace evid {

// Exact rational number, always held in canonical reduced form
// (gcd(|num|, den) = 1, den > 0). Arithmetic never rounds; equality is
// equality of values. Backed by GMP, so numerators like 2^100 are fine.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);

  // Parses "p/q" or "p" with an optional leading minus. Anything else,
  // including decimal notation, is rejected with Err::Parse.
  explicit Rational(std::string_view text);
  static Rational from_string(std::string_view text);

  static Rational pow(const Rational& base, unsigned long exp);

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_negative() const { return mpq_sgn(v_.get_mpq_t()) < 0; }

  // Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline const Rational kZero{0};
inline const Rational kOne{1};

}  // namespace evid
