#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace coopkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dyadic rational num / 2^exp, kept normalized: num odd or exp == 0.
/// Signed; the nonnegative cone is what the dense models use as carrier.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(int v) : num_(v) {}
  Dyadic(BigInt num, unsigned exp = 0) : num_(std::move(num)), exp_(exp) { normalize(); }

  // den must be a power of two.
  static Dyadic from_fraction(const BigInt& num, const BigInt& den);

  const BigInt& num() const { return num_; }
  unsigned exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Dyadic half() const { return Dyadic(num_, exp_ + 1); }
  Dyadic shifted_left(unsigned k) const;  // value * 2^k

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num_, a.exp_); }

  // -1 / 0 / +1
  static int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

  Rational to_rational() const;
  std::string str() const;  // exact fraction text, e.g. "3/4", "-1/2", "5"

 private:
  void normalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

// Truncated subtraction max(0, a - b), the implication of the standard models.
Dyadic monus(const Dyadic& a, const Dyadic& b);
Rational monus(const Rational& a, const Rational& b);

inline Dyadic half_of(const Dyadic& x) { return x.half(); }
inline Rational half_of(const Rational& x) { return x / 2; }

inline std::string scalar_str(const Dyadic& x) { return x.str(); }
std::string scalar_str(const Rational& x);

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input
// (and, for dyadics, on non-power-of-two denominators).
Dyadic parse_dyadic(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace coopkit
