#include "coopkit/scalars.hpp"

#include <stdexcept>

namespace coopkit {

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::from_fraction(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::invalid_argument("dyadic denominator must be positive");
  BigInt d = den;
  unsigned exp = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++exp;
  }
  if (d != 1) throw std::invalid_argument("dyadic denominator must be a power of two");
  return Dyadic(num, exp);
}

Dyadic Dyadic::shifted_left(unsigned k) const {
  if (num_ == 0) return Dyadic();
  if (k >= exp_) return Dyadic(num_ << (k - exp_), 0);
  return Dyadic(num_, exp_ - k);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
  // a = na/2^ea vs b = nb/2^eb  <=>  na*2^eb vs nb*2^ea
  BigInt lhs = a.num_ << b.exp_;
  BigInt rhs = b.num_ << a.exp_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Rational Dyadic::to_rational() const {
  BigInt den = BigInt(1) << exp_;
  return Rational(num_, den);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + (BigInt(1) << exp_).str();
}

Dyadic monus(const Dyadic& a, const Dyadic& b) {
  if (a <= b) return Dyadic();
  return a - b;
}

Rational monus(const Rational& a, const Rational& b) {
  if (a <= b) return Rational(0);
  return a - b;
}

std::string scalar_str(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1)
    return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

namespace {

std::pair<BigInt, BigInt> parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return {BigInt(text), BigInt(1)};
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return {num, den};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed fraction: " + text);
  }
}

}  // namespace

Dyadic parse_dyadic(const std::string& text) {
  auto [num, den] = parse_fraction(text);
  return Dyadic::from_fraction(num, den);
}

Rational parse_rational(const std::string& text) {
  auto [num, den] = parse_fraction(text);
  if (den <= 0) throw std::invalid_argument("denominator must be positive: " + text);
  return Rational(num, den);
}

}  // namespace coopkit
