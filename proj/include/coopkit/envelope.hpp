#pragma once

#include <stdexcept>
#include <string>

#include "coopkit/models.hpp"

namespace coopkit {

class BaseMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element 2^m * alpha(base) of the enveloping cancellative coop of a bounded
/// semi-cancellative dense base. Canonical form: m == 0 or doubling the base
/// would overflow the cap, so equal values share one representation.
template <class S>
class HatElement {
 public:
  HatElement() = default;
  HatElement(unsigned m, S base, const DenseModel<S>& model) : m_(m), base_(std::move(base)) {
    if (!model.bounded()) throw BaseMismatch("hat envelope needs a capped base model");
    normalize(model);
  }

  unsigned exponent() const { return m_; }
  const S& base() const { return base_; }

  // value as an element of the unbounded dense model over the same scalar
  S unbounded_value() const {
    S v = base_;
    for (unsigned i = 0; i < m_; ++i) v = v + v;
    return v;
  }

 private:
  void normalize(const DenseModel<S>& model) {
    while (m_ > 0 && !(model.cap < base_ + base_)) {
      base_ = base_ + base_;
      --m_;
    }
  }

  unsigned m_ = 0;
  S base_{};
};

template <class S>
struct HatEnvelope {
  DenseModel<S> base;  // capped

  explicit HatEnvelope(DenseModel<S> capped_base) : base(std::move(capped_base)) {
    if (!base.bounded()) throw BaseMismatch("hat envelope needs a capped base model");
  }

  using Elem = HatElement<S>;

  Elem embed(const S& a) const { return Elem(0, a, base); }
  Elem one_hat() const { return embed(base.cap); }

  // Raise both to a common exponent, then two more so the quarter-scale
  // bases sum strictly below the cap; base addition is then uncapped.
  Elem add(const Elem& x, const Elem& y) const {
    unsigned m = std::max(x.exponent(), y.exponent()) + 2;
    S a = lower(x, m), b = lower(y, m);
    return Elem(m, a + b, base);
  }

  Elem imp(const Elem& x, const Elem& y) const {
    unsigned m = std::max(x.exponent(), y.exponent());
    return Elem(m, base.imp(lower(x, m), lower(y, m)), base);
  }

  Elem half(const Elem& x) const {
    if (x.exponent() > 0) return Elem(x.exponent() - 1, x.base(), base);
    return Elem(0, half_of(x.base()), base);
  }

  int compare(const Elem& x, const Elem& y) const {
    unsigned m = std::max(x.exponent(), y.exponent());
    S a = lower(x, m), b = lower(y, m);
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
  }

  bool equal(const Elem& x, const Elem& y) const { return compare(x, y) == 0; }

  // Addition of the capped copy hat-C restricted below one_hat; isomorphic
  // to the base via embed.
  Elem add_capped(const Elem& x, const Elem& y) const {
    Elem s = add(x, y);
    return compare(s, one_hat()) > 0 ? one_hat() : s;
  }

 private:
  S lower(const Elem& x, unsigned m) const {
    S v = x.base();
    for (unsigned i = x.exponent(); i < m; ++i) v = half_of(v);
    return v;
  }
};

/// Signed element of the group of differences of a linearly ordered
/// cancellative unbounded dense base; (-, 0) normalizes to (+, 0).
template <class S>
struct DiffElement {
  bool negative = false;
  S magnitude{};

  DiffElement() = default;
  DiffElement(bool neg, S mag) : negative(neg), magnitude(std::move(mag)) {
    if (!(S(0) < magnitude)) negative = false;
  }
};

template <class S>
struct DiffGroup {
  DenseModel<S> base;  // unbounded

  explicit DiffGroup(DenseModel<S> unbounded_base) : base(std::move(unbounded_base)) {
    if (base.bounded()) throw BaseMismatch("group of differences needs an unbounded base");
  }

  using Elem = DiffElement<S>;

  // beta(a) - beta(b), case split on the linear order
  Elem from_pair(const S& a, const S& b) const {
    if (!(a < b)) return Elem(false, base.imp(b, a));
    return Elem(true, base.imp(a, b));
  }

  Elem neg(const Elem& x) const { return Elem(!x.negative, x.magnitude); }

  Elem add(const Elem& x, const Elem& y) const {
    if (x.negative == y.negative) return Elem(x.negative, x.magnitude + y.magnitude);
    const Elem& pos = x.negative ? y : x;
    const Elem& negv = x.negative ? x : y;
    if (!(pos.magnitude < negv.magnitude))
      return Elem(false, base.imp(negv.magnitude, pos.magnitude));
    return Elem(true, base.imp(pos.magnitude, negv.magnitude));
  }

  Elem half(const Elem& x) const { return Elem(x.negative, half_of(x.magnitude)); }

  int compare(const Elem& x, const Elem& y) const {
    if (x.negative != y.negative) return x.negative ? -1 : 1;
    int c = x.magnitude < y.magnitude ? -1 : y.magnitude < x.magnitude ? 1 : 0;
    return x.negative ? -c : c;
  }

  bool equal(const Elem& x, const Elem& y) const { return compare(x, y) == 0; }

  Elem zero() const { return Elem(false, S(0)); }
};

template <class S>
std::string render_diff(const DiffElement<S>& d) {
  return (d.negative ? "-" : "") + scalar_str(d.magnitude);
}

}  // namespace coopkit
