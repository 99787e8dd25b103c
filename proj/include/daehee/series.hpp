#pragma once

#include "daehee/multipoly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace daehee {

/// Formal power series in t over MultiPoly, truncated at a fixed order N.
///
/// coeff(n) is the plain coefficient of t^n (not divided by n!); EGF
/// normalization happens once, at extraction (egf_coefficient).
///
/// Exact division by a series of positive valuation determines the quotient
/// only up to N - val(divisor). The series therefore carries a computable
/// range [0, known()]; requesting a coefficient beyond it throws instead of
/// returning a silently wrong value. All operations propagate the range.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order)
      : order_(order), known_(order), coeffs_(order + 1) {}

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }

  static TruncatedSeries one(std::size_t order) {
    return constant(MultiPoly::constant(Rational(1)), order);
  }

  static TruncatedSeries constant(const MultiPoly& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series t itself.
  static TruncatedSeries identity(std::size_t order) {
    if (order == 0)
      throw std::invalid_argument("TruncatedSeries: order 0 cannot hold t");
    TruncatedSeries s(order);
    s.coeffs_[1] = MultiPoly::constant(Rational(1));
    return s;
  }

  static TruncatedSeries from_coeffs(std::vector<MultiPoly> coeffs) {
    if (coeffs.empty())
      throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    TruncatedSeries s(coeffs.size() - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  std::size_t order() const { return order_; }

  /// Index of the last computable coefficient (== order() unless an exact
  /// division consumed high-order information).
  std::size_t known() const { return known_; }

  const MultiPoly& coeff(std::size_t n) const {
    if (n > order_)
      throw std::out_of_range("TruncatedSeries: coefficient index beyond truncation order");
    if (n > known_)
      throw std::out_of_range("TruncatedSeries: coefficient beyond computable range");
    return coeffs_[n];
  }

  bool zero_const_term() const { return coeffs_[0].is_zero(); }

  /// Index of the lowest nonzero coefficient within the computable range.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i <= known_; ++i)
      if (!coeffs_[i].is_zero())
        return i;
    return std::nullopt;
  }

  /// Fully-known copy truncated at new_order (must be within the
  /// computable range).
  TruncatedSeries truncated(std::size_t new_order) const {
    if (new_order > known_)
      throw std::out_of_range("TruncatedSeries: truncation beyond computable range");
    TruncatedSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(order_);
    out.known_ = known_;
    for (std::size_t i = 0; i <= known_; ++i)
      out.coeffs_[i] = -coeffs_[i];
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries out(a.order_);
    out.known_ = std::min(a.known_, b.known_);
    for (std::size_t i = 0; i <= out.known_; ++i)
      out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries out(a.order_);
    out.known_ = std::min(a.known_, b.known_);
    for (std::size_t i = 0; i <= out.known_; ++i)
      out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }

  /// Cauchy product truncated at N.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries out(a.order_);
    out.known_ = std::min(a.known_, b.known_);
    for (std::size_t i = 0; i <= out.known_; ++i) {
      if (a.coeffs_[i].is_zero())
        continue;
      for (std::size_t j = 0; i + j <= out.known_; ++j) {
        if (b.coeffs_[j].is_zero())
          continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& c) {
    TruncatedSeries out(a.order_);
    out.known_ = a.known_;
    for (std::size_t i = 0; i <= a.known_; ++i)
      out.coeffs_[i] = a.coeffs_[i] * c;
    return out;
  }
  friend TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& a) { return a * c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
    return a * MultiPoly::constant(c);
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries div_exact(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

private:
  void require_same_order(const TruncatedSeries& o) const {
    if (order_ != o.order_)
      throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
  }

  std::size_t order_;
  std::size_t known_;
  std::vector<MultiPoly> coeffs_;  // entries beyond known_ stay zero
};

/// Exact quotient h with f = g * h.
///
/// Requires val(g) <= val(f) and the lowest nonzero coefficient of g to be
/// a nonzero rational constant (a unit of the coefficient ring). The
/// quotient is determined up to order N - val(g); the result keeps order N
/// with its computable range shortened accordingly.
inline TruncatedSeries div_exact(const TruncatedSeries& f, const TruncatedSeries& g) {
  f.require_same_order(g);
  auto vg = g.valuation();
  if (!vg)
    throw std::domain_error("div_exact: division by zero series");
  const std::size_t v = *vg;
  const MultiPoly& lead = g.coeffs_[v];
  if (!lead.is_constant())
    throw std::domain_error("div_exact: leading coefficient of divisor is not a unit");
  const Rational unit_inv = lead.constant_value().inverse();

  for (std::size_t i = 0; i < v && i <= f.known_; ++i)
    if (!f.coeffs_[i].is_zero())
      throw std::domain_error("div_exact: divisor valuation exceeds dividend valuation");

  const std::size_t reach = std::min(f.known_, g.known_);
  if (reach < v)
    throw std::domain_error("div_exact: no computable quotient coefficients at this order");

  TruncatedSeries h(f.order_);
  h.known_ = reach - v;
  for (std::size_t k = 0; k <= h.known_; ++k) {
    MultiPoly acc = f.coeffs_[k + v];
    for (std::size_t j = 1; j <= k; ++j)
      acc -= g.coeffs_[v + j] * h.coeffs_[k - j];
    h.coeffs_[k] = acc * unit_inv;
  }
  return h;
}

/// outer(inner(t)) by Horner evaluation; inner must vanish at t = 0.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  outer.require_same_order(inner);
  if (!inner.zero_const_term())
    throw std::domain_error("compose: inner series must have zero constant term");
  TruncatedSeries res =
      TruncatedSeries::constant(outer.coeffs_[outer.known_], outer.order());
  for (std::size_t m = outer.known_; m-- > 0;) {
    res = res * inner;
    res.coeffs_[0] += outer.coeffs_[m];
  }
  res.known_ = std::min(res.known_, std::min(outer.known_, inner.known_));
  for (std::size_t i = res.known_ + 1; i <= res.order_; ++i)
    res.coeffs_[i] = MultiPoly();
  return res;
}

/// log(1 + u) = sum_{k>=1} (-1)^{k-1} u^k / k; u must vanish at t = 0.
inline TruncatedSeries log1p(const TruncatedSeries& u) {
  if (!u.zero_const_term())
    throw std::domain_error("log1p: argument must have zero constant term");
  TruncatedSeries acc(u.order());
  TruncatedSeries pw = u;
  for (std::size_t k = 1; k <= u.order(); ++k) {
    if (k > 1)
      pw = pw * u;
    acc = acc + pw * Rational(k % 2 ? 1 : -1, static_cast<long long>(k));
  }
  return acc;
}

/// exp(u) = sum_{k>=0} u^k / k!; u must vanish at t = 0.
inline TruncatedSeries exp(const TruncatedSeries& u) {
  if (!u.zero_const_term())
    throw std::domain_error("exp: argument must have zero constant term");
  TruncatedSeries acc = TruncatedSeries::one(u.order());
  TruncatedSeries pw = TruncatedSeries::one(u.order());
  for (std::size_t k = 1; k <= u.order(); ++k) {
    pw = pw * u;
    acc = acc + pw * Rational(BigInt(1), factorial(k));
  }
  return acc;
}

/// (1/lambda) * log(1 + lambda*u) = sum_{k>=1} (-1)^{k-1} lambda^{k-1} u^k / k.
///
/// The lambda powers stay one step behind the u powers, so the result is
/// an honest polynomial in lambda; no division by the indeterminate occurs.
inline TruncatedSeries scaled_log(const TruncatedSeries& u) {
  if (!u.zero_const_term())
    throw std::domain_error("scaled_log: argument must have zero constant term");
  TruncatedSeries acc(u.order());
  TruncatedSeries pw = u;
  for (std::size_t k = 1; k <= u.order(); ++k) {
    if (k > 1)
      pw = pw * u;
    acc = acc + pw * MultiPoly::monomial(Rational(k % 2 ? 1 : -1, static_cast<long long>(k)),
                                         static_cast<unsigned>(k - 1), 0, 0);
  }
  return acc;
}

/// (1 + lambda*u)^{a/lambda} := exp(a * scaled_log(u)) for a symbolic
/// exponent a of the shape c0 + c1*x + c2*y.
inline TruncatedSeries sym_binom_pow(const TruncatedSeries& u, const MultiPoly& a) {
  if (!a.is_affine_exponent())
    throw std::invalid_argument("sym_binom_pow: exponent must be affine in x and y");
  return exp(scaled_log(u) * a);
}

inline TruncatedSeries sym_binom_pow(const TruncatedSeries& u, const Rational& a) {
  return sym_binom_pow(u, MultiPoly::constant(a));
}

/// (1 + u)^a := exp(a * log(1 + u)) for a symbolic exponent a.
inline TruncatedSeries pow1p(const TruncatedSeries& u, const MultiPoly& a) {
  if (!a.is_affine_exponent())
    throw std::invalid_argument("pow1p: exponent must be affine in x and y");
  return exp(log1p(u) * a);
}

/// f^r for integer r. Negative powers require a unit constant term (the
/// reciprocal path); a negative power of a series of positive valuation has
/// negative valuation and is not representable.
inline TruncatedSeries int_pow(const TruncatedSeries& f, long long r) {
  if (r == 0)
    return TruncatedSeries::one(f.order());
  TruncatedSeries base = f;
  unsigned long long mag;
  if (r < 0) {
    auto v = f.valuation();
    if (!v)
      throw std::domain_error("int_pow: negative power of the zero series");
    if (*v > 0)
      throw std::domain_error("int_pow: negative power of a series vanishing at t=0");
    base = div_exact(TruncatedSeries::one(f.order()), f);
    mag = static_cast<unsigned long long>(-(r + 1)) + 1ULL;
  } else {
    mag = static_cast<unsigned long long>(r);
  }
  TruncatedSeries res = TruncatedSeries::one(f.order());
  while (mag) {
    if (mag & 1)
      res = res * base;
    mag >>= 1;
    if (mag)
      base = base * base;
  }
  return res;
}

/// n! * coeff(n): the sequence value when f is read as an exponential
/// generating function.
inline MultiPoly egf_coefficient(const TruncatedSeries& f, std::size_t n) {
  return f.coeff(n) * Rational(factorial(n));
}

}  // namespace daehee
