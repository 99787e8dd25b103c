#pragma once

#include "daehee/rational.hpp"

#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace daehee {

enum class Var { lambda, x, y };

/// Exponent triple of a monomial lambda^dl * x^dx * y^dy.
struct Monomial {
  unsigned dl = 0;
  unsigned dx = 0;
  unsigned dy = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  Monomial operator+(const Monomial& o) const {
    return {dl + o.dl, dx + o.dx, dy + o.dy};
  }

  unsigned deg(Var v) const {
    switch (v) {
      case Var::lambda: return dl;
      case Var::x: return dx;
      default: return dy;
    }
  }
};

/// Sparse polynomial in the indeterminates lambda, x, y over Rational.
///
/// Canonical sparse form: no zero coefficient is ever stored, so two
/// polynomials are equal iff their term maps are identical. The map is
/// ordered lexicographically by (dl, dx, dy), which fixes iteration and
/// serialization order.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;  // zero

  static MultiPoly constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero())
      p.terms_[Monomial{}] = c;
    return p;
  }

  static MultiPoly variable(Var v) {
    return monomial(Rational(1),
                    v == Var::lambda ? 1 : 0,
                    v == Var::x ? 1 : 0,
                    v == Var::y ? 1 : 0);
  }

  static MultiPoly monomial(const Rational& c, unsigned dl, unsigned dx, unsigned dy) {
    MultiPoly p;
    if (!c.is_zero())
      p.terms_[Monomial{dl, dx, dy}] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  /// The value of a constant polynomial (zero polynomial gives 0).
  Rational constant_value() const {
    if (!is_constant())
      throw std::domain_error("MultiPoly: not a constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m.deg(v));
    return d;
  }

  /// True for polynomials of the shape c0 + c1*x + c2*y (the only symbolic
  /// exponents the series power operation accepts).
  bool is_affine_exponent() const {
    for (const auto& [m, c] : terms_)
      if (m.dl != 0 || m.dx + m.dy > 1)
        return false;
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly p;
    for (const auto& [m, c] : terms_)
      p.terms_[m] = -c;
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        p.add_term(ma + mb, ca * cb);
    return p;
  }

  friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
    MultiPoly p;
    if (c.is_zero())
      return p;
    for (const auto& [m, coeff] : a.terms_)
      p.terms_[m] = coeff * c;
    return p;
  }
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c) { return *this = *this * c; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// lambda := c (evaluation; the result contains no lambda).
  MultiPoly substitute_lambda(const Rational& c) const {
    return substitute_affine(Var::lambda, c, Rational(0));
  }

  /// lambda := c * lambda; x and y untouched.
  MultiPoly scale_lambda(const Rational& c) const {
    return substitute_affine(Var::lambda, Rational(0), c);
  }

  /// x := c0 + c1 * x; lambda and y untouched.
  MultiPoly substitute_x_affine(const Rational& c0, const Rational& c1) const {
    return substitute_affine(Var::x, c0, c1);
  }

  /// y := c0 + c1 * y; lambda and x untouched.
  MultiPoly substitute_y_affine(const Rational& c0, const Rational& c1) const {
    return substitute_affine(Var::y, c0, c1);
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    if (p.is_zero())
      return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      Rational abs = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0)
          os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      std::string mono = monomial_str(m);
      if (mono.empty()) {
        os << abs.str();
      } else {
        if (abs != Rational(1))
          os << abs.str() << "*";
        os << mono;
      }
    }
    return os;
  }

private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero())
      return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  /// v := c0 + c1 * v by binomial expansion of each power of v.
  MultiPoly substitute_affine(Var v, const Rational& c0, const Rational& c1) const {
    unsigned dmax = degree(v);
    std::vector<Rational> pow0(dmax + 1, Rational(1)), pow1(dmax + 1, Rational(1));
    for (unsigned i = 1; i <= dmax; ++i) {
      pow0[i] = pow0[i - 1] * c0;
      pow1[i] = pow1[i - 1] * c1;
    }
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
      unsigned k = m.deg(v);
      Monomial rest = m;
      (v == Var::lambda ? rest.dl : v == Var::x ? rest.dx : rest.dy) = 0;
      for (unsigned j = 0; j <= k; ++j) {
        Rational coeff = c * Rational(binomial(k, j)) * pow0[k - j] * pow1[j];
        Monomial target = rest;
        (v == Var::lambda ? target.dl : v == Var::x ? target.dx : target.dy) = j;
        out.add_term(target, coeff);
      }
    }
    return out;
  }

  static std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool need_sep = false;
    auto part = [&](const char* name, unsigned d) {
      if (d == 0)
        return;
      if (need_sep)
        os << "*";
      os << name;
      if (d > 1)
        os << "^" << d;
      need_sep = true;
    };
    part("λ", m.dl);
    part("x", m.dx);
    part("y", m.dy);
    return os.str();
  }

  TermMap terms_;
};

}  // namespace daehee
