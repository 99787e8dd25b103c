#pragma once

#include "daehee/series.hpp"

#include <string>
#include <vector>

namespace daehee {

enum class FamilyName {
  bernoulli,
  bernoulli2nd,
  higher_bernoulli,
  degen_bernoulli,
  higher_degen_bernoulli,
  daehee,
  higher_daehee,
  degen_daehee_1st,
  degen_daehee_2nd,
  higher_degen_daehee_2nd,
};

inline bool is_higher_order(FamilyName f) {
  return f == FamilyName::higher_bernoulli || f == FamilyName::higher_degen_bernoulli ||
         f == FamilyName::higher_daehee || f == FamilyName::higher_degen_daehee_2nd;
}

struct FamilyId {
  FamilyName name = FamilyName::bernoulli;
  long long order_r = 1;

  FamilyId() = default;
  FamilyId(FamilyName n, long long r = 1) : name(n), order_r(r) {
    if (!is_higher_order(n) && r != 1)
      throw std::invalid_argument("FamilyId: order must be 1 for a non-higher family");
    if (n == FamilyName::higher_daehee && r < 1)
      throw std::invalid_argument("FamilyId: higher Daehee order must be positive");
    if ((n == FamilyName::higher_bernoulli || n == FamilyName::higher_degen_bernoulli) && r < 1)
      throw std::invalid_argument("FamilyId: higher Bernoulli order must be positive");
    // higher_degen_daehee_2nd admits any integer order, negative included
  }
};

enum class TriangleKind { stirling1, stirling2, degen_stirling2 };

/// Lower-triangular table rows[n][k], 0 <= k <= n.
struct Triangle {
  TriangleKind kind;
  std::vector<std::vector<MultiPoly>> rows;
};

/// (x)_n = x(x-1)...(x-n+1), or the lambda-deformation
/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda). The variable defaults to
/// x; identities over a second symbol use Var::y.
inline MultiPoly falling_factorial(std::size_t n, bool degenerate, Var var = Var::x) {
  MultiPoly acc = MultiPoly::constant(Rational(1));
  const MultiPoly v = MultiPoly::variable(var);
  const MultiPoly lam = MultiPoly::variable(Var::lambda);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly step = degenerate ? lam * Rational(static_cast<long long>(i))
                                : MultiPoly::constant(Rational(static_cast<long long>(i)));
    acc = acc * (v - step);
  }
  return acc;
}

namespace detail {

/// Column fill from the generating series base^m / m!: entry (n, m) is
/// n!/m! * [t^n] base^m.
inline Triangle triangle_from_base(TriangleKind kind, const TruncatedSeries& base,
                                   std::size_t n_max) {
  Triangle tr{kind, {}};
  tr.rows.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    tr.rows[n].assign(n + 1, MultiPoly());
  TruncatedSeries pw = TruncatedSeries::one(n_max);
  for (std::size_t m = 0; m <= n_max; ++m) {
    if (m > 0)
      pw = pw * base;
    const Rational inv_mfact(BigInt(1), factorial(m));
    for (std::size_t n = m; n <= n_max; ++n)
      tr.rows[n][m] = egf_coefficient(pw, n) * inv_mfact;
  }
  return tr;
}

}  // namespace detail

/// Stirling triangles. The classical kinds are built by their recurrences;
/// the degenerate second kind is extracted from its generating series
/// ((1+lambda*t)^{1/lambda} - 1)^m / m!.
inline Triangle triangle(TriangleKind kind, std::size_t n_max) {
  if (kind == TriangleKind::degen_stirling2) {
    if (n_max == 0) {
      Triangle tr{kind, {{MultiPoly::constant(Rational(1))}}};
      return tr;
    }
    TruncatedSeries base =
        sym_binom_pow(TruncatedSeries::identity(n_max), Rational(1)) - TruncatedSeries::one(n_max);
    return detail::triangle_from_base(kind, base, n_max);
  }

  Triangle tr{kind, {}};
  tr.rows.resize(n_max + 1);
  tr.rows[0] = {MultiPoly::constant(Rational(1))};
  for (std::size_t n = 1; n <= n_max; ++n) {
    tr.rows[n].assign(n + 1, MultiPoly());
    for (std::size_t k = 0; k <= n; ++k) {
      MultiPoly prev_k = k <= n - 1 ? tr.rows[n - 1][k] : MultiPoly();
      MultiPoly prev_k1 = (k >= 1 && k - 1 <= n - 1) ? tr.rows[n - 1][k - 1] : MultiPoly();
      if (kind == TriangleKind::stirling1)
        tr.rows[n][k] = prev_k1 - prev_k * Rational(static_cast<long long>(n - 1));
      else
        tr.rows[n][k] = prev_k1 + prev_k * Rational(static_cast<long long>(k));
    }
  }
  return tr;
}

/// Series-extraction path for the classical Stirling triangles: first kind
/// from log(1+t)^m / m!, second kind from (e^t - 1)^m / m!. Cross-checks
/// the recurrence path.
inline Triangle triangle_by_series(TriangleKind kind, std::size_t n_max) {
  if (kind == TriangleKind::degen_stirling2)
    return triangle(kind, n_max);
  if (n_max == 0)
    return Triangle{kind, {{MultiPoly::constant(Rational(1))}}};
  const TruncatedSeries t = TruncatedSeries::identity(n_max);
  TruncatedSeries base = kind == TriangleKind::stirling1
                             ? log1p(t)
                             : exp(t) - TruncatedSeries::one(n_max);
  return detail::triangle_from_base(kind, base, n_max);
}

/// Generating series of a family at truncation order n_max, with x (and for
/// the addition identities y) left symbolic. All returned series are fully
/// computable through coefficient n_max: the single exact division every
/// generator contains is absorbed by one internal spare order.
inline TruncatedSeries generating_series(const FamilyId& id, std::size_t n_max) {
  const std::size_t ord = n_max + 1;
  const TruncatedSeries t = TruncatedSeries::identity(ord);
  const TruncatedSeries one = TruncatedSeries::one(ord);
  const MultiPoly x = MultiPoly::variable(Var::x);

  TruncatedSeries s = [&]() -> TruncatedSeries {
    switch (id.name) {
      case FamilyName::bernoulli:
        return div_exact(t, exp(t) - one) * exp(t * x);
      case FamilyName::bernoulli2nd:
        return div_exact(t, log1p(t));
      case FamilyName::higher_bernoulli:
        return int_pow(div_exact(t, exp(t) - one), id.order_r) * exp(t * x);
      case FamilyName::degen_bernoulli:
        return div_exact(t, sym_binom_pow(t, Rational(1)) - one) * sym_binom_pow(t, x);
      case FamilyName::higher_degen_bernoulli:
        return int_pow(div_exact(t, sym_binom_pow(t, Rational(1)) - one), id.order_r) *
               sym_binom_pow(t, x);
      case FamilyName::daehee:
        return div_exact(log1p(t), t) * pow1p(t, x);
      case FamilyName::higher_daehee:
        return int_pow(div_exact(log1p(t), t), id.order_r) * pow1p(t, x);
      case FamilyName::degen_daehee_1st: {
        // lambda*log(1 + (1/lambda)log(1+lambda*t)) / log(1+lambda*t)
        // == log(1+X)/X with X = (1/lambda)log(1+lambda*t).
        TruncatedSeries X = scaled_log(t);
        return div_exact(log1p(X), X);
      }
      case FamilyName::degen_daehee_2nd: {
        TruncatedSeries L = log1p(t);
        return div_exact(L, sym_binom_pow(L, Rational(1)) - one) * sym_binom_pow(L, x);
      }
      case FamilyName::higher_degen_daehee_2nd: {
        TruncatedSeries L = log1p(t);
        return int_pow(div_exact(L, sym_binom_pow(L, Rational(1)) - one), id.order_r) *
               sym_binom_pow(L, x);
      }
    }
    throw std::invalid_argument("generating_series: unknown family");
  }();
  return s.truncated(n_max);
}

/// n-th sequence value of a family: EGF coefficient n of its generating
/// series built at order n_max.
inline MultiPoly family_value(const FamilyId& id, std::size_t n, std::size_t n_max) {
  if (n > n_max)
    throw std::out_of_range("family_value: index exceeds truncation order");
  return egf_coefficient(generating_series(id, n_max), n);
}

/// All sequence values 0..n_max of a family from one series build.
inline std::vector<MultiPoly> family_values(const FamilyId& id, std::size_t n_max) {
  TruncatedSeries s = generating_series(id, n_max);
  std::vector<MultiPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    out.push_back(egf_coefficient(s, n));
  return out;
}

/// Higher-order Bernoulli polynomial value: EGF coefficient n of
/// (t/(e^t-1))^alpha * e^{(x + x_shift) t}, with x symbolic. Substituting
/// x = 0 afterwards evaluates the polynomial at the numeric point x_shift.
inline MultiPoly higher_bernoulli_value(std::size_t n, long long alpha,
                                        const Rational& x_shift = Rational(0)) {
  const std::size_t ord = n + 1;
  const TruncatedSeries t = TruncatedSeries::identity(ord);
  TruncatedSeries base = div_exact(t, exp(t) - TruncatedSeries::one(ord));
  MultiPoly arg = MultiPoly::variable(Var::x) + MultiPoly::constant(x_shift);
  TruncatedSeries s = int_pow(base, alpha) * exp(t * arg);
  return egf_coefficient(s, n);
}

/// Bernoulli number of the second kind b_n: EGF coefficient of t/log(1+t).
inline Rational bernoulli_2nd_value(std::size_t n) {
  return family_value(FamilyId(FamilyName::bernoulli2nd), n, n).constant_value();
}

inline std::string family_name_str(FamilyName f) {
  switch (f) {
    case FamilyName::bernoulli: return "bernoulli";
    case FamilyName::bernoulli2nd: return "bernoulli-2nd";
    case FamilyName::higher_bernoulli: return "higher-bernoulli";
    case FamilyName::degen_bernoulli: return "degen-bernoulli";
    case FamilyName::higher_degen_bernoulli: return "higher-degen-bernoulli";
    case FamilyName::daehee: return "daehee";
    case FamilyName::higher_daehee: return "higher-daehee";
    case FamilyName::degen_daehee_1st: return "degen-daehee-1st";
    case FamilyName::degen_daehee_2nd: return "degen-daehee-2nd";
    case FamilyName::higher_degen_daehee_2nd: return "higher-degen-daehee-2nd";
  }
  return "?";
}

inline std::string triangle_kind_str(TriangleKind k) {
  switch (k) {
    case TriangleKind::stirling1: return "stirling1";
    case TriangleKind::stirling2: return "stirling2";
    case TriangleKind::degen_stirling2: return "degen-stirling2";
  }
  return "?";
}

}  // namespace daehee
