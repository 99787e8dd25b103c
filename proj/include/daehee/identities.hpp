#pragma once

#include "daehee/families.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace daehee {

enum class IdentityId {
  eq10,
  eq13,
  thm1,
  thm2,
  thm3,
  thm4,
  thm5,
  thm6_corrected,
  thm7,
  thm8_product,
  thm9,
  thm10,
  thm11,
  eq32,
  eq40_addition,
  limit_checks,
};

inline const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::eq10,  IdentityId::eq13,        IdentityId::thm1,
      IdentityId::thm2,  IdentityId::thm3,        IdentityId::thm4,
      IdentityId::thm5,  IdentityId::thm6_corrected, IdentityId::thm7,
      IdentityId::thm8_product, IdentityId::thm9, IdentityId::thm10,
      IdentityId::thm11, IdentityId::eq32,        IdentityId::eq40_addition,
      IdentityId::limit_checks,
  };
  return ids;
}

inline std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::eq10: return "eq10";
    case IdentityId::eq13: return "eq13";
    case IdentityId::thm1: return "thm1";
    case IdentityId::thm2: return "thm2";
    case IdentityId::thm3: return "thm3";
    case IdentityId::thm4: return "thm4";
    case IdentityId::thm5: return "thm5";
    case IdentityId::thm6_corrected: return "thm6_corrected";
    case IdentityId::thm7: return "thm7";
    case IdentityId::thm8_product: return "thm8_product";
    case IdentityId::thm9: return "thm9";
    case IdentityId::thm10: return "thm10";
    case IdentityId::thm11: return "thm11";
    case IdentityId::eq32: return "eq32";
    case IdentityId::eq40_addition: return "eq40_addition";
    case IdentityId::limit_checks: return "limit_checks";
  }
  return "?";
}

/// First failing parameter tuple of a check, with both exactly-computed
/// sides.
struct Witness {
  std::map<std::string, long long> indices;  // always "n"; "r"/"k"/"d"/"m"/"case" as applicable
  MultiPoly lhs;
  MultiPoly rhs;
};

/// Quantification knobs a report actually ran with.
struct ParamSet {
  std::size_t n_max = 0;
  std::optional<long long> r_max;
  std::optional<std::size_t> d_max;
  std::optional<std::vector<long long>> k_set;
};

struct VerificationReport {
  IdentityId identity = IdentityId::eq10;
  bool passed = false;
  ParamSet params;
  std::optional<Witness> witness;
  std::int64_t elapsed_ms = 0;
  std::string note;  // "corrected reading" where the check verifies a repaired statement
};

struct VerifyConfig {
  std::size_t n_max = 12;
  long long r_max = 4;
  std::size_t d_max = 3;
  std::vector<long long> k_set = {-1, 0, 1, 2, 3};
  bool inject_fault = false;  // test fixture: perturbs one right-hand side
};

namespace detail {

using MaybeWitness = std::optional<Witness>;

inline MultiPoly at_point(const MultiPoly& p, const Rational& x_value) {
  return p.substitute_x_affine(x_value, Rational(0));
}

inline MultiPoly numbers_part(const MultiPoly& p) { return at_point(p, Rational(0)); }

inline Rational tri_rat(const Triangle& t, std::size_t n, std::size_t k) {
  return t.rows[n][k].constant_value();
}

template <typename Body>
VerificationReport timed(IdentityId id, ParamSet params, std::string note, Body&& body) {
  VerificationReport rep;
  rep.identity = id;
  rep.params = std::move(params);
  rep.note = std::move(note);
  const auto t0 = std::chrono::steady_clock::now();
  rep.witness = body();
  const auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rep.passed = !rep.witness.has_value();
  return rep;
}

// beta_{n,lambda}(x) as a binomial double sum over Bernoulli polynomials,
// Stirling numbers of the first kind and Bernoulli numbers of the second
// kind.
inline MaybeWitness body_eq10(std::size_t n_max, bool fault) {
  const auto beta = family_values(FamilyId(FamilyName::degen_bernoulli), n_max);
  const auto bern = family_values(FamilyId(FamilyName::bernoulli), n_max);
  const auto b2 = family_values(FamilyId(FamilyName::bernoulli2nd), n_max);
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t m = 0; m <= k; ++m) {
        Rational c = Rational(binomial(n, k)) * tri_rat(s1, k, m) * b2[n - k].constant_value();
        if (c.is_zero())
          continue;
        rhs += bern[m] * MultiPoly::monomial(c, static_cast<unsigned>(n - m), 0, 0);
      }
    }
    if (fault && n == std::min<std::size_t>(1, n_max))
      rhs += MultiPoly::constant(Rational(1));
    if (beta[n] != rhs)
      return Witness{{{"n", static_cast<long long>(n)}}, beta[n], rhs};
  }
  return std::nullopt;
}

// B_n(x) as a Stirling-2 transform of the Daehee polynomials.
inline MaybeWitness body_eq13(std::size_t n_max) {
  const auto bern = family_values(FamilyId(FamilyName::bernoulli), n_max);
  const auto dae = family_values(FamilyId(FamilyName::daehee), n_max);
  const auto s2 = triangle(TriangleKind::stirling2, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t m = 0; m <= n; ++m)
      rhs += dae[m] * tri_rat(s2, n, m);
    if (bern[n] != rhs)
      return Witness{{{"n", static_cast<long long>(n)}}, bern[n], rhs};
  }
  return std::nullopt;
}

// D_{n,lambda}(x) as a Stirling-1 transform of the degenerate Bernoulli
// polynomials.
inline MaybeWitness body_thm1(std::size_t n_max) {
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  const auto beta = family_values(FamilyId(FamilyName::degen_bernoulli), n_max);
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t m = 0; m <= n; ++m)
      rhs += beta[m] * tri_rat(s1, n, m);
    if (d2[n] != rhs)
      return Witness{{{"n", static_cast<long long>(n)}}, d2[n], rhs};
  }
  return std::nullopt;
}

// D_{n,lambda}(x) from its own numbers and the lambda-falling factorials.
inline MaybeWitness body_thm2(std::size_t n_max) {
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  std::vector<MultiPoly> d2num(n_max + 1), ffl(n_max + 1);
  for (std::size_t j = 0; j <= n_max; ++j) {
    d2num[j] = numbers_part(d2[j]);
    ffl[j] = falling_factorial(j, true);
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational cnk = Rational(binomial(n, k));
      for (std::size_t l = 0; l <= k; ++l) {
        Rational c = cnk * tri_rat(s1, k, l);
        if (c.is_zero())
          continue;
        rhs += ffl[l] * d2num[n - k] * c;
      }
    }
    if (d2[n] != rhs)
      return Witness{{{"n", static_cast<long long>(n)}}, d2[n], rhs};
  }
  return std::nullopt;
}

// beta_{n,lambda}(x) as a Stirling-2 transform of D_{m,lambda}(x).
inline MaybeWitness body_thm3(std::size_t n_max) {
  const auto beta = family_values(FamilyId(FamilyName::degen_bernoulli), n_max);
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  const auto s2 = triangle(TriangleKind::stirling2, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t m = 0; m <= n; ++m)
      rhs += d2[m] * tri_rat(s2, n, m);
    if (beta[n] != rhs)
      return Witness{{{"n", static_cast<long long>(n)}}, beta[n], rhs};
  }
  return std::nullopt;
}

// D_{n,lambda}(1) - D_{n,lambda} collapses to a lambda-free factorial.
inline MaybeWitness body_thm4(std::size_t n_max) {
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const MultiPoly lhs = at_point(d2[n], Rational(1)) - numbers_part(d2[n]);
    MultiPoly rhs;
    if (n >= 1) {
      Rational v = Rational(factorial(n - 1));
      if (n % 2 == 0)
        v = -v;
      rhs = MultiPoly::constant(v);
    }
    if (lhs != rhs)
      return Witness{{{"n", static_cast<long long>(n)}}, lhs, rhs};
  }
  return std::nullopt;
}

// Multiplication-type formula: D_{n,lambda}(x) from beta at modulus d, with
// lambda -> lambda/d and x -> (a+x)/d over the residues a < d.
inline MaybeWitness body_thm5(std::size_t n_max, std::size_t d_max) {
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  const auto beta = family_values(FamilyId(FamilyName::degen_bernoulli), n_max);
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  for (std::size_t d = 1; d <= d_max; ++d) {
    const long long dd = static_cast<long long>(d);
    // residue sums sum_{a<d} beta_{m,lambda/d}((a+x)/d)
    std::vector<MultiPoly> residue_sum(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
      const MultiPoly scaled = beta[m].scale_lambda(Rational(1, dd));
      for (long long a = 0; a < dd; ++a)
        residue_sum[m] += scaled.substitute_x_affine(Rational(a, dd), Rational(1, dd));
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      MultiPoly rhs;
      for (std::size_t m = 0; m <= n; ++m) {
        Rational c = pow(Rational(dd), static_cast<long long>(m) - 1) * tri_rat(s1, n, m);
        if (c.is_zero())
          continue;
        rhs += residue_sum[m] * c;
      }
      if (d2[n] != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"d", dd}}, d2[n], rhs};
    }
  }
  return std::nullopt;
}

// Finite-sum evaluation of the number differences, with the summation over
// l = 0..n-1 restored on the right-hand side (corrected reading).
inline MaybeWitness body_thm6(std::size_t n_max) {
  if (n_max == 0)
    return std::nullopt;
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  const auto dae = family_values(FamilyId(FamilyName::daehee), n_max);
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  std::vector<MultiPoly> dnum(n_max + 1), ffd(n_max + 1);
  for (std::size_t j = 0; j <= n_max; ++j) {
    dnum[j] = numbers_part(dae[j]);
    ffd[j] = falling_factorial(j, true);
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    // lsum[k] = sum_{l=0}^{n-1} (l)_{k,lambda}
    std::vector<MultiPoly> lsum(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k)
      for (std::size_t l = 0; l < n; ++l)
        lsum[k] += at_point(ffd[k], Rational(static_cast<long long>(l)));
    for (std::size_t m = 0; m + 1 <= n_max; ++m) {
      const MultiPoly lhs =
          (at_point(d2[m + 1], Rational(static_cast<long long>(n))) - numbers_part(d2[m + 1])) *
          Rational(1, static_cast<long long>(m) + 1);
      MultiPoly rhs;
      for (std::size_t j = 0; j <= m; ++j) {
        const Rational cmj = Rational(binomial(m, j));
        for (std::size_t k = 0; k <= j; ++k) {
          Rational c = cmj * tri_rat(s1, j, k);
          if (c.is_zero())
            continue;
          rhs += lsum[k] * dnum[m - j] * c;
        }
      }
      if (lhs != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}},
                       lhs, rhs};
    }
  }
  return std::nullopt;
}

// Higher-order analogue of thm1; the beta factor carries the polynomial
// argument (corrected reading).
inline MaybeWitness body_thm7(std::size_t n_max, long long r_max) {
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  for (long long r = 1; r <= r_max; ++r) {
    const auto dr = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, r), n_max);
    const auto betar = family_values(FamilyId(FamilyName::higher_degen_bernoulli, r), n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      MultiPoly rhs;
      for (std::size_t m = 0; m <= n; ++m)
        rhs += betar[m] * tri_rat(s1, n, m);
      if (dr[n] != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"r", r}}, dr[n], rhs};
    }
  }
  return std::nullopt;
}

// Order splitting r = (r-k) + k as a binomial convolution of numbers with
// polynomials.
inline MaybeWitness body_thm8(std::size_t n_max, long long r_max) {
  std::vector<std::vector<MultiPoly>> dvals(r_max + 1), dnums(r_max + 1);
  for (long long j = 1; j <= r_max; ++j) {
    dvals[j] = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, j), n_max);
    dnums[j].resize(n_max + 1);
    for (std::size_t l = 0; l <= n_max; ++l)
      dnums[j][l] = numbers_part(dvals[j][l]);
  }
  for (long long r = 2; r <= r_max; ++r) {
    for (long long k = 1; k < r; ++k) {
      for (std::size_t n = 0; n <= n_max; ++n) {
        MultiPoly rhs;
        for (std::size_t l = 0; l <= n; ++l)
          rhs += dnums[r - k][l] * dvals[k][n - l] * Rational(binomial(n, l));
        if (dvals[r][n] != rhs)
          return Witness{{{"n", static_cast<long long>(n)}, {"r", r}, {"k", k}},
                         dvals[r][n], rhs};
      }
    }
  }
  return std::nullopt;
}

// Higher-order analogue of thm3, with the left side indexed by n
// (corrected reading).
inline MaybeWitness body_thm9(std::size_t n_max, long long r_max) {
  const auto s2 = triangle(TriangleKind::stirling2, n_max);
  for (long long r = 1; r <= r_max; ++r) {
    const auto betar = family_values(FamilyId(FamilyName::higher_degen_bernoulli, r), n_max);
    const auto dr = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, r), n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      MultiPoly rhs;
      for (std::size_t m = 0; m <= n; ++m)
        rhs += dr[m] * tri_rat(s2, n, m);
      if (betar[n] != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"r", r}}, betar[n], rhs};
    }
  }
  return std::nullopt;
}

// D^{(r)}_{n,lambda}(x) through higher-order Bernoulli values at shifted
// arguments, degenerate Stirling-2 and two Stirling-1 layers.
inline MaybeWitness body_thm10(std::size_t n_max, long long r_max) {
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  const auto s2l = triangle(TriangleKind::degen_stirling2, n_max);
  for (long long r = 1; r <= r_max; ++r) {
    const auto dr = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, r), n_max);
    std::vector<MultiPoly> b_shift(n_max + 1);
    std::vector<Rational> b_one(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
      b_shift[m] = higher_bernoulli_value(m, static_cast<long long>(m) + r + 1, Rational(1));
      b_one[m] = numbers_part(
                     higher_bernoulli_value(m, static_cast<long long>(m) - r + 1, Rational(1)))
                     .constant_value();
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      MultiPoly rhs;
      for (std::size_t p = 0; p <= n; ++p) {
        const Rational cnp = Rational(binomial(n, p));
        for (std::size_t k = 0; k <= p; ++k) {
          const Rational s1pk = tri_rat(s1, p, k);
          if (s1pk.is_zero())
            continue;
          for (std::size_t m = 0; m <= k; ++m) {
            if (s2l.rows[k][m].is_zero())
              continue;
            const MultiPoly left = b_shift[m] * s2l.rows[k][m] * (cnp * s1pk);
            for (std::size_t j = 0; j <= n - p; ++j) {
              Rational c = b_one[j] * tri_rat(s1, n - p, j);
              if (c.is_zero())
                continue;
              rhs += left * MultiPoly::monomial(c, static_cast<unsigned>(j), 0, 0);
            }
          }
        }
      }
      if (dr[n] != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"r", r}}, dr[n], rhs};
    }
  }
  return std::nullopt;
}

// Negative-order numbers from degenerate Stirling-2 and Stirling-1 entries
// above the diagonal and higher-order Bernoulli values at 1.
inline MaybeWitness body_thm11(std::size_t n_max, long long r_max) {
  const std::size_t big = n_max + static_cast<std::size_t>(r_max);
  const auto s1 = triangle(TriangleKind::stirling1, big);
  const auto s2l = triangle(TriangleKind::degen_stirling2, big);
  for (long long r = 1; r <= r_max; ++r) {
    const std::size_t ur = static_cast<std::size_t>(r);
    const auto dneg = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, -r), n_max);
    std::vector<Rational> b_one(n_max + 1);
    for (std::size_t j = 0; j <= n_max; ++j)
      b_one[j] = numbers_part(
                     higher_bernoulli_value(j, static_cast<long long>(j) - r + 1, Rational(1)))
                     .constant_value();
    for (std::size_t n = 0; n <= n_max; ++n) {
      const MultiPoly lhs = numbers_part(dneg[n]);
      MultiPoly rhs;
      for (std::size_t k = 0; k <= n; ++k) {
        const Rational outer =
            Rational(binomial(n, k)) / Rational(binomial(k + ur, k)) * b_one[n - k];
        if (outer.is_zero())
          continue;
        for (std::size_t l = 0; l <= k; ++l) {
          const Rational s1v = tri_rat(s1, k + ur, l + ur);
          if (s1v.is_zero())
            continue;
          rhs += s2l.rows[l + ur][ur] * (outer * s1v);
        }
      }
      if (lhs != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"r", r}}, lhs, rhs};
    }
  }
  return std::nullopt;
}

// (t/log(1+t))^k (1+t)^{x-1} generates B_n^{(n-k+1)}(x), for any integer k.
inline MaybeWitness body_eq32(std::size_t n_max, const std::vector<long long>& k_set) {
  const std::size_t ord = n_max + 1;
  const TruncatedSeries t = TruncatedSeries::identity(ord);
  const TruncatedSeries base = div_exact(t, log1p(t));
  const MultiPoly xm1 = MultiPoly::variable(Var::x) - MultiPoly::constant(Rational(1));
  const TruncatedSeries tail = pow1p(t, xm1);
  for (long long k : k_set) {
    const TruncatedSeries lhs_series = int_pow(base, k) * tail;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const MultiPoly lhs = egf_coefficient(lhs_series, n);
      const MultiPoly rhs = higher_bernoulli_value(n, static_cast<long long>(n) - k + 1);
      if (lhs != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"k", k}}, lhs, rhs};
    }
  }
  return std::nullopt;
}

// Addition formula in ℚ[lambda,x,y]; the right-hand factor is the full
// lambda-dependent polynomial family (corrected reading).
inline MaybeWitness body_eq40(std::size_t n_max, long long r_max) {
  const std::size_t ord = n_max + 1;
  const TruncatedSeries t = TruncatedSeries::identity(ord);
  const TruncatedSeries one = TruncatedSeries::one(ord);
  const TruncatedSeries L = log1p(t);
  const MultiPoly xy = MultiPoly::variable(Var::x) + MultiPoly::variable(Var::y);
  const auto s1 = triangle(TriangleKind::stirling1, n_max);
  std::vector<MultiPoly> ffy(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m)
    ffy[m] = falling_factorial(m, true, Var::y);
  const TruncatedSeries unit_base = div_exact(L, sym_binom_pow(L, Rational(1)) - one);
  for (long long r = 1; r <= r_max; ++r) {
    const TruncatedSeries lhs_series = int_pow(unit_base, r) * sym_binom_pow(L, xy);
    const auto dr = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, r), n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const MultiPoly lhs = egf_coefficient(lhs_series, n);
      MultiPoly rhs;
      for (std::size_t k = 0; k <= n; ++k) {
        const Rational cnk = Rational(binomial(n, k));
        for (std::size_t m = 0; m <= k; ++m) {
          Rational c = cnk * tri_rat(s1, k, m);
          if (c.is_zero())
            continue;
          rhs += dr[n - k] * ffy[m] * c;
        }
      }
      if (lhs != rhs)
        return Witness{{{"n", static_cast<long long>(n)}, {"r", r}}, lhs, rhs};
    }
  }
  return std::nullopt;
}

// lambda := 0 maps every degenerate family onto its classical counterpart.
inline MaybeWitness body_limits(std::size_t n_max) {
  struct Case {
    long long case_id;
    long long r;  // 0 when not applicable
    std::vector<MultiPoly> degen;
    std::vector<MultiPoly> classical;
  };
  std::vector<Case> cases;
  cases.push_back({0, 0, family_values(FamilyId(FamilyName::degen_bernoulli), n_max),
                   family_values(FamilyId(FamilyName::bernoulli), n_max)});
  {
    auto dae = family_values(FamilyId(FamilyName::daehee), n_max);
    std::vector<MultiPoly> dae_numbers(n_max + 1);
    for (std::size_t j = 0; j <= n_max; ++j)
      dae_numbers[j] = numbers_part(dae[j]);
    cases.push_back({1, 0, family_values(FamilyId(FamilyName::degen_daehee_1st), n_max),
                     std::move(dae_numbers)});
    cases.push_back({2, 0, family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max),
                     std::move(dae)});
  }
  for (long long r = 1; r <= 3; ++r) {
    cases.push_back({3, r,
                     family_values(FamilyId(FamilyName::higher_degen_bernoulli, r), n_max),
                     family_values(FamilyId(FamilyName::higher_bernoulli, r), n_max)});
    cases.push_back({4, r,
                     family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, r), n_max),
                     family_values(FamilyId(FamilyName::higher_daehee, r), n_max)});
  }
  for (const Case& c : cases) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const MultiPoly lhs = c.degen[n].substitute_lambda(Rational(0));
      if (lhs != c.classical[n]) {
        Witness w{{{"n", static_cast<long long>(n)}, {"case", c.case_id}}, lhs, c.classical[n]};
        if (c.r != 0)
          w.indices["r"] = c.r;
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline VerificationReport check_eq10(std::size_t n_max, bool inject_fault = false) {
  return detail::timed(IdentityId::eq10, ParamSet{n_max, {}, {}, {}}, "",
                       [&] { return detail::body_eq10(n_max, inject_fault); });
}

inline VerificationReport check_eq13(std::size_t n_max) {
  return detail::timed(IdentityId::eq13, ParamSet{n_max, {}, {}, {}},
                       "", [&] { return detail::body_eq13(n_max); });
}

inline VerificationReport check_thm(IdentityId id, std::size_t n_max, long long r_max,
                                    std::size_t d_max) {
  using detail::timed;
  switch (id) {
    case IdentityId::thm1:
      return timed(id, ParamSet{n_max, {}, {}, {}}, "", [&] { return detail::body_thm1(n_max); });
    case IdentityId::thm2:
      return timed(id, ParamSet{n_max, {}, {}, {}}, "", [&] { return detail::body_thm2(n_max); });
    case IdentityId::thm3:
      return timed(id, ParamSet{n_max, {}, {}, {}}, "", [&] { return detail::body_thm3(n_max); });
    case IdentityId::thm4:
      return timed(id, ParamSet{n_max, {}, {}, {}}, "", [&] { return detail::body_thm4(n_max); });
    case IdentityId::thm5:
      return timed(id, ParamSet{n_max, {}, d_max, {}}, "",
                   [&] { return detail::body_thm5(n_max, d_max); });
    case IdentityId::thm6_corrected:
      return timed(id, ParamSet{n_max, {}, {}, {}}, "corrected reading",
                   [&] { return detail::body_thm6(n_max); });
    case IdentityId::thm7:
      return timed(id, ParamSet{n_max, r_max, {}, {}}, "corrected reading",
                   [&] { return detail::body_thm7(n_max, r_max); });
    case IdentityId::thm8_product:
      return timed(id, ParamSet{n_max, r_max, {}, {}}, "",
                   [&] { return detail::body_thm8(n_max, r_max); });
    case IdentityId::thm9:
      return timed(id, ParamSet{n_max, r_max, {}, {}}, "corrected reading",
                   [&] { return detail::body_thm9(n_max, r_max); });
    case IdentityId::thm10:
      return timed(id, ParamSet{n_max, r_max, {}, {}}, "",
                   [&] { return detail::body_thm10(n_max, r_max); });
    case IdentityId::thm11:
      return timed(id, ParamSet{n_max, r_max, {}, {}}, "",
                   [&] { return detail::body_thm11(n_max, r_max); });
    default:
      throw std::invalid_argument("check_thm: not a theorem identity");
  }
}

inline VerificationReport check_eq32(std::size_t n_max, const std::vector<long long>& k_set) {
  return detail::timed(IdentityId::eq32, ParamSet{n_max, {}, {}, k_set}, "",
                       [&] { return detail::body_eq32(n_max, k_set); });
}

inline VerificationReport check_eq40(std::size_t n_max, long long r_max) {
  return detail::timed(IdentityId::eq40_addition, ParamSet{n_max, r_max, {}, {}},
                       "corrected reading", [&] { return detail::body_eq40(n_max, r_max); });
}

inline VerificationReport check_limits(std::size_t n_max) {
  return detail::timed(IdentityId::limit_checks, ParamSet{n_max, {}, {}, {}}, "",
                       [&] { return detail::body_limits(n_max); });
}

/// Runs the full battery in the fixed IdentityId order.
inline std::vector<VerificationReport> run_all(const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  out.reserve(all_identities().size());
  for (IdentityId id : all_identities()) {
    switch (id) {
      case IdentityId::eq10:
        out.push_back(check_eq10(cfg.n_max, cfg.inject_fault));
        break;
      case IdentityId::eq13:
        out.push_back(check_eq13(cfg.n_max));
        break;
      case IdentityId::eq32:
        out.push_back(check_eq32(cfg.n_max, cfg.k_set));
        break;
      case IdentityId::eq40_addition:
        out.push_back(check_eq40(cfg.n_max, cfg.r_max));
        break;
      case IdentityId::limit_checks:
        out.push_back(check_limits(cfg.n_max));
        break;
      default:
        out.push_back(check_thm(id, cfg.n_max, cfg.r_max, cfg.d_max));
        break;
    }
  }
  return out;
}

}  // namespace daehee
