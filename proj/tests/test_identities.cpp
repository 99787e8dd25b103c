#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daehee/identities.hpp"
#include "oracles.hpp"

using namespace daehee;

namespace {
MultiPoly c(long long n, long long d = 1) { return MultiPoly::constant(Rational(n, d)); }
MultiPoly at0(const MultiPoly& p) { return p.substitute_x_affine(Rational(0), Rational(0)); }
}  // namespace

TEST_CASE("intro identities verify") {
  CHECK(check_eq10(8).passed);
  CHECK(check_eq13(8).passed);
}

TEST_CASE("theorem checks verify at moderate ranges") {
  for (IdentityId id : {IdentityId::thm1, IdentityId::thm2, IdentityId::thm3, IdentityId::thm4,
                        IdentityId::thm5, IdentityId::thm6_corrected, IdentityId::thm7,
                        IdentityId::thm8_product, IdentityId::thm9, IdentityId::thm10,
                        IdentityId::thm11}) {
    const VerificationReport rep = check_thm(id, 8, 3, 2);
    CAPTURE(identity_name(id));
    CHECK(rep.passed);
    CHECK_FALSE(rep.witness.has_value());
  }
  CHECK(check_eq32(8, {-1, 0, 1, 2}).passed);
  CHECK(check_eq40(8, 3).passed);
  CHECK(check_limits(8).passed);
}

TEST_CASE("thm4 values are the signed factorials, lambda-free") {
  const std::size_t n_max = 8;
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const MultiPoly diff = d2[n].substitute_x_affine(Rational(1), Rational(0)) - at0(d2[n]);
    CHECK(diff.degree(Var::lambda) == 0);
    if (n == 0) {
      CHECK(diff.is_zero());
    } else {
      Rational expect = Rational(factorial(n - 1));
      if (n % 2 == 0)
        expect = -expect;
      CHECK(diff == MultiPoly::constant(expect));
    }
  }
}

TEST_CASE("thm1 at lambda=0 degenerates to the classical expansion") {
  // D_n(x) = sum_m B_m(x) S1(n,m), with the classical sides from the
  // recurrence oracle and the closed form
  const std::size_t n_max = 10;
  const Triangle s1 = triangle(TriangleKind::stirling1, n_max);
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly classical_rhs;
    for (std::size_t m = 0; m <= n; ++m)
      classical_rhs += oracles::bernoulli_polynomial(m) * s1.rows[n][m].constant_value();
    CHECK(d2[n].substitute_lambda(Rational(0)) == classical_rhs);
    CHECK(at0(classical_rhs) ==
          MultiPoly::constant(oracles::daehee_number(n)));  // daehee oracle cross-check
  }
}

TEST_CASE("thm5 at d=1 collapses to thm1's expansion") {
  // d^{m-1} = 1 and the residue sum has the single term a = 0
  const std::size_t n_max = 6;
  const auto d2 = family_values(FamilyId(FamilyName::degen_daehee_2nd), n_max);
  const auto beta = family_values(FamilyId(FamilyName::degen_bernoulli), n_max);
  const Triangle s1 = triangle(TriangleKind::stirling1, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t m = 0; m <= n; ++m)
      rhs += beta[m] * s1.rows[n][m].constant_value();
    CHECK(d2[n] == rhs);
  }
}

TEST_CASE("eq40 reduces to the plain expansion at y=0") {
  const std::size_t n_max = 6;
  const auto dr = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, 2), n_max);
  const Triangle s1 = triangle(TriangleKind::stirling1, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational cnk = Rational(binomial(n, k));
      for (std::size_t m = 0; m <= k; ++m) {
        const MultiPoly ffy0 = falling_factorial(m, true, Var::y)
                                   .substitute_y_affine(Rational(0), Rational(0));
        rhs += dr[n - k] * ffy0 * (cnk * s1.rows[k][m].constant_value());
      }
    }
    CHECK(rhs == dr[n]);  // (0)_{m,lambda} = delta_{m,0}
  }
}

TEST_CASE("fault injection produces a failing report with a witness") {
  const VerificationReport rep = check_eq10(4, true);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->indices.at("n") == 1);
  CHECK(rep.witness->lhs != rep.witness->rhs);
}

TEST_CASE("run_all: deterministic order, notes, trivial config") {
  VerifyConfig cfg;
  cfg.n_max = 0;
  cfg.r_max = 2;
  cfg.d_max = 1;
  cfg.k_set = {0, 1};
  const auto reports = run_all(cfg);
  REQUIRE(reports.size() == all_identities().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].identity == all_identities()[i]);
    CHECK(reports[i].passed);
  }
  // corrected readings are flagged
  for (const auto& rep : reports) {
    const bool corrected = rep.identity == IdentityId::thm6_corrected ||
                           rep.identity == IdentityId::thm7 ||
                           rep.identity == IdentityId::thm9 ||
                           rep.identity == IdentityId::eq40_addition;
    CHECK(rep.note == (corrected ? "corrected reading" : ""));
  }
}

TEST_CASE("run_all with an injected fault fails exactly one identity") {
  VerifyConfig cfg;
  cfg.n_max = 3;
  cfg.r_max = 1;
  cfg.d_max = 1;
  cfg.k_set = {0};
  cfg.inject_fault = true;
  const auto reports = run_all(cfg);
  std::size_t failures = 0;
  for (const auto& rep : reports)
    failures += rep.passed ? 0 : 1;
  CHECK(failures == 1);
  CHECK_FALSE(reports.front().passed);  // eq10 carries the fixture
  CHECK(reports.front().witness.has_value());
}

TEST_CASE("stirling orthogonality at the identity level") {
  // substituting the thm1 expansion into thm3 returns the original beta
  const std::size_t n_max = 12;
  const auto beta = family_values(FamilyId(FamilyName::degen_bernoulli), n_max);
  const Triangle s1 = triangle(TriangleKind::stirling1, n_max);
  const Triangle s2 = triangle(TriangleKind::stirling2, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    MultiPoly acc;
    for (std::size_t m = 0; m <= n; ++m)
      for (std::size_t j = 0; j <= m; ++j)
        acc += beta[j] * (s2.rows[n][m].constant_value() * s1.rows[m][j].constant_value());
    CHECK(acc == beta[n]);
  }
}

TEST_CASE("iterated order splitting rebuilds the higher families") {
  // thm8 with k = r-1, applied r-1 times starting from order 1
  const std::size_t n_max = 10;
  const long long r_max = 4;
  const auto d1 = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, 1), n_max);
  std::vector<MultiPoly> d1num(n_max + 1);
  for (std::size_t l = 0; l <= n_max; ++l)
    d1num[l] = at0(d1[l]);
  std::vector<MultiPoly> cur = d1;
  for (long long r = 2; r <= r_max; ++r) {
    std::vector<MultiPoly> next(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t l = 0; l <= n; ++l)
        next[n] += d1num[l] * cur[n - l] * Rational(binomial(n, l));
    cur = std::move(next);
    const auto expect = family_values(FamilyId(FamilyName::higher_degen_daehee_2nd, r), n_max);
    for (std::size_t n = 0; n <= n_max; ++n)
      CHECK(cur[n] == expect[n]);
  }
}

TEST_CASE("check_thm rejects non-theorem ids") {
  CHECK_THROWS_AS(check_thm(IdentityId::eq10, 4, 1, 1), std::invalid_argument);
}
