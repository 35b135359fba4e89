#include <doctest.h>

#include <random>

#include "cjp/qring.hpp"

using namespace cjp;

namespace {

HalfLaurent q(int e) { return HalfLaurent::monomial(1, 2 * e); }

// Gaussian binomial by brute force: sum over k-subsets of {0..n-1} of q^(2 inv - k(n-k)),
// inv counting pairs (i in S, j not in S, i < j).
HalfLaurent brute_binom(int n, int k) {
  HalfLaurent acc;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> i & 1) && !(mask >> j & 1)) ++inv;
    acc += q(2 * inv - k * (n - k));
  }
  return acc;
}

HalfLaurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 5), ex(-8, 8), co(-4, 4);
  std::vector<HalfLaurent::Term> t;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    int c = co(rng);
    if (c) t.emplace_back(ex(rng), Rational(c));
  }
  auto p = HalfLaurent::from_terms(t);
  return p.is_zero() ? HalfLaurent(1) : p;
}

}  // namespace

TEST_SUITE("qring") {
  TEST_CASE("quantum integers") {
    CHECK(qint(3) == q(2) + 1 + q(-2));
    CHECK(qint(3).to_string() == "q^2 + 1 + q^(-2)");
    CHECK(qint(-3) == -qint(3));
    CHECK(qint(0).is_zero());
    // (q^n - q^-n) / (q - q^-1) by exact division.
    for (int n = 1; n <= 9; ++n) CHECK((q(n) - q(-n)).divide_exact(q(1) - q(-1)) == qint(n));
  }

  TEST_CASE("quantum binomials against brute force") {
    CHECK(qbinom(4, 2) == brute_binom(4, 2));
    CHECK(qbinom(4, 2) == q(4) + q(2) + 2 + q(-2) + q(-4));
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k) CHECK(qbinom(n, k) == brute_binom(n, k));
  }

  TEST_CASE("factorials") {
    CHECK(qfact(0) == HalfLaurent(1));
    CHECK(qfact(4) == qint(4) * qint(3) * qint(2));
    CHECK(qfact(6).degree() == 15);
  }

  TEST_CASE("half-integer degrees are canonical") {
    auto p = HalfLaurent::monomial(2, 3) + HalfLaurent::monomial(-1, -6);
    CHECK(p.degree() == frac(3, 2));
    CHECK(p.min_degree() == -3);
    CHECK(p.degree().get_str() == "3/2");
    CHECK(p.to_string() == "2*q^(3/2) - q^(-3)");
  }

  TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).mirrored() == a.mirrored() * b.mirrored());
      auto quo = (a * b).exact_div(b);
      REQUIRE(quo.has_value());
      CHECK(*quo == a);
      CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }

  TEST_CASE("gcd and rational functions") {
    auto g = gcd(qint(4) * qint(3), qint(6) * qint(2));
    CHECK((qint(4) * qint(3)).exact_div(g).has_value());
    CHECK((qint(6) * qint(2)).exact_div(g).has_value());
    RatFunc f(qint(6), qint(3));
    CHECK(f.to_laurent().has_value());
    CHECK(*f.to_laurent() == qint(6).divide_exact(qint(3)));
    RatFunc h(qint(2), qint(3));
    CHECK(!h.to_laurent().has_value());
    CHECK(h * RatFunc(qint(3), qint(2)) == RatFunc(1));
    CHECK(h.degree() == -1);
    CHECK((h - h).is_zero());
    CHECK_THROWS_AS(qint(5).divide_exact(qint(2)), ArithmeticError);
  }

  TEST_CASE("rationals") {
    CHECK(frac(6, 4) == frac(3, 2));
    CHECK(frac(6, 4).get_str() == "3/2");
    CHECK(parse_rational("-14/5") == frac(-14, 5));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
  }

  TEST_CASE("admissible triples and theta") {
    CHECK_NOTHROW(AdmissibleTriple(1, 1, 0));
    CHECK_NOTHROW(AdmissibleTriple(3, 2, 1));  // total even, entries need not be
    CHECK_THROWS_AS(AdmissibleTriple(1, 1, 1), DomainError);
    CHECK_THROWS_AS(AdmissibleTriple(4, 1, 1), DomainError);
    CHECK(theta(AdmissibleTriple(1, 1, 0)) == RatFunc(-qint(2)));
    CHECK(theta(AdmissibleTriple(0, 0, 0)) == RatFunc(1));
    // theta(n, n, 0) is the closed projector loop.
    for (int n = 0; n <= 5; ++n) CHECK(theta(AdmissibleTriple(n, n, 0)) == RatFunc(jw_trace(n)));
  }

  TEST_CASE("twist coefficients") {
    // ((-1)^(n-k) q^(n-k+n^2/2-k^2))^w, recomputed term by term.
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        for (int w = -3; w <= 3; ++w) {
          int half = w * (2 * (n - k) + n * n - 2 * k * k);
          int sign = ((n - k) * w) % 2 ? -1 : 1;
          CHECK(twist_coeff(w, k, n) == HalfLaurent::monomial(sign, half));
        }
  }

  TEST_CASE("circle removal") {
    CHECK(circle_removal(0, 3) == RatFunc(1));
    CHECK(circle_removal(1, 3) == RatFunc(-qint(5), qint(4)));
    CHECK(circle_removal(2, 3) == RatFunc(qint(5), qint(3)));
    CHECK(partial_trace_coeff(1, 1) == RatFunc(-qint(2)));
    // Tracing every strand of JW_w leaves the loop value (-1)^w [w+1].
    for (int w = 1; w <= 5; ++w) CHECK(partial_trace_coeff(w, w) == RatFunc(jw_trace(w)));
  }

  TEST_CASE("unknot normalisation degree") {
    for (int N = 2; N <= 12; ++N) CHECK(qint(N).degree() == N - 1);
  }
}
