#include <doctest.h>

#include <numeric>

#include "cjp/degree.hpp"
#include "cjp/pretzel.hpp"

using namespace cjp;
using namespace cjp::degree;

namespace {

const std::vector<int> W{-5, 4, 3};

// delta written out for three regions, kept separate from the library loop.
Rational delta3(int n, int k1, int k2, const std::vector<int>& w) {
  int k0 = k1 + k2;
  Rational v = -Rational((w[0] + 1) * k0 * k0);
  v -= (w[1] - 1) * k1 * k1 + (w[0] + w[1] - 2) * k1;
  v -= (w[2] - 1) * k2 * k2 + (w[0] + w[2] - 2) * k2;
  v += frac(n * (n + 2) * (w[0] + w[1] + w[2]), 2);
  v -= n;
  return v;
}

}  // namespace

TEST_SUITE("degree") {
  TEST_CASE("closed form on small cells") {
    std::vector<int> k0{0, 0, 0};
    CHECK(delta(1, k0, W) == 2);
    CHECK(delta_sign(1, k0, W) == -1);
    for (int n = 1; n <= 5; ++n)
      for (int k1 = 0; k1 <= n; ++k1)
        for (int k2 = 0; k1 + k2 <= n; ++k2) {
          std::vector<int> k{k1 + k2, k1, k2};
          CHECK(delta(n, k, W) == delta3(n, k1, k2, W));
        }
    std::vector<int> bad{1, 1, 1};
    CHECK_THROWS_AS(delta(2, bad, W), DomainError);
    std::vector<int> big{3, 2, 1};
    CHECK_THROWS_AS(delta(2, big, W), DomainError);
  }

  TEST_CASE("tight cells") {
    CHECK(tight_cells(2, 2).size() == 6);
    for (int n = 0; n <= 4; ++n)
      CHECK(static_cast<int>(tight_cells(3, n).size()) == (n + 1) * (n + 2) * (n + 3) / 6);
  }

  TEST_CASE("leading terms of tight states") {
    std::vector<int> w{-3, 3, 2};
    pretzel::PretzelSpec spec(w);
    for (int n = 1; n <= 3; ++n)
      for (auto& k : tight_cells(2, n)) {
        auto t = pretzel::tight_leading_term(spec, n, k);
        CHECK(t.degree() == delta(n, k, w));
        CHECK(t.leading_sign() == delta_sign(n, k, w));
      }
  }

  TEST_CASE("three-region constants") {
    CHECK(s_value(W) == frac(-14, 5));
    CHECK(s1_value(W) == frac(-18, 5));
    CHECK(js_value(W) == frac(4, 5));
    CHECK(jx_value(W, false) == -3);
    CHECK(jx_value(W, true) == frac(-19, 5));
    CHECK(cancellation_modulus(W) == 5);
  }

  TEST_CASE("half-integer maximizer marks the cancellation colors") {
    for (int N = 2; N <= 30; ++N) {
      Rational x = real_maximizer(W, N - 1);
      bool half = x.get_den() == 2;
      CHECK(half == is_cancellation_color(W, N));
      CHECK(is_cancellation_color(W, N) == (N % 5 == 0));
    }
  }

  TEST_CASE("regime") {
    CHECK(!regime_violation(W));
    CHECK(!regime_violation(std::vector<int>{-3, 4, 3}));
    CHECK(regime_violation(std::vector<int>{-3, 3, 2}));  // w1 odd
    CHECK(regime_violation(std::vector<int>{3, 4, 3}));   // w0 positive
    CHECK(regime_violation(std::vector<int>{-5, 4, 3, 2}));
    CHECK_THROWS_AS(require_regime(std::vector<int>{-3, 3, 2}), RegimeError);
    CHECK_NOTHROW(require_regime(W));
  }

  TEST_CASE("predicted degrees") {
    std::vector<int> want{-1, 0, 3, 2, 13, 20, 29, 40, 43, 66, 81};
    for (int N = 2; N <= 12; ++N) CHECK(predicted_degree(W, N) == want[N - 2]);
    CHECK(lattice_degree(W, 5) == 6);
    CHECK(lattice_degree(W, 10) == 51);
    // Away from the cancellation class the lattice maximum is attained.
    for (int N = 2; N <= 20; ++N)
      if (N % 5) CHECK(predicted_degree(W, N) == lattice_degree(W, N));
    // Exact check at a cheap color.
    CHECK(pretzel::colored_jones_statesum(pretzel::PretzelSpec(W), 3).degree() == predicted_degree(W, 3));
  }

  TEST_CASE("cancelling pair") {
    auto g = cancellation_pair_gap(W, 1);
    CHECK(g.n == 4);
    CHECK(g.first.delta == g.second.delta);
    CHECK(g.first.sign == -g.second.sign);
    CHECK(g.gap == -4);
    CHECK(g.expected == -4);
  }

  TEST_CASE("quadratic fits") {
    std::vector<std::pair<int, Rational>> unknot;
    for (int N = 2; N <= 10; ++N) unknot.emplace_back(N, Rational(N - 1));
    auto f = fit_quadratic(unknot, 1);
    REQUIRE(f.size() == 1);
    CHECK(f[0].exact);
    CHECK(f[0].a == 0);
    CHECK(f[0].b == 1);
    CHECK(f[0].c == -1);
    unknot.back().second += 1;
    CHECK(!fit_quadratic(unknot, 1)[0].exact);
    CHECK_THROWS_AS(fit_quadratic(unknot, 5), DomainError);
  }

  TEST_CASE("empirical fit report") {
    std::vector<int> colors;
    for (int N = 2; N <= 30; ++N) colors.push_back(N);
    auto rep = empirical_degree_fit(W, colors, FitOptions{3, 1});
    CHECK(rep.in_regime);
    CHECK(rep.modulus == 5);
    CHECK(rep.all_match());
    for (auto& f : rep.fits) {
      CHECK(f.exact);
      CHECK(f.a == frac(4, 5));
      CHECK(f.b == (f.residue == 0 ? frac(-19, 5) : Rational(-3)));
    }
    auto out = empirical_degree_fit(std::vector<int>{-3, 3, 2}, {2, 3, 4}, FitOptions{2, 1});
    CHECK(!out.in_regime);
    CHECK(!out.caveat.empty());
    for (auto& r : out.rows) CHECK(!r.match);
  }
}
