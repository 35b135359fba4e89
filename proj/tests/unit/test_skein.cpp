#include <doctest.h>

#include "cjp/pretzel.hpp"
#include "cjp/skein.hpp"

using namespace cjp;
using namespace cjp::skein;

namespace {

HalfLaurent q(int e) { return HalfLaurent::monomial(1, 2 * e); }

}  // namespace

TEST_SUITE("skein") {
  TEST_CASE("a single loop") {
    auto d = DiagramBuilder().cup(0, {1}).cap(0, {1}).build();
    CHECK(d.closed());
    CHECK(bracket(d) == RatFunc(loop_value()));
    CHECK(component_count(d) == 1);
    CHECK(writhe(d) == 0);
  }

  TEST_CASE("projector loops are quantum integers") {
    for (int n = 1; n <= 6; ++n) {
      auto v = bracket(projector_loop(n));
      CHECK(v == RatFunc(jw_trace(n)));
      HalfLaurent sign = HalfLaurent(n % 2 ? -1 : 1);
      CHECK(v == RatFunc(sign * qint(n + 1)));
    }
  }

  TEST_CASE("pretzel writhes and components") {
    CHECK(pretzel_writhe(std::vector<int>{-1, -1, -1}) == 3);
    CHECK(pretzel_writhe(std::vector<int>{-5, 4, 3}) == -6);
    CHECK(pretzel_writhe(std::vector<int>{-3, 3, 2}) == -2);
    CHECK(pretzel_writhe(std::vector<int>{1}) == -1);
    CHECK(pretzel_components(std::vector<int>{-5, 4, 3}) == 1);
    CHECK(pretzel_components(std::vector<int>{2, 2}) == 2);
    CHECK(pretzel_components(std::vector<int>{3, 3, 3}) == 1);
    // The diagram agrees with the closed-form count.
    for (auto w : std::vector<std::vector<int>>{{-5, 4, 3}, {-3, 3, 2}, {1, 1, 1}, {2, -3}}) {
      auto d = cable_pretzel(w, 1);
      CHECK(writhe(d) == pretzel_writhe(w));
      CHECK(component_count(d) == pretzel_components(w));
    }
  }

  TEST_CASE("isotopic encodings give the same invariant") {
    std::vector<int> w{-3, 3, 2};
    for (int N = 2; N <= 3; ++N) {
      auto base = pretzel::colored_jones_bracket(w, N);
      for (PretzelEncoding enc : {PretzelEncoding{1, false, false}, PretzelEncoding{2, false, false},
                                  PretzelEncoding{0, true, false}, PretzelEncoding{0, false, true}}) {
        auto d = cable_pretzel(w, N - 1, enc);
        auto v = RatFunc(pretzel::framing_factor(writhe(cable_pretzel(w, 1, enc)), N - 1)) * bracket(d);
        CHECK(v == RatFunc(base));
      }
    }
  }

  TEST_CASE("trefoil Jones polynomial") {
    // -[2] V(q^-2) with V(t) = t + t^3 - t^4 for the right-handed trefoil.
    HalfLaurent want = -qint(2) * (q(-2) + q(-6) - q(-8));
    CHECK(pretzel::colored_jones_bracket(std::vector<int>{1, 1, 1}, 2) == want);
  }

  TEST_CASE("theta networks") {
    CHECK(bracket(theta_network(1, 1, 0)) == RatFunc(-qint(2)));
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c) {
          if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) continue;
          CHECK(bracket(theta_network(a, b, c)) == theta(AdmissibleTriple(a, b, c)));
        }
  }
}
