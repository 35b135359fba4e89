#include <doctest.h>

#include <algorithm>

#include "cjp/tl.hpp"

using namespace cjp;
using namespace cjp::tl;

namespace {

TLElement U(int n, int i) { return TLElement::basis(Matching::generator(n, i)); }
TLElement mul(const TLElement& a, const TLElement& b) { return tl_mul(a, b); }

// Independent planarity test: no two chords of the boundary circle cross.
bool planar(const Matching& m) {
  int s = m.size();
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      int pa = m.partner(a), pb = m.partner(b);
      int x1 = m.cyclic_position(a), y1 = m.cyclic_position(pa);
      int x2 = m.cyclic_position(b), y2 = m.cyclic_position(pb);
      if (x1 > y1) std::swap(x1, y1);
      if (x2 > y2) std::swap(x2, y2);
      if (x1 < x2 && x2 < y1 && y1 < y2) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("tl") {
  TEST_CASE("matchings are enumerated completely and planar") {
    for (int n = 0; n <= 6; ++n) {
      auto& B = enumerate_basis(n);
      CHECK(static_cast<long long>(B.size()) == catalan(n));
      for (auto& d : B) CHECK(planar(d));
      CHECK(std::is_sorted(B.begin(), B.end()));
    }
    CHECK(catalan(5) == 42);
    CHECK(enumerate_matchings(3, 1).size() == 2);  // 4 points on the circle
    CHECK(enumerate_matchings(2, 0).size() == 1);
  }

  TEST_CASE("parse and print") {
    auto m = Matching::parse("(1 3)(2 4)", 2, 2);
    CHECK(m.to_string() == "(1 3)(2 4)");
    CHECK(m.through_strands() == 2);
    CHECK(m.is_identity());
    auto cup = Matching::parse("(1 2)(3 4)", 2, 2);
    CHECK(cup == Matching::generator(2, 1));
    CHECK_THROWS_AS(Matching::parse("(1 4)(2 3)", 2, 2), DomainError);  // crossing
    CHECK_THROWS_AS(Matching::parse("(1 2", 2, 2), DomainError);
  }

  TEST_CASE("Temperley-Lieb relations") {
    for (int n = 2; n <= 5; ++n) {
      for (int i = 1; i < n; ++i) {
        CHECK(mul(U(n, i), U(n, i)) == RatFunc(loop_value()) * U(n, i));
        if (i + 1 < n) {
          CHECK(mul(mul(U(n, i), U(n, i + 1)), U(n, i)) == U(n, i));
          CHECK(mul(mul(U(n, i + 1), U(n, i)), U(n, i + 1)) == U(n, i + 1));
        }
        for (int j = i + 2; j < n; ++j) CHECK(mul(U(n, i), U(n, j)) == mul(U(n, j), U(n, i)));
      }
    }
  }

  TEST_CASE("compose counts loops") {
    auto u = Matching::generator(2, 1);
    auto c = compose(u, u);
    CHECK(c.loops == 1);
    CHECK(c.matching == u);
    auto id = Matching::identity(3);
    CHECK(compose(id, Matching::generator(3, 2)).loops == 0);
  }

  TEST_CASE("rotation, flips and mirrors") {
    for (auto& d : enumerate_basis(4)) {
      CHECK(d.flipped().flipped() == d);
      CHECK(d.mirrored().mirrored() == d);
      CHECK(d.rotated(8, 4) == d);
      CHECK(d.rotated(3, 4).rotated(5, 4) == d);
      CHECK(planar(d.rotated(1, 3)));
    }
  }

  TEST_CASE("JW_2 is id + U/[2]") {
    TLElement want = TLElement::identity(2) + RatFunc(1, qint(2)) * U(2, 1);
    CHECK(jones_wenzl(2) == want);
  }

  TEST_CASE("Jones-Wenzl projectors") {
    for (int n = 1; n <= 4; ++n) {
      auto P = jones_wenzl(n);
      CHECK(mul(P, P) == P);
      for (int i = 1; i < n; ++i) {
        CHECK(mul(U(n, i), P).size() == 0);
        CHECK(mul(P, U(n, i)).size() == 0);
      }
      CHECK(P.coefficient(Matching::identity(n)) == RatFunc(1));
      for (auto& [d, c] : P.terms()) {
        CHECK(c == jw_coefficient(d));
        CHECK(RatFunc(jw_numerator(d)) == RatFunc(qfact(n)) * c);
        CHECK(jw_numerator(d).leading_sign() > 0);
      }
      // Symmetric under both reflections.
      for (auto& [d, c] : P.terms()) {
        CHECK(P.coefficient(d.flipped()) == c);
        CHECK(P.coefficient(d.mirrored()) == c);
      }
    }
  }

  TEST_CASE("closed forms for coefficients") {
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
      for (int y = 1; 2 * y <= n; ++y)
        for (int x = 0; x + 2 * y <= n; ++x)
          for (int z = 0; x + 2 * y + z <= n; ++z) {
            int t = n - x - 2 * y - z;
            auto d = rect_family(x, y, z, t);
            CHECK(d.top() == n);
            CHECK(d.through_strands() == n - 2 * y);
            CHECK(RatFunc(jw_numerator(d)) == kho_coeff_rect(x, y, z, t));
            ++checked;
          }
    CHECK(checked > 40);
  }

  TEST_CASE("cap slides multiply by a binomial") {
    int moves = 0;
    for (int n = 2; n <= 6; ++n)
      for (auto& d : enumerate_basis(n)) {
        if (auto mv = slide_top_caps(d)) {
          ++moves;
          CHECK(RatFunc(jw_numerator(mv->before)) == kho_cupshift_ratio(mv->x, mv->y) * RatFunc(jw_numerator(mv->after)));
        }
        if (auto mv = slide_bottom_cups(d)) {
          ++moves;
          CHECK(RatFunc(jw_numerator(mv->before)) == kho_cupshift_ratio(mv->x, mv->y) * RatFunc(jw_numerator(mv->after)));
        }
      }
    CHECK(moves > 0);
    CHECK(kho_cupshift_ratio(2, 1) == RatFunc(qbinom(3, 2)));
  }
}
