#include <doctest.h>

#include "cjp/pretzel.hpp"

using namespace cjp;
using namespace cjp::pretzel;

TEST_SUITE("pretzel") {
  TEST_CASE("parsing") {
    CHECK(PretzelSpec::parse("-5,4,3").w == std::vector<int>{-5, 4, 3});
    CHECK(PretzelSpec::parse(" -5, 4 ,3 ").to_string() == "P(-5,4,3)");
    CHECK_THROWS_AS(PretzelSpec::parse("1,,2"), DomainError);
    CHECK_THROWS_AS(PretzelSpec::parse("a,b"), DomainError);
    CHECK_THROWS_AS(PretzelSpec::parse("1"), DomainError);  // one region
    CHECK_THROWS_AS(PretzelSpec(std::vector<int>{2, 2}).writhe(), DomainError);
  }

  TEST_CASE("state sum agrees with the bracket oracle") {
    for (auto w : std::vector<std::vector<int>>{{1, 1, 1}, {-3, 3, 2}, {-2, 3, 3}, {2, -3}, {-3, 2, 2, 3}}) {
      PretzelSpec s(w);
      if (!s.is_knot()) continue;
      for (int N = 2; N <= 3; ++N) CHECK(colored_jones_statesum(s, N) == colored_jones_bracket(w, N));
    }
  }

  TEST_CASE("links through the Kauffman bracket") {
    std::vector<int> w{2, 2};
    PretzelSpec s(w);
    CHECK(kauffman_statesum(s, 1) == kauffman_oracle(w, 1));
    CHECK(kauffman_statesum(s, 2) == kauffman_oracle(w, 2));
  }

  TEST_CASE("pruned and generic expansions agree") {
    for (auto w : std::vector<std::vector<int>>{{-3, 3, 2}, {-5, 4, 3}, {2, 2}}) {
      PretzelSpec s(w);
      for (int n = 1; n <= 2; ++n)
        CHECK(kauffman_statesum(s, n, {Expansion::Pruned}) == kauffman_statesum(s, n, {Expansion::Generic}));
    }
  }

  TEST_CASE("mirror image inverts q") {
    for (auto w : std::vector<std::vector<int>>{{-3, 3, 2}, {1, 1, 1}}) {
      std::vector<int> m;
      for (int x : w) m.push_back(-x);
      for (int N = 2; N <= 3; ++N) {
        auto a = colored_jones_statesum(PretzelSpec(w), N);
        auto b = colored_jones_statesum(PretzelSpec(m), N);
        CHECK(a == b.mirrored());
        CHECK(a.min_degree() == -b.degree());
      }
    }
  }

  TEST_CASE("a wrong twist coefficient is detected") {
    std::vector<int> w{-3, 3, 2};
    PretzelSpec s(w);
    StateSumOptions bad;
    bad.twist_half_offset = 1;
    CHECK(colored_jones_statesum(s, 2, bad) != colored_jones_bracket(w, 2));
  }

  TEST_CASE("unknot normalisation") {
    // P(2,-1) and P(-2,1) are unknots: J_N = (-1)^(N-1) [N].
    for (auto w : std::vector<std::vector<int>>{{2, -1}, {-2, 1}})
      for (int N = 2; N <= 3; ++N) {
        HalfLaurent want = (N % 2 ? HalfLaurent(1) : HalfLaurent(-1)) * qint(N);
        CHECK(colored_jones_statesum(PretzelSpec(w), N) == want);
      }
  }

  TEST_CASE("fusion states") {
    PretzelSpec s(std::vector<int>{-3, 3, 2});
    auto states = enumerate_fusion_states(s, 2, Expansion::Pruned);
    CHECK(!states.empty());
    int tight = 0;
    for (auto& st : states) {
      CHECK(st.k.size() == 3);
      if (st.tight()) ++tight;
    }
    CHECK(tight > 0);
  }
}
