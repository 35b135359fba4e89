#include <doctest.h>

#include "cjp/io.hpp"
#include "cjp/pretzel.hpp"

using namespace cjp;
using namespace cjp::io;

TEST_SUITE("io") {
  TEST_CASE("polynomials") {
    auto p = HalfLaurent::monomial(2, 3) + HalfLaurent::monomial(-1, -6);
    auto j = to_json(p);
    CHECK(j["text"] == "2*q^(3/2) - q^(-3)");
    CHECK(j["terms"].size() == 2);
    CHECK(laurent_from_json(j) == p);
    CHECK(laurent_from_json(json::parse(j.dump())) == p);
    // Integer exponents alone are accepted.
    auto k = json::parse(R"({"terms": [{"exp": "2", "coeff": "-1"}, {"exp": "-1/2", "coeff": "3/4"}]})");
    CHECK(laurent_from_json(k) == HalfLaurent::monomial(-1, 4) + HalfLaurent::monomial(frac(3, 4), -1));
    RatFunc f(qint(2), qint(3));
    CHECK(ratfunc_from_json(to_json(f)) == f);
  }

  TEST_CASE("diagrams round trip") {
    for (int n = 1; n <= 2; ++n) {
      auto d = skein::cable_pretzel(std::vector<int>{-3, 3, 2}, n);
      auto j = to_json(d);
      auto back = diagram_from_json(json::parse(j.dump()));
      CHECK(back.nodes().size() == d.nodes().size());
      CHECK(to_json(back) == j);
      CHECK(skein::bracket(back) == skein::bracket(d));
      j.erase("edges");
      j.erase("outputs");
      auto rebuilt = diagram_from_json(j);
      CHECK(skein::bracket(rebuilt) == skein::bracket(d));
    }
    auto t = skein::theta_network(2, 2, 2);
    CHECK(skein::bracket(diagram_from_json(to_json(t))) == skein::bracket(t));
    CHECK_THROWS(diagram_from_json(json::parse(R"({"nodes": [{"kind": "bogus"}]})")));
  }

  TEST_CASE("degree reports") {
    std::vector<int> w{-5, 4, 3};
    auto rep = degree::empirical_degree_fit(w, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}, {3, 1});
    auto j = to_json(rep);
    CHECK(j["js"] == "4/5");
    CHECK(same_report(report_from_json(json::parse(j.dump())), rep));
    auto csv = to_csv(rep);
    CHECK(csv.find("N,residue,exact,predicted,match") != std::string::npos);
    CHECK(same_report(report_from_csv(csv), rep));

    auto out = degree::empirical_degree_fit(std::vector<int>{-3, 3, 2}, {2, 3, 4}, {2, 1});
    CHECK(same_report(report_from_csv(to_csv(out)), out));
    CHECK(same_report(report_from_json(to_json(out)), out));
    CHECK(!same_report(out, rep));
  }
}
