#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cjp/cli.hpp"
#include "cjp/degree.hpp"
#include "cjp/io.hpp"
#include "cjp/skein.hpp"

using namespace cjp;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("color lists") {
    CHECK(cli::parse_colors("2..5") == std::vector<int>{2, 3, 4, 5});
    CHECK(cli::parse_colors("5,3,3") == std::vector<int>{3, 5});
    CHECK(cli::parse_colors("4") == std::vector<int>{4});
    CHECK_THROWS_AS(cli::parse_colors("1..3"), DomainError);
    CHECK_THROWS_AS(cli::parse_colors("x"), DomainError);
    CHECK_THROWS_AS(cli::parse_colors("5..3"), DomainError);
  }

  TEST_CASE("jones with both methods") {
    auto r = run({"jones", "--pretzel", "-1,-1,-1", "--color", "2", "--method", "both"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("equal") != std::string::npos);
  }

  TEST_CASE("bad input is a usage error") {
    CHECK(run({"jones", "--pretzel", "1", "--color", "5"}).code == cli::kUsage);
    CHECK(run({"jones", "--pretzel", "a,b", "--color", "2"}).code == cli::kUsage);
    CHECK(run({"jones", "--pretzel", "-5,4,3", "--color", "1"}).code == cli::kUsage);
    CHECK(run({"nonsense"}).code == cli::kUsage);
    CHECK(run({"degree", "--pretzel", "2,2"}).code == cli::kUsage);  // a link
  }

  TEST_CASE("jones json carries the degree") {
    auto r = run({"jones", "--pretzel", "-5,4,3", "--color", "3", "--emit", "json"});
    REQUIRE(r.code == cli::kOk);
    auto j = io::json::parse(r.out);
    auto deg = parse_rational(j["results"][0]["degree"].get<std::string>());
    CHECK(deg == degree::predicted_degree(std::vector<int>{-5, 4, 3}, 3));
  }

  TEST_CASE("degree report in json and csv") {
    auto j = run({"degree", "--pretzel", "-5,4,3", "--colors", "2..17", "--exact-max", "3", "--emit", "json"});
    auto c = run({"degree", "--pretzel", "-5,4,3", "--colors", "2..17", "--exact-max", "3", "--emit", "csv"});
    REQUIRE(j.code == cli::kOk);
    REQUIRE(c.code == cli::kOk);
    auto a = io::report_from_json(io::json::parse(j.out));
    auto b = io::report_from_csv(c.out);
    CHECK(io::same_report(a, b));
    CHECK(a.fits.size() == 5);
    CHECK(a.all_match());
  }

  TEST_CASE("outside the regime the report carries a caveat") {
    auto r = run({"degree", "--pretzel", "-3,3,2", "--colors", "2..6", "--exact-max", "3", "--emit", "text"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("caveat") != std::string::npos);
  }

  TEST_CASE("config file fills unset options") {
    auto cfg = temp_file("cjp_cli_config.json", R"({"pretzel": "-1,-1,-1", "colors": "2", "method": "both"})");
    auto r = run({"jones", "--config", cfg.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("equal") != std::string::npos);
    // Command-line flags win.
    auto s = run({"jones", "--config", cfg.string(), "--method", "statesum", "--emit", "json"});
    CHECK(s.code == cli::kOk);
    CHECK(io::json::parse(s.out)["method"] == "statesum");
    CHECK(run({"jones", "--config", "/nonexistent/cfg.json"}).code == cli::kUsage);
  }

  TEST_CASE("bracket of a diagram file") {
    auto d = skein::theta_network(2, 2, 2);
    auto in = temp_file("cjp_cli_theta.json", io::to_json(d).dump());
    auto r = run({"bracket", "--diagram-in", in.string(), "--emit", "json"});
    REQUIRE(r.code == cli::kOk);
    auto j = io::json::parse(r.out);
    CHECK(io::ratfunc_from_json(j["bracket"]) == theta(AdmissibleTriple(2, 2, 2)));

    auto out = std::filesystem::temp_directory_path() / "cjp_cli_out.json";
    auto w = run({"bracket", "--pretzel", "-3,3,2", "--cable", "1", "--diagram-out", out.string()});
    CHECK(w.code == cli::kOk);
    std::ifstream f(out);
    auto back = io::diagram_from_json(io::json::parse(f));
    CHECK(skein::bracket(back) == skein::bracket(skein::cable_pretzel(std::vector<int>{-3, 3, 2}, 1)));
  }
}
