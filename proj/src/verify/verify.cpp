#include "cjp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cjp/degree.hpp"
#include "cjp/pretzel.hpp"
#include "cjp/skein.hpp"
#include "cjp/tl.hpp"

namespace cjp::verify {

namespace {

using Clock = std::chrono::steady_clock;
using pretzel::PretzelSpec;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

HalfLaurent signed_qint(int N) { return (N - 1) % 2 ? -qint(N) : qint(N); }

std::vector<int> twist_values(bool full) {
  if (full) return {-5, -4, -3, -2, 2, 3, 4, 5};
  return {-3, -2, 2, 3};
}

std::vector<std::vector<int>> triples(bool full, bool knots_only) {
  std::vector<std::vector<int>> out;
  auto vals = twist_values(full);
  for (int a : vals)
    for (int b : vals)
      for (int c : vals) {
        std::vector<int> w{a, b, c};
        if (knots_only && !PretzelSpec(w).is_knot()) continue;
        out.push_back(w);
      }
  return out;
}

std::string wstr(const std::vector<int>& w) { return PretzelSpec(w).to_string(); }

// Runs f over items with up to `threads` concurrent tasks and returns results in item order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int threads, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  threads = std::max(1, threads);
  for (std::size_t start = 0; start < items.size(); start += threads) {
    std::vector<std::future<R>> jobs;
    std::size_t stop = std::min(items.size(), start + threads);
    for (std::size_t i = start; i < stop; ++i)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, f, std::cref(items[i])));
    for (auto& j : jobs) out.push_back(j.get());
  }
  return out;
}

// A failure collector that keeps the first few messages.
struct Failures {
  int count = 0;
  std::ostringstream first;
  void add(const std::string& msg) {
    if (count++ < 3) first << (count > 1 ? "; " : "") << msg;
  }
  std::string summary(const std::string& ok) const {
    if (count == 0) return ok;
    return std::to_string(count) + " failure(s): " + first.str();
  }
};

// ---- 1: unknot ----
CheckResult check_unknot(const VerifyOptions& o) {
  CheckResult r;
  Failures f;
  auto t0 = Clock::now();
  for (int N = 2; N <= 8; ++N) {
    HalfLaurent J = pretzel::framing_factor(0, N - 1) * skein::bracket(skein::projector_loop(N - 1)).laurent_or_throw();
    if (!(J == signed_qint(N))) f.add("projector loop N=" + std::to_string(N));
  }
  double loop_time = since(t0);
  if (loop_time >= 1.0) f.add("N<=8 took " + std::to_string(loop_time) + " s");
  // Twisted unknots through the state sum (this sees the twist coefficients).
  pretzel::StateSumOptions so;
  so.twist_half_offset = o.twist_half_offset;
  int smax = o.level == Level::Full ? 4 : 3;
  for (std::vector<int> w : {std::vector<int>{2, -1}, std::vector<int>{-2, 1}})
    for (int N = 2; N <= smax; ++N)
      if (!(pretzel::colored_jones_statesum(PretzelSpec(w), N, so) == signed_qint(N)))
        f.add("state sum " + wstr(w) + " N=" + std::to_string(N));
  if (o.level == Level::Full)
    for (int N = 2; N <= 8; ++N)
      for (int w1 : {1, -1})
        if (!(pretzel::colored_jones_bracket(std::vector<int>{w1}, N) == signed_qint(N)))
          f.add("kinked unknot w=" + std::to_string(w1) + " N=" + std::to_string(N));
  r.pass = f.count == 0;
  std::ostringstream os;
  os << "N=2..8 via projector loop in " << loop_time << " s; twisted unknots up to N=" << smax;
  r.detail = f.summary(os.str());
  return r;
}

// ---- 2: state sum against the cabled-diagram oracle ----
CheckResult check_oracle(const VerifyOptions& o) {
  CheckResult r;
  bool full = o.level == Level::Full;
  auto ws = triples(full, true);
  pretzel::StateSumOptions so;
  so.twist_half_offset = o.twist_half_offset;
  std::vector<int> colors = full ? std::vector<int>{2, 3} : std::vector<int>{2};
  auto bad = parallel_map(ws, o.threads, [&](const std::vector<int>& w) {
    std::string msg;
    for (int N : colors)
      if (!(pretzel::colored_jones_statesum(PretzelSpec(w), N, so) == pretzel::colored_jones_bracket(w, N)))
        msg += wstr(w) + " N=" + std::to_string(N) + " ";
    return msg;
  });
  Failures f;
  for (auto& m : bad)
    if (!m.empty()) f.add(m);
  std::vector<int> big{-5, 4, 3};
  int bigN = full ? 4 : 3;
  if (!(pretzel::colored_jones_statesum(PretzelSpec(big), bigN, so) == pretzel::colored_jones_bracket(big, bigN)))
    f.add("P(-5,4,3) N=" + std::to_string(bigN));
  r.pass = f.count == 0;
  std::ostringstream os;
  os << ws.size() << " knots at N in {" << colors.front() << (full ? ",3" : "") << "} plus P(-5,4,3) at N=" << bigN
     << ", all equal";
  r.detail = f.summary(os.str());
  return r;
}

// ---- 3: delta and sign against the symbolic tight leading term ----
CheckResult check_delta(const VerifyOptions& o) {
  CheckResult r;
  bool full = o.level == Level::Full;
  int nmax = full ? 4 : 3;
  auto ws = triples(full, false);
  // Warm the closure cache serially so the workers only read it.
  for (int n = 1; n <= nmax; ++n)
    for (int k0 = 0; k0 <= n; ++k0) (void)pretzel::tight_leading_term(PretzelSpec({-2, 2, 2}), n, std::vector<int>{k0, k0, 0});
  auto bad = parallel_map(ws, o.threads, [&](const std::vector<int>& w) {
    std::pair<int, std::string> res{0, ""};
    PretzelSpec spec(w);
    for (int n = 1; n <= nmax; ++n)
      for (auto& k : degree::tight_cells(2, n)) {
        RatFunc t = pretzel::tight_leading_term(spec, n, k);
        ++res.first;
        if (t.degree() != degree::delta(n, k, w) || t.leading_sign() != degree::delta_sign(n, k, w))
          res.second += wstr(w) + " n=" + std::to_string(n) + " k0=" + std::to_string(k[0]) + " k1=" +
                        std::to_string(k[1]) + " ";
      }
    return res;
  });
  Failures f;
  int cells = 0;
  for (auto& [c, m] : bad) {
    cells += c;
    if (!m.empty()) f.add(m);
  }
  r.pass = f.count == 0;
  r.detail = f.summary(std::to_string(cells) + " tight cells over " + std::to_string(ws.size()) + " twist vectors, n<=" +
                       std::to_string(nmax));
  return r;
}

// ---- 4: the P(-5,4,3) degree report ----
CheckResult check_example(const VerifyOptions& o) {
  CheckResult r;
  Failures f;
  std::vector<int> w{-5, 4, 3};
  std::vector<int> colors;
  for (int N = 2; N <= 50; ++N) colors.push_back(N);
  degree::FitOptions fo;
  fo.exact_max_color = o.level == Level::Full ? 5 : 4;
  fo.threads = o.threads;
  auto rep = degree::empirical_degree_fit(w, colors, fo);
  if (rep.js != frac(4, 5)) f.add("js = " + rational_to_string(rep.js));
  // Empirical cancellation classes: colors whose lattice maximum is a pair of opposite signs.
  std::set<int> cancel;
  for (int N : colors) {
    auto cells = degree::lattice_max(w, N - 1);
    if (cells.size() == 2 && cells[0].sign != cells[1].sign) cancel.insert(N % 5);
  }
  if (rep.modulus != 5 || cancel != std::set<int>{0}) f.add("cancellation classes differ from N = 0 mod 5");
  if (rep.fits.size() != 5) f.add("expected a fit for each of the 5 residue classes");
  for (auto& fit : rep.fits) {
    Rational want_b = fit.residue == 0 ? Rational(-3) - frac(4, 5) : Rational(-3);
    if (!fit.exact) f.add("residue " + std::to_string(fit.residue) + " is not quadratic");
    if (fit.a != frac(4, 5) || fit.b != want_b || rep.jx[fit.residue] != want_b)
      f.add("residue " + std::to_string(fit.residue) + ": a=" + rational_to_string(fit.a) + " b=" + rational_to_string(fit.b));
  }
  int exact = 0;
  for (auto& row : rep.rows)
    if (row.exact) {
      ++exact;
      if (!row.match || !*row.match) f.add("exact degree differs at N=" + std::to_string(row.N));
    }
  r.pass = f.count == 0;
  std::ostringstream os;
  os << "js=4/5, jx=-3 (-19/5 on N=0 mod 5); exact degrees agree for " << exact << " colors; 5 exact fits over N<=50";
  r.detail = f.summary(os.str());
  return r;
}

// ---- 5: cancellation of the two maximising terms ----
CheckResult check_cancellation(const VerifyOptions& o) {
  CheckResult r;
  Failures f;
  std::vector<int> w{-5, 4, 3};
  PretzelSpec spec(w);
  auto g = degree::cancellation_pair_gap(w, 1);
  if (g.first.delta != g.second.delta) f.add("unequal delta");
  if (g.first.sign == g.second.sign) f.add("equal signs");
  if (g.gap != g.expected) f.add("gap " + rational_to_string(g.gap) + " vs " + rational_to_string(g.expected));
  RatFunc a = pretzel::tight_leading_product(spec, g.n, g.first.k);
  RatFunc b = pretzel::tight_leading_product(spec, g.n, g.second.k);
  if (!((a + b).degree() < a.degree())) f.add("leading monomials do not cancel");
  if (o.level == Level::Full) {
    // With the closing network attached, and against the exact polynomial at N = 5.
    RatFunc ta = pretzel::tight_leading_term(spec, g.n, g.first.k);
    RatFunc tb = pretzel::tight_leading_term(spec, g.n, g.second.k);
    if (ta.degree() != g.first.delta || tb.degree() != g.second.delta) f.add("term degree differs from delta");
    if (ta.leading_sign() != g.first.sign || tb.leading_sign() != g.second.sign) f.add("term sign differs");
    if ((ta + tb).degree() - ta.degree() != g.expected) f.add("gap with closure differs");
    pretzel::StateSumOptions so;
    so.twist_half_offset = o.twist_half_offset;
    Rational exact = pretzel::colored_jones_statesum(spec, 5, so).degree();
    if (exact != degree::predicted_degree(w, 5)) f.add("J_5 degree " + rational_to_string(exact));
  }
  r.pass = f.count == 0;
  std::ostringstream os;
  os << "n=" << g.n << ": k=(" << g.first.k[0] << "," << g.first.k[1] << "," << g.first.k[2] << ") and ("
     << g.second.k[0] << "," << g.second.k[1] << "," << g.second.k[2] << ") at degree " << g.first.delta
     << ", drop " << g.gap;
  r.detail = f.summary(os.str());
  return r;
}

// ---- 6: Jones-Wenzl ----
CheckResult check_jw(const VerifyOptions&) {
  CheckResult r;
  Failures f;
  int laws = 0, slides = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto& P = tl::jw_numerators(n);
    if (!(tl_mul(P, P) == qfact(n) * P)) f.add("idempotence n=" + std::to_string(n));
    for (int i = 1; i < n; ++i) {
      auto U = tl::TLPolyElement::basis(tl::Matching::generator(n, i));
      if (tl_mul(U, P).size() != 0 || tl_mul(P, U).size() != 0) f.add("U_i annihilation n=" + std::to_string(n));
    }
    if (!(P.coefficient(tl::Matching::identity(n)) == qfact(n))) f.add("identity coefficient n=" + std::to_string(n));
    for (auto& [d, c] : P.terms())
      if (c.leading_sign() < 0) f.add("negative numerator " + d.to_string());
    for (int y = 1; 2 * y <= n; ++y)
      for (int x = 0; x + 2 * y <= n; ++x)
        for (int z = 0; x + 2 * y + z <= n; ++z) {
          int t = n - x - 2 * y - z;
          ++laws;
          if (!(RatFunc(tl::jw_numerator(tl::rect_family(x, y, z, t))) == tl::kho_coeff_rect(x, y, z, t)))
            f.add("rect family " + std::to_string(x) + std::to_string(y) + std::to_string(z) + std::to_string(t));
        }
    for (auto& d : tl::enumerate_basis(n))
      for (auto mv : {tl::slide_top_caps(d), tl::slide_bottom_cups(d)})
        if (mv) {
          ++slides;
          if (!(RatFunc(tl::jw_numerator(mv->before)) ==
                tl::kho_cupshift_ratio(mv->x, mv->y) * RatFunc(tl::jw_numerator(mv->after))))
            f.add("slide " + d.to_string());
        }
  }
  r.pass = f.count == 0;
  r.detail = f.summary("n<=5: idempotent, U-annihilating, unit identity coefficient; " + std::to_string(laws) +
                       " closed-form coefficients, " + std::to_string(slides) + " slide moves");
  return r;
}

// ---- 7: theta ----
CheckResult check_theta(const VerifyOptions& o) {
  CheckResult r;
  Failures f;
  int emax = o.level == Level::Full ? 6 : 4;
  int cnt = 0;
  for (int a = 0; a <= emax; ++a)
    for (int b = 0; b <= emax; ++b)
      for (int c = 0; c <= emax; ++c) {
        if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) continue;
        ++cnt;
        if (!(skein::bracket(skein::theta_network(a, b, c)) == theta(AdmissibleTriple(a, b, c))))
          f.add("theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> pick(0, 30);
  int random = 0;
  while (random < 200) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) continue;
    ++random;
    if (theta(AdmissibleTriple(a, b, c)).degree() != frac(a + b + c, 2)) f.add("degree of theta");
  }
  r.pass = f.count == 0;
  r.detail = f.summary(std::to_string(cnt) + " networks with entries <= " + std::to_string(emax) +
                       " equal the closed form; degree (a+b+c)/2 on 200 random triples");
  return r;
}

// ---- 8: pruned against generic ----
CheckResult check_pruned(const VerifyOptions& o) {
  CheckResult r;
  Failures f;
  bool full = o.level == Level::Full;
  std::vector<std::pair<std::vector<int>, int>> cases{{{-3, 3, 2}, 2}, {{-5, 4, 3}, 2}};
  if (full) cases = {{{-3, 3, 2}, 3}, {{-5, 4, 3}, 4}};
  for (auto& [w, Nmax] : cases)
    for (int n = 1; n + 1 <= Nmax; ++n) {
      pretzel::StateSumOptions p, g;
      p.twist_half_offset = g.twist_half_offset = o.twist_half_offset;
      g.mode = pretzel::Expansion::Generic;
      PretzelSpec spec(w);
      if (!(pretzel::kauffman_statesum(spec, n, p) == pretzel::kauffman_statesum(spec, n, g)))
        f.add(wstr(w) + " N=" + std::to_string(n + 1));
    }
  r.pass = f.count == 0;
  std::ostringstream os;
  os << "totals agree: P(-3,3,2) for N<=" << cases[0].second << ", P(-5,4,3) for N<=" << cases[1].second;
  r.detail = f.summary(os.str());
  return r;
}

// ---- 9: degree gap and the interface inequality over every state ----

// Arcs of the sideways middle that join the two cables on one side; these are the strands
// that meet the 2k0 projector of region 0, so a nonzero closure needs k0 <= this count.
int cable_arcs(const tl::Matching& x, int n) {
  int count = 0;
  for (int i = 0; i < n; ++i) {
    int p = x.partner(i);
    if (p >= n && p < 2 * n) ++count;
  }
  return count;
}

CheckResult check_gap(const VerifyOptions& o) {
  CheckResult r;
  Failures f;
  int nmax = o.level == Level::Full ? 3 : 2;
  std::vector<std::vector<int>> ws{{-5, 4, 3}, {-3, 3, 2}, {-2, 3, 5}, {-4, 2, 2}};
  long states = 0, nonzero = 0, lemma_cases = 0;
  for (auto& w : ws) {
    PretzelSpec spec(w);
    int wmin = 1 << 20;
    for (int x : w) wmin = std::min(wmin, std::abs(x) - 1);
    for (int n = 1; n <= nmax; ++n) {
      std::map<std::pair<int, tl::Matching>, std::map<int, RatFunc>> closures;
      for (auto& s : pretzel::enumerate_fusion_states(spec, n, pretzel::Expansion::Pruned)) {
        ++states;
        auto mid = pretzel::expand_middle(n, s);
        int c = cable_arcs(mid.x, n);
        const auto& k = s.k;
        RatFunc coeff = pretzel::state_coeff(spec, n, s);
        // Interface inequality: compare with the canonical state on l = (l1, l2), l1 + l2 = c.
        if (k[1] + k[2] >= n) {
          ++lemma_cases;
          Rational degF = (coeff / pretzel::fusion_coeff(spec, n, k)).degree();
          bool ok = false;
          for (int l1 = 0; l1 <= c && !ok; ++l1) {
            int l2 = c - l1;
            if (l1 > k[1] || l2 > k[2]) continue;
            // Ties in k leave the order of l free; the ordering is read on strict inequalities.
            if ((k[1] < k[2] && l1 > l2) || (k[2] < k[1] && l2 > l1)) continue;
            std::vector<int> l{c, l1, l2};
            Rational degFbar = (pretzel::tight_leading_product(spec, n, l) / pretzel::fusion_coeff(spec, n, l)).degree();
            int a1 = k[1] - l1, a2 = k[2] - l2;
            ok = degF - degFbar <= a1 * (2 * l1 + a1) + a2 * (2 * l2 + a2);
          }
          if (!ok) f.add("interface inequality " + wstr(w) + " n=" + std::to_string(n) + " " + s.to_string());
        }
        // Degree gap.
        auto& byloops = closures[{k[0], mid.x}];
        auto it = byloops.find(mid.loops);
        if (it == byloops.end()) it = byloops.emplace(mid.loops, pretzel::state_bracket(n, s)).first;
        if (it->second.is_zero()) continue;
        ++nonzero;
        if (k[0] > c) f.add("nonzero closure with k0 > c " + wstr(w) + " n=" + std::to_string(n) + " " + s.to_string());
        Rational deg = (coeff * it->second).degree();
        bool ok = false;
        if (s.tight()) ok = deg <= degree::delta(n, k, w);
        for (int t1 = 0; t1 <= c && !ok; ++t1) {
          int t2 = c - t1;
          if (t1 > k[1] || t2 > k[2]) continue;
          if ((k[1] < k[2] && t1 > t2) || (k[2] < k[1] && t2 > t1)) continue;
          std::vector<int> kt{c, t1, t2};
          int kmin = std::min({c, t1, t2});
          ok = deg <= degree::delta(n, kt, w) - 2 * wmin * kmin;
        }
        if (!ok) f.add("degree gap " + wstr(w) + " n=" + std::to_string(n) + " " + s.to_string());
      }
    }
  }
  r.pass = f.count == 0;
  std::ostringstream os;
  os << states << " states (" << nonzero << " nonzero) over " << ws.size() << " twist vectors, n<=" << nmax << "; "
     << lemma_cases << " interface comparisons";
  r.detail = f.summary(os.str());
  return r;
}

}  // namespace

std::string check_name(int id) {
  static const char* names[] = {"unknot normalization",
                                "state sum = cabled bracket",
                                "delta and sign sweep",
                                "P(-5,4,3) degree report",
                                "cancellation mechanics",
                                "Jones-Wenzl suite",
                                "theta consistency",
                                "pruned = generic",
                                "degree gap and interface inequality"};
  if (id < 1 || id > kCheckCount) throw DomainError("no check " + std::to_string(id));
  return names[id - 1];
}

CheckResult run_check(int id, const VerifyOptions& opts) {
  auto t0 = Clock::now();
  CheckResult r;
  std::string name = check_name(id);
  try {
    switch (id) {
      case 1: r = check_unknot(opts); break;
      case 2: r = check_oracle(opts); break;
      case 3: r = check_delta(opts); break;
      case 4: r = check_example(opts); break;
      case 5: r = check_cancellation(opts); break;
      case 6: r = check_jw(opts); break;
      case 7: r = check_theta(opts); break;
      case 8: r = check_pruned(opts); break;
      case 9: r = check_gap(opts); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.name = name;
  r.seconds = since(t0);
  if (opts.on_result) opts.on_result(r);
  return r;
}

std::vector<CheckResult> run_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, opts));
  return out;
}

}  // namespace cjp::verify
