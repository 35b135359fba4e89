#include <algorithm>
#include <future>
#include <map>

#include "cjp/degree.hpp"
#include "cjp/pretzel.hpp"

namespace cjp::degree {

std::vector<QuadraticFit> fit_quadratic(const std::vector<std::pair<int, Rational>>& points, int modulus) {
  if (modulus < 1) throw DomainError("fit_quadratic: modulus >= 1");
  std::map<int, std::vector<std::pair<int, Rational>>> by_class;
  for (auto& p : points) by_class[((p.first % modulus) + modulus) % modulus].push_back(p);
  std::vector<QuadraticFit> out;
  for (int r = 0; r < modulus; ++r) {
    auto& pts = by_class[r];
    if (pts.size() < 3) throw DomainError("fit_quadratic: fewer than three colors in residue class " + std::to_string(r));
    std::sort(pts.begin(), pts.end());
    // Newton divided differences through the first three points.
    Rational x0 = pts[0].first, x1 = pts[1].first, x2 = pts[2].first;
    Rational d01 = (pts[1].second - pts[0].second) / (x1 - x0);
    Rational d12 = (pts[2].second - pts[1].second) / (x2 - x1);
    QuadraticFit f;
    f.residue = r;
    f.points = static_cast<int>(pts.size());
    f.a = (d12 - d01) / (x2 - x0);
    f.b = d01 - f.a * (x0 + x1);
    f.c = pts[0].second - f.a * x0 * x0 - f.b * x0;
    f.exact = std::all_of(pts.begin(), pts.end(), [&](const auto& p) {
      Rational x = p.first;
      return f.a * x * x + f.b * x + f.c == p.second;
    });
    out.push_back(f);
  }
  return out;
}

bool DegreeReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const DegreeRow& r) { return !r.match || *r.match; });
}

DegreeReport empirical_degree_fit(std::span<const int> w, const std::vector<int>& colors, const FitOptions& opts) {
  DegreeReport rep;
  rep.w.assign(w.begin(), w.end());
  pretzel::PretzelSpec spec(rep.w);
  if (!spec.is_knot()) throw DomainError("empirical_degree_fit: knots only");

  auto why = regime_violation(w);
  rep.in_regime = !why;
  if (w.size() == 3) {
    rep.s = s_value(w);
    rep.s1 = s1_value(w);
    rep.js = js_value(w);
  }
  if (rep.in_regime) {
    rep.modulus = cancellation_modulus(w);
    rep.cancellation_residues = {0};
    for (int r = 0; r < rep.modulus; ++r) rep.jx.push_back(jx_value(w, r == 0));
  } else {
    rep.caveat = "no cancellation analysis (" + *why + "); predictions are the lattice maximum";
  }

  std::vector<int> cs = colors;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  for (int N : cs) {
    if (N < 2) throw DomainError("empirical_degree_fit: colors must be >= 2");
    DegreeRow row;
    row.N = N;
    row.residue = N % rep.modulus;
    bool lattice_ok = std::all_of(w.begin(), w.end(), [](int x) { return x < -1 || x > 1; });
    if (rep.in_regime)
      row.predicted = predicted_degree(w, N);
    else if (lattice_ok)
      row.predicted = lattice_degree(w, N);
    rep.rows.push_back(row);
  }

  // Exact degrees, one task per color.
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    if (rep.rows[i].N <= opts.exact_max_color) todo.push_back(i);
  int threads = std::max(1, opts.threads);
  for (std::size_t start = 0; start < todo.size(); start += threads) {
    std::vector<std::future<Rational>> jobs;
    std::size_t stop = std::min(todo.size(), start + threads);
    for (std::size_t t = start; t < stop; ++t) {
      int N = rep.rows[todo[t]].N;
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&spec, N] { return pretzel::colored_jones_statesum(spec, N).degree(); }));
    }
    for (std::size_t t = start; t < stop; ++t) {
      auto& row = rep.rows[todo[t]];
      row.exact = jobs[t - start].get();
      if (row.predicted && rep.in_regime) row.match = (*row.exact == *row.predicted);
    }
  }

  std::vector<std::pair<int, Rational>> pts;
  for (auto& r : rep.rows) {
    if (r.exact)
      pts.emplace_back(r.N, *r.exact);
    else if (r.predicted)
      pts.emplace_back(r.N, *r.predicted);
  }
  // Classes with fewer than three colors get no fit.
  for (int r = 0; r < rep.modulus; ++r) {
    std::vector<std::pair<int, Rational>> cls;
    for (auto& p : pts)
      if (p.first % rep.modulus == r) cls.push_back(p);
    if (cls.size() < 3) continue;
    auto f = fit_quadratic(cls, 1).front();
    f.residue = r;
    rep.fits.push_back(f);
  }
  return rep;
}

}  // namespace cjp::degree
