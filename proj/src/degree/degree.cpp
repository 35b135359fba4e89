#include "cjp/degree.hpp"

#include <algorithm>
#include <numeric>

#include "cjp/pretzel.hpp"

namespace cjp::degree {

namespace {

void check_cell(int n, std::span<const int> k, std::span<const int> w) {
  if (w.size() < 2 || k.size() != w.size()) throw DomainError("delta: k and w must have the same length >= 2");
  for (int wi : w)
    if (wi >= -1 && wi <= 1) throw DomainError("delta: every twist must satisfy |w_i| > 1");
  int sum = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || k[i] > n) throw DomainError("delta: channel out of range");
    if (i > 0) sum += k[i];
  }
  if (sum != k[0]) throw DomainError("delta: channel vector is not tight");
}

void require_three(std::span<const int> w) {
  if (w.size() != 3) throw DomainError("three-region invariants need w = (w0, w1, w2)");
}

// 1 / sum (w_i - 1)^-1 over i >= 1.
Rational harmonic(std::span<const int> w) {
  Rational inv = 0;
  for (std::size_t i = 1; i < w.size(); ++i) inv += frac(1, w[i] - 1);
  return 1 / inv;
}

int writhe_of(std::span<const int> w) {
  pretzel::PretzelSpec spec({w.begin(), w.end()});
  if (!spec.is_knot()) throw DomainError("degree of J_N is only tracked for knots");
  return spec.writhe();
}

Rational framing_degree(int writhe, int n) { return frac(writhe * (n * n + 2 * n), 2); }

}  // namespace

Rational delta(int n, std::span<const int> k, std::span<const int> w) {
  check_cell(n, k, w);
  int m = static_cast<int>(w.size()) - 1;
  Rational acc = Rational((w[0] + 1) * k[0] * k[0]);
  long wsum = w[0];
  for (int i = 1; i <= m; ++i) {
    acc += (w[i] - 1) * k[i] * k[i] + (-2 + w[0] + w[i]) * k[i];
    wsum += w[i];
  }
  acc -= frac(n * (n + 2), 2) * wsum;
  acc += (m - 1) * n;
  return -acc;
}

int delta_sign(int n, std::span<const int> k, std::span<const int> w) {
  check_cell(n, k, w);
  long e = static_cast<long>(w[0]) * (n - k[0]) + n + k[0];
  for (std::size_t i = 1; i < w.size(); ++i) e += static_cast<long>(n - k[i]) * (w[i] - 1);
  return (e % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> tight_cells(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(m + 1, 0);
  // Odometer over k_1..k_m with running sum <= n.
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i > m) {
      k[0] = used;
      out.push_back(k);
      return;
    }
    for (int v = 0; used + v <= n; ++v) {
      k[i] = v;
      self(self, i + 1, used + v);
    }
    k[i] = 0;
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DegreeCell> lattice_max(std::span<const int> w, int n) {
  std::vector<DegreeCell> best;
  for (auto& k : tight_cells(static_cast<int>(w.size()) - 1, n)) {
    Rational d = delta(n, k, w);
    if (!best.empty() && d < best.front().delta) continue;
    if (!best.empty() && d > best.front().delta) best.clear();
    best.push_back({k, d, delta_sign(n, k, w)});
  }
  return best;
}

Rational s_value(std::span<const int> w) {
  require_three(w);
  return 1 + w[0] + harmonic(w);
}

Rational s1_value(std::span<const int> w) {
  require_three(w);
  Rational num = 0;
  for (int i = 1; i <= 2; ++i) num += frac(w[i] + w[0] - 2, w[i] - 1);
  return num * harmonic(w);
}

Rational js_value(std::span<const int> w) { return -s_value(w) + w[0] + w[2]; }

Rational jx_value(std::span<const int> w, bool cancellation_class) {
  Rational jx = -s1_value(w) + 2 * s_value(w) - 1;
  if (cancellation_class) jx -= frac(2 * std::min(w[1] - 1, w[2] - 1), w[1] + w[2] - 2);
  return jx;
}

Rational real_maximizer(std::span<const int> w, int n) {
  require_three(w);
  return frac(-2 * n - w[1] + w[2] + 2 * n * w[2], 2 * (-2 + w[1] + w[2]));
}

int cancellation_modulus(std::span<const int> w) {
  require_three(w);
  return (w[1] + w[2] - 2) / std::gcd(w[1] - 1, w[2] - 1);
}

bool is_cancellation_color(std::span<const int> w, int N) { return N % cancellation_modulus(w) == 0; }

std::optional<std::string> regime_violation(std::span<const int> w) {
  if (w.size() != 3) return "needs exactly three regions";
  if (!(w[0] < -1 && w[1] > 1 && w[2] > 1)) return "needs w0 < -1 < 1 < w1, w2";
  if (w[1] % 2 != 0) return "needs w1 even";
  if (!(-w[0] > std::min(w[1] - 1, w[2] - 1))) return "needs -w0 > min(w1 - 1, w2 - 1)";
  if (!(s_value(w) < 0)) return "needs s(w) < 0";
  if (!pretzel::PretzelSpec({w.begin(), w.end()}).is_knot()) return "not a knot";
  return std::nullopt;
}

void require_regime(std::span<const int> w) {
  if (auto why = regime_violation(w)) throw RegimeError("outside the cancellation regime: " + *why);
}

Rational lattice_degree(std::span<const int> w, int N) {
  if (N < 1) throw DomainError("color must be >= 1");
  int n = N - 1;
  return lattice_max(w, n).front().delta + framing_degree(writhe_of(w), n);
}

Rational predicted_degree(std::span<const int> w, int N) {
  require_regime(w);
  Rational d = lattice_degree(w, N);
  if (is_cancellation_color(w, N)) {
    int g = std::gcd(w[1] - 1, w[2] - 1);
    int j = N / cancellation_modulus(w);
    d -= frac(2 * std::min(w[1] - 1, w[2] - 1) * j, g);
  }
  return d;
}

PairGap cancellation_pair_gap(std::span<const int> w, int j) {
  require_regime(w);
  if (j < 1) throw DomainError("cancellation_pair_gap: j >= 1");
  PairGap out;
  out.n = j * cancellation_modulus(w) - 1;
  auto cells = lattice_max(w, out.n);
  if (cells.size() != 2 || cells[0].sign == cells[1].sign)
    throw ArithmeticError("expected two lattice maximisers of opposite sign");
  out.first = cells[0];
  out.second = cells[1];
  pretzel::PretzelSpec spec({w.begin(), w.end()});
  RatFunc a = pretzel::tight_leading_product(spec, out.n, cells[0].k);
  RatFunc b = pretzel::tight_leading_product(spec, out.n, cells[1].k);
  if (a.degree() != b.degree()) throw ArithmeticError("paired terms differ in degree");
  out.term_degree = a.degree();
  out.gap = (a + b).degree() - out.term_degree;
  int g = std::gcd(w[1] - 1, w[2] - 1);
  out.expected = -frac(2 * std::min(w[1] - 1, w[2] - 1) * j, g);
  return out;
}

}  // namespace cjp::degree
