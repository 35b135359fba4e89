#pragma once

// Closed-form degree analysis of the pretzel state sum: the leading degree of each
// tight channel, lattice maximisation, the cancellation correction for three-region
// knots, and exact quadratic fits of the degree sequence.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjp/qring.hpp"

namespace cjp::degree {

struct DegreeCell {
  std::vector<int> k;  // k_0 .. k_m with k_0 = k_1 + ... + k_m
  Rational delta;
  int sign = 1;
};

/// Leading q-degree of the tight channel k at cabling n (color n + 1).
/// Throws DomainError unless k is tight, 0 <= k_i <= n and every |w_i| > 1.
Rational delta(int n, std::span<const int> k, std::span<const int> w);
int delta_sign(int n, std::span<const int> k, std::span<const int> w);

/// Every tight k with k_0 <= n, in lexicographic order.
std::vector<std::vector<int>> tight_cells(int m, int n);
/// All tight cells attaining the maximal delta, by exhaustion.
std::vector<DegreeCell> lattice_max(std::span<const int> w, int n);

// Three-region invariants. All take w = (w0, w1, w2).
Rational s_value(std::span<const int> w);
Rational s1_value(std::span<const int> w);
Rational js_value(std::span<const int> w);
Rational jx_value(std::span<const int> w, bool cancellation_class);
/// Real maximiser of delta along the tight diagonal k_0 = n.
Rational real_maximizer(std::span<const int> w, int n);
/// (w1 + w2 - 2) / gcd(w1 - 1, w2 - 1).
int cancellation_modulus(std::span<const int> w);
bool is_cancellation_color(std::span<const int> w, int N);

/// Empty if the cancellation theorem applies to w, otherwise the failed hypothesis.
std::optional<std::string> regime_violation(std::span<const int> w);
void require_regime(std::span<const int> w);  // throws RegimeError

/// max delta + writhe framing, with no cancellation analysis. Knots only.
Rational lattice_degree(std::span<const int> w, int N);
/// Highest q-power of J_N predicted by the cancellation theorem. Throws RegimeError
/// outside its hypotheses.
Rational predicted_degree(std::span<const int> w, int N);

struct PairGap {
  int n = 0;
  DegreeCell first, second;
  Rational term_degree;  // degree of each tight leading product
  Rational gap;          // deg(sum) - term_degree, exact
  Rational expected;     // -2 min(w1-1, w2-1) j / g
};
/// Sums the two tight leading products of the maximising pair at n = j M - 1 exactly.
/// The closing network is common to both and is factored out.
PairGap cancellation_pair_gap(std::span<const int> w, int j);

struct QuadraticFit {
  int residue = 0;
  int points = 0;
  bool exact = false;  // all points lie on a*N^2 + b*N + c
  Rational a, b, c;
};

/// Groups (N, degree) by N mod modulus and fits a quadratic through each class exactly.
/// Throws DomainError if some class has fewer than three points.
std::vector<QuadraticFit> fit_quadratic(const std::vector<std::pair<int, Rational>>& points, int modulus);

struct DegreeRow {
  int N = 0;
  int residue = 0;
  std::optional<Rational> exact;      // from the colored Jones polynomial
  std::optional<Rational> predicted;  // theorem, or lattice max outside the regime
  std::optional<bool> match;
};

struct DegreeReport {
  std::vector<int> w;
  bool in_regime = false;
  std::string caveat;
  Rational s, s1, js;
  int modulus = 1;
  std::vector<int> cancellation_residues;
  std::vector<Rational> jx;  // theorem value per residue (in regime only)
  std::vector<QuadraticFit> fits;
  std::vector<DegreeRow> rows;

  bool all_match() const;
};

struct FitOptions {
  int exact_max_color = 4;  // compute J_N exactly up to this color
  int threads = 1;
};

/// Exact degrees for small colors, predictions for all, and per-class quadratic fits of
/// the best available value (exact where known).
DegreeReport empirical_degree_fit(std::span<const int> w, const std::vector<int>& colors,
                                  const FitOptions& opts = {});

}  // namespace cjp::degree
