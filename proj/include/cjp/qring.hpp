#pragma once

// Exact arithmetic in Z[1/2]-graded Laurent polynomials over Q and their fractions.
// Exponents are stored in half-units: a stored exponent e stands for q^(e/2).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cjp/error.hpp"

namespace cjp {

using Rational = mpq_class;

/// num/den in lowest terms.
Rational frac(long num, long den);
std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);

class HalfLaurent {
 public:
  /// (exponent in half-units, nonzero coefficient), kept sorted by exponent.
  using Term = std::pair<int, Rational>;

  HalfLaurent() = default;
  HalfLaurent(long c);  // NOLINT: constants convert implicitly
  explicit HalfLaurent(const Rational& c);

  static HalfLaurent monomial(const Rational& c, int half_exp);
  static HalfLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int max_half_exp() const;
  int min_half_exp() const;
  const Rational& leading_coeff() const;
  Rational coeff(int half_exp) const;

  /// Degree in q (may be a half-integer). Throws on the zero polynomial.
  Rational degree() const;
  Rational min_degree() const;
  int leading_sign() const;

  /// Substitutes q -> q^-1.
  HalfLaurent mirrored() const;
  /// Multiplies by c * q^(half_exp/2).
  HalfLaurent scaled(const Rational& c, int half_exp) const;
  bool integral() const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  /// this += c * q^(half_exp/2) * x
  void add_scaled(const HalfLaurent& x, const Rational& c, int half_exp);

  HalfLaurent operator-() const;
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  /// Exact quotient if d divides *this in the Laurent ring, nullopt otherwise.
  std::optional<HalfLaurent> exact_div(const HalfLaurent& d) const;
  /// Exact quotient; throws ArithmeticError on a nonzero remainder.
  HalfLaurent divide_exact(const HalfLaurent& d) const;

  HalfLaurent pow(unsigned e) const;
  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Monic gcd in the Laurent ring (units q^k and rationals are stripped).
HalfLaurent gcd(const HalfLaurent& a, const HalfLaurent& b);

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(HalfLaurent num);              // NOLINT
  RatFunc(HalfLaurent num, HalfLaurent den);

  const HalfLaurent& num() const { return num_; }
  const HalfLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational degree() const;
  int leading_sign() const;
  RatFunc mirrored() const { return RatFunc(num_.mirrored(), den_.mirrored()); }

  /// Cancels the gcd of numerator and denominator.
  RatFunc reduced() const;
  /// The value as a Laurent polynomial when the denominator divides out.
  std::optional<HalfLaurent> to_laurent() const;
  HalfLaurent laurent_or_throw() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  void normalize();
  HalfLaurent num_, den_;
};

// ---- quantum combinatorics ----

/// The loop value -q - q^-1.
const HalfLaurent& loop_value();
/// [n] = (q^n - q^-n)/(q - q^-1), for any integer n ([-n] = -[n]).
HalfLaurent qint(int n);
/// [n]! for n >= 0.
const HalfLaurent& qfact(int n);
/// Gaussian binomial [n choose k]; divides exactly or throws.
HalfLaurent qbinom(int n, int k);
/// The closed loop with a width-n projector: (-1)^n [n+1].
HalfLaurent jw_trace(int n);

/// A triple of strand counts meeting at a trivalent vertex.
struct AdmissibleTriple {
  int a, b, c;
  /// Validates non-negativity, the triangle inequalities and an even total.
  AdmissibleTriple(int a, int b, int c);
};

/// Signed theta evaluation; x=(b+c-a)/2 etc. and the sign is (-1)^(x+y+z).
RatFunc theta(const AdmissibleTriple& t);
/// Half-twist eigenvalue on the 2k channel of two n-cables, raised to w.
HalfLaurent twist_coeff(int w, int k, int n);
/// (-1)^c [n+2]/[n+2-c], the displayed circle-removal ratio.
RatFunc circle_removal(int c, int n);
/// Coefficient produced by tracing c strands off a width-w projector: (-1)^c [w+1]/[w+1-c].
RatFunc partial_trace_coeff(int c, int width);

}  // namespace cjp
