#include <mutex>

#include "cjp/qring.hpp"

namespace cjp {

const HalfLaurent& loop_value() {
  static const HalfLaurent v = HalfLaurent::from_terms({{-2, Rational(-1)}, {2, Rational(-1)}});
  return v;
}

HalfLaurent qint(int n) {
  if (n < 0) return -qint(-n);
  std::vector<HalfLaurent::Term> t;
  for (int j = 0; j < n; ++j) t.emplace_back(2 * (n - 1 - 2 * j), Rational(1));
  return HalfLaurent::from_terms(std::move(t));
}

const HalfLaurent& qfact(int n) {
  if (n < 0) throw DomainError("qfact of a negative integer");
  static std::mutex mu;
  static std::vector<HalfLaurent> cache{HalfLaurent(1)};
  std::lock_guard<std::mutex> lock(mu);
  // Elements never move once the vector is large enough; reserve generously.
  if (cache.capacity() < 256) cache.reserve(256);
  if (n >= 256) throw DomainError("qfact argument too large");
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size());
    cache.push_back(cache.back() * qint(k));
  }
  return cache[n];
}

HalfLaurent qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("qbinom requires 0 <= k <= n");
  return qfact(n).divide_exact(qfact(k) * qfact(n - k));
}

HalfLaurent jw_trace(int n) { return (n % 2 ? -1 : 1) * qint(n + 1); }

AdmissibleTriple::AdmissibleTriple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("triple entries must be non-negative");
  if (a > b + c || b > a + c || c > a + b) throw DomainError("triple violates the triangle inequality");
  if ((a + b + c) % 2 != 0) throw DomainError("triple must have an even total");
}

RatFunc theta(const AdmissibleTriple& t) {
  int x = (t.b + t.c - t.a) / 2, y = (t.a + t.c - t.b) / 2, z = (t.a + t.b - t.c) / 2;
  HalfLaurent num = qfact(x + y + z + 1) * qfact(x) * qfact(y) * qfact(z);
  HalfLaurent den = qfact(x + y) * qfact(y + z) * qfact(z + x);
  if ((x + y + z) % 2) num = -num;
  return RatFunc(num, den);
}

HalfLaurent twist_coeff(int w, int k, int n) {
  if (k < 0 || k > n) throw DomainError("twist_coeff requires 0 <= k <= n");
  // exponent n - k + n^2/2 - k^2, doubled to half-units
  int half = 2 * (n - k) + n * n - 2 * k * k;
  int sign = ((n - k) % 2 != 0 && w % 2 != 0) ? -1 : 1;
  return HalfLaurent::monomial(sign, half * w);
}

RatFunc circle_removal(int c, int n) {
  if (c < 0 || n < 0 || c > n + 1) throw DomainError("circle_removal requires 0 <= c <= n + 1");
  HalfLaurent num = qint(n + 2);
  if (c % 2) num = -num;
  return RatFunc(num, qint(n + 2 - c));
}

RatFunc partial_trace_coeff(int c, int width) {
  if (c < 0 || c > width) throw DomainError("partial_trace_coeff requires 0 <= c <= width");
  HalfLaurent num = qint(width + 1);
  if (c % 2) num = -num;
  return RatFunc(num, qint(width + 1 - c));
}

}  // namespace cjp
