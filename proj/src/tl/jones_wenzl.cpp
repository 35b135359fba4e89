#include <memory>
#include <mutex>

#include "cjp/tl.hpp"

namespace cjp::tl {

// Wenzl's recursion JW_n = JW' + ([n-1]/[n]) JW' U_{n-1} JW' with JW' = JW_{n-1} (x) 1,
// scaled by [n]! so that it stays inside the Laurent ring:
//   P_n = [n] P' + (P' U_{n-1} P') / [n-2]!,   P' = P_{n-1} (x) 1.
const TLPolyElement& jw_numerators(int n) {
  if (n < 0) throw DomainError("projector width must be non-negative");
  static std::mutex mu;
  static std::vector<std::unique_ptr<TLPolyElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size());
    if (k <= 1) {
      cache.push_back(std::make_unique<TLPolyElement>(TLPolyElement::identity(k)));
      continue;
    }
    TLPolyElement prime = cache[k - 1]->with_strands(1);
    TLPolyElement u = TLPolyElement::basis(Matching::generator(k, k - 1));
    TLPolyElement sandwich = tl_mul(prime, tl_mul(u, prime));
    TLPolyElement next(k);
    HalfLaurent qk = qint(k);
    for (const auto& [d, c] : prime.terms()) next.add(d, qk * c);
    const HalfLaurent& f = qfact(k - 2);
    for (const auto& [d, c] : sandwich.terms()) next.add(d, c.divide_exact(f));
    cache.push_back(std::make_unique<TLPolyElement>(std::move(next)));
  }
  return *cache[n];
}

TLElement jones_wenzl(int n) {
  const TLPolyElement& p = jw_numerators(n);
  TLElement r(n);
  for (const auto& [d, c] : p.terms()) r.add(d, RatFunc(c, qfact(n)));
  return r;
}

HalfLaurent jw_numerator(const Matching& d) { return jw_numerators(d.n()).coefficient(d); }

RatFunc jw_coefficient(const Matching& d) { return RatFunc(jw_numerator(d), qfact(d.n())); }

}  // namespace cjp::tl
