#include "cjp/tl.hpp"

namespace cjp::tl {

Matching rect_family(int x, int y, int z, int t) {
  if (x < 0 || y < 0 || z < 0 || t < 0) throw DomainError("rect_family parameters must be non-negative");
  if (x + y + z + t < 1) throw DomainError("rect_family needs x+y+z+t >= 1");
  const int n = x + 2 * y + z + t;
  std::vector<int> p(2 * n, -1);
  auto link = [&](int a, int b) {
    p[a] = b;
    p[b] = a;
  };
  // top: x through | y caps | z+t through ; bottom: x+z through | y cups | t through
  std::vector<int> top_through, bottom_through;
  for (int i = 0; i < x; ++i) top_through.push_back(i);
  for (int i = x + 2 * y; i < n; ++i) top_through.push_back(i);
  for (int i = 0; i < x + z; ++i) bottom_through.push_back(n + i);
  for (int i = x + z + 2 * y; i < n; ++i) bottom_through.push_back(n + i);
  for (std::size_t i = 0; i < top_through.size(); ++i) link(top_through[i], bottom_through[i]);
  for (int i = 0; i < y; ++i) {
    link(x + i, x + 2 * y - 1 - i);
    link(n + x + z + i, n + x + z + 2 * y - 1 - i);
  }
  return Matching(n, n, std::move(p));
}

RatFunc kho_coeff_rect(int x, int y, int z, int t) {
  if (x < 0 || y < 0 || z < 0 || t < 0) throw DomainError("kho_coeff_rect parameters must be non-negative");
  if (x + y + z + t < 1) throw DomainError("kho_coeff_rect needs x+y+z+t >= 1");
  return RatFunc(qbinom(x + y, y) * qbinom(t + y, y) * qfact(y) * qfact(x + z + t + y));
}

RatFunc kho_cupshift_ratio(int x, int y) {
  if (x < 0 || y < 0) throw DomainError("kho_cupshift_ratio parameters must be non-negative");
  return RatFunc(qbinom(x + y, x));
}

std::optional<SlideMove> slide_top_caps(const Matching& d) {
  const int n = d.n();
  int x = 0;
  while (x < n && !d.is_top(d.partner(x))) ++x;
  if (x == 0 || x == n) return std::nullopt;  // nothing to slide past, or no cap
  // The law only holds when the passed strands run straight down.
  for (int i = 0; i < x; ++i)
    if (d.partner(i) != n + i) return std::nullopt;
  // The cap at x must be a plain nest: x+i pairs with x+2y-1-i.
  int outer = d.partner(x);
  int y = (outer - x + 1) / 2;
  for (int i = 0; i < y; ++i)
    if (d.partner(x + i) != outer - i) return std::nullopt;
  std::vector<int> p(d.pairing());
  auto link = [&](int a, int b) {
    p[a] = b;
    p[b] = a;
  };
  for (int i = 0; i < y; ++i) link(i, 2 * y - 1 - i);
  for (int i = 0; i < x; ++i) link(2 * y + i, d.partner(i));
  return SlideMove{d, Matching(n, n, std::move(p)), x, y};
}

std::optional<SlideMove> slide_bottom_cups(const Matching& d) {
  auto s = slide_top_caps(d.flipped());
  if (!s) return std::nullopt;
  return SlideMove{d, s->after.flipped(), s->x, s->y};
}

}  // namespace cjp::tl
