#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "cjp/skein.hpp"

namespace cjp::skein {

namespace {

// A crossingless matching of the frontier points is stored as its Dyck word:
// bit i is set when point i opens an arc (its partner lies to the right).
using Key = std::uint64_t;
constexpr int kMaxPoints = 64;

using Content = std::vector<std::pair<tl::Matching, HalfLaurent>>;

void decode(Key k, int points, std::vector<int>& partner) {
  static thread_local std::vector<int> stack;
  stack.clear();
  partner.resize(points);
  for (int i = 0; i < points; ++i) {
    if ((k >> i) & 1U) {
      stack.push_back(i);
    } else {
      int j = stack.back();
      stack.pop_back();
      partner[i] = j;
      partner[j] = i;
    }
  }
}

Key encode(const std::vector<int>& partner) {
  Key k = 0;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i)
    if (partner[i] > i) k |= Key{1} << i;
  return k;
}

// Replaces the window [s, s+a) of the frontier matching `old` by a box whose
// matching has b upper points (labels 0..b-1) and a lower points (labels b..b+a-1).
// Writes the new frontier matching and returns the number of closed loops.
int glue(const std::vector<int>& old, int s, int a, const tl::Matching& box, std::vector<int>& out) {
  const int points = static_cast<int>(old.size());
  const int b = box.top();
  const int np = points - a + b;
  out.assign(np, -1);
  static thread_local std::vector<char> seen;
  seen.assign(a, 0);
  auto new_of_old = [&](int o) { return o < s ? o : o - a + b; };
  auto in_window = [&](int o) { return o >= s && o < s + a; };
  // Continue from old point q (reached along the old matching); return the new endpoint.
  auto run = [&](int q) {
    while (in_window(q)) {
      seen[q - s] = 1;
      int r = box.partner(b + (q - s));
      if (r < b) return s + r;
      int o2 = s + (r - b);
      seen[o2 - s] = 1;
      q = old[o2];
    }
    return new_of_old(q);
  };
  for (int o = 0; o < points; ++o) {
    if (in_window(o)) continue;
    int from = new_of_old(o);
    if (out[from] != -1) continue;
    int to = run(old[o]);
    out[from] = to;
    out[to] = from;
  }
  for (int u = 0; u < b; ++u) {
    if (out[s + u] != -1) continue;
    int r = box.partner(u);
    int to;
    if (r < b) {
      to = s + r;
    } else {
      int o2 = s + (r - b);
      seen[o2 - s] = 1;
      to = run(old[o2]);
    }
    out[s + u] = to;
    out[to] = s + u;
  }
  int loops = 0;
  for (int j = 0; j < a; ++j) {
    if (seen[j]) continue;
    ++loops;
    int o = s + j;
    while (!seen[o - s]) {
      seen[o - s] = 1;
      int q = old[o];
      seen[q - s] = 1;
      o = s + (box.partner(b + (q - s)) - b);
    }
  }
  return loops;
}

const HalfLaurent& loop_power(int k) {
  static std::mutex mu;
  static std::vector<HalfLaurent> pw{HalfLaurent(1)};
  std::lock_guard<std::mutex> lock(mu);
  if (pw.capacity() < 128) pw.reserve(128);
  if (k >= 128) throw DomainError("too many loops in one step");
  while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * loop_value());
  return pw[k];
}

const Content& crossing_content(Over over) {
  static const Content left = [] {
    tl::Matching id = tl::Matching::identity(2), e = tl::Matching::generator(2, 1);
    return Content{{id, HalfLaurent::monomial(1, -1)}, {e, HalfLaurent::monomial(1, 1)}};
  }();
  static const Content right = [] {
    tl::Matching id = tl::Matching::identity(2), e = tl::Matching::generator(2, 1);
    return Content{{id, HalfLaurent::monomial(1, 1)}, {e, HalfLaurent::monomial(1, -1)}};
  }();
  return over == Over::LeftToRight ? left : right;
}

const Content& projector_content(int width, int rotation, int upper_points) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Content>> cache;
  const tl::TLPolyElement& jw = tl::jw_numerators(width);  // outside our lock
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{width, rotation, upper_points}];
  if (!slot) {
    slot = std::make_unique<Content>();
    for (const auto& [d, c] : jw.terms()) slot->emplace_back(d.rotated(rotation, upper_points), c);
  }
  return *slot;
}

Content nested_content(int top, int bottom) {
  // Cups (bottom == 0) or caps (top == 0): point j pairs with its mirror.
  const int n = top + bottom;
  std::vector<int> p(n);
  for (int j = 0; j < n; ++j) p[j] = n - 1 - j;
  return {{tl::Matching(top, bottom, std::move(p)), HalfLaurent(1)}};
}

class Frontier {
 public:
  Frontier() { amp_.emplace(Key{0}, HalfLaurent(1)); }

  int points() const { return points_; }

  void apply(int s, int a, int b, const Content& content) {
    const int np = points_ - a + b;
    if (np > kMaxPoints) throw DomainError("frontier exceeds 64 strands");
    std::unordered_map<Key, HalfLaurent> next;
    next.reserve(amp_.size() * 2);
    std::vector<int> old, nw;
    std::unordered_map<Key, HalfLaurent> local;
    for (const auto& [key, val] : amp_) {
      decode(key, points_, old);
      local.clear();
      for (const auto& [m, c] : content) {
        int loops = glue(old, s, a, m, nw);
        HalfLaurent& slot = local[encode(nw)];
        if (loops == 0)
          slot += c;
        else
          slot += c * loop_power(loops);
      }
      for (auto& [nk, c] : local) {
        if (c.is_zero()) continue;
        HalfLaurent& slot = next[nk];
        slot += val * c;
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second.is_zero())
        it = next.erase(it);
      else
        ++it;
    }
    amp_ = std::move(next);
    points_ = np;
  }

  HalfLaurent closed_value() const {
    if (points_ != 0) throw DomainError("diagram is not closed");
    auto it = amp_.find(0);
    return it == amp_.end() ? HalfLaurent() : it->second;
  }

 private:
  int points_ = 0;
  std::unordered_map<Key, HalfLaurent> amp_;
};

}  // namespace

BracketParts bracket_parts(const PlanarDiagram& d) {
  if (!d.closed()) throw DomainError("bracket needs a closed diagram");
  Frontier f;
  std::vector<int> mult;
  BracketParts out;
  for (const Node& nd : d.nodes()) {
    const int s = std::accumulate(mult.begin(), mult.begin() + nd.position, 0);
    const int a = nd.lower_points(), b = nd.upper_points();
    switch (nd.kind) {
      case NodeKind::Cup:
      case NodeKind::Cap:
        f.apply(s, a, b, nested_content(b, a));
        break;
      case NodeKind::Crossing: {
        // Cable crossing: move the left strands one at a time across the right cable.
        const int la = nd.lower[0], lb = nd.lower[1];
        const Content& c = crossing_content(nd.over);
        for (int i = la - 1; i >= 0; --i)
          for (int t = 0; t < lb; ++t) f.apply(s + i + t, 2, 2, c);
        break;
      }
      case NodeKind::Projector:
        out.projector_widths.push_back(nd.width());
        f.apply(s, a, b, projector_content(nd.width(), nd.rotation, b));
        break;
      case NodeKind::Box:
        f.apply(s, a, b, Content{{nd.box, HalfLaurent(1)}});
        break;
    }
    mult.erase(mult.begin() + nd.position, mult.begin() + nd.position + nd.lower.size());
    mult.insert(mult.begin() + nd.position, nd.upper.begin(), nd.upper.end());
  }
  out.numerator = f.closed_value();
  return out;
}

RatFunc bracket(const PlanarDiagram& d) {
  BracketParts p = bracket_parts(d);
  HalfLaurent den(1);
  for (int w : p.projector_widths) den *= qfact(w);
  return RatFunc(std::move(p.numerator), std::move(den));
}

}  // namespace cjp::skein
