#include <sstream>

#include "cjp/pretzel.hpp"

namespace cjp::pretzel {

using tl::Composite;
using tl::Matching;

namespace {

// Does any arc of x (left side = bottom labels, right side = top labels) join two
// points of the same cable on the same side?
bool outer_sides_ok(int n, const Matching& x) {
  const int N = 2 * n;
  for (int p = 0; p < 2 * N; ++p) {
    int q = x.partner(p);
    if (q < p) continue;
    bool same_side = (p < N) == (q < N);
    if (!same_side) continue;
    int gp = (p % N) / n, gq = (q % N) / n;
    if (gp == gq) return false;
  }
  return true;
}

// Result of following paths through A (left) glued to R (right) along the top cable,
// with the bottom-cable projector between them left intact.
struct Probe {
  bool capped = false;
  int circles = 0;
  bool traced_high = true;
};

Probe probe_interface(int n, const Matching& a, const Matching& r) {
  const int N = 2 * n;
  // endpoint ids: OL i -> i, JL j -> N + j, JR j -> N + n + j, OR i -> 2N + i
  std::vector<int> end(3 * N, -1);
  std::vector<char> glued(n, 0);
  auto from_a = [&](int cur) {
    while (true) {
      if (cur >= N) return cur - N;               // left side of A
      if (cur >= n) return N + (cur - n);         // bottom projector, left ports
      glued[cur] = 1;
      int x = r.partner(N + cur);
      if (x < N) return 2 * N + x;                // right side of R
      if (x >= N + n) return N + n + (x - N - n);  // bottom projector, right ports
      glued[x - N] = 1;
      cur = a.partner(x - N);
    }
  };
  auto from_r = [&](int cur) {
    while (true) {
      if (cur < N) return 2 * N + cur;
      if (cur >= N + n) return N + n + (cur - N - n);
      glued[cur - N] = 1;
      int x = a.partner(cur - N);
      if (x >= N) return x - N;
      if (x >= n) return N + (x - n);
      glued[x] = 1;
      cur = r.partner(N + x);
    }
  };
  auto pair = [&](int u, int v) {
    end[u] = v;
    end[v] = u;
  };
  for (int i = 0; i < N; ++i)
    if (end[i] == -1) pair(i, from_a(a.partner(N + i)));
  for (int j = 0; j < n; ++j)
    if (end[N + j] == -1) pair(N + j, from_a(a.partner(n + j)));
  for (int j = 0; j < n; ++j)
    if (end[N + n + j] == -1) pair(N + n + j, from_r(r.partner(N + n + j)));
  for (int i = 0; i < N; ++i)
    if (end[2 * N + i] == -1) pair(2 * N + i, from_r(r.partner(i)));

  Probe p;
  auto group = [&](int id) {
    if (id < N) return id / n;                  // OL top/bottom cable
    if (id < N + n) return 2;                   // JL
    if (id < N + 2 * n) return 3;               // JR
    return 4 + (id - 2 * N) / n;                // OR top/bottom cable
  };
  for (int u = 0; u < 3 * N; ++u)
    if (group(u) == group(end[u])) {
      p.capped = true;
      return p;
    }
  std::vector<int> traced;
  for (int u = 0; u < 3 * N; ++u) {
    int v = end[u];
    if (v < u) continue;
    if (group(u) == 2 && group(v) == 3) {
      if (v - (N + n) != u - N) throw ArithmeticError("traced strand does not return to its own position");
      traced.push_back(u - N);
    }
  }
  p.circles = static_cast<int>(traced.size());
  if (p.circles > 0) {
    std::sort(traced.begin(), traced.end());
    bool high = traced.back() == n - 1 && traced.front() == n - p.circles;
    bool low = traced.front() == 0 && traced.back() == p.circles - 1;
    if (!high && !low) throw ArithmeticError("traced strands are not a block at one end of the projector");
    p.traced_high = high;
  }
  return p;
}

Matching bottom_box(int n, const Interface& f) {
  Matching id_c = Matching::identity(f.circles);
  Matching b = f.traced_high ? f.bottom.tensor(id_c) : id_c.tensor(f.bottom);
  return Matching::identity(n).tensor(b);
}

struct Enumerator {
  int m, n;
  Expansion mode;
  const std::function<void(const FusionState&, const Middle&)>& visit;
  FusionState s;
  std::vector<std::vector<std::pair<Matching, Matching>>> centers;  // per region: (d, fused region)

  void region(int i, const Matching& chain, int loops) {
    if (i > m) {
      visit(s, Middle{chain, loops});
      return;
    }
    for (const auto& [d, r] : centers[i]) {
      s.centers.push_back(d);
      if (i == 1)
        region(2, r, 0);
      else if (mode == Expansion::Generic)
        generic_interface(i, chain, loops, r);
      else
        pruned_interface(i, chain, loops, r);
      s.centers.pop_back();
    }
  }

  void generic_interface(int i, const Matching& chain, int loops, const Matching& r) {
    for (const Matching& t : tl::enumerate_basis(n)) {
      for (const Matching& b : tl::enumerate_basis(n)) {
        Composite x1 = tl::compose(t.tensor(b), chain);
        Composite x2 = tl::compose(r, x1.matching);
        s.interfaces.push_back({t, 0, true, b});
        region(i + 1, x2.matching, loops + x1.loops + x2.loops);
        s.interfaces.pop_back();
      }
    }
  }

  void pruned_interface(int i, const Matching& chain, int loops, const Matching& r) {
    const Matching id_n = Matching::identity(n);
    for (const Matching& t : tl::enumerate_basis(n)) {
      Composite a = tl::compose(t.tensor(id_n), chain);
      Probe p = probe_interface(n, a.matching, r);
      if (p.capped) continue;
      for (const Matching& b : tl::enumerate_basis(n - p.circles)) {
        Interface f{t, p.circles, p.traced_high, b};
        Composite x1 = tl::compose(bottom_box(n, f), a.matching);
        Composite x2 = tl::compose(r, x1.matching);
        if (!outer_sides_ok(n, x2.matching)) continue;
        s.interfaces.push_back(f);
        region(i + 1, x2.matching, loops + a.loops + x1.loops + x2.loops - p.circles);
        s.interfaces.pop_back();
      }
    }
  }
};

void enumerate_channel(int m, int n, Expansion mode, const std::vector<int>& k,
                       const std::function<void(const FusionState&, const Middle&)>& visit) {
  Enumerator e{m, n, mode, visit, {}, {}};
  e.s.k = k;
  e.s.mode = mode;
  e.centers.resize(m + 1);
  for (int i = 1; i <= m; ++i)
    for (const Matching& d : tl::enumerate_basis(2 * k[i]))
      if (mode == Expansion::Generic || region_admissible(n, k[i], d))
        e.centers[i].emplace_back(d, skein::fused_region(n, k[i], d));
  e.region(1, Matching(), 0);
}

}  // namespace

bool FusionState::tight() const {
  int sum = 0;
  for (std::size_t i = 1; i < k.size(); ++i) sum += k[i];
  return !k.empty() && k[0] == sum;
}

std::string FusionState::to_string() const {
  std::ostringstream os;
  os << "k=(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ")";
  for (std::size_t i = 0; i < centers.size(); ++i) os << " d" << i + 1 << "=" << centers[i].to_string();
  for (std::size_t i = 0; i < interfaces.size(); ++i) {
    const auto& f = interfaces[i];
    os << " t" << i + 1 << "=" << f.top.to_string() << " c" << i + 1 << "=" << f.circles << " b" << i + 1 << "="
       << f.bottom.to_string();
  }
  return os.str();
}

bool region_admissible(int n, int k, const Matching& d) { return outer_sides_ok(n, skein::fused_region(n, k, d)); }

Middle expand_middle(int n, const FusionState& s) {
  const int m = static_cast<int>(s.k.size()) - 1;
  if (m < 1 || static_cast<int>(s.centers.size()) != m || static_cast<int>(s.interfaces.size()) != m - 1)
    throw DomainError("fusion state has the wrong number of parts");
  Matching chain = skein::fused_region(n, s.k[1], s.centers[0]);
  int loops = 0;
  const Matching id_n = Matching::identity(n);
  for (int i = 2; i <= m; ++i) {
    Matching r = skein::fused_region(n, s.k[i], s.centers[i - 1]);
    const Interface& f = s.interfaces[i - 2];
    if (s.mode == Expansion::Generic) {
      if (f.circles != 0) throw DomainError("generic states do not trace circles");
      Composite x1 = tl::compose(f.top.tensor(f.bottom), chain);
      Composite x2 = tl::compose(r, x1.matching);
      chain = x2.matching;
      loops += x1.loops + x2.loops;
    } else {
      Composite a = tl::compose(f.top.tensor(id_n), chain);
      Probe p = probe_interface(n, a.matching, r);
      if (p.capped || p.circles != f.circles || (f.circles && p.traced_high != f.traced_high))
        throw DomainError("interface choice is inconsistent with the traced circles");
      Composite x1 = tl::compose(bottom_box(n, f), a.matching);
      Composite x2 = tl::compose(r, x1.matching);
      chain = x2.matching;
      loops += a.loops + x1.loops + x2.loops - f.circles;
    }
  }
  return {chain, loops};
}

void for_each_fusion_state(int m, int n, Expansion mode,
                           const std::function<void(const FusionState&, const Middle&)>& visit) {
  if (m < 1 || n < 1) throw DomainError("state enumeration needs m >= 1 and n >= 1");
  std::vector<int> k(m + 1, 0);
  while (true) {
    enumerate_channel(m, n, mode, k, visit);
    int i = m;
    while (i >= 0 && k[i] == n) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
}

std::vector<FusionState> enumerate_fusion_states(const PretzelSpec& spec, int n, Expansion mode) {
  std::vector<FusionState> out;
  for_each_fusion_state(spec.m(), n, mode, [&](const FusionState& s, const Middle&) { out.push_back(s); });
  return out;
}

namespace detail {
// Used by the state sum; enumerates one channel vector.
void enumerate_channel_public(int m, int n, Expansion mode, const std::vector<int>& k,
                              const std::function<void(const FusionState&, const Middle&)>& visit) {
  enumerate_channel(m, n, mode, k, visit);
}
}  // namespace detail

}  // namespace cjp::pretzel
