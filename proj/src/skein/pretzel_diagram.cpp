#include <algorithm>
#include <cstdlib>
#include <map>

#include "cjp/skein.hpp"

namespace cjp::skein {

namespace {

struct Trace {
  int components = 0;
  std::vector<int> component_of;  // per endpoint
  std::vector<int> base;          // first endpoint id of each node (lower ports, then upper)
  std::vector<int> writhe_of;     // per component, summed over crossings inside it
  int mixed_writhe = 0;           // crossings between different components
};

Trace trace(const PlanarDiagram& d) {
  if (!d.closed()) throw DomainError("tracing needs a closed diagram");
  const auto& nodes = d.nodes();
  Trace t;
  int total = 0;
  for (const auto& nd : nodes) {
    for (int m : nd.lower)
      if (m != 1) throw DomainError("tracing needs single-strand edges");
    for (int m : nd.upper)
      if (m != 1) throw DomainError("tracing needs single-strand edges");
    t.base.push_back(total);
    total += static_cast<int>(nd.lower.size() + nd.upper.size());
  }
  auto lower_id = [&](int node, int port) { return t.base[node] + port; };
  auto upper_id = [&](int node, int port) { return t.base[node] + static_cast<int>(nodes[node].lower.size()) + port; };
  std::vector<int> node_of(total), edge_to(total, -1), inner(total, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& nd = nodes[i];
    const int a = static_cast<int>(nd.lower.size()), b = static_cast<int>(nd.upper.size());
    for (int j = 0; j < a + b; ++j) node_of[t.base[i] + j] = static_cast<int>(i);
    auto link = [&](int x, int y) {
      inner[x] = y;
      inner[y] = x;
    };
    const int ii = static_cast<int>(i);
    switch (nd.kind) {
      case NodeKind::Cup:
        for (int j = 0; j < b / 2; ++j) link(upper_id(ii, j), upper_id(ii, b - 1 - j));
        break;
      case NodeKind::Cap:
        for (int j = 0; j < a / 2; ++j) link(lower_id(ii, j), lower_id(ii, a - 1 - j));
        break;
      case NodeKind::Crossing:
        link(lower_id(ii, 0), upper_id(ii, 1));
        link(lower_id(ii, 1), upper_id(ii, 0));
        break;
      case NodeKind::Projector:
        if (a != 1 || b != 1) throw DomainError("tracing supports width-1 projectors only");
        link(lower_id(ii, 0), upper_id(ii, 0));
        break;
      case NodeKind::Box:
        for (int p = 0; p < nd.box.size(); ++p) {
          int q = nd.box.partner(p);
          auto id = [&](int lab) { return lab < b ? upper_id(ii, lab) : lower_id(ii, lab - b); };
          inner[id(p)] = id(q);
        }
        break;
    }
  }
  for (const Edge& e : d.edges()) {
    int x = upper_id(e.from.node, e.from.port), y = lower_id(e.to.node, e.to.port);
    edge_to[x] = y;
    edge_to[y] = x;
  }
  t.component_of.assign(total, -1);
  // Direction (+1 up, -1 down) of each crossing's two strands.
  std::map<int, std::pair<int, int>> dirs;
  std::map<int, std::pair<int, int>> comp_at;
  for (int start = 0; start < total; ++start) {
    if (t.component_of[start] != -1) continue;
    const int c = t.components++;
    int e = start;
    do {
      int f = inner[e];
      t.component_of[e] = c;
      t.component_of[f] = c;
      int node = node_of[e];
      if (nodes[node].kind == NodeKind::Crossing) {
        bool entered_low = e - t.base[node] < 2;
        int port = entered_low ? e - t.base[node] : e - t.base[node] - 2;
        // strand A: lower 0 -> upper 1; strand B: lower 1 -> upper 0
        bool strand_a = entered_low ? port == 0 : port == 1;
        int dir = entered_low ? 1 : -1;
        auto& slot = dirs[node];
        auto& cslot = comp_at[node];
        if (strand_a) {
          slot.first = dir;
          cslot.first = c;
        } else {
          slot.second = dir;
          cslot.second = c;
        }
      }
      e = edge_to[f];
    } while (e != start);
  }
  t.writhe_of.assign(t.components, 0);
  for (const auto& [node, dir] : dirs) {
    int base_sign = nodes[node].over == Over::LeftToRight ? 1 : -1;
    int sign = base_sign * dir.first * dir.second;
    auto [ca, cb] = comp_at[node];
    if (ca == cb)
      t.writhe_of[ca] += sign;
    else
      t.mixed_writhe += sign;
  }
  return t;
}

// Cable index (after the cups) -> the cup port that created it.
PortRef cup_port_of_cable(int regions, int cable) {
  if (cable == 0) return {0, 0};
  if (cable == 2 * regions - 1) return {0, 1};
  int i = (cable - 1) / 2;  // cups 1..regions-1 create BR_i, BL_{i+1}
  return {1 + i, (cable - 1) % 2};
}

PlanarDiagram assemble(const std::vector<int>& w, int n, bool snake, const std::vector<int>& projector_cables) {
  const int regions = static_cast<int>(w.size());
  DiagramBuilder b;
  b.cup(0, {n});
  for (int i = 0; i + 1 < regions; ++i) b.cup(2 * i + 1, {n});
  for (int c : projector_cables) b.projector(c, {n}, {n});
  if (snake) {
    b.cup(1, {n});
    b.cap(0, {n});
  }
  for (int i = 0; i < regions; ++i)
    for (int t = 0; t < std::abs(w[i]); ++t) b.crossing(2 * i, w[i] > 0 ? Over::LeftToRight : Over::RightToLeft);
  for (int i = regions - 2; i >= 0; --i) b.cap(2 * i + 1, {n});
  b.cap(0, {n});
  return b.build();
}

std::vector<int> normalize_regions(std::span<const int> w, const PretzelEncoding& enc) {
  if (w.empty()) throw DomainError("a pretzel needs at least one twist region");
  std::vector<int> v(w.begin(), w.end());
  int r = ((enc.rotate % static_cast<int>(v.size())) + static_cast<int>(v.size())) % static_cast<int>(v.size());
  std::rotate(v.begin(), v.begin() + r, v.end());
  if (enc.reversed) std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

int component_count(const PlanarDiagram& d) { return trace(d).components; }

int writhe(const PlanarDiagram& d) {
  Trace t = trace(d);
  if (t.components != 1) throw DomainError("writhe is only defined here for knots");
  return t.writhe_of[0];
}

int pretzel_components(std::span<const int> w) {
  return component_count(assemble(normalize_regions(w, {}), 1, false, {}));
}

int pretzel_writhe(std::span<const int> w) { return writhe(assemble(normalize_regions(w, {}), 1, false, {})); }

PlanarDiagram cable_pretzel(std::span<const int> w, int n, PretzelEncoding enc) {
  if (n < 1) throw DomainError("cabling must be at least 1");
  std::vector<int> v = normalize_regions(w, enc);
  const int regions = static_cast<int>(v.size());
  // One projector per component, on the first bottom cable that belongs to it.
  PlanarDiagram skeleton = assemble(v, 1, false, {});
  Trace t = trace(skeleton);
  std::vector<int> cables;
  std::vector<char> covered(t.components, 0);
  for (int c = 0; c < 2 * regions; ++c) {
    PortRef p = cup_port_of_cable(regions, c);
    int comp = t.component_of[t.base[p.node] + p.port];  // cups have no lower ports
    if (!covered[comp]) {
      covered[comp] = 1;
      cables.push_back(c);
    }
  }
  return assemble(v, n, enc.snake, cables);
}

PlanarDiagram projector_loop(int n) {
  if (n < 1) throw DomainError("projector width must be positive");
  return DiagramBuilder().cup(0, {n}).projector(1, {n}, {n}).cap(0, {n}).build();
}

PlanarDiagram theta_network(int a, int b, int c) {
  AdmissibleTriple tri(a, b, c);
  // Strands shared by each pair of edges.
  const int x = (b + c - a) / 2, y = (a + c - b) / 2, z = (a + b - c) / 2;
  // Frontier after the cups: [y z][z x][x y] feeding the projectors A, B, C.
  DiagramBuilder bld;
  auto nonzero = [](std::initializer_list<int> l) {
    std::vector<int> v;
    for (int m : l)
      if (m > 0) v.push_back(m);
    return v;
  };
  // Build the three cups in nesting order: y outermost, then z (A-B), then x (B-C).
  int pos_after_y = 0;
  if (y > 0) {
    bld.cup(0, {y});
    pos_after_y = 1;
  }
  if (z > 0) bld.cup(pos_after_y, {z});
  int pos_x = pos_after_y + (z > 0 ? 2 : 0);
  if (x > 0) bld.cup(pos_x, {x});
  // Projector A on [y z], B on [z x], C on [x y].
  std::vector<int> la = nonzero({y, z}), lb = nonzero({z, x}), lc = nonzero({x, y});
  int pa = 0, pb = static_cast<int>(la.size()), pc = pb + static_cast<int>(lb.size());
  if (a > 0) bld.projector(pa, la, la);
  if (b > 0) bld.projector(pb, lb, lb);
  if (c > 0) bld.projector(pc, lc, lc);
  // Close with the mirror image of the cups.
  if (x > 0) bld.cap(pos_x, {x});
  if (z > 0) bld.cap(pos_after_y, {z});
  if (y > 0) bld.cap(0, {y});
  return bld.build();
}

tl::Matching fused_region(int n, int k, const tl::Matching& d) {
  if (k < 0 || k > n) throw DomainError("fused_region: channel out of range");
  if (d.top() != 2 * k || d.bottom() != 2 * k) throw DomainError("fused_region: center must lie in B_{2k}");
  const int N = 2 * n;
  std::vector<int> p(2 * N, -1);
  auto link = [&](int u, int v) {
    p[u] = v;
    p[v] = u;
  };
  for (int i = 0; i < N; ++i)
    if (i < n - k || i >= n + k) link(i, N + i);
  if (k > 0) {
    // Sideways box: its left side (the lower ports) reads t_{k-1}..t_0, p_0..p_{k-1}
    // top to bottom, which is the vertical box rotated by k positions.
    tl::Matching r = d.rotated(k, 2 * k);
    auto label = [&](int lab) { return lab < 2 * k ? (n - k) + lab : N + (n - k) + (lab - 2 * k); };
    for (int lab = 0; lab < 4 * k; ++lab) p[label(lab)] = label(r.partner(lab));
  }
  return tl::Matching(N, N, std::move(p));
}

PlanarDiagram fused_closure(int n, int k0, const tl::Matching& x, int loops) {
  if (n < 1 || k0 < 0 || k0 > n) throw DomainError("fused_closure: bad channel");
  if (x.top() != 2 * n || x.bottom() != 2 * n) throw DomainError("fused_closure: middle must have 2n strands per side");
  if (loops < 0) throw DomainError("fused_closure: negative loop count");
  auto nonzero = [](std::initializer_list<int> l) {
    std::vector<int> v;
    for (int m : l)
      if (m > 0) v.push_back(m);
    return v;
  };
  const int outer = n - k0;
  // Domain cables top-to-bottom: top outer, top inner, bottom inner, bottom outer.
  std::vector<int> split_top = nonzero({outer, k0}), split_bot = nonzero({k0, outer});
  std::vector<int> returns = nonzero({outer, k0, k0, outer});  // mirrored by the cup
  DiagramBuilder b;
  b.cup(0, returns);
  const int ret = static_cast<int>(returns.size());
  // T_0: the rotated projector on the inner strands.
  if (k0 > 0) b.projector(ret + (outer > 0 ? 1 : 0), {k0, k0}, {k0, k0}, k0);
  // F on the way in, X, then F again; the cap closes the trace.
  b.projector(ret, split_top, {n});
  b.projector(ret + 1, split_bot, {n});
  b.box(ret, {n, n}, {n, n}, x);
  b.projector(ret, {n}, split_top);
  b.projector(ret + static_cast<int>(split_top.size()), {n}, split_bot);
  for (int i = 0; i < loops; ++i) b.cup(0, {1}).cap(0, {1});
  b.cap(0, returns);
  return b.build();
}

PlanarDiagram build_script_T(int n, int k0) {
  return fused_closure(n, k0, fused_region(n, k0, tl::Matching::identity(2 * k0)), 0);
}

}  // namespace cjp::skein
