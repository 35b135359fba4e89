#include <algorithm>
#include <map>
#include <tuple>
#include <numeric>
#include <string>

#include "cjp/skein.hpp"

namespace cjp::skein {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool palindrome(const std::vector<int>& v) { return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin()); }

std::string where(std::size_t i) { return "node " + std::to_string(i) + ": "; }

void check_node(const Node& nd, std::size_t i) {
  for (int m : nd.lower)
    if (m <= 0) throw DomainError(where(i) + "cable multiplicities must be positive");
  for (int m : nd.upper)
    if (m <= 0) throw DomainError(where(i) + "cable multiplicities must be positive");
  switch (nd.kind) {
    case NodeKind::Cup:
      if (!nd.lower.empty() || nd.upper.empty() || nd.upper.size() % 2 || !palindrome(nd.upper))
        throw DomainError(where(i) + "a cup has no lower ports and a mirrored list of upper ports");
      break;
    case NodeKind::Cap:
      if (!nd.upper.empty() || nd.lower.empty() || nd.lower.size() % 2 || !palindrome(nd.lower))
        throw DomainError(where(i) + "a cap has no upper ports and a mirrored list of lower ports");
      break;
    case NodeKind::Crossing:
      if (nd.lower.size() != 2 || nd.upper.size() != 2 || nd.lower[0] != nd.upper[1] || nd.lower[1] != nd.upper[0])
        throw DomainError(where(i) + "a crossing takes cables [a, b] to [b, a]");
      break;
    case NodeKind::Projector: {
      int pts = nd.lower_points() + nd.upper_points();
      if (pts == 0 || pts % 2) throw DomainError(where(i) + "projector boundary must be even and nonempty");
      if (nd.rotation < 0 || nd.rotation >= pts) throw DomainError(where(i) + "projector rotation out of range");
      break;
    }
    case NodeKind::Box:
      if (nd.box.top() != nd.upper_points() || nd.box.bottom() != nd.lower_points())
        throw DomainError(where(i) + "box matching does not fit its ports");
      break;
  }
}

}  // namespace

int Node::lower_points() const { return total(lower); }
int Node::upper_points() const { return total(upper); }

PlanarDiagram::PlanarDiagram(std::vector<int> inputs, std::vector<Node> nodes, std::vector<Edge> edges,
                             std::vector<int> outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) check_node(nodes_[i], i);
  // Every port must be the endpoint of exactly one edge.
  auto key = [](const PortRef& r, bool upper) { return std::tuple(r.node, r.port, upper); };
  std::map<std::tuple<int, int, bool>, std::size_t> by_to;
  std::map<std::tuple<int, int, bool>, std::size_t> by_from;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!by_from.emplace(key(edges_[e].from, true), e).second) throw DomainError("port used by two edges");
    if (!by_to.emplace(key(edges_[e].to, false), e).second) throw DomainError("port used by two edges");
  }
  std::vector<PortRef> refs;
  std::vector<int> mult = inputs_;
  for (std::size_t j = 0; j < inputs_.size(); ++j) refs.push_back({-1, static_cast<int>(j)});
  auto follow = [&](const PortRef& from, const PortRef& to, int m) {
    auto it = by_from.find(key(from, true));
    if (it == by_from.end()) throw DomainError("dangling port on the frontier");
    const Edge& e = edges_[it->second];
    if (!(e.to == to)) throw DomainError("edge disagrees with the sweep order");
    if (e.multiplicity != m) throw DomainError("edge multiplicity does not match its ports");
  };
  auto points = [](const std::vector<int>& m) { return total(m); };
  max_frontier_ = points(mult);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    const int a = static_cast<int>(nd.lower.size());
    if (nd.position < 0 || nd.position + a > static_cast<int>(refs.size()))
      throw DomainError(where(i) + "position outside the frontier");
    for (int j = 0; j < a; ++j) {
      if (mult[nd.position + j] != nd.lower[j]) throw DomainError(where(i) + "lower port multiplicity mismatch");
      follow(refs[nd.position + j], {static_cast<int>(i), j}, nd.lower[j]);
    }
    std::vector<PortRef> up;
    for (std::size_t j = 0; j < nd.upper.size(); ++j) up.push_back({static_cast<int>(i), static_cast<int>(j)});
    refs.erase(refs.begin() + nd.position, refs.begin() + nd.position + a);
    refs.insert(refs.begin() + nd.position, up.begin(), up.end());
    mult.erase(mult.begin() + nd.position, mult.begin() + nd.position + a);
    mult.insert(mult.begin() + nd.position, nd.upper.begin(), nd.upper.end());
    max_frontier_ = std::max(max_frontier_, points(mult));
  }
  if (mult != outputs_) throw DomainError("final frontier does not match the declared outputs");
  for (std::size_t j = 0; j < refs.size(); ++j) follow(refs[j], {-1, static_cast<int>(j)}, mult[j]);
  std::size_t from_ports = inputs_.size(), to_ports = outputs_.size();
  for (const auto& nd : nodes_) {
    from_ports += nd.upper.size();
    to_ports += nd.lower.size();
  }
  if (edges_.size() != from_ports || edges_.size() != to_ports) throw DomainError("edge list has extra edges");
}

int PlanarDiagram::crossing_count() const {
  int c = 0;
  for (const auto& nd : nodes_)
    if (nd.kind == NodeKind::Crossing) c += nd.lower[0] * nd.lower[1];
  return c;
}

DiagramBuilder::DiagramBuilder(std::vector<int> inputs) : inputs_(inputs), mult_(std::move(inputs)) {
  for (std::size_t j = 0; j < mult_.size(); ++j) refs_.push_back({-1, static_cast<int>(j)});
}

DiagramBuilder& DiagramBuilder::add(Node node) {
  const int idx = static_cast<int>(nodes_.size());
  const int a = static_cast<int>(node.lower.size());
  if (node.position < 0 || node.position + a > static_cast<int>(refs_.size()))
    throw DomainError("builder: node position outside the frontier");
  for (int j = 0; j < a; ++j) {
    if (mult_[node.position + j] != node.lower[j]) throw DomainError("builder: lower port multiplicity mismatch");
    edges_.push_back({refs_[node.position + j], {idx, j}, node.lower[j]});
  }
  std::vector<PortRef> up;
  for (std::size_t j = 0; j < node.upper.size(); ++j) up.push_back({idx, static_cast<int>(j)});
  refs_.erase(refs_.begin() + node.position, refs_.begin() + node.position + a);
  refs_.insert(refs_.begin() + node.position, up.begin(), up.end());
  mult_.erase(mult_.begin() + node.position, mult_.begin() + node.position + a);
  mult_.insert(mult_.begin() + node.position, node.upper.begin(), node.upper.end());
  nodes_.push_back(std::move(node));
  return *this;
}

DiagramBuilder& DiagramBuilder::cup(int pos, const std::vector<int>& cables) {
  Node n;
  n.kind = NodeKind::Cup;
  n.position = pos;
  n.upper = cables;
  n.upper.insert(n.upper.end(), cables.rbegin(), cables.rend());
  return add(std::move(n));
}

DiagramBuilder& DiagramBuilder::cap(int pos, const std::vector<int>& cables) {
  Node n;
  n.kind = NodeKind::Cap;
  n.position = pos;
  n.lower = cables;
  n.lower.insert(n.lower.end(), cables.rbegin(), cables.rend());
  return add(std::move(n));
}

DiagramBuilder& DiagramBuilder::crossing(int pos, Over over) {
  if (pos < 0 || pos + 1 >= static_cast<int>(mult_.size())) throw DomainError("builder: crossing outside the frontier");
  Node n;
  n.kind = NodeKind::Crossing;
  n.position = pos;
  n.lower = {mult_[pos], mult_[pos + 1]};
  n.upper = {mult_[pos + 1], mult_[pos]};
  n.over = over;
  return add(std::move(n));
}

DiagramBuilder& DiagramBuilder::projector(int pos, const std::vector<int>& lower, const std::vector<int>& upper,
                                          int rotation) {
  Node n;
  n.kind = NodeKind::Projector;
  n.position = pos;
  n.lower = lower;
  n.upper = upper;
  n.rotation = rotation;
  return add(std::move(n));
}

DiagramBuilder& DiagramBuilder::box(int pos, const std::vector<int>& lower, const std::vector<int>& upper,
                                    const tl::Matching& m) {
  Node n;
  n.kind = NodeKind::Box;
  n.position = pos;
  n.lower = lower;
  n.upper = upper;
  n.box = m;
  return add(std::move(n));
}

PlanarDiagram DiagramBuilder::build() const {
  std::vector<Edge> edges = edges_;
  for (std::size_t j = 0; j < refs_.size(); ++j) edges.push_back({refs_[j], {-1, static_cast<int>(j)}, mult_[j]});
  return PlanarDiagram(inputs_, nodes_, std::move(edges), mult_);
}

}  // namespace cjp::skein
