#pragma once

// Decorated planar diagrams and a brute-force Kauffman bracket evaluator.
//
// A diagram is a list of nodes in sweep order (bottom to top). The sweep keeps a
// frontier: a left-to-right list of cables, each carrying some number of parallel
// strands. A node consumes a run of frontier cables starting at `position` through
// its lower ports and puts its upper ports in their place. Edges record which
// upper port feeds which lower port; they are checked against the sweep.

#include <optional>
#include <span>
#include <vector>

#include "cjp/qring.hpp"
#include "cjp/tl.hpp"

namespace cjp::skein {

enum class NodeKind { Cup, Cap, Crossing, Projector, Box };

/// Which strand of a crossing is on top.
enum class Over {
  LeftToRight,  // the strand entering at lower-left and leaving at upper-right
  RightToLeft,  // the strand entering at lower-right and leaving at upper-left
};

struct Node {
  NodeKind kind = NodeKind::Box;
  int position = 0;
  std::vector<int> lower, upper;  // cable multiplicities, left to right
  Over over = Over::LeftToRight;
  int rotation = 0;  // projectors: cyclic shift of the boundary labels
  tl::Matching box;  // boxes: top = sum(upper), bottom = sum(lower)

  int lower_points() const;
  int upper_points() const;
  /// Projector width (half the boundary size).
  int width() const { return (lower_points() + upper_points()) / 2; }
};

struct PortRef {
  int node = -1;  // -1 is the diagram boundary
  int port = 0;
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct Edge {
  PortRef from;  // an upper port (or a boundary input)
  PortRef to;    // a lower port (or a boundary output)
  int multiplicity = 1;
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Validates ports, multiplicities and that the edges agree with the sweep.
  PlanarDiagram(std::vector<int> inputs, std::vector<Node> nodes, std::vector<Edge> edges,
                std::vector<int> outputs);

  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool closed() const { return inputs_.empty() && outputs_.empty(); }
  /// Largest number of frontier strands during the sweep.
  int max_frontier() const { return max_frontier_; }
  int crossing_count() const;

 private:
  std::vector<int> inputs_, outputs_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  int max_frontier_ = 0;
};

/// Appends nodes in sweep order and wires edges automatically.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(std::vector<int> inputs = {});

  /// Nested cups; the new cables are `cables` followed by its reverse.
  DiagramBuilder& cup(int pos, const std::vector<int>& cables);
  /// Nested caps closing `cables` followed by its reverse.
  DiagramBuilder& cap(int pos, const std::vector<int>& cables);
  /// Crossing of the two cables at pos, pos+1.
  DiagramBuilder& crossing(int pos, Over over);
  DiagramBuilder& projector(int pos, const std::vector<int>& lower, const std::vector<int>& upper, int rotation = 0);
  DiagramBuilder& box(int pos, const std::vector<int>& lower, const std::vector<int>& upper, const tl::Matching& m);

  const std::vector<int>& frontier() const { return mult_; }
  /// The remaining frontier becomes the diagram's outputs.
  PlanarDiagram build() const;

 private:
  DiagramBuilder& add(Node node);
  std::vector<int> inputs_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<PortRef> refs_;
  std::vector<int> mult_;
};

/// Kauffman bracket of a closed diagram with loop value -q - q^-1, exact.
RatFunc bracket(const PlanarDiagram& d);

/// Bracket split as num / prod [w_i]! over the projectors (w_i listed); num is exact.
struct BracketParts {
  HalfLaurent numerator;
  std::vector<int> projector_widths;
};
BracketParts bracket_parts(const PlanarDiagram& d);

/// Number of link components of a closed diagram whose edges all carry one strand.
int component_count(const PlanarDiagram& d);
/// Writhe of a closed single-strand diagram; throws if it has several components.
int writhe(const PlanarDiagram& d);

// ---- builders ----

/// Ways of drawing the same pretzel link, used for invariance checks.
struct PretzelEncoding {
  int rotate = 0;        // start the regions at w[rotate]
  bool reversed = false;  // turn the picture upside down (regions in reverse order)
  bool snake = false;     // add a cancelling cup/cap zigzag on the first cable
};

/// The pretzel diagram with every cable n-fold and a width-n projector on each component.
/// A single region is allowed (it is an unknot or a two-component unlink).
PlanarDiagram cable_pretzel(std::span<const int> w, int n, PretzelEncoding enc = {});
/// Writhe of the uncabled pretzel; throws DomainError for links with several components.
int pretzel_writhe(std::span<const int> w);
int pretzel_components(std::span<const int> w);
/// A width-n projector closed into a loop.
PlanarDiagram projector_loop(int n);
/// Theta network: three projectors of widths a, b, c joined at two vertices.
PlanarDiagram theta_network(int a, int b, int c);

// ---- fused regions ----
//
// After fusion every twist region becomes a horizontal picture between two n-cables
// (top cable = strands 0..n-1, bottom cable = n..2n-1). Drawn sideways, a region is a
// box with 2n strands entering from the left and 2n leaving on the right; `Matching`
// stores it with the right side on top.

/// Region with channel k: the outer n-k strands of each cable pass straight through and the
/// inner 2k strands meet a rotated copy of the basis element d in B_{2k}.
tl::Matching fused_region(int n, int k, const tl::Matching& d);

/// Closed network tr(T_0(k0) . F . X . F) with F = JW_n (x) JW_n and `loops` extra free circles.
PlanarDiagram fused_closure(int n, int k0, const tl::Matching& x, int loops = 0);
/// The tight closure: X = fused_region(n, k0, identity).
PlanarDiagram build_script_T(int n, int k0);

}  // namespace cjp::skein
