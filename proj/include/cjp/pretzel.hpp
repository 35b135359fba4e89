#pragma once

// Colored Jones polynomials of pretzel links by fusion: the state sum over
// fusion channels k and projector expansions sigma, and the matching bracket oracle.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cjp/qring.hpp"
#include "cjp/skein.hpp"
#include "cjp/tl.hpp"

namespace cjp::pretzel {

/// P(w_0, ..., w_m) with m >= 1.
struct PretzelSpec {
  std::vector<int> w;

  explicit PretzelSpec(std::vector<int> twists);
  /// Parses "-5,4,3".
  static PretzelSpec parse(const std::string& text);

  int m() const { return static_cast<int>(w.size()) - 1; }
  int components() const;
  bool is_knot() const { return components() == 1; }
  int writhe() const;  // throws DomainError for links
  std::string to_string() const;
};

/// Choices made where two fused regions meet: the top projector expands to `top`;
/// `circles` strands of the bottom projector are traced off (pruned expansion only)
/// and the rest expands to `bottom`.
struct Interface {
  tl::Matching top;
  int circles = 0;
  bool traced_high = true;  // traced strands are the last ones of the bottom cable
  tl::Matching bottom;
};

enum class Expansion {
  Pruned,   // drop terms that cap a projector, remove traced circles in closed form
  Generic,  // expand every interface projector fully, no shortcuts
};

struct FusionState {
  std::vector<int> k;                  // k_0 .. k_m
  std::vector<tl::Matching> centers;   // d_1 .. d_m, d_i in B_{2 k_i}
  std::vector<Interface> interfaces;   // between regions i and i+1, 1 <= i < m
  Expansion mode = Expansion::Pruned;

  bool tight() const;
  std::string to_string() const;
};

/// The fused chain T_1 ... T_m with the interface choices substituted.
struct Middle {
  tl::Matching x;
  int loops = 0;  // free circles, already net of the traced ones
};
Middle expand_middle(int n, const FusionState& s);

/// Region admissibility: no arc of fused_region(n, k, d) returns to the cable it came from.
bool region_admissible(int n, int k, const tl::Matching& d);

/// Calls `visit` for every state in a fixed deterministic order.
void for_each_fusion_state(int m, int n, Expansion mode,
                           const std::function<void(const FusionState&, const Middle&)>& visit);
std::vector<FusionState> enumerate_fusion_states(const PretzelSpec& spec, int n, Expansion mode);

struct StateSumOptions {
  Expansion mode = Expansion::Pruned;
  /// Shifts every half-twist eigenvalue by this many half-powers of q. Only for testing
  /// that the verification suite notices a wrong twist coefficient.
  int twist_half_offset = 0;
};

/// prod_i [2k_i+1]/theta(n,n,2k_i) U(w_i, k_i).
RatFunc fusion_coeff(const PretzelSpec& spec, int n, std::span<const int> k, int twist_half_offset = 0);
/// The coefficient G_{k,sigma} of a single state.
RatFunc state_coeff(const PretzelSpec& spec, int n, const FusionState& s);
/// The closed network <T^n_{k,sigma}> of a single state.
skein::PlanarDiagram build_T_k_sigma(int n, const FusionState& s);
RatFunc state_bracket(int n, const FusionState& s);

/// <L^n> by the state sum.
HalfLaurent kauffman_statesum(const PretzelSpec& spec, int n, const StateSumOptions& opts = {});
/// <L^n> by direct evaluation of the cabled diagram.
HalfLaurent kauffman_oracle(std::span<const int> w, int n);

/// ((-1)^n q^(1/2))^(writhe (n^2 + 2n)).
HalfLaurent framing_factor(int writhe, int n);
/// Unreduced colored Jones polynomial, color N = n + 1 >= 1.
HalfLaurent colored_jones_statesum(const PretzelSpec& spec, int N, const StateSumOptions& opts = {});
HalfLaurent colored_jones_bracket(std::span<const int> w, int N);

/// The tight leading product without the closing network:
/// prod [2k_i+1]/theta U(w_i,k_i) * prod_{i<m} ([n-K_i]! [n-k_{i+1}]! / ([n-K_{i+1}]! [n]!))^2
/// with K_i = k_1 + ... + k_i. Requires k_0 = K_m.
RatFunc tight_leading_product(const PretzelSpec& spec, int n, std::span<const int> k);
/// The same times <T_{k_0}>.
RatFunc tight_leading_term(const PretzelSpec& spec, int n, std::span<const int> k);

/// Sum of G <T> over the states sharing channel vector k.
RatFunc channel_sum(const PretzelSpec& spec, int n, std::span<const int> k, const StateSumOptions& opts = {});

}  // namespace cjp::pretzel
