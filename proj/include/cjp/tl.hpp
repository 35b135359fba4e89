#pragma once

// Temperley-Lieb diagrams, linear combinations of them, and Jones-Wenzl projectors.
//
// A Matching is a crossingless pairing of `top` points on the upper edge and
// `bottom` points on the lower edge of a box. Points are labelled 0..top-1 on
// top and top..top+bottom-1 on the bottom, both read left to right.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cjp/qring.hpp"

namespace cjp::tl {

class Matching {
 public:
  Matching() = default;
  /// Validates that `partner` is a fixed-point-free planar involution.
  Matching(int top, int bottom, std::vector<int> partner);

  static Matching identity(int n);
  /// The generator U_i of TL_n, 1 <= i <= n-1.
  static Matching generator(int n, int i);
  /// Parses "(1 4)(2 3)" with 1-based labels.
  static Matching parse(const std::string& text, int top, int bottom);

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int size() const { return top_ + bottom_; }
  /// Strand count of a square diagram; throws if top != bottom.
  int n() const;
  int partner(int p) const { return partner_[p]; }
  const std::vector<int>& pairing() const { return partner_; }
  bool is_top(int p) const { return p < top_; }
  int through_strands() const;
  bool is_identity() const;

  /// Position of a label going around the boundary: top left to right, then bottom right to left.
  int cyclic_position(int p) const { return p < top_ ? p : top_ + bottom_ - 1 - (p - top_); }
  int label_at(int cyc) const { return cyc < top_ ? cyc : top_ + (top_ + bottom_ - 1 - cyc); }

  /// Re-reads the pairing with the boundary labels shifted: the new box has `new_top`
  /// points on top and the new cyclic position c carries the old cyclic position c + r.
  Matching rotated(int r, int new_top) const;
  /// Side by side: this on the left, o on the right.
  Matching tensor(const Matching& o) const;
  /// Reflection in a horizontal line.
  Matching flipped() const;
  /// Reflection in a vertical line.
  Matching mirrored() const;

  std::string to_string() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int top_ = 0, bottom_ = 0;
  std::vector<int> partner_;
};

struct Composite {
  Matching matching;
  int loops = 0;
};

/// Stacks `upper` on top of `lower`; needs upper.bottom() == lower.top().
Composite compose(const Matching& upper, const Matching& lower);

/// All crossingless matchings with the given boundary, in lexicographic order of the pairing.
std::vector<Matching> enumerate_matchings(int top, int bottom);
/// The Catalan(n) basis of TL_n, cached.
const std::vector<Matching>& enumerate_basis(int n);
long long catalan(int n);

template <class Coeff>
class TLCombination {
 public:
  explicit TLCombination(int n = 0) : n_(n) {}
  static TLCombination identity(int n) {
    TLCombination x(n);
    x.add(Matching::identity(n), Coeff(1));
    return x;
  }
  static TLCombination basis(const Matching& d, Coeff c = Coeff(1)) {
    TLCombination x(d.n());
    x.add(d, std::move(c));
    return x;
  }

  int n() const { return n_; }
  const std::map<Matching, Coeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const Matching& d, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coeff coefficient(const Matching& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Coeff() : it->second;
  }

  TLCombination& operator+=(const TLCombination& o) {
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  friend TLCombination operator+(TLCombination a, const TLCombination& b) { return a += b; }
  friend TLCombination operator-(TLCombination a, const TLCombination& b) {
    for (const auto& [d, c] : b.terms_) a.add(d, -c);
    return a;
  }
  friend TLCombination operator*(const Coeff& s, const TLCombination& x) {
    TLCombination r(x.n_);
    for (const auto& [d, c] : x.terms_) r.add(d, s * c);
    return r;
  }
  friend bool operator==(const TLCombination& a, const TLCombination& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  /// Tensor with `extra` identity strands on the right.
  TLCombination with_strands(int extra) const {
    TLCombination r(n_ + extra);
    Matching id = Matching::identity(extra);
    for (const auto& [d, c] : terms_) r.add(extra ? d.tensor(id) : d, c);
    return r;
  }

 private:
  int n_;
  std::map<Matching, Coeff> terms_;
};

/// Product x*y: x stacked on top of y, loops evaluated to -q - q^-1.
template <class Coeff>
TLCombination<Coeff> tl_mul(const TLCombination<Coeff>& x, const TLCombination<Coeff>& y) {
  if (x.n() != y.n()) throw DomainError("tl_mul: strand counts differ");
  TLCombination<Coeff> r(x.n());
  std::vector<Coeff> loop_pow{Coeff(1)};
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Composite comp = compose(a, b);
      while (static_cast<int>(loop_pow.size()) <= comp.loops) loop_pow.push_back(loop_pow.back() * Coeff(loop_value()));
      r.add(comp.matching, ca * cb * loop_pow[comp.loops]);
    }
  }
  return r;
}

using TLElement = TLCombination<RatFunc>;
using TLPolyElement = TLCombination<HalfLaurent>;

/// [n]! times the n-th Jones-Wenzl projector; every coefficient is a Laurent polynomial. Cached.
const TLPolyElement& jw_numerators(int n);
/// The projector itself.
TLElement jones_wenzl(int n);
/// [n]! times the coefficient of d in JW_n.
HalfLaurent jw_numerator(const Matching& d);
RatFunc jw_coefficient(const Matching& d);

// Closed forms for projector coefficients on special diagram families.

/// Diagram with x through strands, a nest of y caps, then z+t through strands on top, and
/// x+z through strands, a nest of y cups, then t through strands on the bottom.
Matching rect_family(int x, int y, int z, int t);
/// [x+y choose y][t+y choose y][y]![x+y+z+t]!, the coefficient numerator on rect_family.
RatFunc kho_coeff_rect(int x, int y, int z, int t);
/// [x+y choose x]: the ratio gained by sliding a nest of y caps past x strands.
RatFunc kho_cupshift_ratio(int x, int y);

/// A cap-nest slide. `before` has x vertical strands at the left edge followed by a nest of
/// y caps; `after` moves the nest to the edge. P(before) = [x+y choose x] P(after).
struct SlideMove {
  Matching before, after;
  int x, y;  // strands passed, nest depth
};
/// Top-edge slide; nullopt unless the leftmost cap nest is preceded only by vertical strands.
std::optional<SlideMove> slide_top_caps(const Matching& d);
/// Bottom-edge version, obtained by flipping.
std::optional<SlideMove> slide_bottom_cups(const Matching& d);

}  // namespace cjp::tl
