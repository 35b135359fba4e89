#include <algorithm>
#include <mutex>
#include <sstream>

#include "cjp/tl.hpp"

namespace cjp::tl {

Matching::Matching(int top, int bottom, std::vector<int> partner)
    : top_(top), bottom_(bottom), partner_(std::move(partner)) {
  const int n = top_ + bottom_;
  if (top_ < 0 || bottom_ < 0 || static_cast<int>(partner_.size()) != n)
    throw DomainError("matching: pairing length does not match the boundary");
  for (int p = 0; p < n; ++p) {
    int q = partner_[p];
    if (q < 0 || q >= n || q == p || partner_[q] != p) throw DomainError("matching: not a fixed-point-free involution");
  }
  // Planarity: the pairs must nest when read around the boundary.
  std::vector<int> stack;
  for (int c = 0; c < n; ++c) {
    int p = label_at(c);
    int cq = cyclic_position(partner_[p]);
    if (cq > c) {
      stack.push_back(cq);
    } else {
      if (stack.empty() || stack.back() != c) throw DomainError("matching: pairs interleave");
      stack.pop_back();
    }
  }
}

Matching Matching::identity(int n) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = n + i;
    p[n + i] = i;
  }
  return Matching(n, n, std::move(p));
}

Matching Matching::generator(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("generator index out of range");
  Matching m = identity(n);
  auto& p = m.partner_;
  int a = i - 1, b = i;
  p[a] = b;
  p[b] = a;
  p[n + a] = n + b;
  p[n + b] = n + a;
  return m;
}

Matching Matching::parse(const std::string& text, int top, int bottom) {
  std::vector<int> p(top + bottom, -1);
  std::istringstream in(text);
  char ch;
  while (in >> ch) {
    int a, b;
    if (ch != '(' || !(in >> a >> b) || !(in >> ch) || ch != ')')
      throw DomainError("matching text must look like (1 4)(2 3)");
    --a;
    --b;
    if (a < 0 || b < 0 || a >= top + bottom || b >= top + bottom || p[a] != -1 || p[b] != -1)
      throw DomainError("matching text has a bad or repeated label");
    p[a] = b;
    p[b] = a;
  }
  return Matching(top, bottom, std::move(p));
}

int Matching::n() const {
  if (top_ != bottom_) throw DomainError("matching is not square");
  return top_;
}

int Matching::through_strands() const {
  int t = 0;
  for (int p = 0; p < top_; ++p) t += partner_[p] >= top_;
  return t;
}

bool Matching::is_identity() const { return top_ == bottom_ && *this == identity(top_); }

Matching Matching::rotated(int r, int new_top) const {
  const int n = size();
  if (new_top < 0 || new_top > n) throw DomainError("rotation: bad top size");
  Matching out;
  out.top_ = new_top;
  out.bottom_ = n - new_top;
  out.partner_.assign(n, -1);
  r = ((r % n) + n) % n;
  for (int c = 0; c < n; ++c) {
    int old_c = (c + r) % n;
    int old_partner_c = cyclic_position(partner_[label_at(old_c)]);
    int new_partner_c = ((old_partner_c - r) % n + n) % n;
    out.partner_[out.label_at(c)] = out.label_at(new_partner_c);
  }
  return out;
}

Matching Matching::tensor(const Matching& o) const {
  const int t = top_ + o.top_, b = bottom_ + o.bottom_;
  std::vector<int> p(t + b);
  auto map_self = [&](int x) { return x < top_ ? x : t + (x - top_); };
  auto map_other = [&](int x) { return x < o.top_ ? top_ + x : t + bottom_ + (x - o.top_); };
  for (int x = 0; x < size(); ++x) p[map_self(x)] = map_self(partner_[x]);
  for (int x = 0; x < o.size(); ++x) p[map_other(x)] = map_other(o.partner_[x]);
  return Matching(t, b, std::move(p));
}

Matching Matching::flipped() const {
  auto f = [&](int x) { return x < top_ ? bottom_ + x : x - top_; };
  std::vector<int> p(size());
  for (int x = 0; x < size(); ++x) p[f(x)] = f(partner_[x]);
  return Matching(bottom_, top_, std::move(p));
}

Matching Matching::mirrored() const {
  auto f = [&](int x) { return x < top_ ? top_ - 1 - x : top_ + (bottom_ - 1 - (x - top_)); };
  std::vector<int> p(size());
  for (int x = 0; x < size(); ++x) p[f(x)] = f(partner_[x]);
  return Matching(top_, bottom_, std::move(p));
}

std::string Matching::to_string() const {
  std::ostringstream os;
  for (int p = 0; p < size(); ++p)
    if (partner_[p] > p) os << "(" << p + 1 << " " << partner_[p] + 1 << ")";
  return os.str();
}

Composite compose(const Matching& upper, const Matching& lower) {
  if (upper.bottom() != lower.top()) throw DomainError("compose: boundaries do not match");
  const int top = upper.top(), mid = upper.bottom(), bot = lower.bottom();
  // Result labels: top points come from upper, bottom points from lower.
  std::vector<int> p(top + bot, -1);
  std::vector<char> mid_seen(mid, 0);
  // Walk from an outer endpoint; side 0 = in `upper`, side 1 = in `lower`.
  auto walk = [&](int side, int label) {
    while (true) {
      if (side == 0) {
        int q = upper.partner(label);
        if (q < top) return q;  // top endpoint of the result
        int m = q - top;
        mid_seen[m] = 1;
        side = 1;
        label = m;  // top point m of lower
      } else {
        int q = lower.partner(label);
        if (q >= mid) return top + (q - mid);
        mid_seen[q] = 1;
        side = 0;
        label = top + q;  // bottom point q of upper
      }
    }
  };
  for (int a = 0; a < top; ++a)
    if (p[a] == -1) {
      int b = walk(0, a);
      p[a] = b;
      p[b] = a;
    }
  for (int a = 0; a < bot; ++a)
    if (p[top + a] == -1) {
      int b = walk(1, mid + a);
      p[top + a] = b;
      p[b] = top + a;
    }
  int loops = 0;
  for (int m = 0; m < mid; ++m) {
    if (mid_seen[m]) continue;
    ++loops;
    int label = m;
    do {  // alternate lower then upper around the closed loop
      mid_seen[label] = 1;
      int q = lower.partner(label);
      mid_seen[q] = 1;
      label = upper.partner(top + q) - top;
    } while (!mid_seen[label]);
  }
  return {Matching(top, bot, std::move(p)), loops};
}

namespace {

void noncrossing(int lo, int hi, std::vector<int>& cyc, std::vector<std::vector<int>>& out,
                 std::vector<std::pair<int, int>>& pending) {
  // Pair the points lo..hi-1 (cyclic positions) in all crossingless ways.
  if (lo >= hi) {
    if (pending.empty()) {
      out.push_back(cyc);
      return;
    }
    auto [a, b] = pending.back();
    pending.pop_back();
    noncrossing(a, b, cyc, out, pending);
    pending.emplace_back(a, b);
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    cyc[lo] = j;
    cyc[j] = lo;
    pending.emplace_back(j + 1, hi);
    noncrossing(lo + 1, j, cyc, out, pending);
    pending.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int top, int bottom) {
  const int n = top + bottom;
  if (top < 0 || bottom < 0) throw DomainError("negative boundary size");
  if (n % 2) return {};
  std::vector<std::vector<int>> cycs;
  std::vector<int> cyc(n, -1);
  std::vector<std::pair<int, int>> pending;
  noncrossing(0, n, cyc, cycs, pending);
  std::vector<Matching> out;
  out.reserve(cycs.size());
  for (const auto& c : cycs) {
    std::vector<int> p(n);
    for (int pos = 0; pos < n; ++pos) {
      int lab = pos < top ? pos : top + (n - 1 - pos);
      int qpos = c[pos];
      p[lab] = qpos < top ? qpos : top + (n - 1 - qpos);
    }
    out.emplace_back(top, bottom, std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

const std::vector<Matching>& enumerate_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Matching>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_matchings(n, n)).first;
  return it->second;
}

}  // namespace cjp::tl
