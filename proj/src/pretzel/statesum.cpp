#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "cjp/pretzel.hpp"
#include "factored.hpp"

namespace cjp::pretzel {

namespace detail {
void enumerate_channel_public(int m, int n, Expansion mode, const std::vector<int>& k,
                              const std::function<void(const FusionState&, const Middle&)>& visit);
}  // namespace detail

using detail::add_fact;
using detail::add_qint;
using detail::DenExps;
using detail::FactoredSum;

PretzelSpec::PretzelSpec(std::vector<int> twists) : w(std::move(twists)) {
  if (w.size() < 2) throw DomainError("a pretzel needs at least two twist regions");
}

PretzelSpec PretzelSpec::parse(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument(item);
      item = item.substr(b, e - b + 1);
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      w.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("bad twist list '" + text + "'");
    }
  }
  return PretzelSpec(std::move(w));
}

int PretzelSpec::components() const { return skein::pretzel_components(w); }
int PretzelSpec::writhe() const { return skein::pretzel_writhe(w); }

std::string PretzelSpec::to_string() const {
  std::ostringstream os;
  os << "P(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

namespace {

void check_channels(int m, int n, std::span<const int> k) {
  if (static_cast<int>(k.size()) != m + 1) throw DomainError("channel vector has the wrong length");
  for (int x : k)
    if (x < 0 || x > n) throw DomainError("channel out of range");
}

// [2k+1]/theta(n,n,2k) = (-1)^(n+k) [2k+1]! [n]!^2 / ([n+k+1]! [n-k]! [k]!^2)
void fusion_factor(int n, int k, HalfLaurent& num, DenExps& den) {
  HalfLaurent f = qfact(2 * k + 1) * qfact(n) * qfact(n);
  if ((n + k) % 2) f = -f;
  num *= f;
  add_fact(den, n + k + 1);
  add_fact(den, n - k);
  add_fact(den, k, 2);
}

void fusion_parts(const PretzelSpec& spec, int n, std::span<const int> k, int offset, HalfLaurent& num, DenExps& den) {
  check_channels(spec.m(), n, k);
  for (int i = 0; i <= spec.m(); ++i) {
    fusion_factor(n, k[i], num, den);
    num *= twist_coeff(spec.w[i], k[i], n);
    if (offset) num = num.scaled(1, offset * spec.w[i]);
  }
}

// Coefficient of a state apart from the fusion factor.
void expansion_parts(int n, const FusionState& s, HalfLaurent& num, DenExps& den) {
  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    num *= tl::jw_numerator(s.centers[i]);
    add_fact(den, 2 * s.k[i + 1]);
  }
  for (const Interface& f : s.interfaces) {
    num *= tl::jw_numerator(f.top) * tl::jw_numerator(f.bottom);
    add_fact(den, n);
    add_fact(den, n - f.circles);
    if (f.circles > 0) {
      // removing c circles: (-1)^c [n+1]/[n+1-c]
      num *= qint(n + 1);
      if (f.circles % 2) num = -num;
      add_qint(den, n + 1 - f.circles);
    }
  }
}

struct ClosureValue {
  HalfLaurent num;
  DenExps den;
};

const ClosureValue& closure_value(int n, int k0, const tl::Matching& x) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, ClosureValue> cache;
  auto key = std::make_tuple(n, k0, x.pairing());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  skein::BracketParts parts = skein::bracket_parts(skein::fused_closure(n, k0, x, 0));
  ClosureValue v{std::move(parts.numerator), {}};
  for (int w : parts.projector_widths) add_fact(v.den, w);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

// Sum over states with channel vector k of (expansion coefficient) <T>, independent of w.
const FactoredSum& reduced_channel_sum(int m, int n, Expansion mode, const std::vector<int>& k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, std::vector<int>>, FactoredSum> cache;
  auto key = std::make_tuple(m, n, static_cast<int>(mode), k);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Group the states by their middle diagram first, so each closure is evaluated once.
  std::map<std::vector<int>, std::pair<tl::Matching, FactoredSum>> by_middle;
  detail::enumerate_channel_public(m, n, mode, k, [&](const FusionState& s, const Middle& mid) {
    HalfLaurent num(1);
    DenExps den;
    expansion_parts(n, s, num, den);
    if (mid.loops) num *= loop_value().pow(static_cast<unsigned>(mid.loops));
    auto& slot = by_middle[mid.x.pairing()];
    slot.first = mid.x;
    slot.second.add(std::move(num), std::move(den));
  });
  FactoredSum total;
  for (const auto& [pairing, entry] : by_middle) {
    if (entry.second.is_zero()) continue;
    const ClosureValue& t = closure_value(n, k[0], entry.first);
    total.add(entry.second.times(t.num, t.den));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(total)).first->second;
}

}  // namespace

RatFunc fusion_coeff(const PretzelSpec& spec, int n, std::span<const int> k, int twist_half_offset) {
  HalfLaurent num(1);
  DenExps den;
  fusion_parts(spec, n, k, twist_half_offset, num, den);
  return RatFunc(num, detail::den_value(den));
}

RatFunc state_coeff(const PretzelSpec& spec, int n, const FusionState& s) {
  HalfLaurent num(1);
  DenExps den;
  fusion_parts(spec, n, s.k, 0, num, den);
  expansion_parts(n, s, num, den);
  return RatFunc(num, detail::den_value(den));
}

skein::PlanarDiagram build_T_k_sigma(int n, const FusionState& s) {
  Middle mid = expand_middle(n, s);
  return skein::fused_closure(n, s.k[0], mid.x, mid.loops);
}

RatFunc state_bracket(int n, const FusionState& s) { return skein::bracket(build_T_k_sigma(n, s)); }

RatFunc channel_sum(const PretzelSpec& spec, int n, std::span<const int> k, const StateSumOptions& opts) {
  check_channels(spec.m(), n, k);
  const FactoredSum& s = reduced_channel_sum(spec.m(), n, opts.mode, std::vector<int>(k.begin(), k.end()));
  HalfLaurent num(1);
  DenExps den;
  fusion_parts(spec, n, k, opts.twist_half_offset, num, den);
  return s.times(num, den).value();
}

HalfLaurent kauffman_statesum(const PretzelSpec& spec, int n, const StateSumOptions& opts) {
  if (n < 1) throw DomainError("cabling must be at least 1");
  const int m = spec.m();
  FactoredSum total;
  std::vector<int> k(m + 1, 0);
  while (true) {
    const FactoredSum& s = reduced_channel_sum(m, n, opts.mode, k);
    if (!s.is_zero()) {
      HalfLaurent num(1);
      DenExps den;
      fusion_parts(spec, n, k, opts.twist_half_offset, num, den);
      total.add(s.times(num, den));
    }
    int i = m;
    while (i >= 0 && k[i] == n) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return total.numerator().divide_exact(detail::den_value(total.exps()));
}

HalfLaurent kauffman_oracle(std::span<const int> w, int n) {
  return skein::bracket(skein::cable_pretzel(w, n)).laurent_or_throw();
}

HalfLaurent framing_factor(int writhe, int n) {
  int half = writhe * (n * n + 2 * n);
  int sign = (n % 2 != 0 && half % 2 != 0) ? -1 : 1;
  return HalfLaurent::monomial(sign, half);
}

HalfLaurent colored_jones_statesum(const PretzelSpec& spec, int N, const StateSumOptions& opts) {
  if (N < 1) throw DomainError("color must be at least 1");
  if (!spec.is_knot()) throw DomainError(spec.to_string() + " is a link; the colored Jones here is for knots");
  const int n = N - 1;
  if (n == 0) return HalfLaurent(1);
  return framing_factor(spec.writhe(), n) * kauffman_statesum(spec, n, opts);
}

HalfLaurent colored_jones_bracket(std::span<const int> w, int N) {
  if (N < 1) throw DomainError("color must be at least 1");
  const int n = N - 1;
  if (n == 0) return HalfLaurent(1);
  return framing_factor(skein::pretzel_writhe(w), n) * kauffman_oracle(w, n);
}

RatFunc tight_leading_product(const PretzelSpec& spec, int n, std::span<const int> k) {
  check_channels(spec.m(), n, k);
  int sum = 0;
  for (int i = 1; i <= spec.m(); ++i) sum += k[i];
  if (k[0] != sum) throw DomainError("channel vector is not tight");
  HalfLaurent num(1);
  DenExps den;
  fusion_parts(spec, n, k, 0, num, den);
  int partial = 0;
  for (int i = 1; i < spec.m(); ++i) {
    partial += k[i];
    int after = partial + k[i + 1];
    if (after > n) return RatFunc();
    // ([n-K_i]! [n-k_{i+1}]! / ([n-K_{i+1}]! [n]!))^2
    HalfLaurent f = qfact(n - partial) * qfact(n - k[i + 1]);
    num *= f * f;
    add_fact(den, n - after, 2);
    add_fact(den, n, 2);
  }
  return RatFunc(num, detail::den_value(den));
}

RatFunc tight_leading_term(const PretzelSpec& spec, int n, std::span<const int> k) {
  return tight_leading_product(spec, n, k) * skein::bracket(skein::build_script_T(n, k[0]));
}

}  // namespace cjp::pretzel
