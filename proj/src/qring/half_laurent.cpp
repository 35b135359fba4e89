#include <algorithm>
#include <functional>
#include <sstream>

#include "cjp/qring.hpp"

namespace cjp {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational frac(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

namespace {

bool all_integral(const std::vector<HalfLaurent::Term>& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& x) { return x.second.get_den() == 1; });
}

// Dense scratch buffer indexed by half-exponent offset.
template <class C>
std::vector<HalfLaurent::Term> collect(std::vector<C>& acc, int lo) {
  std::vector<HalfLaurent::Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (sgn(acc[i]) != 0) out.emplace_back(lo + static_cast<int>(i), Rational(acc[i]));
  return out;
}

}  // namespace

HalfLaurent::HalfLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

HalfLaurent::HalfLaurent(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

HalfLaurent HalfLaurent::monomial(const Rational& c, int half_exp) {
  HalfLaurent h;
  if (sgn(c) != 0) h.terms_.emplace_back(half_exp, c);
  return h;
}

HalfLaurent HalfLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  HalfLaurent h;
  for (auto& t : terms) {
    if (!h.terms_.empty() && h.terms_.back().first == t.first)
      h.terms_.back().second += t.second;
    else
      h.terms_.push_back(std::move(t));
    if (sgn(h.terms_.back().second) == 0) h.terms_.pop_back();
  }
  return h;
}

int HalfLaurent::max_half_exp() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.back().first;
}

int HalfLaurent::min_half_exp() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.front().first;
}

const Rational& HalfLaurent::leading_coeff() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.back().second;
}

Rational HalfLaurent::coeff(int half_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == half_exp) return it->second;
  return 0;
}

namespace {
Rational half(int e) {
  Rational r(e, 2);
  r.canonicalize();
  return r;
}
}  // namespace

Rational HalfLaurent::degree() const { return half(max_half_exp()); }
Rational HalfLaurent::min_degree() const { return half(min_half_exp()); }
int HalfLaurent::leading_sign() const { return sgn(leading_coeff()); }

HalfLaurent HalfLaurent::mirrored() const {
  HalfLaurent h;
  h.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) h.terms_.emplace_back(-it->first, it->second);
  return h;
}

HalfLaurent HalfLaurent::scaled(const Rational& c, int half_exp) const {
  HalfLaurent h;
  if (sgn(c) == 0) return h;
  h.terms_.reserve(terms_.size());
  for (const auto& [e, a] : terms_) h.terms_.emplace_back(e + half_exp, a * c);
  return h;
}

bool HalfLaurent::integral() const { return all_integral(terms_); }

void HalfLaurent::add_scaled(const HalfLaurent& x, const Rational& c, int half_exp) {
  if (x.is_zero() || sgn(c) == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + x.terms_.size());
  auto a = terms_.begin();
  auto b = x.terms_.begin();
  bool unit = (c == 1);
  while (a != terms_.end() || b != x.terms_.end()) {
    if (b == x.terms_.end() || (a != terms_.end() && a->first < b->first + half_exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first + half_exp < a->first) {
      out.emplace_back(b->first + half_exp, unit ? b->second : Rational(b->second * c));
      ++b;
    } else {
      if (unit)
        a->second += b->second;
      else
        a->second += b->second * c;
      if (sgn(a->second) != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  add_scaled(o, 1, 0);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  add_scaled(o, -1, 0);
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent h = *this;
  for (auto& t : h.terms_) t.second = -t.second;
  return h;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.scaled(a.terms_[0].second, a.terms_[0].first);
  if (b.is_monomial()) return a.scaled(b.terms_[0].second, b.terms_[0].first);
  int lo = a.min_half_exp() + b.min_half_exp();
  int hi = a.max_half_exp() + b.max_half_exp();
  HalfLaurent h;
  if (all_integral(a.terms_) && all_integral(b.terms_)) {
    std::vector<mpz_class> acc(hi - lo + 1);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
    h.terms_ = collect(acc, lo);
  } else {
    std::vector<mpq_class> acc(hi - lo + 1);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
    h.terms_ = collect(acc, lo);
  }
  return h;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  *this = *this * o;
  return *this;
}

std::optional<HalfLaurent> HalfLaurent::exact_div(const HalfLaurent& d) const {
  if (d.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (is_zero()) return HalfLaurent();
  if (d.is_monomial()) return scaled(1 / d.terms_[0].second, -d.terms_[0].first);
  const int dlo = d.min_half_exp(), dhi = d.max_half_exp();
  const int lo = min_half_exp(), hi = max_half_exp();
  const int qlo = lo - dlo;  // lowest possible quotient exponent
  if (hi - dhi < qlo) return std::nullopt;
  // Long division from the top on a dense remainder.
  std::vector<mpq_class> rem(hi - lo + 1);
  for (const auto& [e, c] : terms_) rem[e - lo] = c;
  std::vector<Term> quot;
  const Rational& lead = d.leading_coeff();
  for (int top = hi; top - dhi >= qlo; --top) {
    const mpq_class& r = rem[top - lo];
    if (sgn(r) == 0) continue;
    Rational qc = r / lead;
    int qe = top - dhi;
    for (const auto& [e, c] : d.terms_) rem[qe + e - lo] -= qc * c;
    quot.emplace_back(qe, std::move(qc));
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) return std::nullopt;
  std::reverse(quot.begin(), quot.end());
  HalfLaurent h;
  h.terms_ = std::move(quot);
  return h;
}

HalfLaurent HalfLaurent::divide_exact(const HalfLaurent& d) const {
  auto q = exact_div(d);
  if (!q) throw ArithmeticError("inexact division: (" + to_string() + ") / (" + d.to_string() + ")");
  return *q;
}

HalfLaurent HalfLaurent::pow(unsigned e) const {
  HalfLaurent r(1), b = *this;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

std::size_t HalfLaurent::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [e, c] : terms_) {
    h = h * 1000003U ^ std::hash<int>()(e);
    h = h * 1000003U ^ mpz_get_ui(c.get_num_mpz_t());
  }
  return h;
}

std::string HalfLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool show_coeff = (a != 1) || e == 0;
    if (show_coeff) os << a.get_str();
    if (e != 0) {
      if (show_coeff) os << "*";
      os << "q";
      if (e != 2) {
        if (e % 2 == 0)
          os << "^" << (e / 2 < 0 ? "(" + std::to_string(e / 2) + ")" : std::to_string(e / 2));
        else
          os << "^(" << e << "/2)";
      }
    }
  }
  return os.str();
}

namespace {

// Plain polynomial remainder in v = q^(1/2), coefficients low to high.
using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense to_dense(const HalfLaurent& h) {
  Dense p;
  if (h.is_zero()) return p;
  int lo = h.min_half_exp();
  p.resize(h.max_half_exp() - lo + 1);
  for (const auto& [e, c] : h.terms()) p[e - lo] = c;
  return p;
}

Dense rem(Dense a, const Dense& b) {
  const mpq_class& lead = b.back();
  while (a.size() >= b.size()) {
    mpq_class f = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

HalfLaurent gcd(const HalfLaurent& a, const HalfLaurent& b) {
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd(0, 0)");
  Dense x = to_dense(a), y = to_dense(b);
  while (!y.empty()) {
    Dense r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  // Strip the v^k factor and make monic.
  std::size_t start = 0;
  while (start < x.size() && sgn(x[start]) == 0) ++start;
  std::vector<HalfLaurent::Term> t;
  mpq_class lead = x.back();
  for (std::size_t i = start; i < x.size(); ++i)
    if (sgn(x[i]) != 0) t.emplace_back(static_cast<int>(i - start), x[i] / lead);
  return HalfLaurent::from_terms(std::move(t));
}

}  // namespace cjp
