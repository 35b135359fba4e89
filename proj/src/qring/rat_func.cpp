#include "cjp/qring.hpp"

namespace cjp {

namespace {
// Beyond this many denominator terms a sum is reduced by gcd before continuing.
constexpr std::size_t kReduceThreshold = 48;
}  // namespace

RatFunc::RatFunc(HalfLaurent num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(HalfLaurent num, HalfLaurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = HalfLaurent(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms()[0];
    num_ = num_.scaled(1 / c, -e);
    den_ = HalfLaurent(1);
    return;
  }
  if (auto q = num_.exact_div(den_)) {
    num_ = std::move(*q);
    den_ = HalfLaurent(1);
  }
}

Rational RatFunc::degree() const {
  if (is_zero()) throw DomainError("degree of zero");
  return num_.degree() - den_.degree();
}

int RatFunc::leading_sign() const {
  if (is_zero()) throw DomainError("leading sign of zero");
  return num_.leading_sign() * den_.leading_sign();
}

RatFunc RatFunc::reduced() const {
  if (is_zero() || den_ == HalfLaurent(1)) return *this;
  HalfLaurent g = gcd(num_, den_);
  RatFunc r;
  r.num_ = num_.divide_exact(g);
  r.den_ = den_.divide_exact(g);
  r.normalize();
  return r;
}

std::optional<HalfLaurent> RatFunc::to_laurent() const {
  if (den_ == HalfLaurent(1)) return num_;
  return num_.exact_div(den_);
}

HalfLaurent RatFunc::laurent_or_throw() const {
  auto l = to_laurent();
  if (!l) throw ArithmeticError("not a Laurent polynomial: " + to_string());
  return *l;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  if (den_.size() > kReduceThreshold) *this = reduced();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  if (den_.size() > kReduceThreshold) *this = reduced();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  if (den_.size() > kReduceThreshold) *this = reduced();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (den_ == HalfLaurent(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cjp
