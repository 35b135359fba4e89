#pragma once

// Sums of fractions whose denominators are products of quantum integers [j].
// Keeping denominators factored makes common denominators cheap and exact.

#include <algorithm>
#include <vector>

#include "cjp/qring.hpp"

namespace cjp::pretzel::detail {

/// exps[j] is the power of [j] in a denominator.
using DenExps = std::vector<int>;

inline void add_qint(DenExps& e, int j, int times = 1) {
  if (j < 1) throw DomainError("quantum integer index must be positive");
  if (static_cast<int>(e.size()) <= j) e.resize(j + 1, 0);
  e[j] += times;
}

inline void add_fact(DenExps& e, int a, int times = 1) {
  for (int j = 1; j <= a; ++j) add_qint(e, j, times);
}

inline HalfLaurent den_value(const DenExps& e) {
  HalfLaurent p(1);
  for (std::size_t j = 1; j < e.size(); ++j)
    if (e[j] > 0) p *= qint(static_cast<int>(j)).pow(static_cast<unsigned>(e[j]));
  return p;
}

class FactoredSum {
 public:
  void add(HalfLaurent num, DenExps den) {
    if (num.is_zero()) return;
    std::size_t size = std::max(den.size(), exps_.size());
    den.resize(size, 0);
    exps_.resize(size, 0);
    DenExps up_self(size, 0), up_other(size, 0);
    for (std::size_t j = 0; j < size; ++j) {
      int l = std::max(den[j], exps_[j]);
      up_self[j] = l - exps_[j];
      up_other[j] = l - den[j];
      exps_[j] = l;
    }
    if (!num_.is_zero()) num_ *= den_value(up_self);
    num_ += num * den_value(up_other);
  }

  void add(const FactoredSum& o) { add(o.num_, o.exps_); }

  FactoredSum times(const HalfLaurent& num, const DenExps& den) const {
    FactoredSum r;
    r.num_ = num_ * num;
    r.exps_ = exps_;
    for (std::size_t j = 1; j < den.size(); ++j)
      if (den[j]) add_qint(r.exps_, static_cast<int>(j), den[j]);
    return r;
  }

  bool is_zero() const { return num_.is_zero(); }
  const HalfLaurent& numerator() const { return num_; }
  const DenExps& exps() const { return exps_; }
  RatFunc value() const { return RatFunc(num_, den_value(exps_)); }

 private:
  HalfLaurent num_;
  DenExps exps_;
};

}  // namespace cjp::pretzel::detail
