#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plumbing/rational.hpp"

namespace plumbing {

/// Hirzebruch-Jung continued fraction [a1, ..., ak] = a1 - 1/(a2 - 1/(... - 1/ak)).
///
/// Construction rejects sequences where some proper tail [a_j, ..., a_k], j >= 2,
/// evaluates to zero, since the enclosing division would be undefined.
class HJExpansion {
 public:
  explicit HJExpansion(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw precondition_error("empty continued fraction");
    value_ = evaluate();
  }

  const std::vector<BigInt>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& value() const noexcept { return value_; }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += entries_[i].str();
    }
    return out + "]";
  }

  friend bool operator==(const HJExpansion& a, const HJExpansion& b) { return a.entries_ == b.entries_; }

 private:
  Rational evaluate() const {
    Rational tail(entries_.back());
    for (std::size_t i = entries_.size() - 1; i-- > 0;) {
      if (tail.is_zero())
        throw precondition_error("continued fraction tail starting at entry " + std::to_string(i + 2) +
                                 " evaluates to zero");
      tail = Rational(entries_[i]) - tail.reciprocal();
    }
    return tail;
  }

  std::vector<BigInt> entries_;
  Rational value_;
};

inline Rational hj_value(const HJExpansion& x) { return x.value(); }

/// Canonical expansion of a nonzero rational: a1 = floor(r), continue on -1/(r - a1)
/// until the remainder is an integer. For r < -1 every entry is <= -2; for -1 < r < 0
/// the expansion is [-1, ...] with the remaining entries <= -2.
inline HJExpansion hj_expand(const Rational& r) {
  if (r.is_zero()) throw precondition_error("zero has no Hirzebruch-Jung expansion");
  std::vector<BigInt> entries;
  Rational rest = r;
  for (;;) {
    BigInt a = rest.floor();
    entries.push_back(a);
    const Rational frac = rest - Rational(a);
    if (frac.is_zero()) break;
    // frac in (0, 1) so the new remainder is < -1 and its denominator is smaller.
    rest = -frac.reciprocal();
  }
  return HJExpansion(std::move(entries));
}

}  // namespace plumbing
