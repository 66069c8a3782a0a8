#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace affgrass {

// An integer or +infinity. Infinity compares above every finite value and
// absorbs addition.
class Valuation {
public:
  constexpr Valuation(std::int64_t v = 0) : value_(v), infinite_(false) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend constexpr std::strong_ordering operator<=>(const Valuation& a,
                                                    const Valuation& b) {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_)
      return infinity();
    return Valuation(a.value_ + b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.infinite_)
      return os << "inf";
    return os << v.value_;
  }

private:
  std::int64_t value_;
  bool infinite_;
};

} // namespace affgrass
