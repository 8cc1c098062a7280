#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scatter {

/// Non-negative exact rational with a distinguished infinite value.
/// Always kept in lowest terms; comparisons never go through floating point.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) {
    if (num < 0 || den <= 0) throw std::invalid_argument("Rational needs num >= 0, den > 0");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }
  static constexpr Rational infinite() {
    Rational r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// "p/q", or "p" when q = 1, or "infinite".
  std::string to_string() const {
    if (infinite_) return "infinite";
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  double to_double() const noexcept {
    return infinite_ ? __builtin_inf() : static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace scatter
