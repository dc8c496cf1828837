#pragma once

#include <compare>
#include <string>

namespace sbm {

/// Excitation number λ = m + Σn. For odd spin counts λ is half-integer, so the
/// value is stored doubled.
class Excitation {
 public:
  constexpr Excitation() = default;

  static constexpr Excitation from_twice(int twice) { return Excitation(twice); }
  static constexpr Excitation integer(int value) { return Excitation(2 * value); }
  /// The zero-excitation-above-vacuum block λ = -N/2.
  static constexpr Excitation lowest(int n_spins) { return Excitation(-n_spins); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr Excitation next() const { return Excitation(twice_ + 2); }
  constexpr Excitation prev() const { return Excitation(twice_ - 2); }
  constexpr Excitation shifted(int steps) const { return Excitation(twice_ + 2 * steps); }

  /// Number of unit steps from `other` up to this one.
  constexpr int steps_above(Excitation other) const { return (twice_ - other.twice_) / 2; }

  /// "2", "-1", "-3/2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr auto operator<=>(const Excitation&) const = default;

 private:
  constexpr explicit Excitation(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace sbm
