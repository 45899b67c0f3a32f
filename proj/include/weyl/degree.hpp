#pragma once

#include <compare>
#include <optional>
#include <string>

namespace weyl {

// Total degree of a polynomial or order of an operator. The zero element has
// no degree; it behaves like -infinity under +, max and comparison.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree none() { return Degree(); }

  constexpr bool is_none() const { return !value_.has_value(); }
  int value() const { return value_.value(); }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_none() || b.is_none()) return none();
    return Degree(*a.value_ + *b.value_);
  }

  friend constexpr bool operator==(Degree a, Degree b) = default;

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.is_none() || b.is_none()) return !a.is_none() <=> !b.is_none();
    return *a.value_ <=> *b.value_;
  }

  friend constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }

  std::string to_string() const { return is_none() ? "none" : std::to_string(*value_); }

 private:
  std::optional<int> value_;
};

}  // namespace weyl
