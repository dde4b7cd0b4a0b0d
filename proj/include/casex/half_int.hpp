#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

namespace casex {

// Exact half-integer arithmetic. Stores twice the value, so j = 3/2 is the
// integer 3 and never a rounded double. All basis bookkeeping goes through
// this type; doubles appear only when a matrix element is finally evaluated.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }

    constexpr HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // True when the difference to `o` is a whole number, e.g. j and m of the
    // same angular momentum.
    constexpr bool integer_spaced_with(HalfInt o) const { return (twice_ - o.twice_) % 2 == 0; }

  private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return HalfInt::from_twice(h.twice() < 0 ? -h.twice() : h.twice()); }

// n half units, i.e. halves(3) == 3/2.
constexpr HalfInt halves(int n) { return HalfInt::from_twice(n); }

// "3/2", "-1/2", "2" -> HalfInt. Throws ArgumentError on anything else.
HalfInt parse_half_int(std::string_view text);

// Exact textual form, "3/2" or "2".
std::string to_string(HalfInt h);

} // namespace casex
