#pragma once

// Z[w] with w a primitive cube root of unity: w^2 = -1 - w. Used for exact
// character values of the order-18 stabilizer group.

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace flopkit {

struct Eisenstein {
  std::int64_t x{0};  // x + y*w
  std::int64_t y{0};

  constexpr Eisenstein() = default;
  constexpr Eisenstein(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

  static constexpr Eisenstein omega_pow(int k) {
    int m = ((k % 3) + 3) % 3;
    if (m == 0) return {1, 0};
    if (m == 1) return {0, 1};
    return {-1, -1};  // w^2
  }

  constexpr Eisenstein operator+(const Eisenstein& o) const { return {x + o.x, y + o.y}; }
  constexpr Eisenstein operator-(const Eisenstein& o) const { return {x - o.x, y - o.y}; }
  constexpr Eisenstein operator-() const { return {-x, -y}; }
  constexpr Eisenstein operator*(const Eisenstein& o) const {
    // (x1 + y1 w)(x2 + y2 w), w^2 = -1-w.
    return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y};
  }
  Eisenstein& operator+=(const Eisenstein& o) { return *this = *this + o; }
  Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

  // Complex conjugation sends w to w^2.
  constexpr Eisenstein conj() const { return {x - y, -y}; }
  constexpr std::int64_t norm() const { return x * x - x * y + y * y; }

  constexpr bool is_zero() const { return x == 0 && y == 0; }
  constexpr bool is_rational_integer() const { return y == 0; }

  bool operator==(const Eisenstein&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Eisenstein& z) {
  return os << z.x << (z.y >= 0 ? "+" : "") << z.y << "w";
}

}  // namespace flopkit
