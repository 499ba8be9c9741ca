#pragma once

// Exact arithmetic aliases used throughout. Everything downstream assumes
// these are arbitrary precision; no module is allowed to fall back to
// floating point for a value that ends up in a verdict.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flopkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "p/q" and plain decimal integers with sign.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int p(s.substr(0, slash));
  Int q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(p, q);
}

inline std::int64_t to_i64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("integer too large for 64-bit serialization: " + v.str());
  return static_cast<std::int64_t>(v);
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace flopkit
