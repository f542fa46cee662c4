#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spanwright {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// Fixed-point weight: one unit of weight is kWeightScale ticks (1e-9 resolution).
using Weight = std::int64_t;

inline constexpr Weight kWeightScale = 1'000'000'000;
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

constexpr Weight units(std::int64_t whole) { return whole * kWeightScale; }

// Saturating add; anything touching kInfinity stays infinite.
constexpr Weight add_weight(Weight a, Weight b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  if (a > kInfinity - b) return kInfinity;
  return a + b;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input violates an algorithm's contract (disconnected where connectivity is
// required, parameters out of range, strict constants not satisfied, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact non-negative rational used for stretch factors and epsilons.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t n) : num(n), den(1) {}  // NOLINT(implicit)
  Ratio(std::int64_t n, std::int64_t d);

  // Parses "3", "0.25", "7/2".
  static Ratio parse(std::string_view text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  std::int64_t floor() const { return num / den; }
  std::int64_t ceil() const { return (num + den - 1) / den; }
  std::string str() const;
};

Ratio operator+(Ratio a, Ratio b);
Ratio operator-(Ratio a, Ratio b);
Ratio operator*(Ratio a, Ratio b);
Ratio operator/(Ratio a, Ratio b);
bool operator==(Ratio a, Ratio b);
bool operator<(Ratio a, Ratio b);
inline bool operator<=(Ratio a, Ratio b) { return !(b < a); }
inline bool operator>(Ratio a, Ratio b) { return b < a; }
inline bool operator>=(Ratio a, Ratio b) { return !(a < b); }
Ratio pow(Ratio base, int exponent);
Ratio max(Ratio a, Ratio b);

// d <= t * w, exact. Infinite d never satisfies it.
bool within_stretch(Weight d, Ratio t, Weight w);

// ceil(t * w) in ticks, saturating.
Weight scale_up(Ratio t, Weight w);

}  // namespace spanwright
