#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace spt {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats a rational as "p" or "p/q" with q > 0.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Closest double, for float rendering only; the exact pipeline never calls this.
double to_double(const Rational& r);

using Point = std::vector<Rational>;

std::string to_string(const Point& p);

/// Seeded generator of small rationals, used for test data and conditioned
/// coefficient instantiation. Deterministic across platforms.
class RationalRng {
 public:
  explicit RationalRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform numerator in [-magnitude, magnitude], denominator in [1, magnitude].
  Rational next(int magnitude = 12) {
    std::uniform_int_distribution<int> num(-magnitude, magnitude);
    std::uniform_int_distribution<int> den(1, magnitude);
    return Rational(num(engine_), den(engine_));
  }

  /// Strictly positive value in (0, magnitude].
  Rational next_positive(int magnitude = 12) {
    std::uniform_int_distribution<int> num(1, magnitude);
    std::uniform_int_distribution<int> den(1, magnitude);
    return Rational(num(engine_), den(engine_));
  }

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spt
