#ifndef JD_TYPES_HPP
#define JD_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jd {

// All arithmetic in the engine is exact; dimensions are the deliverable.
using Rat = boost::multiprecision::cpp_rational;

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Support : std::uint8_t { Circle, Empty };

inline const char* to_string(Support s) {
  return s == Support::Circle ? "circle" : "empty";
}

// Sign of a diagram relative to its canonical representative. Zero marks
// classes admitting an automorphism that reverses an odd number of vertex
// orientations; such diagrams equal their own negative and vanish.
enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(to_int(a) * to_int(b));
}
inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Plus: return "+1";
    case Sign::Minus: return "-1";
    default: return "0";
  }
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct SupportMismatch : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Per-call ceiling on enumeration degree. Calls above the cap abort with
// BudgetExceeded before any generation work starts.
struct EnumerationBudget {
  int max_degree_circle = 6;
  int max_degree_empty = 4;
  int max_degree(Support s) const {
    return s == Support::Circle ? max_degree_circle : max_degree_empty;
  }
};

// Hard cap on bracket link size (2^|L| term explosion).
inline constexpr int kMaxBracketComponents = 16;

}  // namespace jd

#endif
