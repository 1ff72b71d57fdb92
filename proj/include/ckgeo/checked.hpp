#ifndef CKGEO_CHECKED_HPP_
#define CKGEO_CHECKED_HPP_

#include <cstdint>
#include <stdexcept>

namespace ckgeo {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A configured budget (state count, word count, orbit size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

inline std::int64_t abs(std::int64_t x) { return x < 0 ? neg(x) : x; }

// Nonnegative residue mod 2, so parity(-1) == 1.
constexpr std::int64_t parity(std::int64_t n) noexcept { return n & 1; }

// (-1)^n
constexpr std::int64_t alternating(std::int64_t n) noexcept { return (n & 1) ? -1 : 1; }

}  // namespace detail
}  // namespace ckgeo

#endif  // CKGEO_CHECKED_HPP_
