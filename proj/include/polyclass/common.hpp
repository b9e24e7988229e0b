#pragma once

// Shared primitives: checked 64-bit arithmetic, hashing, error types.
//
// All geometry in this library is exact. Coordinates are 64-bit integers
// with overflow checks (fail loudly, never wrap); predicates that multiply
// coordinates widen to 128 bits, which cannot overflow for in-range inputs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyclass {

using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;

class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

class geometry_error : public std::runtime_error {
 public:
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in mul");
  return r;
}

inline i64 checked_neg(i64 a) {
  if (a == INT64_MIN) throw overflow_error("integer overflow in neg");
  return -a;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor division and the matching non-negative remainder.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline i64 floor_mod(i64 a, i64 b) { return a - floor_div(a, b) * b; }

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// FNV-1a, 64 bit. Dedup keys are persisted, so this is part of the on-disk
// format and must never change.
inline u64 fnv1a(const void* data, size_t n, u64 h = 14695981039346656037ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline u64 fnv1a(std::string_view s) { return fnv1a(s.data(), s.size()); }

inline int sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace polyclass
