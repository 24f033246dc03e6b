#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace tropcount {

// Exact signed 128-bit integer with overflow trapping.  All enumerative
// aggregates go through this type; a silent wraparound would corrupt a count,
// so arithmetic throws instead.
struct Int128 {
  __int128 v = 0;

  Int128() = default;
  Int128(long long x) : v(x) {}

  static Int128 raw(__int128 x) {
    Int128 r;
    r.v = x;
    return r;
  }

  Int128 operator+(Int128 o) const {
    __int128 r;
    if (__builtin_add_overflow(v, o.v, &r)) throw std::overflow_error("Int128 add overflow");
    return raw(r);
  }
  Int128 operator-(Int128 o) const {
    __int128 r;
    if (__builtin_sub_overflow(v, o.v, &r)) throw std::overflow_error("Int128 sub overflow");
    return raw(r);
  }
  Int128 operator*(Int128 o) const {
    __int128 r;
    if (__builtin_mul_overflow(v, o.v, &r)) throw std::overflow_error("Int128 mul overflow");
    return raw(r);
  }
  Int128& operator+=(Int128 o) { return *this = *this + o; }
  Int128& operator-=(Int128 o) { return *this = *this - o; }
  Int128& operator*=(Int128 o) { return *this = *this * o; }

  bool operator==(const Int128& o) const { return v == o.v; }
  bool operator!=(const Int128& o) const { return v != o.v; }
  bool operator<(const Int128& o) const { return v < o.v; }
  bool operator<=(const Int128& o) const { return v <= o.v; }
  bool operator>(const Int128& o) const { return v > o.v; }
  bool operator>=(const Int128& o) const { return v >= o.v; }

  long long to_i64() const {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Int128 does not fit in 64 bits");
    return static_cast<long long>(v);
  }

  std::string str() const {
    if (v == 0) return "0";
    unsigned __int128 a = v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (a > 0) {
      s.push_back(char('0' + int(a % 10)));
      a /= 10;
    }
    if (v < 0) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
  }
};

inline Int128 factorial128(int n) {
  Int128 r{1};
  for (int k = 2; k <= n; ++k) r *= Int128{k};
  return r;
}

inline Int128 pow128(long long base, int exp) {
  Int128 r{1};
  for (int k = 0; k < exp; ++k) r *= Int128{base};
  return r;
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  // FNV-1a over the 8 bytes of x.
  for (int k = 0; k < 8; ++k) {
    h ^= (x >> (8 * k)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace tropcount
