#pragma once

// Independent recursions and bounds used to validate engine output.  Nothing
// here is on the counting path; the engine never calls into this header.

#include <map>
#include <mutex>

#include "tropcount/util.hpp"

namespace tropcount {

inline Int128 binomial128(long long n, long long k) {
  if (k < 0 || k > n) return Int128{0};
  k = std::min(k, n - k);
  Int128 r{1};
  for (long long t = 0; t < k; ++t) {
    r *= Int128{n - t};
    r = Int128::raw(r.v / (t + 1));
  }
  return r;
}

// Number N_d of irreducible rational plane curves of degree d through 3d-1
// generic points, by the classical recursion
//   N_d = sum_{dA+dB=d} N_dA N_dB dA^2 dB [ dB C(3d-4, 3dA-2) - dA C(3d-4, 3dA-1) ],
// seeded with N_1 = N_2 = 1.  Entries are memoized and immutable.
class RecursionTable {
 public:
  Int128 operator()(int d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    std::lock_guard<std::mutex> lock(mutex_);
    return get(d);
  }

 private:
  Int128 get(int d) {
    if (d <= 2) return Int128{1};
    auto it = memo_.find(d);
    if (it != memo_.end()) return Int128::raw(it->second);
    Int128 sum{0};
    for (int da = 1; da < d; ++da) {
      int db = d - da;
      Int128 term = get(da) * get(db) * Int128{da} * Int128{da} * Int128{db};
      Int128 inner = Int128{db} * binomial128(3 * d - 4, 3 * da - 2) -
                     Int128{da} * binomial128(3 * d - 4, 3 * da - 1);
      sum += term * inner;
    }
    memo_[d] = sum.v;
    return sum;
  }

  std::map<int, __int128> memo_;
  std::mutex mutex_;
};

inline Int128 kontsevich_N(int d) {
  static RecursionTable table;
  return table(d);
}

// (3d-4)! * 54^{-d} <= N <= (3d-5)!, rearranged to integer-only comparisons.
inline bool sandwich_check(int d, Int128 N) {
  if (d < 2) throw std::invalid_argument("sandwich bounds need d >= 2");
  return factorial128(3 * d - 4) <= N * pow128(54, d) && N <= factorial128(3 * d - 5);
}

// Reducible 3-nodal rational quartics through 11 generic points: a line
// through 2 of the points plus the unique smooth cubic through the other 9;
// the two components meet in 3 nodes.  No other splitting type has 3 nodes.
inline Int128 reducible_rational_quartics() { return binomial128(11, 2); }

// Universal node polynomials: the number of 1- and 2-nodal degree-d curves
// through the matching number of generic points, valid for d >= 3 (1 node)
// and d >= 4 (2 nodes).
inline Int128 severi_one_node(long long d) { return Int128{3 * (d - 1) * (d - 1)}; }

inline Int128 severi_two_node(long long d) {
  Int128 v = Int128{(d - 1) * (d - 2)} * Int128{3 * d * d - 3 * d - 11} * Int128{3};
  return Int128::raw(v.v / 2);
}

}  // namespace tropcount
