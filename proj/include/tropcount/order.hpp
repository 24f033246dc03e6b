#pragma once

// Generic linear orders on lattice points.  The order lambda^0(i,j) = i - eps*j
// with infinitesimal eps is realized exactly as a lexicographic comparison of
// two integer forms; no floating point anywhere.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropcount/geometry.hpp"

namespace tropcount {

struct LambdaOrder {
  Pt primary{1, 0};    // (a, b): compare a*i + b*j first
  Pt tiebreak{0, -1};  // (c, d): then c*i + d*j

  std::pair<long long, long long> key(Pt p) const {
    return {primary.i * p.i + primary.j * p.j, tiebreak.i * p.i + tiebreak.j * p.j};
  }

  // -1 less, 0 equal, +1 greater.
  int compare(Pt p, Pt q) const {
    auto kp = key(p), kq = key(q);
    if (kp < kq) return -1;
    if (kq < kp) return 1;
    return 0;
  }

  bool less(Pt p, Pt q) const { return compare(p, q) < 0; }

  std::string str() const {
    std::ostringstream os;
    os << primary.i << "," << primary.j << ";" << tiebreak.i << "," << tiebreak.j;
    return os.str();
  }
};

inline LambdaOrder lambda0() { return LambdaOrder{{1, 0}, {0, -1}}; }

// "a,b" or "a,b;c,d".  Without an explicit tiebreak the primary form rotated
// by 90 degrees is used, which is always injective.
inline LambdaOrder parse_lambda(const std::string& text) {
  auto semi = text.find(';');
  auto parse_pair = [](const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("lambda component needs 'a,b'");
    return Pt{std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  };
  LambdaOrder o;
  if (semi == std::string::npos) {
    o.primary = parse_pair(text);
    o.tiebreak = Pt{-o.primary.j, o.primary.i};
  } else {
    o.primary = parse_pair(text.substr(0, semi));
    o.tiebreak = parse_pair(text.substr(semi + 1));
  }
  return o;
}

enum class OrderStatus { ok, not_injective, wrong_extremes };

struct OrderValidation {
  OrderStatus status = OrderStatus::ok;
  Pt p{}, q{};  // path endpoints when ok: lambda-min and lambda-max
  std::string message;

  explicit operator bool() const { return status == OrderStatus::ok; }
};

// The path endpoints of the polygon: p is the topmost point among the
// leftmost lattice points (the highest point of Delta on the vertical axis
// for the standard polygons), q the bottommost among the rightmost.  These
// are exactly the lambda^0 extremes.
inline std::pair<Pt, Pt> path_endpoints(const Polygon& delta) {
  auto pts = all_lattice_points(delta);  // sorted by (i, -j)
  return {pts.front(), pts.back()};
}

// An order is usable for Delta when it is injective on Delta's lattice points
// and attains its minimum at p and maximum at q.
inline OrderValidation validate_for_polygon(const LambdaOrder& o, const Polygon& delta) {
  auto pts = all_lattice_points(delta);
  std::vector<std::pair<std::pair<long long, long long>, Pt>> keyed;
  keyed.reserve(pts.size());
  for (Pt p : pts) keyed.push_back({o.key(p), p});
  std::sort(keyed.begin(), keyed.end());
  for (size_t k = 1; k < keyed.size(); ++k) {
    if (keyed[k].first == keyed[k - 1].first) {
      OrderValidation v;
      v.status = OrderStatus::not_injective;
      std::ostringstream os;
      os << "order " << o.str() << " ties (" << keyed[k - 1].second.i << "," << keyed[k - 1].second.j
         << ") with (" << keyed[k].second.i << "," << keyed[k].second.j << ")";
      v.message = os.str();
      return v;
    }
  }
  auto [p, q] = path_endpoints(delta);
  if (keyed.front().second != p || keyed.back().second != q) {
    OrderValidation v;
    v.status = OrderStatus::wrong_extremes;
    std::ostringstream os;
    os << "order " << o.str() << " has extremes (" << keyed.front().second.i << ","
       << keyed.front().second.j << "),(" << keyed.back().second.i << "," << keyed.back().second.j
       << ") instead of p,q";
    v.message = os.str();
    return v;
  }
  OrderValidation v;
  v.p = p;
  v.q = q;
  return v;
}

// Generic orders for invariance testing: random small coprime primary forms
// with rotated tiebreaks, keeping only candidates that validate for the
// polygon (injective, extremes at p and q).  Deterministic for a fixed seed.
inline std::vector<LambdaOrder> sample_valid_orders(const Polygon& delta, size_t count,
                                                    std::uint64_t seed) {
  std::vector<LambdaOrder> out;
  std::uint64_t state = seed ? seed : 1;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int tries = 0; out.size() < count && tries < 4000; ++tries) {
    long long a = (long long)(next() % 7) + 1;
    long long b = -(long long)(next() % 7) - 1;
    if (std::gcd(a, -b) != 1) continue;
    LambdaOrder o{{a, b}, {-b, a}};
    if (!validate_for_polygon(o, delta)) continue;
    bool dup = false;
    for (const LambdaOrder& seen : out)
      dup = dup || (seen.primary == o.primary && seen.tiebreak == o.tiebreak);
    if (!dup) out.push_back(o);
  }
  return out;
}

}  // namespace tropcount
