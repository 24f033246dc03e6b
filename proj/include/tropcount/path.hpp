#pragma once

// Enumeration of lambda-admissible lattice paths in a convex polygon.  Since
// Delta is convex and lambda totally orders its lattice points, a path of
// length n is exactly a choice of n-1 intermediate points taken in lambda
// order, so paths are generated as combinations over the sorted point list
// and the total count has the closed form C(m-2, n-1).

#include <optional>
#include <vector>

#include "tropcount/order.hpp"

namespace tropcount {

using Path = std::vector<Pt>;

inline bool is_admissible_path(const Path& path, const Polygon& delta, const LambdaOrder& o) {
  if (path.size() < 2) return false;
  auto [p, q] = path_endpoints(delta);
  if (path.front() != p || path.back() != q) return false;
  for (size_t k = 0; k < path.size(); ++k) {
    if (!contains(delta, path[k])) return false;
    if (k > 0 && !o.less(path[k - 1], path[k])) return false;
  }
  return true;
}

// Restartable generator; yields paths in lexicographic order of the chosen
// intermediate-point indices.
class PathEnumerator {
 public:
  PathEnumerator(const Polygon& delta, const LambdaOrder& o, long long length) : length_(length) {
    auto pts = all_lattice_points(delta);
    std::sort(pts.begin(), pts.end(), [&](Pt a, Pt b) { return o.less(a, b); });
    p_ = pts.front();
    q_ = pts.back();
    inner_.assign(pts.begin() + 1, pts.end() - 1);
    reset();
  }

  void reset() {
    done_ = false;
    long long k = length_ - 1;
    if (k < 0 || k > (long long)inner_.size()) {
      done_ = true;
      return;
    }
    choice_.resize(k);
    for (long long t = 0; t < k; ++t) choice_[t] = t;
    fresh_ = true;
  }

  std::optional<Path> next() {
    if (done_) return std::nullopt;
    if (!fresh_ && !advance()) return std::nullopt;
    fresh_ = false;
    Path path;
    path.reserve(length_ + 1);
    path.push_back(p_);
    for (long long idx : choice_) path.push_back(inner_[idx]);
    path.push_back(q_);
    return path;
  }

  static Int128 count(long long m, long long n) {
    // C(m-2, n-1) exact.
    long long top = m - 2, k = n - 1;
    if (k < 0 || k > top) return Int128{0};
    k = std::min(k, top - k);
    Int128 num{1};
    for (long long t = 0; t < k; ++t) {
      num *= Int128{top - t};
      num = Int128::raw(num.v / (t + 1));  // divides exactly: prefix products of binomials
    }
    return num;
  }

 private:
  bool advance() {
    long long k = (long long)choice_.size();
    long long n = (long long)inner_.size();
    long long t = k - 1;
    while (t >= 0 && choice_[t] == n - k + t) --t;
    if (t < 0) {
      done_ = true;
      return false;
    }
    ++choice_[t];
    for (long long s = t + 1; s < k; ++s) choice_[s] = choice_[s - 1] + 1;
    return true;
  }

  long long length_;
  Pt p_, q_;
  std::vector<Pt> inner_;
  std::vector<long long> choice_;
  bool fresh_ = true;
  bool done_ = false;
};

}  // namespace tropcount
