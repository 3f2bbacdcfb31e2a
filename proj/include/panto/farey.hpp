#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "panto/slope.hpp"

namespace panto {

namespace detail {

// Extended gcd: returns (g, u, v) with a u + b v = g.
inline std::tuple<long long, long long, long long> ext_gcd(long long a, long long b) {
  if (b == 0) return {a, 1, 0};
  auto [g, u, v] = ext_gcd(b, a % b);
  return {g, v, u - (a / b) * v};
}

// Unimodular matrix carrying the slope r/s to infinity.
inline Mat2 to_infinity(const Slope& b) {
  auto [g, v, mu] = ext_gcd(b.p, b.q);
  (void)g;  // 1 by normalization
  long long u = -mu;
  // v*p - u*q = 1, so [[v, -u], [-q, p]] sends (p, q) to (1, 0).
  return Mat2{v, -u, -b.q, b.p};
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Distance from p/q to infinity in the Farey graph.  A geodesic's last vertex
// before infinity is an integer, and the separation properties of the Farey
// tessellation force that integer to be floor(p/q) or floor(p/q)+1; both
// branches strictly reduce the denominator.
inline int dist_to_inf(long long p, long long q, std::map<std::pair<long long, long long>, int>& memo) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) return 0;
  if (q == 1) return 1;
  auto key = std::make_pair(p, q);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long a0 = floor_div(p, q);
  long long r = p - a0 * q;  // 0 < r < q
  int d1 = dist_to_inf(-q, r, memo);
  int d2 = dist_to_inf(q, q - r, memo);
  int d = 1 + std::min(d1, d2);
  memo[key] = d;
  return d;
}

}  // namespace detail

inline int farey_distance(const Slope& a, const Slope& b) {
  if (a == b) return 0;
  Mat2 m = detail::to_infinity(b);
  Slope x = m.apply(a);
  std::map<std::pair<long long, long long>, int> memo;
  return detail::dist_to_inf(x.p, x.q, memo);
}

namespace detail {

// Vertices from x to infinity along one geodesic (floor branch on ties).
inline void route_to_inf(const Slope& x, std::vector<Slope>& out,
                         std::map<std::pair<long long, long long>, int>& memo) {
  if (x.q == 0) {
    out.push_back(slope_inf);
    return;
  }
  if (x.q == 1) {
    out.push_back(x);
    out.push_back(slope_inf);
    return;
  }
  long long a0 = floor_div(x.p, x.q);
  long long r = x.p - a0 * x.q;
  int d1 = dist_to_inf(-x.q, r, memo);
  int d2 = dist_to_inf(x.q, x.q - r, memo);
  long long n = (d1 <= d2) ? a0 : a0 + 1;
  Mat2 phi{0, -1, 1, -n};  // t -> -1/(t - n), n -> inf
  std::vector<Slope> sub;
  route_to_inf(phi.apply(x), sub, memo);
  Mat2 inv = phi.inverse();
  for (size_t i = 0; i + 1 < sub.size(); ++i) out.push_back(inv.apply(sub[i]));
  out.push_back(make_slope(n, 1));
  out.push_back(slope_inf);
}

}  // namespace detail

// One geodesic from a to b, endpoints included; size() == distance + 1.
inline std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b) {
  if (a == b) return {a};
  Mat2 m = detail::to_infinity(b);
  Mat2 back = m.inverse();
  std::vector<Slope> raw;
  std::map<std::pair<long long, long long>, int> memo;
  detail::route_to_inf(m.apply(a), raw, memo);
  std::vector<Slope> out;
  out.reserve(raw.size());
  for (const Slope& s : raw) out.push_back(back.apply(s));
  return out;
}

// Breadth-first oracle over the Farey graph restricted to |p| <= bound,
// 0 <= q <= bound.  Returns nothing when the target was not reached inside
// the bound, so callers treat that as unknown rather than infinite.
struct FareyBfs {
  long long bound;
  std::vector<int> dist;  // (p + bound) * (bound + 1) + q

  explicit FareyBfs(long long bound_) : bound(bound_), dist(index_count(), -1) {}

  size_t index_count() const { return static_cast<size_t>(2 * bound + 1) * (bound + 1); }

  bool in_range(const Slope& s) const { return s.p >= -bound && s.p <= bound && s.q <= bound; }

  size_t index(const Slope& s) const {
    return static_cast<size_t>(s.p + bound) * (bound + 1) + s.q;
  }

  void neighbors(const Slope& v, std::vector<Slope>& out) const {
    out.clear();
    // Solutions of v.p * s - v.q * r = +-1 along the line (r0 + t p, s0 + t q).
    for (long long sign : {1LL, -1LL}) {
      auto [g, u, w] = detail::ext_gcd(v.p, -v.q);
      (void)g;
      long long r0 = w * sign, s0 = u * sign;
      if (v.q == 0) {
        // v = infinity: neighbors are the integers.
        if (sign == -1) continue;
        for (long long n = -bound; n <= bound; ++n) out.push_back(Slope{n, 1});
        continue;
      }
      // t range keeping 0 <= s0 + t q <= bound.
      long long tlo = -detail::floor_div(s0, v.q);
      long long thi = detail::floor_div(bound - s0, v.q);
      for (long long t = tlo; t <= thi; ++t) {
        long long r = r0 + t * v.p, s = s0 + t * v.q;
        if (s == 0) {
          out.push_back(slope_inf);
          continue;
        }
        if (r < -bound || r > bound) continue;
        out.push_back(Slope{r, s});
      }
    }
  }

  // Single-source distances to every vertex inside the bound.
  void run(const Slope& src) {
    std::fill(dist.begin(), dist.end(), -1);
    if (!in_range(src)) return;
    std::queue<Slope> q;
    q.push(src);
    dist[index(src)] = 0;
    std::vector<Slope> nbrs;
    while (!q.empty()) {
      Slope v = q.front();
      q.pop();
      int dv = dist[index(v)];
      neighbors(v, nbrs);
      for (const Slope& w : nbrs) {
        if (!in_range(w)) continue;
        int& slot = dist[index(w)];
        if (slot == -1) {
          slot = dv + 1;
          q.push(w);
        }
      }
    }
  }

  std::optional<int> at(const Slope& s) const {
    if (!in_range(s)) return std::nullopt;
    int d = dist[index(s)];
    if (d < 0) return std::nullopt;
    return d;
  }
};

inline std::optional<int> bfs_distance_oracle(const Slope& a, const Slope& b, long long bound) {
  FareyBfs bfs(bound);
  bfs.run(a);
  return bfs.at(b);
}

}  // namespace panto
