#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/errors.hpp"

namespace seqgeom {

// Rotating-projection extraction over any ordered field scalar providing
// +, -, *, unary - and field_sign(). Shared by the rational kernel and the
// omega-scale gadget constructions.
template <class T>
struct SweepPoint {
  T x, y;
};

namespace sweep_detail {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace sweep_detail

template <class T>
AllowableSequence extract_sweep(const std::vector<SweepPoint<T>>& pts) {
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (field_sign(pts[i].x - pts[j].x) == 0 && field_sign(pts[i].y - pts[j].y) == 0)
        throw DuplicatePoint("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " coincide");

  AllowableSequence a;
  a.n = n;
  a.first.resize(n);
  std::iota(a.first.begin(), a.first.end(), 1);
  std::sort(a.first.begin(), a.first.end(), [&](int e, int f) {
    int sx = field_sign(pts[e - 1].x - pts[f - 1].x);
    if (sx != 0) return sx < 0;
    return field_sign(pts[e - 1].y - pts[f - 1].y) < 0;
  });
  if (n < 2) return a;

  // Switch direction normalized so the firing angle lies in (0, 180].
  struct Dir {
    T x, y;
  };
  auto switch_dir = [&](int i, int j) {
    T vx = pts[j - 1].x - pts[i - 1].x;
    T vy = pts[j - 1].y - pts[i - 1].y;
    Dir u{-vy, vx};
    int sy = field_sign(u.y);
    if (sy < 0 || (sy == 0 && field_sign(u.x) > 0)) {
      u.x = -u.x;
      u.y = -u.y;
    }
    return u;
  };
  auto angle_cmp = [](const Dir& a, const Dir& b) {
    return -field_sign(a.x * b.y - a.y * b.x);  // <0: a earlier
  };

  struct PairRec {
    Dir dir;
    int i, j;
  };
  std::vector<PairRec> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({switch_dir(i, j), i, j});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const PairRec& a, const PairRec& b) { return angle_cmp(a.dir, b.dir) < 0; });

  std::vector<int> perm = a.first;
  std::vector<int> pos(n + 1);
  auto refresh = [&] {
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
  };
  refresh();

  size_t lo = 0;
  while (lo < pairs.size()) {
    size_t hi = lo + 1;
    while (hi < pairs.size() && angle_cmp(pairs[lo].dir, pairs[hi].dir) == 0) ++hi;
    sweep_detail::Dsu ds(n + 1);
    for (size_t t = lo; t < hi; ++t) ds.unite(pairs[t].i, pairs[t].j);
    std::map<int, std::vector<int>> clusters;
    for (size_t t = lo; t < hi; ++t) clusters[ds.find(pairs[t].i)];
    for (int e = 1; e <= n; ++e) {
      auto it = clusters.find(ds.find(e));
      if (it != clusters.end()) it->second.push_back(e);
    }
    Move mv;
    for (auto& [root, members] : clusters) {
      int mn = n, mx = -1;
      for (int e : members) {
        mn = std::min(mn, pos[e]);
        mx = std::max(mx, pos[e]);
      }
      if (mx - mn + 1 != static_cast<int>(members.size()))
        throw Error("internal: switch cluster not consecutive in the permutation");
      mv.intervals.push_back({mn, static_cast<int>(members.size())});
    }
    std::sort(mv.intervals.begin(), mv.intervals.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    for (const Interval& iv : mv.intervals)
      std::reverse(perm.begin() + iv.start, perm.begin() + iv.start + iv.len);
    refresh();
    a.moves.push_back(std::move(mv));
    lo = hi;
  }
  return a;
}

}  // namespace seqgeom
