#include "seqgeom/grid_search.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "seqgeom/errors.hpp"
#include "seqgeom/ordfield.hpp"
#include "seqgeom/sweep.hpp"

namespace seqgeom {

namespace {

struct GridPt {
  long x, y;
};

int orient_i(const GridPt& a, const GridPt& b, const GridPt& c) {
  long d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return d < 0 ? -1 : (d > 0 ? 1 : 0);
}

std::vector<int> encode_sequence(const AllowableSequence& a) {
  std::vector<int> code;
  code.push_back(a.n);
  code.insert(code.end(), a.first.begin(), a.first.end());
  for (const Move& m : a.moves) {
    code.push_back(static_cast<int>(m.intervals.size()));
    for (const Interval& iv : m.intervals) {
      code.push_back(iv.start);
      code.push_back(iv.len);
    }
  }
  return code;
}

AllowableSequence relabel_sequence(const AllowableSequence& a, const std::vector<int>& perm) {
  // perm maps old element e -> perm[e-1]
  AllowableSequence b = a;
  for (int& e : b.first) e = perm[e - 1];
  return b;
}

std::vector<Point> to_points(const std::vector<GridPt>& g) {
  std::vector<Point> out;
  out.reserve(g.size());
  for (const GridPt& p : g) out.push_back({Rat(p.x), Rat(p.y)});
  return out;
}

// ---- sequence targets: enumerate subsets, extract with machine integers ----

struct SequenceSearch {
  int n, grid;
  bool target_simple;
  std::vector<std::vector<int>> target_codes;  // sorted canonical codes

  bool matches(const std::vector<GridPt>& pts) const {
    std::vector<SweepPoint<long>> sp;
    sp.reserve(pts.size());
    for (const GridPt& p : pts) sp.push_back({p.x, p.y});
    AllowableSequence got;
    try {
      got = extract_sweep(sp);
    } catch (const Error&) {
      return false;
    }
    std::vector<int> code = encode_sequence(canonical_form(got));
    return std::binary_search(target_codes.begin(), target_codes.end(), code);
  }

  // Subsets chosen in increasing point-index order; prune parallel pairs for
  // simple targets.
  bool dfs(std::vector<GridPt>& chosen, int next_index, std::vector<GridPt>& best) const {
    if (static_cast<int>(chosen.size()) == n) {
      if (!matches(chosen)) return false;
      best = chosen;
      return true;
    }
    int total = grid * grid;
    for (int idx = next_index; idx < total; ++idx) {
      GridPt p{idx / grid, idx % grid};
      if (target_simple) {
        bool ok = true;
        for (size_t i = 0; i < chosen.size() && ok; ++i) {
          for (size_t j = i + 1; j < chosen.size() && ok; ++j) {
            long ax = chosen[j].x - chosen[i].x, ay = chosen[j].y - chosen[i].y;
            for (const GridPt& q : chosen) {
              long bx = p.x - q.x, by = p.y - q.y;
              if (ax * by - ay * bx == 0) {
                ok = false;
                break;
              }
            }
          }
        }
        if (!ok) continue;
      }
      chosen.push_back(p);
      if (dfs(chosen, idx + 1, best)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

// ---- chirotope targets: labeled placement with triple pruning ----

struct ChirotopeSearch {
  int n, grid;
  const Chirotope* target;

  bool dfs(std::vector<GridPt>& chosen, std::vector<char>& used, std::vector<GridPt>& best) const {
    int v = static_cast<int>(chosen.size());
    if (v == n) {
      best = chosen;
      return true;
    }
    int total = grid * grid;
    for (int idx = 0; idx < total; ++idx) {
      if (used[idx]) continue;
      GridPt p{idx / grid, idx % grid};
      bool ok = true;
      for (int i = 0; i < v && ok; ++i)
        for (int j = i + 1; j < v && ok; ++j)
          if (orient_i(chosen[i], chosen[j], p) != to_int(target->orient(i, j, v))) ok = false;
      if (!ok) continue;
      chosen.push_back(p);
      used[idx] = 1;
      if (dfs(chosen, used, best)) return true;
      chosen.pop_back();
      used[idx] = 0;
    }
    return false;
  }
};

}  // namespace

GridSearchResult grid_search(const GridSearchSpec& spec) {
  if (spec.grid_size < 1 || spec.grid_size > 15)
    throw TargetInvalid("grid_size must lie in 1..15");
  GridSearchResult res;
  res.searched_up_to = spec.grid_size;

  if (std::holds_alternative<AllowableSequence>(spec.target)) {
    const AllowableSequence& a = std::get<AllowableSequence>(spec.target);
    ValidationReport rep = validate(a);
    if (!rep.generalized_ok) throw TargetInvalid("target sequence is not a valid sequence");
    if (a.n > 7) throw TargetInvalid("target element count is limited to 7");

    SequenceSearch s;
    s.n = a.n;
    s.grid = spec.grid_size;
    s.target_simple = rep.simple;
    std::set<std::vector<int>> codes;
    if (spec.relabel) {
      std::vector<int> perm(a.n);
      for (int i = 0; i < a.n; ++i) perm[i] = i + 1;
      do {
        codes.insert(encode_sequence(canonical_form(relabel_sequence(a, perm))));
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      codes.insert(encode_sequence(canonical_form(a)));
    }
    s.target_codes.assign(codes.begin(), codes.end());

    // Shard over the first point; keep the lexicographically least witness.
    int total = spec.grid_size * spec.grid_size;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<GridPt>>> futs;
    unsigned stride = std::max<unsigned>(1, total / (workers * 4) + 1);
    for (int lo = 0; lo < total; lo += static_cast<int>(stride)) {
      int hi = std::min<int>(total, lo + static_cast<int>(stride));
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        std::vector<GridPt> best;
        for (int first = lo; first < hi; ++first) {
          std::vector<GridPt> chosen = {{first / s.grid, first % s.grid}};
          std::vector<GridPt> found;
          if (s.dfs(chosen, first + 1, found)) {
            best = found;
            break;  // least within this shard: first indices ascend
          }
        }
        return best;
      }));
    }
    std::vector<GridPt> overall;
    for (auto& f : futs) {
      std::vector<GridPt> got = f.get();
      if (got.empty()) continue;
      if (overall.empty()) {
        overall = got;  // earlier shards hold lexicographically smaller firsts
        break;
      }
    }
    if (!overall.empty()) {
      res.found = true;
      res.points = to_points(overall);
    }
    return res;
  }

  const Chirotope& c = std::get<Chirotope>(spec.target);
  if (c.size() > 7) throw TargetInvalid("target element count is limited to 7");
  if (!c.check_axioms(1).ok()) throw TargetInvalid("target chirotope violates the axioms");

  std::vector<const Chirotope*> targets;
  std::vector<Chirotope> storage;
  if (spec.relabel) {
    std::vector<int> perm(c.size());
    for (int i = 0; i < c.size(); ++i) perm[i] = i;
    std::set<std::vector<int8_t>> seen;
    do {
      std::vector<int8_t> table;
      table.reserve(Chirotope::triple_count(c.size()));
      for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
          for (int k = j + 1; k < c.size(); ++k)
            table.push_back(static_cast<int8_t>(to_int(c.orient(perm[i], perm[j], perm[k]))));
      if (seen.insert(table).second) storage.emplace_back(c.ground(), table);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const Chirotope& t : storage) targets.push_back(&t);
  } else {
    targets.push_back(&c);
  }

  std::vector<GridPt> overall;
  for (const Chirotope* t : targets) {
    ChirotopeSearch s{c.size(), spec.grid_size, t};
    std::vector<GridPt> chosen, best;
    std::vector<char> used(spec.grid_size * spec.grid_size, 0);
    if (s.dfs(chosen, used, best)) {
      if (overall.empty()) {
        overall = best;
      } else {
        auto less = [](const std::vector<GridPt>& a, const std::vector<GridPt>& b) {
          for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].x != b[i].x) return a[i].x < b[i].x;
            if (a[i].y != b[i].y) return a[i].y < b[i].y;
          }
          return false;
        };
        if (less(best, overall)) overall = best;
      }
    }
  }
  if (!overall.empty()) {
    res.found = true;
    res.points = to_points(overall);
  }
  return res;
}

}  // namespace seqgeom
