// Gleizer-Postnikov paths in an oriented wiring diagram and their r- and
// s-vectors.
//
// A left path for colour a travels the diagram under the orientation
// (ℓ_a, ℓ_{a+1}) — wires 1..a left-to-right, the rest right-to-left — from the
// left terminus of ℓ_a to the left terminus of ℓ_{a+1}. A right path travels
// under the opposite orientation from the right terminus of ℓ_a to the right
// terminus of ℓ_{a+1}. Paths follow wire directions and may switch wires at a
// crossing; they never revisit a crossing.
//
// Rigorousness forbids passing straight through a crossing whose two wires
// point the same way in certain label configurations. Writing i for the wire
// travelled and j for the wire crossed:
//   left paths:  forbidden iff (both rightward and i < j) or (both leftward and i > j)
//   right paths: forbidden iff (both rightward and i > j) or (both leftward and i < j)
// Equivalently, a left path never gains height through a straight passage at a
// same-direction crossing, and a right path never loses height. Crossings of
// oppositely oriented wires are unconstrained.
//
// The r-vector of a path is supported on its turning points: at a turning
// point on the crossing of wires (p, q), with p the wire of arrival, the entry
// at that word position is sgn(q - p). The s-vector of a left path for colour
// a is +1 at every visited crossing whose wire pair straddles a (one label
// <= a, the other > a), -1 at visited non-turning crossings whose pair does
// not straddle a, and 0 otherwise.
#pragma once

#include <algorithm>
#include <set>

#include "strpoly/wiring.hpp"

namespace strpoly {

enum class PathSide { left, right };

struct PathStep {
  int position;  // word position of the crossing
  int arrive;    // wire travelled into the crossing
  int depart;    // wire travelled out; equal to arrive on a straight passage

  bool turn() const { return arrive != depart; }
  friend bool operator==(const PathStep& a, const PathStep& b) {
    return a.position == b.position && a.arrive == b.arrive && a.depart == b.depart;
  }
};

struct GPPath {
  int a = 1;
  PathSide side = PathSide::left;
  std::vector<PathStep> steps;

  std::vector<int> turning_positions() const {
    std::vector<int> out;
    for (const auto& s : steps) {
      if (s.turn()) out.push_back(s.position);
    }
    return out;
  }
  friend bool operator==(const GPPath& x, const GPPath& y) {
    return x.a == y.a && x.side == y.side && x.steps == y.steps;
  }
};

inline std::vector<int> r_vector(const WiringDiagram& d, const GPPath& p) {
  std::vector<int> r(d.size(), 0);
  for (const auto& s : p.steps) {
    if (s.turn()) r[s.position - 1] = s.depart > s.arrive ? 1 : -1;
  }
  return r;
}

inline std::vector<int> s_vector(const WiringDiagram& d, const GPPath& p) {
  std::vector<int> s(d.size(), 0);
  for (const auto& st : p.steps) {
    const Crossing& c = d.at(st.position);
    int lo = c.lower_wire, hi = c.upper_wire;
    if (lo <= p.a && p.a < hi) {
      s[st.position - 1] = 1;
    } else if (!st.turn()) {
      // non-straddling straight passage: both labels > a or both <= a
      s[st.position - 1] = -1;
    }
  }
  return s;
}

namespace detail {

struct PathSearch {
  const WiringDiagram* d;
  int a;
  PathSide side;
  int target;
  std::vector<GPPath> found;
  std::vector<PathStep> steps;
  std::set<int> visited;

  bool rightward(int wire) const {
    bool base = wire <= a;
    return side == PathSide::left ? base : !base;
  }

  bool straight_allowed(int travel, int other) const {
    bool rt = rightward(travel), ro = rightward(other);
    if (rt != ro) return true;
    if (side == PathSide::left) {
      return rt ? travel > other : travel < other;
    }
    return rt ? travel < other : travel > other;
  }

  // idx indexes the wire's route; travel advances +1 on rightward wires and
  // -1 on leftward ones.
  void walk(int wire, int idx) {
    const auto& route = d->route(wire);
    if (idx < 0 || idx >= static_cast<int>(route.size())) {
      if (wire == target) {
        found.push_back(GPPath{a, side, steps});
      }
      return;
    }
    int pos = route[idx];
    if (visited.count(pos)) return;
    const Crossing& c = d->at(pos);
    int other = c.lower_wire == wire ? c.upper_wire : c.lower_wire;
    visited.insert(pos);
    // switch wires
    steps.push_back(PathStep{pos, wire, other});
    const auto& oroute = d->route(other);
    int oidx = static_cast<int>(
        std::find(oroute.begin(), oroute.end(), pos) - oroute.begin());
    walk(other, oidx + (rightward(other) ? 1 : -1));
    steps.pop_back();
    // pass straight
    if (straight_allowed(wire, other)) {
      steps.push_back(PathStep{pos, wire, wire});
      walk(wire, idx + (rightward(wire) ? 1 : -1));
      steps.pop_back();
    }
    visited.erase(pos);
  }
};

}  // namespace detail

// All rigorous paths for colour a on the given side, sorted by (r, s) read
// lexicographically in word-position order. This order is the one crystal
// operators select maximal and minimal paths from.
inline std::vector<GPPath> enumerate_paths(const WiringDiagram& d, int a, PathSide side) {
  require(a >= 1 && a <= d.n() - 1, "path colour out of range");
  detail::PathSearch search{&d, a, side, a + 1, {}, {}, {}};
  const auto& route = d.route(a);
  bool start_right = search.rightward(a);
  // Left paths leave the left boundary of ℓ_a, right paths the right boundary.
  search.walk(a, start_right ? 0 : static_cast<int>(route.size()) - 1);
  auto key = [&](const GPPath& p) {
    return std::make_pair(r_vector(d, p), s_vector(d, p));
  };
  std::sort(search.found.begin(), search.found.end(),
            [&](const GPPath& x, const GPPath& y) { return key(x) < key(y); });
  return search.found;
}

// Rebuilds the path with the given set of turning points; the path is uniquely
// determined by them. Throws if no rigorous path realizes the set.
inline GPPath path_from_turning_points(const WiringDiagram& d, int a, PathSide side,
                                       const std::set<int>& turning) {
  for (const auto& p : enumerate_paths(d, a, side)) {
    auto tp = p.turning_positions();
    if (std::set<int>(tp.begin(), tp.end()) == turning) return p;
  }
  throw std::invalid_argument("no rigorous path with the given turning points");
}

}  // namespace strpoly
