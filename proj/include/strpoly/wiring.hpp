// Wiring diagrams of reduced words: n wires, labelled bottom-to-top at the
// left boundary, crossing once per pair. Crossing k realizes word letter k at
// heights (i_k, i_k + 1). Everything downstream (paths, cones, crystal
// operators) works on this combinatorial structure; no geometry is stored.
#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "strpoly/typea.hpp"

namespace strpoly {

struct Crossing {
  int position;    // 1-based index into the word
  int level;       // the word letter: heights swapped are (level, level+1)
  int lower_wire;  // wire arriving from below-left; always the smaller label
  int upper_wire;

  std::pair<int, int> wires() const { return {lower_wire, upper_wire}; }
};

struct WiringDiagram {
  ReducedWord word;
  std::vector<Crossing> crossings;              // crossings[k-1] has position k
  std::vector<std::vector<int>> wire_routes;    // per wire, crossing positions left to right

  int n() const { return word.n; }
  int size() const { return word.length(); }

  const Crossing& at(int position) const { return crossings[position - 1]; }

  // The unique crossing of wires p and q.
  const Crossing& crossing_of_pair(int p, int q) const {
    require(p != q, "crossing_of_pair: wires must differ");
    require(p >= 1 && p <= n() && q >= 1 && q <= n(), "wire label out of range");
    if (p > q) std::swap(p, q);
    auto it = pair_index_.find({p, q});
    ensure(it != pair_index_.end(), "crossing_of_pair: pair not found");
    return crossings[it->second];
  }

  int position_of_pair(int p, int q) const { return crossing_of_pair(p, q).position; }

  const std::vector<int>& route(int wire) const {
    require(wire >= 1 && wire <= n(), "wire label out of range");
    return wire_routes[wire - 1];
  }

  static WiringDiagram build(const ReducedWord& word);

private:
  std::map<std::pair<int, int>, int> pair_index_;
};

// Simulates the word: track which wire sits at each height, recording a
// crossing per letter and then swapping.
inline WiringDiagram WiringDiagram::build(const ReducedWord& word) {
  WiringDiagram d;
  d.word = word;
  int n = word.n;
  std::vector<int> at_height(n + 1);
  for (int h = 1; h <= n; ++h) at_height[h] = h;
  d.wire_routes.assign(n, {});
  d.crossings.reserve(word.length());
  for (int k = 1; k <= word.length(); ++k) {
    int lev = word.letters[k - 1];
    int p = at_height[lev], q = at_height[lev + 1];
    ensure(p < q, "wiring: pair crossing twice");
    d.crossings.push_back(Crossing{k, lev, p, q});
    d.pair_index_.emplace(std::make_pair(p, q), k - 1);
    d.wire_routes[p - 1].push_back(k);
    d.wire_routes[q - 1].push_back(k);
    std::swap(at_height[lev], at_height[lev + 1]);
  }
  for (int h = 1; h <= n; ++h) ensure(at_height[h] == n + 1 - h, "wiring: not reversed");
  return d;
}

// Orientation (ℓ_a, ℓ_{a+1}): wires 1..a run left-to-right, the rest
// right-to-left; `opposite` flips every direction.
struct OrientedDiagram {
  WiringDiagram diagram;
  int a = 1;
  bool opposite = false;

  bool rightward(int wire) const {
    require(wire >= 1 && wire <= diagram.n(), "wire label out of range");
    bool base = wire <= a;
    return opposite ? !base : base;
  }
};

inline OrientedDiagram orient(const WiringDiagram& d, int a, bool opposite) {
  require(a >= 1 && a <= d.n() - 1, "orientation index out of range");
  return OrientedDiagram{d, a, opposite};
}

// DOT rendering for figures: crossings as nodes, wire segments as edges.
// With an orientation, edges point along wire directions.
inline std::string to_dot(const WiringDiagram& d, const OrientedDiagram* od = nullptr) {
  std::ostringstream out;
  out << "digraph wiring {\n  rankdir=LR;\n  node [shape=point];\n";
  for (const auto& c : d.crossings) {
    out << "  x" << c.position << " [shape=circle, label=\"v(" << c.lower_wire << ","
        << c.upper_wire << ")@" << c.position << "\"];\n";
  }
  for (int w = 1; w <= d.n(); ++w) {
    std::vector<std::string> nodes;
    nodes.push_back("Lin" + std::to_string(w));
    out << "  Lin" << w << " [shape=plaintext, label=\"l" << w << "\"];\n";
    for (int pos : d.route(w)) nodes.push_back("x" + std::to_string(pos));
    nodes.push_back("Rout" + std::to_string(w));
    out << "  Rout" << w << " [shape=plaintext, label=\"l" << w << "'\"];\n";
    bool fwd = od == nullptr || od->rightward(w);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (fwd) {
        out << "  " << nodes[i] << " -> " << nodes[i + 1];
      } else {
        out << "  " << nodes[i + 1] << " -> " << nodes[i];
      }
      out << " [label=\"l" << w << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const OrientedDiagram& od) { return to_dot(od.diagram, &od); }

}  // namespace strpoly
