// Crystal structure on the lattice points of a string polytope.
//
// For a lattice point x and colour a:
//   ε_a(x)  = max ⟨x, r(γ)⟩ over left paths γ of colour a,
//   wt(x)   = λ - Σ_k x_k α_{i_k},
//   φ_a(x)  = ε_a(x) + ⟨wt(x), α_a^∨⟩,
//   f_a(x)  = x + s(γ*) when φ_a(x) > 0, else undefined,
//   e_a(x)  = x - s(γ~) when ε_a(x) > 0, else undefined,
// where γ* and γ~ range over the paths attaining ε_a(x): γ* is the attaining
// path whose r-vector is lexicographically least and γ~ the one whose
// r-vector is lexicographically greatest. That orientation of the path order
// is frozen by the conformance suite against the tableaux crystal; flipping
// it breaks the suite already for n = 3.
//
// f and e re-check polytope membership and the weight step after every
// application and abort with a diagnostics dump on violation rather than
// return a corrupt point.
#pragma once

#include "json.hpp"
#include "strpoly/polytope.hpp"

namespace strpoly {

struct PathData {
  std::vector<int> r;
  std::vector<int> s;
};

// r/s data of the left paths of colour a, sorted lexicographically by (r, s).
inline std::vector<PathData> left_family(const WiringDiagram& d, int a) {
  std::vector<PathData> fam;
  for (const auto& p : enumerate_paths(d, a, PathSide::left)) {
    fam.push_back(PathData{r_vector(d, p), s_vector(d, p)});
  }
  return fam;  // enumerate_paths already sorts by (r, s)
}

inline long long dot(const std::vector<int>& v, const std::vector<int>& x) {
  long long acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += static_cast<long long>(v[i]) * x[i];
  return acc;
}

// ε via the max-over-paths formula; defined for any integer vector.
inline int epsilon_from_family(const std::vector<PathData>& family, const std::vector<int>& x) {
  ensure(!family.empty(), "epsilon: empty path family");
  long long best = std::numeric_limits<long long>::min();
  for (const auto& p : family) best = std::max(best, dot(p.r, x));
  return static_cast<int>(best);
}

class StringCrystal {
public:
  StringCrystal(ReducedWord word, Weight lambda)
      : polytope_(std::move(word), std::move(lambda)) {
    const WiringDiagram& d = polytope_.diagram();
    for (int a = 1; a <= d.n() - 1; ++a) families_.push_back(left_family(d, a));
  }

  const ReducedWord& word() const { return polytope_.word(); }
  const Weight& lambda() const { return polytope_.lambda(); }
  const StringPolytope& polytope() const { return polytope_; }
  const std::vector<PathData>& family(int a) const { return families_[a - 1]; }

  bool member(const std::vector<int>& x) const { return polytope_.contains(x); }

  void require_member(const std::vector<int>& x) const {
    require(member(x), "point is not in the string polytope");
  }

  int epsilon(const std::vector<int>& x, int a) const {
    check_colour(a);
    return epsilon_from_family(families_[a - 1], x);
  }

  Weight weight(const std::vector<int>& x) const {
    Weight w = lambda();
    const auto& letters = word().letters;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      w = w - x[k] * simple_root(word().n, letters[k]);
    }
    return w;
  }

  int phi(const std::vector<int>& x, int a) const {
    return epsilon(x, a) + pairing(weight(x), a);
  }

  std::optional<std::vector<int>> f(const std::vector<int>& x, int a) const {
    check_colour(a);
    if (phi(x, a) <= 0) return std::nullopt;
    const PathData& chosen = attaining(x, a, /*least=*/true);
    std::vector<int> y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += chosen.s[i];
    verify_step(x, y, a, chosen, -1, "f");
    return y;
  }

  std::optional<std::vector<int>> e(const std::vector<int>& x, int a) const {
    check_colour(a);
    if (epsilon(x, a) <= 0) return std::nullopt;
    const PathData& chosen = attaining(x, a, /*least=*/false);
    std::vector<int> y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= chosen.s[i];
    verify_step(x, y, a, chosen, +1, "e");
    return y;
  }

private:
  void check_colour(int a) const {
    require(a >= 1 && a <= word().n - 1, "crystal colour out of range");
  }

  const PathData& attaining(const std::vector<int>& x, int a, bool least) const {
    const auto& fam = families_[a - 1];
    long long eps = epsilon_from_family(fam, x);
    const PathData* pick = nullptr;
    for (const auto& p : fam) {  // fam sorted by (r, s) ascending
      if (dot(p.r, x) != eps) continue;
      pick = &p;
      if (least) break;
    }
    ensure(pick != nullptr, "crystal: no attaining path");
    return *pick;
  }

  void verify_step(const std::vector<int>& x, const std::vector<int>& y, int a,
                   const PathData& chosen, int sign, const char* op) const {
    Weight expect = weight(x) + sign * simple_root(word().n, a);
    bool ok = member(y) && weight(y) == expect;
    if (!ok) {
      std::ostringstream msg;
      msg << "crystal operator " << op << "_" << a << " left the polytope: word=(";
      for (std::size_t i = 0; i < word().letters.size(); ++i) {
        msg << (i ? "," : "") << word().letters[i];
      }
      msg << ") lambda=(";
      for (std::size_t i = 0; i < lambda().fw.size(); ++i) {
        msg << (i ? "," : "") << lambda().fw[i];
      }
      msg << ") x=(";
      for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? "," : "") << x[i];
      msg << ") s=(";
      for (std::size_t i = 0; i < chosen.s.size(); ++i) msg << (i ? "," : "") << chosen.s[i];
      msg << ")";
      throw internal_error(msg.str());
    }
  }

  StringPolytope polytope_;
  std::vector<std::vector<PathData>> families_;
};

// The crystal graph: vertices are the lattice points in lexicographic order,
// edges x --a--> f_a(x).
struct CrystalGraph {
  std::vector<std::vector<int>> vertices;
  std::vector<Weight> weights;
  struct Edge {
    int from, to, colour;
    friend bool operator==(const Edge& a, const Edge& b) {
      return a.from == b.from && a.to == b.to && a.colour == b.colour;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
      return std::tie(a.from, a.to, a.colour) < std::tie(b.from, b.to, b.colour);
    }
  };
  std::vector<Edge> edges;
};

inline CrystalGraph crystal_graph(const StringCrystal& cr) {
  CrystalGraph g;
  g.vertices = cr.polytope().points();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    index[g.vertices[i]] = static_cast<int>(i);
    g.weights.push_back(cr.weight(g.vertices[i]));
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (int a = 1; a <= cr.word().n - 1; ++a) {
      auto y = cr.f(g.vertices[i], a);
      if (!y) continue;
      auto it = index.find(*y);
      ensure(it != index.end(), "crystal graph: f image missing from polytope");
      g.edges.push_back(CrystalGraph::Edge{static_cast<int>(i), it->second, a});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"(";
    for (std::size_t k = 0; k < g.vertices[i].size(); ++k) {
      out << (k ? "," : "") << g.vertices[i][k];
    }
    out << ") wt=(";
    for (std::size_t k = 0; k < g.weights[i].fw.size(); ++k) {
      out << (k ? "," : "") << g.weights[i].fw[k];
    }
    out << ")\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.colour << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline nlohmann::ordered_json crystal_graph_to_json(const StringCrystal& cr,
                                                    const CrystalGraph& g) {
  nlohmann::ordered_json j =
      polytope_to_json(cr.word(), cr.lambda(), cr.polytope().system(), &g.vertices);
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["colour"] = e.colour;
    j["edges"].push_back(std::move(je));
  }
  return j;
}

}  // namespace strpoly
