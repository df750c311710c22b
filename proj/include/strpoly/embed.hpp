// Weight-zero translation vectors z_j in the string polytope of the highest
// root, the translation maps ψ_j : S_i(λ) -> S_i(λ+θ), wire-removal
// projections, and the checkers for the compatibility statements.
//
// z_j is defined through the tableaux crystal: apply f_1, ..., f_{j-1}, then
// f_{n-1}, f_{n-2}, ..., f_j to the highest-weight tableau of B(θ) and take
// string coordinates. The combinatorial descriptions of z_j (0/1 entries,
// support letters ordered like the defining subword up to commutation, and
// the wire characterization of z_1 and z_{n-1}) are asserted afterwards.
#pragma once

#include "json.hpp"
#include "strpoly/crystal.hpp"
#include "strpoly/tableaux.hpp"

namespace strpoly {

inline Weight string_weight(const ReducedWord& word, const Weight& lambda,
                            const std::vector<int>& x) {
  Weight w = lambda;
  for (int k = 0; k < word.length(); ++k) {
    w = w - x[k] * simple_root(word.n, word.letters[k]);
  }
  return w;
}

struct ZVector {
  int j = 1;
  std::vector<int> coords;
};

inline Tableau z_tableau(int n, int j) {
  require(n >= 2, "z: need n >= 2");
  require(j >= 1 && j <= n - 1, "z index out of range");
  Tableau t = highest_weight_tableau(n, highest_root(n));
  for (int a = 1; a <= j - 1; ++a) t = tableau_f_power(t, a, 1);
  for (int a = n - 1; a >= j; --a) t = tableau_f_power(t, a, 1);
  return t;
}

inline ZVector z_vector(const ReducedWord& word, int j) {
  int n = word.n;
  Tableau t = z_tableau(n, j);
  std::vector<int> x = adapted_string(t, word);

  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "z_" << j << " coordinate check failed (" << what << "): coords=(";
    for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? "," : "") << x[i];
    msg << ")";
    throw internal_error(msg.str());
  };

  if (!string_weight(word, highest_root(n), x).zero()) fail("weight");
  std::vector<int> pos_of_letter(n, 0);  // 1-based letters, 0 = unseen
  int support = 0;
  for (int k = 1; k <= word.length(); ++k) {
    int v = x[k - 1];
    if (v != 0 && v != 1) fail("entries");
    if (v == 1) {
      ++support;
      int letter = word.letters[k - 1];
      if (pos_of_letter[letter] != 0) fail("letter multiplicity");
      pos_of_letter[letter] = k;
    }
  }
  if (support != n - 1) fail("support size");
  // Support letters must realize the defining subword of z_j up to
  // commutation: j, j+1, ..., n-1 in order; j-1, j-2, ..., 1 in order; and j
  // before j-1.
  for (int a = j; a <= n - 2; ++a) {
    if (pos_of_letter[a] > pos_of_letter[a + 1]) fail("ascending segment order");
  }
  for (int a = 2; a <= j - 1; ++a) {
    if (pos_of_letter[a] > pos_of_letter[a - 1]) fail("descending segment order");
  }
  if (j >= 2 && pos_of_letter[j] > pos_of_letter[j - 1]) fail("segment interleaving");
  // Extremal support characterization: z_1 sits on the crossings of wire 1,
  // z_{n-1} on those of wire n.
  WiringDiagram d = WiringDiagram::build(word);
  if (j == 1 || j == n - 1) {
    int wire = j == 1 ? 1 : n;
    std::set<int> expect(d.route(wire).begin(), d.route(wire).end());
    std::set<int> got;
    for (int k = 1; k <= word.length(); ++k) {
      if (x[k - 1] == 1) got.insert(k);
    }
    if (expect != got) fail("wire support");
  }
  return ZVector{j, x};
}

// x + z_j, with membership in the target polytope asserted.
inline std::vector<int> psi(const ReducedWord& word, const Weight& lambda, int j,
                            const std::vector<int>& x) {
  StringPolytope source(word, lambda);
  require(source.contains(x), "psi: point is not in the source polytope");
  ZVector z = z_vector(word, j);
  std::vector<int> y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += z.coords[i];
  StringPolytope target(word, lambda + highest_root(word.n));
  ensure(target.contains(y), "psi: translate left the target polytope");
  return y;
}

struct MorphismViolation {
  std::string kind;  // "epsilon", "phi", "f", "e", "membership"
  int colour = 0;
  std::vector<int> x;
};

struct MorphismReport {
  ReducedWord word;
  Weight lambda;
  int j = 1;
  std::size_t points_checked = 0;
  std::vector<MorphismViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks, at every lattice point x of S(λ) with y = x + z_j:
//   ε_a(x) > 0  ⟹  ε_a(y) > 0,
//   φ_a(x) > 0  ⟹  φ_a(y) > 0,
//   f_a(y) = f_a(x) + z_j whenever f_a(x) is defined, and likewise for e.
// Violations are returned as data; nothing is asserted.
inline MorphismReport check_morphism(const ReducedWord& word, const Weight& lambda, int j,
                                     int jobs = 1) {
  MorphismReport report;
  report.word = word;
  report.lambda = lambda;
  report.j = j;
  StringCrystal source(word, lambda);
  StringCrystal target(word, lambda + highest_root(word.n));
  ZVector z = z_vector(word, j);
  const auto& pts = source.polytope().points();
  report.points_checked = pts.size();
  std::vector<std::vector<MorphismViolation>> slots(pts.size());
  parallel_for(jobs, pts.size(), [&](std::size_t idx) {
    const auto& x = pts[idx];
    std::vector<int> y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += z.coords[i];
    auto& out = slots[idx];
    if (!target.member(y)) {
      out.push_back(MorphismViolation{"membership", 0, x});
      return;
    }
    for (int a = 1; a <= word.n - 1; ++a) {
      if (source.epsilon(x, a) > 0 && target.epsilon(y, a) <= 0) {
        out.push_back(MorphismViolation{"epsilon", a, x});
      }
      if (source.phi(x, a) > 0 && target.phi(y, a) <= 0) {
        out.push_back(MorphismViolation{"phi", a, x});
      }
      if (auto fx = source.f(x, a)) {
        auto fy = target.f(y, a);
        std::vector<int> expect = *fx;
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += z.coords[i];
        if (!fy || *fy != expect) out.push_back(MorphismViolation{"f", a, x});
      }
      if (auto ex = source.e(x, a)) {
        auto ey = target.e(y, a);
        std::vector<int> expect = *ex;
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += z.coords[i];
        if (!ey || *ey != expect) out.push_back(MorphismViolation{"e", a, x});
      }
    }
  });
  for (auto& s : slots) {
    report.violations.insert(report.violations.end(), s.begin(), s.end());
  }
  return report;
}

enum class WireRemoval { first, last };

struct ProjectionResult {
  ReducedWord word;             // reduced word for the longest element of S_{n-1}
  std::vector<int> point;       // surviving coordinates in word order
  std::vector<int> kept_positions;
};

// Removes every crossing involving wire 1 (first) or wire n (last) and
// relabels the surviving crossings by the height order of the surviving
// wires.
inline ProjectionResult project(const ReducedWord& word, const std::vector<int>& x,
                                WireRemoval which) {
  int n = word.n;
  require(n >= 3, "project: need n >= 3");
  require(x.empty() || static_cast<int>(x.size()) == word.length(),
          "project: point has wrong dimension");
  WiringDiagram d = WiringDiagram::build(word);
  int removed = which == WireRemoval::first ? 1 : n;
  std::vector<int> order;  // surviving wires, bottom to top at the left boundary
  for (int w = 1; w <= n; ++w) {
    if (w != removed) order.push_back(w);
  }
  ProjectionResult out;
  std::vector<int> letters;
  for (const auto& c : d.crossings) {
    if (c.lower_wire == removed || c.upper_wire == removed) continue;
    auto it = std::find(order.begin(), order.end(), c.lower_wire);
    ensure(it != order.end(), "project: lost a wire");
    int idx = static_cast<int>(it - order.begin());
    ensure(idx + 1 < static_cast<int>(order.size()) && order[idx + 1] == c.upper_wire,
           "project: surviving crossing is not adjacent");
    letters.push_back(idx + 1);
    std::swap(order[idx], order[idx + 1]);
    out.kept_positions.push_back(c.position);
    if (!x.empty()) out.point.push_back(x[c.position - 1]);
  }
  out.word = ReducedWord::make(n - 1, std::move(letters));
  return out;
}

struct ProjectionTheoremReport {
  ReducedWord word;
  Weight lambda;
  int j = 1;
  bool found = false;
  bool extremal_image = false;  // sequence carries z_j onto a z of the target rank
  std::vector<WireRemoval> sequence;
  ReducedWord projected_word;
  int extremal_j = 0;  // 1 or (final rank) - 1, when extremal_image holds
  std::size_t points_checked = 0;
  std::vector<MorphismViolation> violations;

  bool ok() const { return found && violations.empty(); }
};

namespace detail {

inline std::pair<ReducedWord, std::vector<int>> apply_removals(
    const ReducedWord& word, std::vector<int> x, const std::vector<WireRemoval>& seq) {
  ReducedWord w = word;
  for (WireRemoval rem : seq) {
    auto res = project(w, x, rem);
    w = res.word;
    x = res.point;
  }
  return {w, x};
}

inline Weight restrict_weight(const Weight& lambda, const std::vector<WireRemoval>& seq) {
  Weight w = lambda;
  for (WireRemoval rem : seq) {
    std::vector<int> fw = w.fw;
    if (rem == WireRemoval::first) {
      fw.erase(fw.begin());
    } else {
      fw.pop_back();
    }
    w = Weight{fw};
  }
  return w;
}

}  // namespace detail

namespace detail {

inline std::vector<MorphismViolation> projected_violations(
    const ReducedWord& word, const Weight& lambda, const ZVector& z,
    const std::vector<WireRemoval>& seq, const std::vector<std::vector<int>>& pts,
    int jobs) {
  auto [w, pz] = apply_removals(word, z.coords, seq);
  Weight lam = restrict_weight(lambda, seq);
  WiringDiagram pd = WiringDiagram::build(w);
  std::vector<std::vector<PathData>> fams;
  for (int a = 1; a <= w.n - 1; ++a) fams.push_back(left_family(pd, a));
  std::vector<std::vector<MorphismViolation>> slots(pts.size());
  parallel_for(jobs, pts.size(), [&](std::size_t idx) {
    const auto& x = pts[idx];
    std::vector<int> y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += z.coords[i];
    auto px = apply_removals(word, x, seq).second;
    auto py = apply_removals(word, y, seq).second;
    auto& out = slots[idx];
    for (int a = 1; a <= w.n - 1; ++a) {
      int ex = epsilon_from_family(fams[a - 1], px);
      int ey = epsilon_from_family(fams[a - 1], py);
      if (ex > 0 && ey <= 0) out.push_back(MorphismViolation{"epsilon", a, x});
      int phix = ex + pairing(string_weight(w, lam, px), a);
      int phiy = ey + pairing(string_weight(w, lam + highest_root(w.n), py), a);
      if (phix > 0 && phiy <= 0) out.push_back(MorphismViolation{"phi", a, x});
    }
  });
  std::vector<MorphismViolation> flat;
  for (auto& s : slots) flat.insert(flat.end(), s.begin(), s.end());
  return flat;
}

}  // namespace detail

// Searches breadth-first for a removal sequence of length <= n-2 carrying z_j
// onto an extremal z at lower rank, then verifies the ε/φ implications for
// every lattice point of S(λ), with φ normalized by the restriction of λ.
//
// The extremal image exists for every word when j is 1 or n-1 (the empty
// sequence works) but not always for middle j: a wire removal can delete two
// marked crossings of z_j at once, leaving a vector that is no z of the
// smaller rank. When no extremal image exists the search falls back to the
// literal content of the statement — the shortest sequence whose projected
// implications hold outright — and records which mechanism applied.
inline ProjectionTheoremReport check_projection_theorem(const ReducedWord& word,
                                                        const Weight& lambda, int j,
                                                        int jobs = 1) {
  int n = word.n;
  require(j >= 1 && j <= n - 1, "z index out of range");
  ProjectionTheoremReport report;
  report.word = word;
  report.lambda = lambda;
  report.j = j;
  ZVector z = z_vector(word, j);
  StringPolytope source(word, lambda);
  const auto& pts = source.points();

  std::vector<std::vector<WireRemoval>> sequences = {{}};
  for (std::size_t head = 0; head < sequences.size(); ++head) {
    auto seq = sequences[head];
    int newlen = static_cast<int>(seq.size()) + 1;
    if (newlen <= n - 2 && n - newlen >= 2) {
      for (WireRemoval rem : {WireRemoval::first, WireRemoval::last}) {
        auto ext = seq;
        ext.push_back(rem);
        sequences.push_back(std::move(ext));
      }
    }
  }

  for (const auto& seq : sequences) {
    auto [w, pz] = detail::apply_removals(word, z.coords, seq);
    for (int je : {1, w.n - 1}) {
      if (z_vector(w, je).coords == pz) {
        report.found = true;
        report.extremal_image = true;
        report.sequence = seq;
        report.projected_word = w;
        report.extremal_j = je;
        break;
      }
    }
    if (report.found) break;
  }
  if (!report.found) {
    for (const auto& seq : sequences) {
      auto flat = detail::projected_violations(word, lambda, z, seq, pts, jobs);
      if (flat.empty()) {
        report.found = true;
        report.sequence = seq;
        report.projected_word = detail::apply_removals(word, z.coords, seq).first;
        break;
      }
    }
  }
  if (!report.found) return report;

  report.points_checked = pts.size();
  report.violations =
      detail::projected_violations(word, lambda, z, report.sequence, pts, jobs);
  return report;
}

inline nlohmann::ordered_json morphism_report_to_json(const MorphismReport& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word.letters;
  j["lambda"] = r.lambda.fw;
  j["j"] = r.j;
  j["points_checked"] = r.points_checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json jv;
    jv["kind"] = v.kind;
    jv["colour"] = v.colour;
    jv["x"] = v.x;
    j["violations"].push_back(std::move(jv));
  }
  j["status"] = r.ok() ? "ok" : "violated";
  return j;
}

inline nlohmann::ordered_json projection_report_to_json(const ProjectionTheoremReport& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word.letters;
  j["lambda"] = r.lambda.fw;
  j["j"] = r.j;
  j["found"] = r.found;
  j["mechanism"] = r.found ? (r.extremal_image ? "extremal-image" : "direct") : "none";
  j["sequence"] = nlohmann::ordered_json::array();
  for (WireRemoval rem : r.sequence) {
    j["sequence"].push_back(rem == WireRemoval::first ? "first" : "last");
  }
  if (r.found) {
    j["projected_word"] = r.projected_word.letters;
    if (r.extremal_image) j["extremal_j"] = r.extremal_j;
  }
  j["points_checked"] = r.points_checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json jv;
    jv["kind"] = v.kind;
    jv["colour"] = v.colour;
    jv["x"] = v.x;
    j["violations"].push_back(std::move(jv));
  }
  j["status"] = r.ok() ? "ok" : (r.found ? "violated" : "no-sequence");
  return j;
}

}  // namespace strpoly
