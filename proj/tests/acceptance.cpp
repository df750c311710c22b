// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails. Everything here is exact
// integer arithmetic; there are no tolerances to tune.
#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "strpoly/atoms.hpp"
#include "strpoly/tensor.hpp"

using namespace strpoly;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

std::vector<Weight> dominant_grid(int n, int percoord) {
  std::vector<Weight> out;
  std::vector<int> fw(n - 1, 0);
  std::function<void(int)> gen = [&](int i) {
    if (i == n - 1) {
      out.push_back(Weight{fw});
      return;
    }
    for (fw[i] = 0; fw[i] <= percoord; ++fw[i]) gen(i + 1);
    fw[i] = 0;
  };
  gen(0);
  return out;
}

// Adapted strings by the defining condition: candidates from the triangular
// system, kept iff the lowering chain through the tableaux crystal succeeds
// with every tail annihilated by the matching raising operator.
std::set<std::vector<int>> adapted_points(const ReducedWord& word, const Weight& lambda) {
  std::set<std::vector<int>> out;
  Tableau hw = highest_weight_tableau(word.n, lambda);
  for (const auto& x : enumerate_lattice_points(littelmann_inequalities(word, lambda))) {
    Tableau cur = hw;
    bool ok = true;
    for (int k = word.length(); k >= 1 && ok; --k) {
      int a = word.letters[k - 1];
      if (tableau_eps(cur, a) != 0) {
        ok = false;
        break;
      }
      for (int step = 0; step < x[k - 1] && ok; ++step) {
        auto next = tableau_f(cur, a);
        if (!next) {
          ok = false;
        } else {
          cur = *next;
        }
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

bool isomorphic_to_oracle(const ReducedWord& word, const Weight& lambda) {
  StringCrystal cr(word, lambda);
  TableauxCrystal oracle = generate_crystal(word.n, lambda);
  if (cr.polytope().points().size() != oracle.elements.size()) return false;
  std::set<std::vector<int>> seen;
  for (const auto& t : oracle.elements) {
    auto x = adapted_string(t, word);
    if (!cr.member(x) || !seen.insert(x).second) return false;
    if (!(cr.weight(x) == tableau_weight(t))) return false;
    for (int a = 1; a <= word.n - 1; ++a) {
      auto ft = tableau_f(t, a);
      auto fx = cr.f(x, a);
      if (ft.has_value() != fx.has_value()) return false;
      if (ft && adapted_string(*ft, word) != *fx) return false;
      auto et = tableau_e(t, a);
      auto ex = cr.e(x, a);
      if (et.has_value() != ex.has_value()) return false;
      if (et && adapted_string(*et, word) != *ex) return false;
    }
  }
  return true;
}

bool axioms_hold(const TableauxCrystal& cr) {
  int n = cr.n;
  for (const auto& b : cr.elements) {
    for (int a = 1; a <= n - 1; ++a) {
      auto fb = tableau_f(b, a);
      if (fb) {
        if (!(tableau_weight(*fb) == tableau_weight(b) - simple_root(n, a))) return false;
        auto back = tableau_e(*fb, a);
        if (!back || !(*back == b)) return false;
      }
      auto eb = tableau_e(b, a);
      if (eb) {
        if (!(tableau_weight(*eb) == tableau_weight(b) + simple_root(n, a))) return false;
        auto back = tableau_f(*eb, a);
        if (!back || !(*back == b)) return false;
      }
      if (tableau_phi(b, a) - tableau_eps(b, a) != pairing(tableau_weight(b), a)) return false;
    }
  }
  return true;
}

Tableau add_theta_column(const Tableau& t) {
  int n = t.n;
  Tableau out{n, {}};
  int rows = std::max<int>(static_cast<int>(t.rows.size()), n - 1);
  for (int r = 0; r < rows; ++r) {
    std::vector<int> row;
    if (r < n - 1) row.push_back(r + 1);
    if (r < static_cast<int>(t.rows.size())) {
      row.insert(row.end(), t.rows[r].begin(), t.rows[r].end());
    }
    out.rows.push_back(std::move(row));
  }
  out.rows[0].push_back(n);
  ensure(is_semistandard(out), "column map produced a non-semistandard tableau");
  return out;
}

bool partition_content(const Tableau& t) {
  auto c = content(t);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] < c[i + 1]) return false;
  }
  return true;
}

}  // namespace

int main() {
  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    started = std::chrono::steady_clock::now();
    return std::to_string(ms) + " ms";
  };

  // 1. weight-zero translation vectors of the two rank-five words
  {
    bool staircase_ok = true;
    auto staircase = ReducedWord::make(5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
    staircase_ok &=
        z_vector(staircase, 1).coords == std::vector<int>{1, 1, 1, 1, 0, 0, 0, 0, 0, 0};
    staircase_ok &=
        z_vector(staircase, 2).coords == std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0, 0, 0};
    staircase_ok &=
        z_vector(staircase, 3).coords == std::vector<int>{0, 0, 1, 1, 0, 1, 0, 1, 0, 0};
    staircase_ok &=
        z_vector(staircase, 4).coords == std::vector<int>{0, 0, 0, 1, 0, 0, 1, 0, 1, 1};
    auto interleaved = ReducedWord::make(5, {1, 3, 2, 4, 1, 3, 2, 4, 3, 1});
    std::set<int> support;
    auto z3 = z_vector(interleaved, 3).coords;
    for (int k = 1; k <= 10; ++k) {
      if (z3[k - 1] == 1) support.insert(k);
    }
    bool interleaved_ok = support == std::set<int>{2, 4, 7, 10};
    std::string detail = std::string("staircase fixtures ") + (staircase_ok ? "ok" : "bad");
    if (!interleaved_ok) {
      // The reference support {2,4,7,10} is the uncommuted greedy subword; it
      // is not a lattice point of the string cone. The verified value is
      // printed for comparison.
      detail += "; interleaved-word z_3 computed support {";
      bool first = true;
      for (int k : support) {
        detail += (first ? "" : ",") + std::to_string(k);
        first = false;
      }
      detail += "} does not match the stated {2,4,7,10}";
    }
    report(1, "weight-zero vectors match the rank-five fixtures",
           staircase_ok && interleaved_ok, detail + ", " + elapsed());
  }

  // 2 & 3. description equivalence and dimension counts on the full grid
  {
    bool equiv = true, dims = true;
    for (int n : {3, 4}) {
      for (const auto& letters : all_reduced_words(n)) {
        auto word = ReducedWord::make(n, letters);
        for (const auto& lambda : dominant_grid(n, 2)) {
          StringPolytope poly(word, lambda);
          std::set<std::vector<int>> path_points(poly.points().begin(), poly.points().end());
          equiv &= path_points == adapted_points(word, lambda);
          dims &= static_cast<long long>(poly.points().size()) == weyl_dimension(lambda);
        }
      }
    }
    auto word5 = ReducedWord::make(5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
    Weight theta5 = highest_root(5);
    StringPolytope poly5(word5, theta5);
    std::set<std::vector<int>> pts5(poly5.points().begin(), poly5.points().end());
    equiv &= pts5 == adapted_points(word5, theta5);
    dims &= poly5.points().size() == 24;
    StringPolytope poly3(ReducedWord::make(3, {2, 1, 2}), highest_root(3));
    dims &= poly3.points().size() == 8;
    report(2, "path and triangular descriptions carve out the same lattice points", equiv,
           elapsed());
    report(3, "lattice point counts equal the Weyl dimension", dims, elapsed());
  }

  // 4. crystal-oracle isomorphism (freezes the path order)
  {
    bool pass = true;
    for (int n : {3, 4}) {
      std::vector<Weight> lambdas = {highest_root(n), 2 * highest_root(n)};
      for (int a = 1; a <= n - 1; ++a) lambdas.push_back(fundamental_weight(n, a));
      for (const auto& letters : all_reduced_words(n)) {
        auto word = ReducedWord::make(n, letters);
        for (const auto& lambda : lambdas) pass &= isomorphic_to_oracle(word, lambda);
      }
    }
    report(4, "string crystals are isomorphic to the tableaux crystals", pass, elapsed());
  }

  // 5. embedding theorem for the extremal translations
  {
    bool pass = true;
    for (int n : {3, 4}) {
      std::vector<Weight> lambdas = {highest_root(n), 2 * highest_root(n)};
      for (const auto& letters : all_reduced_words(n)) {
        auto word = ReducedWord::make(n, letters);
        for (int j : {1, n - 1}) {
          for (const auto& lambda : lambdas) pass &= check_morphism(word, lambda, j).ok();
        }
      }
    }
    for (const auto& letters : std::vector<std::vector<int>>{{1, 2, 3, 4, 1, 2, 3, 1, 2, 1},
                                                             {1, 3, 2, 4, 1, 3, 2, 4, 3, 1},
                                                             lex_least_reduced_word(5).letters}) {
      auto word = ReducedWord::make(5, letters);
      for (int j : {1, 4}) pass &= check_morphism(word, highest_root(5), j).ok();
    }
    report(5, "extremal translations preserve positivity and commute with f and e", pass,
           elapsed());
  }

  // 6. projection corollary
  {
    bool pass = true;
    int no_extremal = 0, unverified = 0, cases = 0;
    for (int n : {3, 4}) {
      for (const auto& letters : all_reduced_words(n)) {
        auto word = ReducedWord::make(n, letters);
        for (int j = 1; j <= n - 1; ++j) {
          ++cases;
          auto rep = check_projection_theorem(word, highest_root(n), j);
          bool implications =
              rep.found && static_cast<int>(rep.sequence.size()) <= n - 2 && rep.ok();
          if (!implications) ++unverified;
          if (!rep.extremal_image) ++no_extremal;
          // the criterion demands the extremal image itself
          pass &= implications && rep.extremal_image;
        }
      }
    }
    std::string detail = "implications verified with zero violations in " +
                         std::to_string(cases - unverified) + "/" + std::to_string(cases) +
                         " cases";
    if (no_extremal > 0) {
      // A removal can delete two marked crossings of a middle z at once, so
      // no removal sequence carries it onto an extremal z for these words;
      // the fallback sequences still verify the implications outright.
      detail += "; no extremal-image sequence exists in " + std::to_string(no_extremal) +
                " cases";
    }
    report(6, "a short projection sequence reaches an extremal z and preserves positivity",
           pass, detail + ", " + elapsed());
  }

  // 7. complement atoms in B(k*theta)
  {
    bool pass = true;
    auto run_case = [&](const ReducedWord& word, int k, int i) {
      auto v = conjecture_atom(word, k, i);
      if (!v.atom.is_big_atom) {
        pass = false;
        std::cout << verdict_to_json(v).dump(2) << std::endl;
      }
    };
    for (const auto& letters : all_reduced_words(3)) {
      auto word = ReducedWord::make(3, letters);
      for (int k : {1, 2, 3}) {
        for (int i : {1, 2}) run_case(word, k, i);
      }
    }
    auto words4 = all_reduced_words(4);
    std::vector<std::vector<int>> chosen = {lex_least_reduced_word(4).letters};
    std::mt19937 rng(42);
    std::set<std::size_t> used;
    std::uniform_int_distribution<std::size_t> pick(0, words4.size() - 1);
    while (chosen.size() < 5) {
      std::size_t idx = pick(rng);
      if (words4[idx] == chosen.front() || !used.insert(idx).second) continue;
      chosen.push_back(words4[idx]);
    }
    for (const auto& letters : chosen) {
      auto word = ReducedWord::make(4, letters);
      for (int k : {1, 2}) {
        for (int i : {1, 2, 3}) run_case(word, k, i);
      }
    }
    auto word5 = ReducedWord::make(5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
    for (int i = 1; i <= 4; ++i) run_case(word5, 1, i);
    report(7, "every checked complement is a big atom", pass, elapsed());
  }

  // 8. the complement atom equals the f_2/Weyl orbit at rank three
  {
    bool pass = true;
    Weight theta = highest_root(3);
    for (const auto& letters : all_reduced_words(3)) {
      auto word = ReducedWord::make(3, letters);
      for (const auto& fw : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        Weight lambda{fw};
        auto orbit = patimo_atom_n3(word, lambda);
        StringPolytope poly(word, lambda);
        StringPolytope small(word, lambda - theta);
        auto z1 = z_vector(word, 1).coords;
        std::set<std::vector<int>> image;
        for (const auto& x : small.points()) {
          std::vector<int> y = x;
          for (std::size_t t = 0; t < y.size(); ++t) y[t] += z1[t];
          image.insert(y);
        }
        std::set<std::vector<int>> complement;
        for (const auto& x : poly.points()) {
          if (!image.count(x)) complement.insert(x);
        }
        pass &= complement == std::set<std::vector<int>>(orbit.begin(), orbit.end());
      }
    }
    report(8, "the translation complement equals the f_2/Weyl orbit atom", pass, elapsed());
  }

  // 9. the column-adding map shifts charge by one and realizes z_{n-1}
  {
    bool pass = true;
    for (int n : {3, 4}) {
      auto word = lex_least_reduced_word(n);
      auto zlast = z_vector(word, n - 1).coords;
      for (const auto& lambda : dominant_grid(n, 4)) {
        int total = 0;
        for (int c : lambda.fw) total += c;
        if (total > 4) continue;
        auto cr = generate_crystal(n, lambda);
        for (const auto& t : cr.elements) {
          Tableau image = add_theta_column(t);
          if (partition_content(t)) pass &= charge(image) == charge(t) + 1;
          auto x = adapted_string(t, word);
          auto y = adapted_string(image, word);
          for (int k = 0; k < word.length(); ++k) pass &= y[k] == x[k] + zlast[k];
        }
      }
    }
    report(9, "adding the highest-root column raises charge by one and translates by z",
           pass, elapsed());
  }

  // 10. axioms and tensor associativity on the oracle crystals
  {
    bool pass = true;
    for (int n : {3, 4}) {
      std::vector<Weight> lambdas = {highest_root(n), 2 * highest_root(n)};
      for (int a = 1; a <= n - 1; ++a) lambdas.push_back(fundamental_weight(n, a));
      for (const auto& lambda : lambdas) pass &= axioms_hold(generate_crystal(n, lambda));
    }
    pass &= axioms_hold(generate_crystal(5, highest_root(5)));
    for (int n : {2, 3}) {
      for (int i = 1; i <= n && pass; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            auto left = tensor(tensor(Box{n, i}, Box{n, j}), Box{n, k});
            auto right = tensor(Box{n, i}, tensor(Box{n, j}, Box{n, k}));
            for (int a = 1; a <= n - 1; ++a) {
              pass &= crystal_eps(left, a) == crystal_eps(right, a);
              pass &= crystal_phi(left, a) == crystal_phi(right, a);
              auto fl = crystal_f(left, a);
              auto fr = crystal_f(right, a);
              pass &= fl.has_value() == fr.has_value();
              if (fl && fr) {
                pass &= fl->left.left == fr->left && fl->left.right == fr->right.left &&
                        fl->right == fr->right.right;
              }
            }
          }
        }
      }
    }
    report(10, "crystal axioms and tensor associativity hold on the oracle", pass, elapsed());
  }

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
