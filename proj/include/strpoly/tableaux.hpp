// Semistandard Young tableaux model of the highest-weight crystals B(λ) for
// sl_n. This is the reference implementation the rest of the library is
// checked against: crystal operators via the signature rule on the reading
// word (rows read left to right, bottom row first), string-coordinate
// extraction, and the Lascoux-Schützenberger charge.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "strpoly/typea.hpp"

namespace strpoly {

struct Tableau {
  int n = 0;                          // entries range over 1..n
  std::vector<std::vector<int>> rows; // English notation, rows[0] on top

  bool empty() const { return rows.empty(); }
  int cells() const {
    int c = 0;
    for (const auto& r : rows) c += static_cast<int>(r.size());
    return c;
  }
  friend bool operator==(const Tableau& s, const Tableau& t) {
    return s.n == t.n && s.rows == t.rows;
  }
  friend bool operator<(const Tableau& s, const Tableau& t) { return s.rows < t.rows; }
};

inline bool is_semistandard(const Tableau& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > t.n) return false;
      if (c + 1 < row.size() && row[c] > row[c + 1]) return false;
      if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
          row[c] >= t.rows[r + 1][c]) {
        return false;
      }
    }
  }
  return true;
}

inline Tableau make_tableau(int n, std::vector<std::vector<int>> rows) {
  Tableau t{n, std::move(rows)};
  require(is_semistandard(t) || t.rows.empty(), "not a semistandard tableau");
  return t;
}

// Partition shape of the irreducible with highest weight λ: μ_i = Σ_{a>=i} λ_a.
inline std::vector<int> shape_of(const Weight& lambda) {
  require(lambda.dominant(), "shape: weight must be dominant");
  int n = lambda.rank();
  std::vector<int> mu;
  for (int i = 1; i <= n - 1; ++i) {
    int m = 0;
    for (int a = i; a <= n - 1; ++a) m += lambda.fw[a - 1];
    if (m > 0) mu.push_back(m);
  }
  return mu;
}

inline Tableau highest_weight_tableau(int n, const Weight& lambda) {
  auto shape = shape_of(lambda);
  Tableau t{n, {}};
  for (std::size_t r = 0; r < shape.size(); ++r) {
    t.rows.emplace_back(shape[r], static_cast<int>(r) + 1);
  }
  return t;
}

inline std::vector<int> content(const Tableau& t) {
  std::vector<int> c(t.n, 0);
  for (const auto& row : t.rows) {
    for (int e : row) ++c[e - 1];
  }
  return c;
}

inline Weight tableau_weight(const Tableau& t) {
  auto c = content(t);
  Weight w = zero_weight(t.n);
  for (int a = 1; a <= t.n - 1; ++a) w.fw[a - 1] = c[a - 1] - c[a];
  return w;
}

// Reading word: rows left to right, bottom row first.
inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  w.reserve(t.cells());
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    w.insert(w.end(), it->begin(), it->end());
  }
  return w;
}

namespace detail {

// Cell coordinates of the reading word, in word order.
inline std::vector<std::pair<int, int>> reading_cells(const Tableau& t) {
  std::vector<std::pair<int, int>> cells;
  for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
    for (int c = 0; c < static_cast<int>(t.rows[r].size()); ++c) cells.emplace_back(r, c);
  }
  return cells;
}

// Signature pairing for letter a: each `a` pairs with the nearest unpaired
// `a+1` to its left in the reading word. Returns the word indices of the
// unpaired a's and unpaired (a+1)'s.
struct Signature {
  std::vector<int> unpaired_low;   // letters equal to a, ascending positions
  std::vector<int> unpaired_high;  // letters equal to a+1, ascending positions
};

inline Signature signature(const std::vector<int>& word, int a) {
  Signature s;
  std::vector<int> stack;  // unpaired a+1 positions
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    if (word[i] == a + 1) {
      stack.push_back(i);
    } else if (word[i] == a) {
      if (!stack.empty()) {
        stack.pop_back();
      } else {
        s.unpaired_low.push_back(i);
      }
    }
  }
  s.unpaired_high = std::move(stack);
  return s;
}

}  // namespace detail

inline int tableau_phi(const Tableau& t, int a) {
  require(a >= 1 && a <= t.n - 1, "operator index out of range");
  return static_cast<int>(detail::signature(reading_word(t), a).unpaired_low.size());
}

inline int tableau_eps(const Tableau& t, int a) {
  require(a >= 1 && a <= t.n - 1, "operator index out of range");
  return static_cast<int>(detail::signature(reading_word(t), a).unpaired_high.size());
}

// f_a: turn the rightmost unpaired a into a+1.
inline std::optional<Tableau> tableau_f(const Tableau& t, int a) {
  require(a >= 1 && a <= t.n - 1, "operator index out of range");
  auto word = reading_word(t);
  auto sig = detail::signature(word, a);
  if (sig.unpaired_low.empty()) return std::nullopt;
  auto cell = detail::reading_cells(t)[sig.unpaired_low.back()];
  Tableau out = t;
  out.rows[cell.first][cell.second] = a + 1;
  ensure(is_semistandard(out), "tableau_f: produced a non-semistandard tableau");
  return out;
}

// e_a: turn the leftmost unpaired a+1 into a.
inline std::optional<Tableau> tableau_e(const Tableau& t, int a) {
  require(a >= 1 && a <= t.n - 1, "operator index out of range");
  auto word = reading_word(t);
  auto sig = detail::signature(word, a);
  if (sig.unpaired_high.empty()) return std::nullopt;
  auto cell = detail::reading_cells(t)[sig.unpaired_high.front()];
  Tableau out = t;
  out.rows[cell.first][cell.second] = a;
  ensure(is_semistandard(out), "tableau_e: produced a non-semistandard tableau");
  return out;
}

inline Tableau tableau_f_power(Tableau t, int a, int k) {
  for (int i = 0; i < k; ++i) {
    auto next = tableau_f(t, a);
    ensure(next.has_value(), "tableau_f_power: operator vanished early");
    t = *next;
  }
  return t;
}

inline Tableau tableau_e_power(Tableau t, int a, int k) {
  for (int i = 0; i < k; ++i) {
    auto next = tableau_e(t, a);
    ensure(next.has_value(), "tableau_e_power: operator vanished early");
    t = *next;
  }
  return t;
}

// The crystal B(λ) as an explicit graph, generated from the highest-weight
// tableau. `max_depth` truncates generation at a fixed number of lowering
// steps (the depth of b equals the coordinate sum of any of its strings).
struct TableauxCrystal {
  int n = 0;
  Weight lambda{};
  std::vector<Tableau> elements;              // BFS order, elements[0] = highest weight
  std::vector<std::vector<int>> f_edge;       // f_edge[id][a-1] = target id or -1
  std::vector<std::vector<int>> e_edge;
  std::map<std::vector<std::vector<int>>, int> index;

  int id_of(const Tableau& t) const {
    auto it = index.find(t.rows);
    ensure(it != index.end(), "crystal: element not generated");
    return it->second;
  }
};

inline TableauxCrystal generate_crystal(int n, const Weight& lambda, int max_depth = -1) {
  require(lambda.dominant(), "crystal: weight must be dominant");
  require(lambda.rank() == n, "crystal: rank mismatch");
  TableauxCrystal cr;
  cr.n = n;
  cr.lambda = lambda;
  Tableau hw = highest_weight_tableau(n, lambda);
  cr.index[hw.rows] = 0;
  cr.elements.push_back(hw);
  std::deque<std::pair<int, int>> queue;  // (id, depth)
  queue.emplace_back(0, 0);
  cr.f_edge.push_back(std::vector<int>(n - 1, -1));
  cr.e_edge.push_back(std::vector<int>(n - 1, -1));
  while (!queue.empty()) {
    auto [id, depth] = queue.front();
    queue.pop_front();
    if (max_depth >= 0 && depth >= max_depth) continue;
    Tableau t = cr.elements[id];
    for (int a = 1; a <= n - 1; ++a) {
      auto next = tableau_f(t, a);
      if (!next) continue;
      auto it = cr.index.find(next->rows);
      int nid;
      if (it == cr.index.end()) {
        nid = static_cast<int>(cr.elements.size());
        cr.index[next->rows] = nid;
        cr.elements.push_back(*next);
        cr.f_edge.push_back(std::vector<int>(n - 1, -1));
        cr.e_edge.push_back(std::vector<int>(n - 1, -1));
        queue.emplace_back(nid, depth + 1);
      } else {
        nid = it->second;
      }
      cr.f_edge[id][a - 1] = nid;
      cr.e_edge[nid][a - 1] = id;
    }
  }
  return cr;
}

// String coordinates of b with respect to a reduced word: x_k = ε_{i_k} of the
// current element, peeled by e_{i_k}^{x_k}, for k = 1..N. The result is
// re-verified by rebuilding b from the highest-weight tableau.
inline std::vector<int> adapted_string(const Tableau& b, const ReducedWord& word) {
  require(b.n == word.n, "adapted_string: rank mismatch");
  std::vector<int> x(word.length(), 0);
  Tableau cur = b;
  for (int k = 1; k <= word.length(); ++k) {
    int a = word.letters[k - 1];
    x[k - 1] = tableau_eps(cur, a);
    cur = tableau_e_power(cur, a, x[k - 1]);
  }
  Weight lam = tableau_weight(cur);
  ensure(cur == highest_weight_tableau(word.n, lam),
         "adapted_string: peeling did not reach the highest-weight tableau");
  // Rebuild, checking the defining vanishing conditions along the way.
  Tableau t = cur;
  for (int k = word.length(); k >= 1; --k) {
    int a = word.letters[k - 1];
    ensure(tableau_eps(t, a) == 0, "adapted_string: tail vanishing condition failed");
    t = tableau_f_power(t, a, x[k - 1]);
  }
  ensure(t == b, "adapted_string: reconstruction mismatch");
  return x;
}

// Direct count of semistandard tableaux of a given shape with entries <= n,
// used as an independent check of dimension formulas. Row fillings are
// enumerated cell by cell.
inline long long count_ssyt(const std::vector<int>& shape, int n) {
  if (shape.empty()) return 1;
  // previous row constraint: strict increase down columns
  std::function<long long(int, std::vector<int>&)> fill_row =
      [&](int r, std::vector<int>& prev) -> long long {
    if (r == static_cast<int>(shape.size())) return 1;
    long long total = 0;
    std::vector<int> row(shape[r]);
    std::function<void(int)> rec = [&](int c) {
      if (c == shape[r]) {
        total += fill_row(r + 1, row);
        return;
      }
      int lo = c > 0 ? row[c - 1] : 1;
      if (r > 0) lo = std::max(lo, prev[c] + 1);
      for (int v = lo; v <= n; ++v) {
        row[c] = v;
        rec(c + 1);
      }
    };
    rec(0);
    return total;
  };
  std::vector<int> none;
  return fill_row(0, none);
}

// Lascoux-Schützenberger charge of a tableau with weakly decreasing content.
// Standard subwords are extracted right to left with cyclic wraparound; the
// index of letter v+1 increments when it sits to the right of letter v.
inline long long charge(const Tableau& t) {
  auto c = content(t);
  while (!c.empty() && c.back() == 0) c.pop_back();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    require(c[i] >= c[i + 1], "charge: content must be a partition");
  }
  std::vector<int> word = reading_word(t);
  long long total = 0;
  while (!word.empty()) {
    int top = *std::max_element(word.begin(), word.end());
    std::vector<int> chosen(top + 1, -1);  // chosen[v] = position of letter v
    int anchor = static_cast<int>(word.size());
    for (int v = 1; v <= top; ++v) {
      int pos = -1;
      for (int i = anchor - 1; i >= 0; --i) {
        if (word[i] == v) {
          pos = i;
          break;
        }
      }
      if (pos < 0) {  // wrap: rightmost v anywhere
        for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
          if (word[i] == v) {
            pos = i;
            break;
          }
        }
      }
      ensure(pos >= 0, "charge: letter missing from partition-content word");
      chosen[v] = pos;
      anchor = pos;
    }
    long long index = 0;
    for (int v = 2; v <= top; ++v) {
      if (chosen[v] > chosen[v - 1]) ++index;
      total += index;
    }
    std::vector<bool> remove(word.size(), false);
    for (int v = 1; v <= top; ++v) remove[chosen[v]] = true;
    std::vector<int> rest;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!remove[i]) rest.push_back(word[i]);
    }
    word = std::move(rest);
  }
  return total;
}

inline std::string tableau_to_string(const Tableau& t) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out << ",";
    out << "[";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out << ",";
      out << t.rows[r][c];
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace strpoly
