// String cones and string polytopes as integer inequality systems, plus
// lattice-point enumeration.
//
// The cone of a reduced word is cut out by the r-vectors of right paths:
// ⟨x, r(γ)⟩ >= 0 for every γ. The polytope for a dominant weight λ adds the
// triangular truncation rows x_r <= λ_{i_r} - Σ_{j>r} ⟨α_{i_j}, α_{i_r}^∨⟩ x_j,
// which bound the recursion coordinate by coordinate from the last letter to
// the first. Inequalities are stored uniformly as ⟨x, normal⟩ <= bound.
#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <tuple>

#include "json.hpp"
#include "strpoly/paths.hpp"

namespace strpoly {

struct Inequality {
  std::vector<int> normal;
  long long bound = 0;

  friend bool operator==(const Inequality& a, const Inequality& b) {
    return a.normal == b.normal && a.bound == b.bound;
  }
  friend bool operator<(const Inequality& a, const Inequality& b) {
    return std::tie(a.normal, a.bound) < std::tie(b.normal, b.bound);
  }
};

struct InequalitySystem {
  int dim = 0;
  std::vector<Inequality> rows;

  bool contains(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != dim) return false;
    for (int v : x) {
      if (v < 0) return false;
    }
    for (const auto& row : rows) {
      long long acc = 0;
      for (int i = 0; i < dim; ++i) acc += static_cast<long long>(row.normal[i]) * x[i];
      if (acc > row.bound) return false;
    }
    return true;
  }

  friend bool operator==(const InequalitySystem& a, const InequalitySystem& b) {
    return a.dim == b.dim && a.rows == b.rows;
  }
};

// ⟨x, r(γ)⟩ >= 0 over all right paths of all colours, encoded as
// ⟨x, -r(γ)⟩ <= 0, deduplicated and sorted.
inline InequalitySystem cone_inequalities(const WiringDiagram& d) {
  InequalitySystem sys;
  sys.dim = d.size();
  std::set<std::vector<int>> seen;
  for (int a = 1; a <= d.n() - 1; ++a) {
    for (const auto& p : enumerate_paths(d, a, PathSide::right)) {
      auto r = r_vector(d, p);
      std::vector<int> normal(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) normal[i] = -r[i];
      if (seen.insert(normal).second) sys.rows.push_back(Inequality{normal, 0});
    }
  }
  std::sort(sys.rows.begin(), sys.rows.end());
  return sys;
}

namespace detail {

inline std::vector<Inequality> truncation_rows(const ReducedWord& word, const Weight& lambda) {
  int N = word.length();
  std::vector<Inequality> rows;
  rows.reserve(N);
  for (int r = 1; r <= N; ++r) {
    Inequality row;
    row.normal.assign(N, 0);
    row.normal[r - 1] = 1;
    for (int j = r + 1; j <= N; ++j) {
      row.normal[j - 1] = cartan(word.letters[r - 1], word.letters[j - 1]);
    }
    row.bound = pairing(lambda, word.letters[r - 1]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

// The triangular system x_r <= ⟨λ - Σ_{j>r} x_j α_{i_j}, α_{i_r}^∨⟩ together
// with x_r >= 0. Its lattice points contain the string polytope; they agree
// with it exactly when intersected with the string cone.
inline InequalitySystem littelmann_inequalities(const ReducedWord& word, const Weight& lambda) {
  require(lambda.dominant(), "littelmann_inequalities: weight must be dominant");
  require(lambda.rank() == word.n, "littelmann_inequalities: rank mismatch");
  InequalitySystem sys;
  sys.dim = word.length();
  for (int r = 1; r <= sys.dim; ++r) {
    Inequality nz;
    nz.normal.assign(sys.dim, 0);
    nz.normal[r - 1] = -1;
    nz.bound = 0;
    sys.rows.push_back(std::move(nz));
  }
  auto rows = detail::truncation_rows(word, lambda);
  sys.rows.insert(sys.rows.end(), rows.begin(), rows.end());
  return sys;
}

// Cone inequalities plus the λ-truncation rows: the string polytope.
inline InequalitySystem polytope_inequalities(const WiringDiagram& d, const Weight& lambda) {
  require(lambda.dominant(), "polytope_inequalities: weight must be dominant");
  require(lambda.rank() == d.n(), "polytope_inequalities: rank mismatch");
  InequalitySystem sys = cone_inequalities(d);
  auto rows = detail::truncation_rows(d.word, lambda);
  sys.rows.insert(sys.rows.end(), rows.begin(), rows.end());
  return sys;
}

// All nonnegative integer solutions, in lexicographic order. Coordinates are
// bounded recursively from the last to the first using the rows supported on
// a suffix; remaining rows are enforced by a final filter. Throws if some
// coordinate has no suffix row bounding it above.
inline std::vector<std::vector<int>> enumerate_lattice_points(const InequalitySystem& sys) {
  int N = sys.dim;
  // suffix_rows[r] = rows with support in positions >= r and nonzero entry at r
  std::vector<std::vector<const Inequality*>> upper(N), lower(N);
  for (const auto& row : sys.rows) {
    int first = -1;
    for (int i = 0; i < N; ++i) {
      if (row.normal[i] != 0) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      require(row.bound >= 0, "enumerate_lattice_points: infeasible constant row");
      continue;
    }
    if (row.normal[first] > 0) {
      upper[first].push_back(&row);
    } else {
      lower[first].push_back(&row);
    }
  }
  for (int r = 0; r < N; ++r) {
    require(!upper[r].empty(), "enumerate_lattice_points: system is unbounded");
  }

  std::vector<std::vector<int>> out;
  std::vector<int> x(N, 0);
  std::function<void(int)> rec = [&](int r) {
    if (r < 0) {
      if (sys.contains(x)) out.push_back(x);
      return;
    }
    long long hi = std::numeric_limits<long long>::max();
    for (const Inequality* row : upper[r]) {
      long long rest = 0;
      for (int j = r + 1; j < N; ++j) rest += static_cast<long long>(row->normal[j]) * x[j];
      long long room = row->bound - rest;
      long long cap = room >= 0 ? room / row->normal[r] : -1;
      hi = std::min(hi, cap);
    }
    long long lo = 0;
    for (const Inequality* row : lower[r]) {
      long long rest = 0;
      for (int j = r + 1; j < N; ++j) rest += static_cast<long long>(row->normal[j]) * x[j];
      long long c = -row->normal[r];  // c > 0, row reads -c x_r + rest <= bound
      long long need = rest - row->bound;
      if (need > 0) lo = std::max(lo, (need + c - 1) / c);
    }
    for (long long v = lo; v <= hi; ++v) {
      x[r] = static_cast<int>(v);
      rec(r - 1);
    }
    x[r] = 0;
  };
  rec(N - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// A string polytope with its lattice points, enumerated on first use. Copies
// share the point cache; all other state is immutable.
class StringPolytope {
public:
  StringPolytope(ReducedWord word, Weight lambda)
      : word_(std::move(word)),
        lambda_(std::move(lambda)),
        diagram_(WiringDiagram::build(word_)),
        system_(polytope_inequalities(diagram_, lambda_)),
        cache_(std::make_shared<PointCache>()) {}

  const ReducedWord& word() const { return word_; }
  const Weight& lambda() const { return lambda_; }
  const WiringDiagram& diagram() const { return diagram_; }
  const InequalitySystem& system() const { return system_; }
  bool contains(const std::vector<int>& x) const { return system_.contains(x); }

  const std::vector<std::vector<int>>& points() const {
    std::call_once(cache_->flag, [this] { cache_->points = enumerate_lattice_points(system_); });
    return cache_->points;
  }

private:
  struct PointCache {
    std::once_flag flag;
    std::vector<std::vector<int>> points;
  };

  ReducedWord word_;
  Weight lambda_;
  WiringDiagram diagram_;
  InequalitySystem system_;
  std::shared_ptr<PointCache> cache_;
};

// JSON export with stable key order; parses back with from_polytope_json.
inline nlohmann::ordered_json polytope_to_json(const ReducedWord& word, const Weight& lambda,
                                               const InequalitySystem& sys,
                                               const std::vector<std::vector<int>>* points) {
  nlohmann::ordered_json j;
  j["word"] = word.letters;
  j["lambda"] = lambda.fw;
  j["inequalities"] = nlohmann::ordered_json::array();
  for (const auto& row : sys.rows) {
    nlohmann::ordered_json r;
    r["normal"] = row.normal;
    r["bound"] = row.bound;
    j["inequalities"].push_back(std::move(r));
  }
  if (points != nullptr) j["points"] = *points;
  return j;
}

struct PolytopeExport {
  ReducedWord word;
  Weight lambda;
  InequalitySystem system;
  std::vector<std::vector<int>> points;
};

inline PolytopeExport from_polytope_json(const nlohmann::json& j) {
  PolytopeExport out;
  std::vector<int> letters = j.at("word").get<std::vector<int>>();
  int maxl = 0;
  for (int a : letters) maxl = std::max(maxl, a);
  std::vector<int> lam = j.at("lambda").get<std::vector<int>>();
  out.word = ReducedWord::make(static_cast<int>(lam.size()) + 1, letters);
  out.lambda = Weight{lam};
  out.system.dim = out.word.length();
  for (const auto& r : j.at("inequalities")) {
    out.system.rows.push_back(
        Inequality{r.at("normal").get<std::vector<int>>(), r.at("bound").get<long long>()});
  }
  if (j.contains("points")) out.points = j.at("points").get<std::vector<std::vector<int>>>();
  return out;
}

}  // namespace strpoly
