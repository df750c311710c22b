// Atoms and big atoms of weight multisets, the conjecture checker for the
// complement construction in B(kθ), and the f_2/Weyl orbit atom at rank 3.
#pragma once

#include "json.hpp"
#include "strpoly/embed.hpp"

namespace strpoly {

struct WeightMultiset {
  std::map<std::vector<int>, long long> mult;  // fundamental coordinates -> count

  long long total() const {
    long long t = 0;
    for (const auto& [w, m] : mult) t += m;
    return t;
  }
};

inline WeightMultiset weight_multiset(const std::vector<std::vector<int>>& points,
                                      const Weight& lambda, const ReducedWord& word) {
  StringPolytope poly(word, lambda);
  WeightMultiset ms;
  for (const auto& x : points) {
    require(poly.contains(x), "weight_multiset: point outside the polytope");
    ++ms.mult[string_weight(word, lambda, x).fw];
  }
  return ms;
}

// The set of weights of the irreducible V(μ), from the tableaux crystal.
inline std::set<std::vector<int>> weight_set_of_irrep(const Weight& mu) {
  std::set<std::vector<int>> out;
  auto cr = generate_crystal(mu.rank(), mu);
  for (const auto& t : cr.elements) out.insert(tableau_weight(t).fw);
  return out;
}

// All dominant μ <= λ. Candidates are λ minus nonnegative root combinations;
// each root coefficient is bounded by the corresponding entry of C^{-1}λ,
// which is nonnegative because the inverse Cartan matrix has positive
// entries.
inline std::vector<Weight> dominant_weights_below(const Weight& lambda) {
  require(lambda.dominant(), "dominance walk: weight must be dominant");
  int n = lambda.rank();
  std::vector<long long> bound(n - 1, 0);
  for (int a = 1; a <= n - 1; ++a) {
    long long num = 0;
    for (int b = 1; b <= n - 1; ++b) {
      num += static_cast<long long>(std::min(a, b)) * (n - std::max(a, b)) * lambda.fw[b - 1];
    }
    bound[a - 1] = num / n;
  }
  std::vector<Weight> out;
  std::vector<long long> c(n - 1, 0);
  std::function<void(int)> rec = [&](int a) {
    if (a == n - 1) {
      Weight mu = lambda;
      for (int b = 1; b <= n - 1; ++b) {
        long long coeff = 0;
        for (int t = 1; t <= n - 1; ++t) coeff += c[t - 1] * cartan(t, b);
        mu.fw[b - 1] = lambda.fw[b - 1] - static_cast<int>(coeff);
      }
      if (mu.dominant()) out.push_back(mu);
      return;
    }
    for (c[a] = 0; c[a] <= bound[a]; ++c[a]) rec(a + 1);
    c[a] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct AtomReport {
  std::size_t subset_size = 0;
  bool is_atom = false;
  bool is_big_atom = false;
  std::optional<Weight> mu;
  std::vector<std::vector<int>> discrepancies;  // weights with multiplicity != 1
};

// A subset is an atom when its weight multiset is multiplicity-free and
// equals the weight set of V(μ) for some dominant μ <= λ; a big atom when
// μ = λ.
inline AtomReport is_atom(const std::vector<std::vector<int>>& subset, const Weight& lambda,
                          const ReducedWord& word) {
  AtomReport report;
  report.subset_size = subset.size();
  WeightMultiset ms = weight_multiset(subset, lambda, word);
  for (const auto& [w, m] : ms.mult) {
    if (m != 1) report.discrepancies.push_back(w);
  }
  if (!report.discrepancies.empty()) return report;
  std::set<std::vector<int>> weights;
  for (const auto& [w, m] : ms.mult) weights.insert(w);
  for (const Weight& mu : dominant_weights_below(lambda)) {
    if (weight_set_of_irrep(mu) == weights) {
      report.is_atom = true;
      report.mu = mu;
      report.is_big_atom = (mu == lambda);
      return report;
    }
  }
  return report;
}

struct ConjectureVerdict {
  int n = 0;
  ReducedWord word;
  int k = 1;
  int i = 1;
  AtomReport atom;
  std::size_t images_total = 0;  // Σ_j |im ψ_j|, before taking the union
  std::size_t union_size = 0;
  std::size_t crystal_size = 0;
};

// A_i = S(kθ) minus the union over j != i of the z_j-translates of
// S((k-1)θ); reports whether A_i is a big atom in B(kθ). Nothing is
// asserted: a false verdict is data.
inline ConjectureVerdict conjecture_atom(const ReducedWord& word, int k, int i, int jobs = 1) {
  int n = word.n;
  require(k >= 1, "conjecture: need k >= 1");
  require(i >= 1 && i <= n - 1, "conjecture: index out of range");
  Weight theta = highest_root(n);
  Weight big = k * theta;
  Weight small = (k - 1) * theta;
  StringPolytope top(word, big);
  StringPolytope below(word, small);
  ConjectureVerdict verdict;
  verdict.n = n;
  verdict.word = word;
  verdict.k = k;
  verdict.i = i;
  verdict.crystal_size = top.points().size();

  std::vector<ZVector> zs;
  for (int j = 1; j <= n - 1; ++j) {
    if (j != i) zs.push_back(z_vector(word, j));
  }
  const auto& base = below.points();
  std::vector<std::vector<int>> translates(zs.size() * base.size());
  parallel_for(jobs, translates.size(), [&](std::size_t idx) {
    const ZVector& z = zs[idx / base.size()];
    const auto& x = base[idx % base.size()];
    std::vector<int> y = x;
    for (std::size_t t = 0; t < y.size(); ++t) y[t] += z.coords[t];
    ensure(top.contains(y), "conjecture: translate left the polytope");
    translates[idx] = std::move(y);
  });
  verdict.images_total = translates.size();
  std::set<std::vector<int>> image_union(translates.begin(), translates.end());
  verdict.union_size = image_union.size();

  std::vector<std::vector<int>> complement;
  for (const auto& x : top.points()) {
    if (!image_union.count(x)) complement.push_back(x);
  }
  verdict.atom = is_atom(complement, big, word);
  return verdict;
}

inline nlohmann::ordered_json verdict_to_json(const ConjectureVerdict& v) {
  nlohmann::ordered_json j;
  j["n"] = v.n;
  j["word"] = v.word.letters;
  j["k"] = v.k;
  j["i"] = v.i;
  j["atom"] = v.atom.is_atom;
  j["big_atom"] = v.atom.is_big_atom;
  if (v.atom.mu) {
    j["mu"] = v.atom.mu->fw;
  } else {
    j["mu"] = nullptr;
  }
  j["atom_size"] = v.atom.subset_size;
  j["counterexample_weights"] = v.atom.discrepancies;
  j["image_union_size"] = v.union_size;
  j["images_total"] = v.images_total;
  j["crystal_size"] = v.crystal_size;
  return j;
}

// Weyl group action on crystal points: s_a reverses every a-string, sending x
// to f_a^{t}(x) when t = ⟨wt(x), α_a^∨⟩ >= 0 and to e_a^{-t}(x) otherwise.
inline std::vector<int> weyl_reflect(const StringCrystal& cr, std::vector<int> x, int a) {
  int t = pairing(cr.weight(x), a);
  for (int step = 0; step < t; ++step) {
    auto y = cr.f(x, a);
    ensure(y.has_value(), "weyl_reflect: string ended early");
    x = *y;
  }
  for (int step = 0; step < -t; ++step) {
    auto y = cr.e(x, a);
    ensure(y.has_value(), "weyl_reflect: string ended early");
    x = *y;
  }
  return x;
}

// Rank-3 comparison atom: the closure of the highest-weight point under f_2
// and the Weyl group action. Requires λ strictly dominant.
inline std::vector<std::vector<int>> patimo_atom_n3(const ReducedWord& word,
                                                    const Weight& lambda) {
  require(word.n == 3, "patimo_atom_n3: rank 3 only");
  require(lambda.fw[0] >= 1 && lambda.fw[1] >= 1,
          "patimo_atom_n3: weight must be strictly dominant");
  StringCrystal cr(word, lambda);
  std::set<std::vector<int>> closure;
  std::vector<std::vector<int>> queue = {std::vector<int>(word.length(), 0)};
  closure.insert(queue.front());
  while (!queue.empty()) {
    auto x = queue.back();
    queue.pop_back();
    std::vector<std::vector<int>> nexts;
    if (auto y = cr.f(x, 2)) nexts.push_back(*y);
    nexts.push_back(weyl_reflect(cr, x, 1));
    nexts.push_back(weyl_reflect(cr, x, 2));
    for (auto& y : nexts) {
      if (closure.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<std::vector<int>>(closure.begin(), closure.end());
}

}  // namespace strpoly
