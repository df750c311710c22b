// Root-system data for sl_n (type A_{n-1}): weights in the fundamental-weight
// basis, the Cartan pairing, dominance order, reduced words of the longest
// element of S_n, and the Weyl dimension formula.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "strpoly/core.hpp"

namespace strpoly {

// Number of positive roots = length of w_0 in S_n.
inline int longest_length(int n) {
  require(n >= 2, "rank: need n >= 2");
  return n * (n - 1) / 2;
}

// ⟨α_b, α_a^∨⟩ for simple roots of type A.
inline int cartan(int a, int b) {
  if (a == b) return 2;
  if (a == b + 1 || b == a + 1) return -1;
  return 0;
}

// Integral weight λ = Σ λ_a ω_a, stored as the vector (λ_1, ..., λ_{n-1}).
struct Weight {
  std::vector<int> fw;

  int rank() const { return static_cast<int>(fw.size()) + 1; }
  bool dominant() const {
    return std::all_of(fw.begin(), fw.end(), [](int c) { return c >= 0; });
  }
  bool zero() const {
    return std::all_of(fw.begin(), fw.end(), [](int c) { return c == 0; });
  }
  friend bool operator==(const Weight& x, const Weight& y) { return x.fw == y.fw; }
  friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
  friend bool operator<(const Weight& x, const Weight& y) { return x.fw < y.fw; }
  friend Weight operator+(const Weight& x, const Weight& y) {
    require(x.fw.size() == y.fw.size(), "weight: rank mismatch");
    Weight z = x;
    for (std::size_t i = 0; i < z.fw.size(); ++i) z.fw[i] += y.fw[i];
    return z;
  }
  friend Weight operator-(const Weight& x, const Weight& y) {
    require(x.fw.size() == y.fw.size(), "weight: rank mismatch");
    Weight z = x;
    for (std::size_t i = 0; i < z.fw.size(); ++i) z.fw[i] -= y.fw[i];
    return z;
  }
  friend Weight operator*(int k, const Weight& x) {
    Weight z = x;
    for (auto& c : z.fw) c *= k;
    return z;
  }
};

inline Weight zero_weight(int n) { return Weight{std::vector<int>(n - 1, 0)}; }

inline Weight fundamental_weight(int n, int a) {
  require(a >= 1 && a <= n - 1, "fundamental weight index out of range");
  Weight w = zero_weight(n);
  w.fw[a - 1] = 1;
  return w;
}

// α_a expressed in fundamental-weight coordinates (a row of the Cartan matrix).
inline Weight simple_root(int n, int a) {
  require(a >= 1 && a <= n - 1, "simple root index out of range");
  Weight w = zero_weight(n);
  for (int b = 1; b <= n - 1; ++b) w.fw[b - 1] = cartan(a, b);
  return w;
}

// ⟨λ, α_a^∨⟩; reads off the a-th fundamental coordinate.
inline int pairing(const Weight& lambda, int a) {
  require(a >= 1 && a <= lambda.rank() - 1, "pairing: index out of range");
  return lambda.fw[a - 1];
}

// Integer vector in the simple-root basis.
struct RootVector {
  std::vector<long long> coords;
};

inline Weight to_weight(int n, const RootVector& r) {
  require(static_cast<int>(r.coords.size()) == n - 1, "root vector: rank mismatch");
  Weight w = zero_weight(n);
  for (int b = 1; b <= n - 1; ++b) {
    long long acc = 0;
    for (int a = 1; a <= n - 1; ++a) acc += r.coords[a - 1] * cartan(a, b);
    w.fw[b - 1] = static_cast<int>(acc);
  }
  return w;
}

// Pairing against a vector in the simple-root basis applies the Cartan row.
inline long long pairing(int n, const RootVector& r, int a) {
  require(a >= 1 && a <= n - 1, "pairing: index out of range");
  require(static_cast<int>(r.coords.size()) == n - 1, "root vector: rank mismatch");
  long long acc = 0;
  for (int b = 1; b <= n - 1; ++b) acc += r.coords[b - 1] * cartan(a, b);
  return acc;
}

// Exact root-basis coordinates of a weight, when they are integral.
// Uses the closed form of the inverse Cartan matrix of type A:
// (C^{-1})_{ab} = min(a,b) (n - max(a,b)) / n.
inline std::optional<RootVector> root_coordinates(const Weight& w) {
  int n = w.rank();
  RootVector r;
  r.coords.resize(n - 1);
  for (int a = 1; a <= n - 1; ++a) {
    long long num = 0;
    for (int b = 1; b <= n - 1; ++b) {
      num += static_cast<long long>(std::min(a, b)) * (n - std::max(a, b)) * w.fw[b - 1];
    }
    if (num % n != 0) return std::nullopt;
    r.coords[a - 1] = num / n;
  }
  return r;
}

// Dominance order: mu <= lambda iff lambda - mu is a nonnegative integer
// combination of simple roots.
inline bool dominance_leq(const Weight& mu, const Weight& lambda) {
  require(mu.rank() == lambda.rank(), "dominance: rank mismatch");
  auto diff = root_coordinates(lambda - mu);
  if (!diff) return false;
  return std::all_of(diff->coords.begin(), diff->coords.end(),
                     [](long long c) { return c >= 0; });
}

// Highest root θ: ω_1 + ω_{n-1} for n >= 3, 2ω_1 for n = 2.
inline Weight highest_root(int n) {
  require(n >= 2, "highest root: need n >= 2");
  Weight w = zero_weight(n);
  if (n == 2) {
    w.fw[0] = 2;
  } else {
    w.fw[0] = 1;
    w.fw[n - 2] = 1;
  }
  return w;
}

// dim V(λ) by the Weyl formula, as an exact integer. Positive roots of type
// A_{n-1} are indexed by 1 <= i < j <= n and pair with λ + ρ to
// (j - i) + λ_i + ... + λ_{j-1}.
inline long long weyl_dimension(const Weight& lambda) {
  require(lambda.dominant(), "weyl_dimension: weight must be dominant");
  int n = lambda.rank();
  long long num = 1, den = 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      long long top = j - i;
      for (int a = i; a <= j - 1; ++a) top += lambda.fw[a - 1];
      num *= top;
      den *= (j - i);
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  ensure(den == 1, "weyl_dimension: non-integral product");
  return num;
}

// A reduced expression of the longest element of S_n, validated on creation.
struct ReducedWord {
  int n = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }

  static ReducedWord make(int n, std::vector<int> letters);
};

// True iff `letters` is a reduced word for w_0 in S_n. Runs the permutation
// product: a word of length n(n-1)/2 multiplying to the order-reversing
// permutation is automatically reduced.
inline bool is_reduced_longest(const std::vector<int>& letters, int n) {
  require(n >= 2, "need n >= 2");
  require(!letters.empty(), "word must be nonempty");
  for (int a : letters) require(a >= 1 && a <= n - 1, "letter out of range");
  if (static_cast<int>(letters.size()) != longest_length(n)) return false;
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  for (int a : letters) std::swap(line[a - 1], line[a]);
  for (int i = 0; i < n; ++i) {
    if (line[i] != n - i) return false;
  }
  return true;
}

inline ReducedWord ReducedWord::make(int n, std::vector<int> letters) {
  require(is_reduced_longest(letters, n), "not a reduced word for the longest element");
  return ReducedWord{n, std::move(letters)};
}

inline bool operator==(const ReducedWord& a, const ReducedWord& b) {
  return a.n == b.n && a.letters == b.letters;
}

// All reduced words for w_0 in S_n, sorted lexicographically. Exponential in
// n; intended for small ranks.
inline std::vector<std::vector<int>> all_reduced_words(int n) {
  require(n >= 2, "need n >= 2");
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
  std::vector<int> id(n), w0(n);
  std::iota(id.begin(), id.end(), 1);
  for (int i = 0; i < n; ++i) w0[i] = n - i;

  std::function<const std::vector<std::vector<int>>&(const std::vector<int>&)> words =
      [&](const std::vector<int>& w) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (w == id) {
      out.push_back({});
    } else {
      for (int i = 1; i <= n - 1; ++i) {
        if (w[i - 1] > w[i]) {  // right descent: w s_i is shorter
          std::vector<int> v = w;
          std::swap(v[i - 1], v[i]);
          for (const auto& u : words(v)) {
            auto word = u;
            word.push_back(i);
            out.push_back(std::move(word));
          }
        }
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  };

  auto result = words(w0);
  std::sort(result.begin(), result.end());
  return result;
}

// The lexicographically least reduced word of w_0: ascending staircase blocks
// (1), (2,1), (3,2,1), ...
inline ReducedWord lex_least_reduced_word(int n) {
  std::vector<int> letters;
  for (int t = 1; t <= n - 1; ++t) {
    for (int a = t; a >= 1; --a) letters.push_back(a);
  }
  return ReducedWord::make(n, std::move(letters));
}

}  // namespace strpoly
