// Tensor products of seminormal crystals. Elements are duck-typed through the
// crystal_* overloads; Box is the standard crystal of the vector
// representation, and Tensor<L,R> combines any two models.
//
// Convention: f acts on the right factor first (f(x⊗y) = x⊗f(y) unless
// φ(y) <= ε(x)), matching the signature rule used for tableaux.
#pragma once

#include <optional>

#include "strpoly/tableaux.hpp"

namespace strpoly {

struct Box {
  int n = 0;
  int letter = 1;  // 1..n

  friend bool operator==(const Box& a, const Box& b) {
    return a.n == b.n && a.letter == b.letter;
  }
};

inline Weight crystal_wt(const Box& b) {
  Weight w = zero_weight(b.n);
  if (b.letter <= b.n - 1) w.fw[b.letter - 1] += 1;
  if (b.letter >= 2) w.fw[b.letter - 2] -= 1;
  return w;
}
inline int crystal_eps(const Box& b, int a) { return b.letter == a + 1 ? 1 : 0; }
inline int crystal_phi(const Box& b, int a) { return b.letter == a ? 1 : 0; }
inline std::optional<Box> crystal_f(const Box& b, int a) {
  if (b.letter != a) return std::nullopt;
  return Box{b.n, a + 1};
}
inline std::optional<Box> crystal_e(const Box& b, int a) {
  if (b.letter != a + 1) return std::nullopt;
  return Box{b.n, a};
}

inline Weight crystal_wt(const Tableau& t) { return tableau_weight(t); }
inline int crystal_eps(const Tableau& t, int a) { return tableau_eps(t, a); }
inline int crystal_phi(const Tableau& t, int a) { return tableau_phi(t, a); }
inline std::optional<Tableau> crystal_f(const Tableau& t, int a) { return tableau_f(t, a); }
inline std::optional<Tableau> crystal_e(const Tableau& t, int a) { return tableau_e(t, a); }

template <class L, class R>
struct Tensor {
  L left;
  R right;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.left == b.left && a.right == b.right;
  }
};

template <class L, class R>
Tensor<L, R> tensor(L l, R r) {
  return Tensor<L, R>{std::move(l), std::move(r)};
}

template <class L, class R>
Weight crystal_wt(const Tensor<L, R>& t) {
  return crystal_wt(t.left) + crystal_wt(t.right);
}

template <class L, class R>
int crystal_eps(const Tensor<L, R>& t, int a) {
  return std::max(crystal_eps(t.right, a),
                  crystal_eps(t.left, a) - pairing(crystal_wt(t.right), a));
}

template <class L, class R>
int crystal_phi(const Tensor<L, R>& t, int a) {
  return std::max(crystal_phi(t.left, a),
                  crystal_phi(t.right, a) + pairing(crystal_wt(t.left), a));
}

template <class L, class R>
std::optional<Tensor<L, R>> crystal_f(const Tensor<L, R>& t, int a) {
  if (crystal_phi(t.right, a) <= crystal_eps(t.left, a)) {
    auto fl = crystal_f(t.left, a);
    if (!fl) return std::nullopt;
    return Tensor<L, R>{*fl, t.right};
  }
  auto fr = crystal_f(t.right, a);
  if (!fr) return std::nullopt;
  return Tensor<L, R>{t.left, *fr};
}

template <class L, class R>
std::optional<Tensor<L, R>> crystal_e(const Tensor<L, R>& t, int a) {
  if (crystal_phi(t.right, a) < crystal_eps(t.left, a)) {
    auto el = crystal_e(t.left, a);
    if (!el) return std::nullopt;
    return Tensor<L, R>{*el, t.right};
  }
  auto er = crystal_e(t.right, a);
  if (!er) return std::nullopt;
  return Tensor<L, R>{t.left, *er};
}

}  // namespace strpoly
