#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "scoin/exactalg/linalg.hpp"
#include "scoin/superspace/element.hpp"

namespace scoin::harness {

/// Random element with a few terms; bidegree fixed when bos/ferm are nonnegative.
inline super::SuperElement random_element(std::mt19937& rng, int n, int terms, int maxdeg, int bos = -1,
                                          int ferm = -1) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, n - 1), deg(0, maxdeg), fd(0, n);
  super::SuperElement f(n);
  for (int t = 0; t < terms; ++t) {
    super::SuperMonomial m;
    int b = bos >= 0 ? bos : deg(rng);
    for (int k = 0; k < b; ++k) m.exps.add(var(rng), 1);
    int r = ferm >= 0 ? ferm : std::min(fd(rng), 2);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int k = 0; k < r && k < n; ++k) m.thetas |= 1u << idx[static_cast<std::size_t>(k)];
    f.add_term(m, coef(rng));
  }
  return f;
}

inline comb::Permutation random_permutation(std::mt19937& rng, int n) {
  comb::Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

/// About a third of the entries are zero; the rest are small fractions.
inline exact::QMatrix random_qmatrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> val(-2, 2), zero(0, 2);
  exact::QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = zero(rng) == 0 ? exact::Rational(0) : exact::Rational(val(rng), 1 + zero(rng));
  return m;
}

}  // namespace scoin::harness
