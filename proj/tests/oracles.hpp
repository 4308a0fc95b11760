#pragma once

// Slow, direct reimplementations used as test oracles. None of these call into the
// code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "nrt/bigint.hpp"
#include "nrt/codes.hpp"
#include "nrt/geometry.hpp"
#include "nrt/space.hpp"

namespace oracle {

using nrt::Label;

// Schoolbook F_p[z] / (modulus) arithmetic on digit vectors.
struct SlowField {
  unsigned p, e;
  std::vector<unsigned> modulus;  // e+1 coefficients, monic

  std::vector<unsigned> digits(unsigned m) const {
    std::vector<unsigned> d(e);
    for (unsigned i = 0; i < e; ++i, m /= p) d[i] = m % p;
    return d;
  }
  unsigned label(const std::vector<unsigned>& d) const {
    unsigned m = 0;
    for (unsigned i = e; i-- > 0;) m = m * p + d[i];
    return m;
  }
  unsigned add(unsigned a, unsigned b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return label(x);
  }
  unsigned mul(unsigned a, unsigned b) const {
    auto x = digits(a), y = digits(b);
    std::vector<unsigned> prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (unsigned d = 2 * e - 1; d >= e; --d) {
      const unsigned c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + p * p - c * modulus[i] % p) % p;
    }
    prod.resize(e);
    return label(prod);
  }
};

inline std::size_t rho(const nrt::CodeWord& w) {
  std::size_t total = 0;
  for (std::size_t j = 0; j < w.n(); ++j) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < w.s(); ++i)
      if (w.at(j, i) != 0) r = i + 1;
    total += r;
  }
  return total;
}

inline std::size_t kappa(const nrt::CodeWord& w) {
  return static_cast<std::size_t>(std::count_if(w.flat().begin(), w.flat().end(), [](Label x) { return x != 0; }));
}

// Every word of Mat_{n,s}(F_q).
inline void for_each_matrix(const nrt::Field& f, std::size_t n, std::size_t s,
                            const std::function<void(const nrt::CodeWord&)>& fn) {
  std::vector<Label> e(n * s, 0);
  while (true) {
    fn(nrt::CodeWord(f, n, s, e));
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == f.q()) e[i++] = 0;
    if (i == e.size()) return;
  }
}

// Every combination of the basis rows, by explicit coefficient loops.
inline std::vector<nrt::CodeWord> words_of(const nrt::LinearCode& c) {
  const nrt::Field& f = c.field();
  std::vector<nrt::CodeWord> out;
  std::vector<Label> coeff(c.k(), 0);
  while (true) {
    std::vector<Label> w(c.n() * c.s(), 0);
    for (std::size_t r = 0; r < c.k(); ++r)
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = f.add(w[i], f.mul(coeff[r], c.basis().at(r, i)));
    out.emplace_back(f, c.n(), c.s(), w);
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == f.q()) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

inline std::size_t min_weight(const nrt::LinearCode& c, bool use_rho) {
  std::size_t best = SIZE_MAX;
  for (const auto& w : words_of(c))
    if (!w.is_zero()) best = std::min(best, use_rho ? rho(w) : kappa(w));
  return best;
}

// Numerator of coordinate j, read from the digits directly.
inline std::uint64_t numerator(const nrt::CodeWord& w, std::size_t j) {
  std::uint64_t v = 0;
  for (std::size_t i = w.s(); i-- > 0;) v = v * w.field().q() + w.at(j, i);
  return v;
}

// sup over y of |#{x < y}/N - vol[0,y)|, with y over the full grid {0, 1/Q, ..., 1}^n and
// both open and closed limits, evaluated naively.
inline nrt::Rational star_discrepancy(const nrt::Distribution& d) {
  const std::size_t n = d.n();
  std::uint64_t Q = 1;
  for (std::size_t i = 0; i < d.s(); ++i) Q *= d.field().q();
  std::vector<std::vector<std::uint64_t>> pts;
  for (const auto& x : d.points()) {
    std::vector<std::uint64_t> v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(numerator(x.word(), j));
    pts.push_back(v);
  }
  const nrt::Rational N(static_cast<long long>(d.size()));
  nrt::Rational best = 0;
  std::vector<std::uint64_t> y(n, 0);
  while (true) {
    nrt::Rational vol = 1;
    for (auto yj : y) vol *= nrt::Rational(static_cast<long long>(yj), static_cast<long long>(Q));
    std::uint64_t open = 0, closed = 0;
    for (const auto& x : pts) {
      bool o = true, c = true;
      for (std::size_t j = 0; j < n; ++j) {
        o = o && x[j] < y[j];
        c = c && x[j] <= y[j];
      }
      open += o;
      closed += c;
    }
    best = std::max(best, vol - nrt::Rational(static_cast<long long>(open)) / N);
    best = std::max(best, nrt::Rational(static_cast<long long>(closed)) / N - vol);
    std::size_t i = 0;
    while (i < n && ++y[i] == Q + 1) y[i++] = 0;
    if (i == n) break;
  }
  return best;
}

// Classical Hamming MDS weight distribution A_w of an [n,k] code, d = n-k+1.
inline nrt::BigInt hamming_mds_weight(unsigned q, std::size_t n, std::size_t k, std::size_t w) {
  if (w == 0) return 1;
  const std::size_t d = n - k + 1;
  if (w < d) return 0;
  nrt::BigInt sum = 0;
  for (std::size_t j = 0; j <= w - d; ++j) {
    nrt::BigInt term = nrt::binomial(w, j) * (nrt::big_pow(q, static_cast<unsigned>(w - d + 1 - j)) - 1);
    sum += (j % 2 ? -term : term);
  }
  return nrt::binomial(n, w) * sum;
}

inline nrt::CodeWord random_word(const nrt::Field& f, std::size_t n, std::size_t s, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> dist(0, f.q() - 1);
  std::vector<Label> e(n * s);
  for (auto& x : e) x = dist(rng);
  return nrt::CodeWord(f, n, s, e);
}

}  // namespace oracle
