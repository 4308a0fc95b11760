#pragma once

// Spheres and balls in the rho metric, composition counters, and weight spectra
// (brute force and closed forms).

#include <cstdint>
#include <string>
#include <vector>

#include "nrt/bigint.hpp"
#include "nrt/space.hpp"

namespace nrt {

// Compositions of r into exactly l parts, each in [1, s]. sigma(0,0,s) = 1.
BigInt sigma(std::size_t l, std::size_t r, std::size_t s);
// Vectors A in [0, s]^n with a_1 + ... + a_n = r.
BigInt sigma_tilde(std::size_t n, std::size_t r, std::size_t s);

BigInt binomial(std::size_t n, std::size_t k);

// Number of points of Q^n(q^s) at rho distance exactly r from the origin.
BigInt sphere_size(unsigned q, std::size_t n, std::size_t s, std::size_t r);
// Points at distance at most t.
BigInt ball_volume(unsigned q, std::size_t n, std::size_t s, std::size_t t);
// N * ball_volume(t) <= q^{ns}.
bool ball_packing_check(const BigInt& N, std::size_t t, unsigned q, std::size_t n, std::size_t s);

struct SpectrumVector {
  SpaceParams params;
  std::vector<BigInt> w;  // indices 0 .. ns
  std::vector<Label> anchor;
  std::string source;

  BigInt total() const;
  friend bool operator==(const SpectrumVector& a, const SpectrumVector& b) { return a.w == b.w; }
};

// Histogram of rho(X - anchor) over the given words; the anchor must be one of them.
SpectrumVector spectrum_bruteforce(const std::vector<CodeWord>& words, const CodeWord& anchor);

// Closed-form spectrum of an MDS [ns,k]_s code; both printed forms are available.
SpectrumVector spectrum_mds_formula(unsigned q, std::size_t n, std::size_t s, std::size_t k);
SpectrumVector spectrum_mds_formula_alt(unsigned q, std::size_t n, std::size_t s, std::size_t k);

// The k = s specialization with the sigma-tilde form.
SpectrumVector spectrum_net_formula(unsigned q, std::size_t n, std::size_t s);
// sigma_tilde(n,r) (q-1)^n q^{r - rho - n + 1}, valid for rho + n - 1 <= r <= ns.
BigInt spectrum_net_tail(unsigned q, std::size_t n, std::size_t s, std::size_t r);

// First two nonzero spectrum terms of an MDS code in closed form.
BigInt mds_first_term(unsigned q, std::size_t n, std::size_t s, std::size_t k);
BigInt mds_second_term(unsigned q, std::size_t n, std::size_t s, std::size_t k);
// Second term for k = s: (q-1) sigma_s(n, rho+1) (q-n+1); may be negative.
BigInt net_second_term(unsigned q, std::size_t n, std::size_t s);

// q >= n - 1.
bool existence_condition(std::size_t n, unsigned q);

}  // namespace nrt
