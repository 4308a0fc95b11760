#pragma once

// Linear codes in Mat_{n,s}(F_q): weights, duality under the reversed inner product,
// parity checks, and subspace enumeration.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "nrt/geometry.hpp"
#include "nrt/matrix.hpp"
#include "nrt/space.hpp"
#include "nrt/spectra.hpp"

namespace nrt {

enum class Metric { rho, kappa };

// Codes with at most this many words are enumerated directly.
inline constexpr std::uint64_t kEnumerationBound = 1u << 22;

class LinearCode {
 public:
  // Any spanning set; rows of length n*s in row-major n x s layout. Stored in RREF.
  LinearCode(const Field& f, std::size_t n, std::size_t s, Matrix generators);

  static LinearCode zero(const Field& f, std::size_t n, std::size_t s);
  static LinearCode whole_space(const Field& f, std::size_t n, std::size_t s);
  static LinearCode span_of(const Field& f, std::size_t n, std::size_t s, const std::vector<CodeWord>& words);

  const Field& field() const { return basis_.field(); }
  std::size_t n() const { return n_; }
  std::size_t s() const { return s_; }
  std::size_t k() const { return basis_.rows(); }
  SpaceParams params() const { return {field().q(), n_, s_}; }
  const Matrix& basis() const { return basis_; }
  CodeWord basis_word(std::size_t i) const;

  // q^k; throws when it does not fit in 64 bits.
  std::uint64_t size() const;
  bool contains(std::span<const Label> flat) const;
  bool contains(const CodeWord& w) const { return contains(w.flat()); }

  // Visits every word, coefficient vectors in colex order (first coefficient fastest).
  void for_each_word(const std::function<void(std::span<const Label>)>& fn) const;
  std::vector<CodeWord> words() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.s_ == b.s_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_, s_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t word_weight(std::span<const Label> flat, std::size_t s, Metric m);

// Minimum weight over nonzero words. Throws for the zero code.
std::size_t code_weight(const LinearCode& c, Metric m);
// As above, by enumerating all words regardless of size.
std::size_t code_weight_bruteforce(const LinearCode& c, Metric m);
// rho(C) = ns - k + 1; the zero code counts as MDS.
bool is_mds(const LinearCode& c);

// Weight of the dual, with the zero code treated as having infinite weight.
std::optional<std::size_t> weight_or_infinity(const LinearCode& c, Metric m);

LinearCode dual_code(const LinearCode& c);

// H ω^T = 0 over the flattened word with the ordinary dot product.
struct ParityCheck {
  const Field* field = nullptr;
  std::size_t n = 0, s = 0;
  Matrix h;  // rows = rank, cols = n s

  // Column i of block j is column j*s + i of h (i 0-based, xi order).
  std::vector<Label> column(std::size_t j, std::size_t i) const;
};

ParityCheck parity_check(const LinearCode& c);
LinearCode code_of(const ParityCheck& h);

// Least d_1 + ... + d_n over nonzero (d_1..d_n), 0 <= d_j <= s, such that the first d_j
// columns of every block H_j are linearly dependent. nullopt when no such set exists
// (the code is zero).
std::optional<std::size_t> rho_sharp(const ParityCheck& h);
// Hamming analogue: least number of dependent columns.
std::optional<std::size_t> kappa_sharp(const ParityCheck& h);

// Minimum rho distance between distinct elements of a point multiset; 0 when a point repeats.
std::size_t rho_of_distribution(const Distribution& d);

Distribution distribution_of(const LinearCode& c);
// Throws when the multiset is not a subspace.
LinearCode linear_code_of(const Distribution& d);
bool is_linear(const Distribution& d);

// V_A = words whose row j vanishes in its top a_j digits, i.e. D ∩ Δ^0_A for the whole space.
LinearCode v_subspace(const Field& f, std::size_t s, const std::vector<std::size_t>& a);

// Calls fn on every subspace of Mat_{n,s}(F_q) (every dimension) via RREF enumeration.
void for_each_subspace(const Field& f, std::size_t n, std::size_t s, const std::function<void(const LinearCode&)>& fn);

LinearCode random_code(const Field& f, std::size_t n, std::size_t s, std::size_t k, std::mt19937_64& rng);

// Spectrum anchored at the zero word by enumeration.
SpectrumVector spectrum_of(const LinearCode& c);

}  // namespace nrt
