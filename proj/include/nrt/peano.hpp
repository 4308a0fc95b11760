#pragma once

// Peano digit interleaving between Mat_{gn,s} and Mat_{n,gs}, the blockwise row
// reversal J, composite constructions, and weights under the base change q = p^e -> p.

#include <optional>
#include <string>
#include <vector>

#include "nrt/codes.hpp"
#include "nrt/construct.hpp"

namespace nrt {

// Block j (rows jg .. jg+g-1) becomes row j:
// (xi^{(1)}_1, ..., xi^{(g)}_1, ..., xi^{(1)}_s, ..., xi^{(g)}_s).
CodeWord peano_forward(const CodeWord& w, std::size_t g);
CodeWord peano_inverse(const CodeWord& w, std::size_t g);
Point peano_forward(const Point& x, std::size_t g);
LinearCode peano_forward(const LinearCode& c, std::size_t g);

// Reverses the row order inside every block of g rows.
CodeWord j_involution(const CodeWord& w, std::size_t g);
LinearCode j_involution(const LinearCode& c, std::size_t g);

// rho(omega_l) + (l-1)s with l the last nonzero row of the block, summed over blocks.
std::size_t rho_block_formula(const CodeWord& w, std::size_t g);
// The exact value for the interleaved order: (m-1)g + l*, where m is the largest row
// weight in the block and l* the last row attaining it, summed over blocks.
std::size_t rho_interleaved_formula(const CodeWord& w, std::size_t g);

struct WeightTransport {
  std::size_t kappa_before = 0, kappa_after = 0;
  std::size_t rho_before = 0, rho_after = 0;
  std::size_t rho_block_formula = 0;
  std::size_t rho_interleaved_formula = 0;

  bool kappa_preserved() const { return kappa_before == kappa_after; }
  bool rho_not_decreased() const { return rho_after >= rho_before; }
  bool block_formula_holds() const { return rho_after == rho_block_formula; }
  bool interleaved_formula_holds() const { return rho_after == rho_interleaved_formula; }
};

WeightTransport weight_transport(const CodeWord& w, std::size_t g);

struct DualTransport {
  LinearCode map_then_dual;  // (pi C)^perp
  LinearCode dual_then_map;  // pi(J C^perp)
  bool equal = false;
};

DualTransport dual_transport(const LinearCode& c, std::size_t g);

struct WeightClaim {
  std::string name;
  std::size_t measured = 0;
  long bound = 0;
  bool equality = false;  // claim is measured == bound rather than measured >= bound
  bool infinite = false;  // the measured code is zero

  bool holds() const {
    if (infinite) return true;
    const long m = static_cast<long>(measured);
    return equality ? m == bound : m >= bound;
  }
};

struct CompositeResult {
  std::size_t g = 1, n = 1, s = 1, k = 1;
  std::optional<std::size_t> t;  // set when k = s t with 1 <= t <= n-1
  NodeSet nodes;
  LinearCode base;    // C^{(g)} in Mat_{gn,s}
  LinearCode mapped;  // pi C^{(g)} in Mat_{n,gs}
  LinearCode mapped_dual;
  Distribution points;  // pi D^{(g)} in Q^n(q^{gs})
  std::vector<WeightClaim> claims;

  bool ok() const;
};

// C^{(g)} = Gamma_{gn,s} M^{gk}; requires q >= gn - 1. Weight claims are attached only
// when k is a multiple s t of s with 1 <= t <= n-1.
CompositeResult build_composite(const Field& f, std::size_t g, std::size_t n, std::size_t s, std::size_t k,
                                const std::optional<NodeSet>& nodes = std::nullopt);

struct BaseChangeWeights {
  std::size_t e = 1;
  std::size_t rho_q = 0, rho_p = 0, kappa_q = 0, kappa_p = 0;
  bool rho_bounds = true;    // per-row and per-point bounds
  bool kappa_bounds = true;
  bool ok() const { return rho_bounds && kappa_bounds; }
};

BaseChangeWeights base_change_weights(const CodeWord& w);

struct DistributionBaseChange {
  std::size_t e = 1, n = 1;
  std::size_t rho_q = 0, rho_p = 0, kappa_q = 0, kappa_p = 0;
  bool rho_bounds = true;
  bool kappa_bounds = true;
  // Lower bound for an optimum [ns,k]_s input, when k is given.
  std::optional<long> optimum_bound;
  bool optimum_bound_holds = true;
  bool ok() const { return rho_bounds && kappa_bounds && optimum_bound_holds; }
};

// Weights of a linear distribution in base q and in base p; requires k >= 1.
DistributionBaseChange base_change_distribution(const LinearCode& d, std::optional<std::size_t> optimum_k = std::nullopt);

struct CompositeBaseP {
  CompositeResult composite;
  std::vector<WeightClaim> claims;  // printed bounds plus the provable dual Hamming bound
};

CompositeBaseP composite_base_p_weights(const Field& f, std::size_t g, std::size_t n, std::size_t s, std::size_t k,
                                        const std::optional<NodeSet>& nodes = std::nullopt);

}  // namespace nrt
