#pragma once

// Box and weight enumerators of linear distributions, the duality identities
// between a code and its dual, and exact additive character sums.

#include <cstdint>
#include <string>
#include <vector>

#include "nrt/bigint.hpp"
#include "nrt/codes.hpp"

namespace nrt {

// c_A = #{D ∩ Δ^0_A} for every A in [0,s]^n; coefficient of z_1^{a_1} ... z_n^{a_n}.
struct BoxEnumerator {
  std::size_t n = 0, s = 0;
  std::vector<BigInt> c;  // mixed radix index a_1 + (s+1) a_2 + ...

  std::size_t index(const std::vector<std::size_t>& a) const;
  const BigInt& at(const std::vector<std::size_t>& a) const { return c[index(a)]; }
  std::vector<std::size_t> exponents(std::size_t idx) const;
};

BoxEnumerator box_enumerator(const LinearCode& d);

// Coefficients w_0 .. w_ns of W(D; z) = sum w_r z^r.
std::vector<BigInt> weight_enumerator(const LinearCode& d);

// c_A q^{sum a} = #D c^perp_{A*} for all A, where a*_j = s - a_j.
bool box_duality_check(const LinearCode& d, const LinearCode& d_perp);

// n = 1: W(z) = (1 - z) sum_a c_a z^{s-a} + #D z^{s+1}.
bool weight_box_relation_check(const LinearCode& d);

// n = 1 MacWilliams identity with v(D;z) = (qz - 1) W(D;z) + 1 - z:
// v(D;z) = #D q z^{s+2} v(D^perp; 1/(qz)), compared after multiplying through by q^{s+1}.
// Throws for n != 1.
bool macwilliams_n1_check(const LinearCode& d, const LinearCode& d_perp);

struct CharacterSumReport {
  bool ok = true;
  std::uint64_t ys_checked = 0;
  std::uint64_t boxes_checked = 0;
  bool sampled = false;
  std::string message;
};

// For every Y: the Tr<Y,X> exponents over X in D are all zero when Y is in D^perp
// and equidistributed over F_p otherwise; also the box-count duality for every A.
// Above `bound` candidate Ys, `samples` random Ys are drawn instead.
CharacterSumReport character_sum_check(const LinearCode& d, std::uint64_t bound = 1u << 16,
                                       std::uint64_t samples = 4096, std::uint64_t seed = 1);

}  // namespace nrt
