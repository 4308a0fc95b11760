#include "nrt/enumerators.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nrt {

std::size_t BoxEnumerator::index(const std::vector<std::size_t>& a) const {
  if (a.size() != n) throw std::invalid_argument("box dimension mismatch");
  std::size_t idx = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (a[j] > s) throw std::out_of_range("box exponent exceeds s");
    idx = idx * (s + 1) + a[j];
  }
  return idx;
}

std::vector<std::size_t> BoxEnumerator::exponents(std::size_t idx) const {
  std::vector<std::size_t> a(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = idx % (s + 1);
    idx /= (s + 1);
  }
  return a;
}

BoxEnumerator box_enumerator(const LinearCode& d) {
  const std::size_t n = d.n(), s = d.s();
  BoxEnumerator e{n, s, {}};
  std::size_t cells = 1;
  for (std::size_t j = 0; j < n; ++j) cells *= (s + 1);
  // hist over row-rho profiles, then prefix sums in every coordinate
  std::vector<std::uint64_t> cum(cells, 0);
  d.for_each_word([&](std::span<const Label> w) {
    std::size_t idx = 0;
    for (std::size_t j = n; j-- > 0;) idx = idx * (s + 1) + rho_row(w.subspan(j * s, s));
    ++cum[idx];
  });
  std::size_t stride = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t idx = 0; idx < cells; ++idx)
      if ((idx / stride) % (s + 1) != 0) cum[idx] += cum[idx - stride];
    stride *= (s + 1);
  }
  e.c.assign(cells, 0);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    auto a = e.exponents(idx);
    for (auto& x : a) x = s - x;
    e.c[idx] = cum[e.index(a)];
  }
  return e;
}

std::vector<BigInt> weight_enumerator(const LinearCode& d) { return spectrum_of(d).w; }

bool box_duality_check(const LinearCode& d, const LinearCode& d_perp) {
  if (d.params() != d_perp.params()) throw std::invalid_argument("parameter mismatch");
  const BoxEnumerator phi = box_enumerator(d);
  const BoxEnumerator psi = box_enumerator(d_perp);
  const BigInt size = big_pow(d.field().q(), static_cast<unsigned>(d.k()));
  for (std::size_t idx = 0; idx < phi.c.size(); ++idx) {
    const auto a = phi.exponents(idx);
    std::vector<std::size_t> star(a.size());
    std::size_t total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      star[j] = d.s() - a[j];
      total += a[j];
    }
    if (phi.c[idx] * big_pow(d.field().q(), static_cast<unsigned>(total)) != size * psi.at(star)) return false;
  }
  return true;
}

bool weight_box_relation_check(const LinearCode& d) {
  if (d.n() != 1) throw std::invalid_argument("identity proven only for n=1");
  const std::size_t s = d.s();
  const auto w = weight_enumerator(d);
  const auto phi = box_enumerator(d);
  // rhs coefficients for z^0 .. z^{s+1}
  std::vector<BigInt> rhs(s + 2, 0);
  for (std::size_t a = 0; a <= s; ++a) {
    rhs[s - a] += phi.c[a];
    rhs[s - a + 1] -= phi.c[a];
  }
  rhs[s + 1] += big_pow(d.field().q(), static_cast<unsigned>(d.k()));
  for (std::size_t r = 0; r <= s + 1; ++r) {
    const BigInt lhs = r <= s ? w[r] : BigInt(0);
    if (lhs != rhs[r]) return false;
  }
  return true;
}

namespace {

// v(z) = (qz - 1) W(z) + 1 - z, degree <= s+1.
std::vector<BigInt> v_poly(const std::vector<BigInt>& w, unsigned q) {
  std::vector<BigInt> v(w.size() + 1, 0);
  for (std::size_t r = 0; r < w.size(); ++r) {
    v[r + 1] += w[r] * q;
    v[r] -= w[r];
  }
  v[0] += 1;
  v[1] -= 1;
  return v;
}

}  // namespace

bool macwilliams_n1_check(const LinearCode& d, const LinearCode& d_perp) {
  if (d.n() != 1 || d_perp.n() != 1) throw std::invalid_argument("identity proven only for n=1");
  if (d.params() != d_perp.params()) throw std::invalid_argument("parameter mismatch");
  const unsigned q = d.field().q();
  const std::size_t s = d.s();
  const auto v = v_poly(weight_enumerator(d), q);
  const auto vp = v_poly(weight_enumerator(d_perp), q);
  const BigInt size = big_pow(q, static_cast<unsigned>(d.k()));
  // q^{s+1} v(z) versus #D q sum_r vp_r q^{s+1-r} z^{s+2-r}
  std::vector<BigInt> lhs(s + 3, 0), rhs(s + 3, 0);
  const BigInt qs1 = big_pow(q, static_cast<unsigned>(s + 1));
  for (std::size_t r = 0; r < v.size(); ++r) lhs[r] = v[r] * qs1;
  for (std::size_t r = 0; r < vp.size(); ++r)
    rhs[s + 2 - r] += size * q * vp[r] * big_pow(q, static_cast<unsigned>(s + 1 - r));
  return lhs == rhs;
}

CharacterSumReport character_sum_check(const LinearCode& d, std::uint64_t bound, std::uint64_t samples,
                                       std::uint64_t seed) {
  CharacterSumReport rep;
  const Field& f = d.field();
  const unsigned p = f.p();
  const std::size_t len = d.n() * d.s();
  const LinearCode perp = dual_code(d);
  const auto words = d.words();

  auto check_y = [&](const std::vector<Label>& y) {
    std::vector<std::uint64_t> hist(p, 0);
    for (const auto& x : words) ++hist[f.trace(inner_product(f, y, x.flat(), d.s()))];
    const bool all_zero = hist[0] == words.size();
    bool equi = true;
    for (unsigned a = 1; a < p; ++a) equi = equi && hist[a] == hist[0];
    const bool member = perp.contains(y);
    ++rep.ys_checked;
    if (member != all_zero || (!member && !equi)) {
      std::ostringstream os;
      os << "character sum dichotomy fails at Y =";
      for (Label v : y) os << ' ' << v;
      rep.ok = false;
      rep.message = os.str();
    }
  };

  const double space = std::pow(static_cast<double>(f.q()), static_cast<double>(len));
  if (space <= static_cast<double>(bound)) {
    std::vector<Label> y(len, 0);
    while (rep.ok) {
      check_y(y);
      std::size_t i = 0;
      while (i < len && ++y[i] == f.q()) y[i++] = 0;
      if (i == len) break;
    }
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Label> digit(0, f.q() - 1);
    std::vector<Label> y(len);
    for (std::uint64_t t = 0; t < samples && rep.ok; ++t) {
      for (auto& v : y) v = digit(rng);
      check_y(y);
    }
  }
  if (!rep.ok) return rep;

  const BoxEnumerator phi = box_enumerator(d);
  rep.boxes_checked = phi.c.size();
  if (!box_duality_check(d, perp)) {
    rep.ok = false;
    rep.message = "box-count duality fails";
  }
  return rep;
}

}  // namespace nrt
