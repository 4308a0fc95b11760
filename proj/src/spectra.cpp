#include "nrt/spectra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nrt {

namespace {

std::mutex sigma_mutex;
std::map<std::tuple<std::size_t, std::size_t, std::size_t>, BigInt> sigma_memo;

BigInt sigma_uncached(std::size_t l, std::size_t r, std::size_t s) {
  // dp[r'] = compositions of r' into the parts placed so far
  std::vector<BigInt> dp(r + 1, 0);
  dp[0] = 1;
  for (std::size_t part = 0; part < l; ++part) {
    std::vector<BigInt> next(r + 1, 0);
    for (std::size_t v = 0; v <= r; ++v) {
      if (dp[v] == 0) continue;
      for (std::size_t a = 1; a <= s && v + a <= r; ++a) next[v + a] += dp[v];
    }
    dp = std::move(next);
  }
  return dp[r];
}

BigInt signed_pow(unsigned q, long exp) {
  if (exp < 0) throw std::logic_error("negative exponent in spectrum formula");
  return big_pow(q, static_cast<unsigned>(exp));
}

void check_mds_params(std::size_t n, std::size_t s, std::size_t k) {
  if (n == 0 || s == 0) throw std::invalid_argument("n and s must be positive");
  if (k < 1 || k > n * s) throw std::invalid_argument("k must satisfy 1 <= k <= ns");
}

SpectrumVector blank(unsigned q, std::size_t n, std::size_t s, const char* source) {
  SpectrumVector v;
  v.params = {q, n, s};
  v.w.assign(n * s + 1, 0);
  v.w[0] = 1;
  v.anchor.assign(n * s, 0);
  v.source = source;
  return v;
}

}  // namespace

BigInt sigma(std::size_t l, std::size_t r, std::size_t s) {
  if (l > r || r > l * s) return (l == 0 && r == 0) ? BigInt(1) : BigInt(0);
  const auto key = std::make_tuple(l, r, s);
  {
    std::lock_guard lock(sigma_mutex);
    auto it = sigma_memo.find(key);
    if (it != sigma_memo.end()) return it->second;
  }
  BigInt v = sigma_uncached(l, r, s);
  std::lock_guard lock(sigma_mutex);
  sigma_memo.emplace(key, v);
  return v;
}

BigInt sigma_tilde(std::size_t n, std::size_t r, std::size_t s) {
  std::vector<BigInt> dp(r + 1, 0);
  dp[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigInt> next(r + 1, 0);
    for (std::size_t v = 0; v <= r; ++v) {
      if (dp[v] == 0) continue;
      for (std::size_t a = 0; a <= s && v + a <= r; ++a) next[v + a] += dp[v];
    }
    dp = std::move(next);
  }
  return dp[r];
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt sphere_size(unsigned q, std::size_t n, std::size_t s, std::size_t r) {
  if (r > n * s) throw std::out_of_range("sphere radius exceeds ns");
  BigInt total = 0;
  for (std::size_t l = 0; l <= n; ++l) {
    const BigInt sg = sigma(l, r, s);
    if (sg == 0) continue;
    total += binomial(n, l) * sg * big_pow(q - 1, static_cast<unsigned>(l)) * big_pow(q, static_cast<unsigned>(r - l));
  }
  return total;
}

BigInt ball_volume(unsigned q, std::size_t n, std::size_t s, std::size_t t) {
  BigInt v = 0;
  for (std::size_t r = 0; r <= std::min(t, n * s); ++r) v += sphere_size(q, n, s, r);
  return v;
}

bool ball_packing_check(const BigInt& N, std::size_t t, unsigned q, std::size_t n, std::size_t s) {
  return N * ball_volume(q, n, s, t) <= big_pow(q, static_cast<unsigned>(n * s));
}

BigInt SpectrumVector::total() const {
  BigInt t = 0;
  for (const auto& x : w) t += x;
  return t;
}

SpectrumVector spectrum_bruteforce(const std::vector<CodeWord>& words, const CodeWord& anchor) {
  SpectrumVector v;
  v.params = anchor.params();
  v.w.assign(anchor.n() * anchor.s() + 1, 0);
  v.anchor = anchor.flat();
  v.source = "bruteforce";
  bool member = false;
  for (const auto& x : words) {
    const CodeWord d = x - anchor;
    member = member || d.is_zero();
    v.w[rho_weight(d)] += 1;
  }
  if (!member) throw std::invalid_argument("anchor not a member");
  return v;
}

SpectrumVector spectrum_mds_formula(unsigned q, std::size_t n, std::size_t s, std::size_t k) {
  check_mds_params(n, s, k);
  SpectrumVector v = blank(q, n, s, "thm3.1");
  const std::size_t rho = n * s - k + 1;
  for (std::size_t r = rho; r <= n * s; ++r) {
    BigInt wr = 0;
    for (std::size_t l = 0; l <= n; ++l) {
      const BigInt sg = sigma(l, r, s);
      if (sg == 0) continue;
      BigInt inner = 0;
      for (std::size_t t = 0; t <= r - rho; ++t) {
        const BigInt term = binomial(l, t) * (signed_pow(q, static_cast<long>(r - rho + 1 - t)) - 1);
        inner += (t % 2 ? -term : term);
      }
      wr += binomial(n, l) * sg * inner;
    }
    v.w[r] = wr;
  }
  return v;
}

SpectrumVector spectrum_mds_formula_alt(unsigned q, std::size_t n, std::size_t s, std::size_t k) {
  check_mds_params(n, s, k);
  SpectrumVector v = blank(q, n, s, "thm3.1");
  const std::size_t rho = n * s - k + 1;
  for (std::size_t r = rho; r <= n * s; ++r) {
    BigInt wr = 0;
    for (std::size_t l = 1; l <= n; ++l) {
      const BigInt sg = sigma(l, r, s);
      if (sg == 0) continue;
      BigInt inner = 0;
      for (std::size_t t = 0; t <= r - rho; ++t) {
        const BigInt term = binomial(l - 1, t) * signed_pow(q, static_cast<long>(r - rho - t));
        inner += (t % 2 ? -term : term);
      }
      wr += binomial(n, l) * sg * inner;
    }
    v.w[r] = wr * (q - 1);
  }
  return v;
}

SpectrumVector spectrum_net_formula(unsigned q, std::size_t n, std::size_t s) {
  check_mds_params(n, s, s);
  SpectrumVector v = blank(q, n, s, "thm3.2");
  const std::size_t rho = (n - 1) * s + 1;
  for (std::size_t r = rho; r <= n * s; ++r) {
    BigInt inner = 0;
    for (std::size_t t = 0; t <= r - rho; ++t) {
      const BigInt term = binomial(n, t) * (signed_pow(q, static_cast<long>(r - rho + 1 - t)) - 1);
      inner += (t % 2 ? -term : term);
    }
    v.w[r] = sigma_tilde(n, r, s) * inner;
  }
  return v;
}

BigInt spectrum_net_tail(unsigned q, std::size_t n, std::size_t s, std::size_t r) {
  const std::size_t rho = (n - 1) * s + 1;
  if (r + 1 < rho + n || r > n * s) throw std::out_of_range("tail formula outside its range");
  return sigma_tilde(n, r, s) * big_pow(q - 1, static_cast<unsigned>(n)) *
         big_pow(q, static_cast<unsigned>(r + 1 - rho - n));
}

BigInt mds_first_term(unsigned q, std::size_t n, std::size_t s, std::size_t k) {
  check_mds_params(n, s, k);
  return sigma_tilde(n, n * s - k + 1, s) * (q - 1);
}

BigInt mds_second_term(unsigned q, std::size_t n, std::size_t s, std::size_t k) {
  check_mds_params(n, s, k);
  const std::size_t r = n * s - k + 2;
  BigInt total = 0;
  for (std::size_t l = 0; l <= n; ++l) total += binomial(n, l) * (BigInt(q) + 1 - l) * sigma(l, r, s);
  return total * (q - 1);
}

BigInt net_second_term(unsigned q, std::size_t n, std::size_t s) {
  const std::size_t rho = (n - 1) * s + 1;
  return BigInt(q - 1) * sigma(n, rho + 1, s) * (BigInt(q) - n + 1);
}

bool existence_condition(std::size_t n, unsigned q) { return q + 1 >= n; }

}  // namespace nrt
