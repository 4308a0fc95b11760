#include "nrt/peano.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nrt {

namespace {

void require_blocks(const CodeWord& w, std::size_t g) {
  if (g == 0 || w.n() % g != 0) throw std::invalid_argument("row count must be a multiple of g");
}

Matrix map_rows(const LinearCode& c, std::size_t cols, const std::function<CodeWord(const CodeWord&)>& fn) {
  Matrix m(c.field(), 0, cols);
  for (std::size_t r = 0; r < c.k(); ++r) m.append_row(fn(c.basis_word(r)).flat());
  return m;
}

struct BaseWeights {
  std::size_t rho = std::numeric_limits<std::size_t>::max();
  std::size_t kappa = std::numeric_limits<std::size_t>::max();
};

// Minimum weights over nonzero words after expansion to the prime field.
BaseWeights prime_field_weights(const LinearCode& c) {
  BaseWeights out;
  const Field& f = c.field();
  const std::size_t e = f.e();
  c.for_each_word([&](std::span<const Label> w) {
    if (std::all_of(w.begin(), w.end(), [](Label x) { return x == 0; })) return;
    std::size_t kappa = 0, rho = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
      std::size_t row_rho = 0;
      for (std::size_t i = 0; i < c.s(); ++i) {
        const auto mu = f.digits(w[j * c.s() + i]);
        for (std::size_t m = 0; m < e; ++m)
          if (mu[m] != 0) {
            ++kappa;
            row_rho = e * i + m + 1;
          }
      }
      rho += row_rho;
    }
    out.rho = std::min(out.rho, rho);
    out.kappa = std::min(out.kappa, kappa);
  });
  return out;
}

long lower_rho_bound(std::size_t e, std::size_t rho_q, std::size_t n) {
  return static_cast<long>(e) * (static_cast<long>(rho_q) - 1) + 1 - (static_cast<long>(e) - 1) * (static_cast<long>(n) - 1);
}

}  // namespace

CodeWord peano_forward(const CodeWord& w, std::size_t g) {
  require_blocks(w, g);
  const std::size_t n = w.n() / g, s = w.s();
  CodeWord out(w.field(), n, g * s);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < g; ++l)
      for (std::size_t i = 0; i < s; ++i) out.at(j, i * g + l) = w.at(j * g + l, i);
  return out;
}

CodeWord peano_inverse(const CodeWord& w, std::size_t g) {
  if (g == 0 || w.s() % g != 0) throw std::invalid_argument("row length must be a multiple of g");
  const std::size_t n = w.n(), s = w.s() / g;
  CodeWord out(w.field(), n * g, s);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < g; ++l)
      for (std::size_t i = 0; i < s; ++i) out.at(j * g + l, i) = w.at(j, i * g + l);
  return out;
}

Point peano_forward(const Point& x, std::size_t g) { return Point(peano_forward(x.word(), g)); }

LinearCode peano_forward(const LinearCode& c, std::size_t g) {
  if (g == 0 || c.n() % g != 0) throw std::invalid_argument("row count must be a multiple of g");
  return LinearCode(c.field(), c.n() / g, c.s() * g,
                    map_rows(c, c.n() * c.s(), [g](const CodeWord& w) { return peano_forward(w, g); }));
}

CodeWord j_involution(const CodeWord& w, std::size_t g) {
  require_blocks(w, g);
  CodeWord out(w.field(), w.n(), w.s());
  for (std::size_t b = 0; b < w.n() / g; ++b)
    for (std::size_t l = 0; l < g; ++l)
      for (std::size_t i = 0; i < w.s(); ++i) out.at(b * g + l, i) = w.at(b * g + (g - 1 - l), i);
  return out;
}

LinearCode j_involution(const LinearCode& c, std::size_t g) {
  return LinearCode(c.field(), c.n(), c.s(),
                    map_rows(c, c.n() * c.s(), [g](const CodeWord& w) { return j_involution(w, g); }));
}

std::size_t rho_block_formula(const CodeWord& w, std::size_t g) {
  require_blocks(w, g);
  std::size_t total = 0;
  for (std::size_t b = 0; b < w.n() / g; ++b)
    for (std::size_t l = g; l-- > 0;) {
      const std::size_t r = rho_row(w.row(b * g + l));
      if (r == 0) continue;
      total += r + l * w.s();
      break;
    }
  return total;
}

std::size_t rho_interleaved_formula(const CodeWord& w, std::size_t g) {
  require_blocks(w, g);
  std::size_t total = 0;
  for (std::size_t b = 0; b < w.n() / g; ++b) {
    std::size_t m = 0, last = 0;
    for (std::size_t l = 0; l < g; ++l) {
      const std::size_t r = rho_row(w.row(b * g + l));
      if (r > 0 && r >= m) {
        m = r;
        last = l + 1;
      }
    }
    if (m > 0) total += (m - 1) * g + last;
  }
  return total;
}

WeightTransport weight_transport(const CodeWord& w, std::size_t g) {
  const CodeWord out = peano_forward(w, g);
  WeightTransport t;
  t.kappa_before = hamming_weight(w);
  t.kappa_after = hamming_weight(out);
  t.rho_before = rho_weight(w);
  t.rho_after = rho_weight(out);
  t.rho_block_formula = rho_block_formula(w, g);
  t.rho_interleaved_formula = rho_interleaved_formula(w, g);
  return t;
}

DualTransport dual_transport(const LinearCode& c, std::size_t g) {
  LinearCode lhs = dual_code(peano_forward(c, g));
  LinearCode rhs = peano_forward(j_involution(dual_code(c), g), g);
  const bool eq = lhs == rhs;
  return {std::move(lhs), std::move(rhs), eq};
}

bool CompositeResult::ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const WeightClaim& c) { return c.holds(); });
}

CompositeResult build_composite(const Field& f, std::size_t g, std::size_t n, std::size_t s, std::size_t k,
                                const std::optional<NodeSet>& nodes) {
  if (g == 0) throw std::invalid_argument("g must be positive");
  if (!existence_condition(g * n, f.q())) throw std::invalid_argument("q < gn-1: composite construction needs q >= gn-1");
  const NodeSet ns = nodes ? *nodes : default_nodes(f, g * n);
  LinearCode base = build_mds_code(f, g * n, s, g * k, ns);
  LinearCode mapped = peano_forward(base, g);
  LinearCode mapped_dual = dual_code(mapped);
  Distribution raw = build_optimum_distribution(f, g * n, s, g * k, ns);
  Distribution pts(f, n, g * s);
  for (const auto& x : raw.points()) pts.add(peano_forward(x, g));

  CompositeResult r{g, n, s, k, std::nullopt, ns, std::move(base), std::move(mapped), std::move(mapped_dual),
                    std::move(pts), {}};
  if (k % s == 0 && k / s >= 1 && k / s + 1 <= n) r.t = k / s;
  if (!r.t) return r;
  const std::size_t t = *r.t;
  const long rho_bound = static_cast<long>((n * s - k) * g + 1);
  r.claims.push_back({"rho(pi C) = (ns-k)g+1", code_weight(r.mapped, Metric::rho), rho_bound, true, false});
  r.claims.push_back({"kappa(pi C) >= (n-t)g+1", code_weight(r.mapped, Metric::kappa),
                      static_cast<long>((n - t) * g + 1), false, false});
  if (r.points.size() <= 4096)
    r.claims.push_back({"rho(pi D) = (ns-k)g+1", rho_of_distribution(r.points), rho_bound, true, false});
  r.claims.push_back({"rho((pi C)^perp) = kg+1", code_weight(r.mapped_dual, Metric::rho),
                      static_cast<long>(k * g + 1), true, false});
  r.claims.push_back({"kappa((pi C)^perp) >= tg+1", code_weight(r.mapped_dual, Metric::kappa),
                      static_cast<long>(t * g + 1), false, false});
  return r;
}

BaseChangeWeights base_change_weights(const CodeWord& w) {
  const CodeWord x = expand_to_prime_field(w);
  BaseChangeWeights b;
  b.e = w.field().e();
  b.rho_q = rho_weight(w);
  b.rho_p = rho_weight(x);
  b.kappa_q = hamming_weight(w);
  b.kappa_p = hamming_weight(x);
  for (std::size_t j = 0; j < w.n(); ++j) {
    const std::size_t rq = rho_row(w.row(j)), rp = rho_row(x.row(j));
    if (rq == 0) {
      b.rho_bounds = b.rho_bounds && rp == 0;
      continue;
    }
    b.rho_bounds = b.rho_bounds && b.e * (rq - 1) + 1 <= rp && rp <= b.e * rq;
  }
  b.rho_bounds = b.rho_bounds && lower_rho_bound(b.e, b.rho_q, w.n()) <= static_cast<long>(b.rho_p) &&
                 b.rho_p <= b.e * b.rho_q;
  b.kappa_bounds = b.kappa_q <= b.kappa_p && b.kappa_p <= b.e * b.kappa_q;
  return b;
}

DistributionBaseChange base_change_distribution(const LinearCode& d, std::optional<std::size_t> optimum_k) {
  if (d.k() == 0) throw std::invalid_argument("weights need a nonzero distribution");
  DistributionBaseChange out;
  out.e = d.field().e();
  out.n = d.n();
  out.rho_q = code_weight(d, Metric::rho);
  out.kappa_q = code_weight(d, Metric::kappa);
  const BaseWeights bp = prime_field_weights(d);
  out.rho_p = bp.rho;
  out.kappa_p = bp.kappa;
  out.rho_bounds = lower_rho_bound(out.e, out.rho_q, out.n) <= static_cast<long>(out.rho_p) && out.rho_p <= out.e * out.rho_q;
  out.kappa_bounds = out.kappa_q <= out.kappa_p && out.kappa_p <= out.e * out.kappa_q;
  if (optimum_k) {
    const long ns = static_cast<long>(d.n() * d.s());
    const long e = static_cast<long>(out.e);
    out.optimum_bound = (ns - static_cast<long>(*optimum_k)) * e + 1 - (e - 1) * (static_cast<long>(out.n) - 1);
    out.optimum_bound_holds = static_cast<long>(out.rho_p) >= *out.optimum_bound;
  }
  return out;
}

CompositeBaseP composite_base_p_weights(const Field& f, std::size_t g, std::size_t n, std::size_t s, std::size_t k,
                                        const std::optional<NodeSet>& nodes) {
  CompositeBaseP out{build_composite(f, g, n, s, k, nodes), {}};
  const auto& c = out.composite;
  if (!c.t) return out;
  const long e = static_cast<long>(f.e());
  const long G = static_cast<long>(g), N = static_cast<long>(n), S = static_cast<long>(s), K = static_cast<long>(k);
  const long t = static_cast<long>(*c.t);
  const BaseWeights primal = prime_field_weights(c.mapped);
  out.claims.push_back({"rho_p(pi D) >= (ns-k)eg+1-(e-1)(n-1)", primal.rho, (N * S - K) * e * G + 1 - (e - 1) * (N - 1),
                        false, false});
  out.claims.push_back({"kappa_p(pi D) >= (n-t)g+1", primal.kappa, (N - t) * G + 1, false, false});
  if (c.mapped_dual.k() == 0) {
    out.claims.push_back({"rho_p((pi D)^perp) >= keg+1-(e-1)(n-1)", 0, 0, false, true});
    out.claims.push_back({"kappa_p((pi D)^perp) >= teg+1", 0, 0, false, true});
    out.claims.push_back({"kappa_p((pi D)^perp) >= tg+1", 0, 0, false, true});
    return out;
  }
  const BaseWeights dual = prime_field_weights(c.mapped_dual);
  out.claims.push_back({"rho_p((pi D)^perp) >= keg+1-(e-1)(n-1)", dual.rho, K * e * G + 1 - (e - 1) * (N - 1), false, false});
  out.claims.push_back({"kappa_p((pi D)^perp) >= teg+1", dual.kappa, t * e * G + 1, false, false});
  out.claims.push_back({"kappa_p((pi D)^perp) >= tg+1", dual.kappa, t * G + 1, false, false});
  return out;
}

}  // namespace nrt
