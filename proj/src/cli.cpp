#include "nrt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrt/codes.hpp"
#include "nrt/construct.hpp"
#include "nrt/enumerators.hpp"
#include "nrt/geometry.hpp"
#include "nrt/io.hpp"
#include "nrt/peano.hpp"
#include "nrt/spectra.hpp"

namespace nrt {

namespace {

using Json = nlohmann::ordered_json;

// Bad flags, bad files, impossible parameters: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<unsigned> p, e, q;
  std::optional<std::size_t> n, s, k, g, t, delta;
  std::optional<std::string> nodes, in, out, kind;
  std::string check = "auto";
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t bound = 1u << 16;  // character-sum enumeration bound
};

struct Outcome {
  Json body = Json::object();
  int code = 0;
};

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag --") + flag);
  return *v;
}

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Json big_vector(const std::vector<BigInt>& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(big(x));
  return a;
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Json weight_json(const std::optional<std::size_t>& w) {
  if (!w) return "inf";
  return *w;
}

const Field& resolve_field(const RunConfig& c) {
  try {
    if (c.q) {
      const auto pe = prime_power(*c.q);
      if (!pe) throw UsageError("q = " + std::to_string(*c.q) + " is not a prime power");
      if ((c.p && *c.p != pe->first) || (c.e && *c.e != pe->second))
        throw UsageError("--q disagrees with --p/--e");
      return Field::get(pe->first, pe->second);
    }
    if (c.p) {
      if (!is_prime(*c.p)) throw UsageError("p = " + std::to_string(*c.p) + " is not prime");
      return Field::get(*c.p, c.e.value_or(1));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& ex) {
    throw UsageError(std::string("invalid field: ") + ex.what());
  }
  throw UsageError("field required: give --q, or --p with optional --e");
}

std::optional<NodeSet> resolve_nodes(const RunConfig& c, const Field& f) {
  if (!c.nodes) return std::nullopt;
  try {
    NodeSet ns = NodeSet::parse(*c.nodes);
    ns.validate(f);
    return ns;
  } catch (const std::exception& ex) {
    throw UsageError(std::string("--nodes: ") + ex.what());
  }
}

void check_nsk(std::size_t n, std::size_t s, std::size_t k) {
  if (n == 0 || s == 0) throw UsageError("n and s must be positive");
  if (k < 1 || k > n * s) throw UsageError("k must satisfy 1 <= k <= ns");
}

// --- file handling ---------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write " + path);
  fn(os);
}

struct Input {
  FileKind kind;
  std::optional<PointFile> points;
  std::optional<CodeFile> code;
};

Input load_input(const RunConfig& c) {
  const std::string path = need(c.in, "in");
  const std::string text = slurp(path);
  std::optional<FileKind> kind;
  if (c.kind) {
    if (*c.kind == "points") kind = FileKind::points;
    else if (*c.kind == "code") kind = FileKind::code;
    else throw UsageError("--kind must be points or code");
  } else {
    kind = detect_kind(text);
  }
  if (!kind) {
    // Nothing to go on; let the point parser report the problem (empty file etc.).
    std::istringstream probe(text);
    read_points(probe);
    throw UsageError(path + ": cannot tell a point file from a code file; pass --kind");
  }
  std::istringstream is(text);
  Input in{*kind, std::nullopt, std::nullopt};
  if (*kind == FileKind::points) in.points = read_points(is);
  else in.code = read_code(is);
  return in;
}

// Code from --in (a code file, or a linear point file) or built from --q --n --s --k.
LinearCode code_from(const RunConfig& c) {
  if (c.in) {
    Input in = load_input(c);
    if (in.code) return in.code->code;
    if (!is_linear(in.points->dist)) throw UsageError("point set is not a linear subspace");
    return linear_code_of(in.points->dist);
  }
  const Field& f = resolve_field(c);
  const std::size_t n = need(c.n, "n"), s = need(c.s, "s"), k = need(c.k, "k");
  check_nsk(n, s, k);
  const auto nodes = resolve_nodes(c, f);
  try {
    return nodes ? build_mds_code(f, n, s, k, *nodes) : build_mds_code(f, n, s, k);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

void require_enumerable(const LinearCode& code) {
  if (std::pow(static_cast<double>(code.field().q()), static_cast<double>(code.k())) > static_cast<double>(kEnumerationBound))
    throw UsageError("code has more than " + std::to_string(kEnumerationBound) + " words; too large to enumerate");
}

Json params_json(const LinearCode& code) {
  return Json{{"field", code.field().spec().to_string()},
              {"q", code.field().q()},
              {"n", code.n()},
              {"s", code.s()},
              {"k", code.k()}};
}

Json violation_json(const BoxViolation& v) {
  return Json{{"a", v.box.a},
              {"m", v.box.m},
              {"count", v.count},
              {"expected", v.expected},
              {"relation", v.at_most ? "at most" : "exactly"}};
}

std::string violation_text(const BoxViolation& v) {
  std::ostringstream os;
  os << "box " << v.box.to_string() << " holds " << v.count << " points, expected " << (v.at_most ? "at most " : "")
     << v.expected;
  return os.str();
}

std::optional<std::size_t> exact_log(std::uint64_t N, unsigned q) {
  std::size_t k = 0;
  std::uint64_t v = 1;
  while (v < N) {
    v *= q;
    ++k;
  }
  if (v != N) return std::nullopt;
  return k;
}

// --- sections shared by several commands ------------------------------------

Json spectrum_section(const LinearCode& code, bool& mismatch) {
  require_enumerable(code);
  Json j;
  const SpectrumVector bf = spectrum_of(code);
  j["bruteforce"] = big_vector(bf.w);
  const bool mds = is_mds(code);
  j["mds"] = mds;
  if (!mds || code.k() == 0) {
    j["warning"] = "input is not MDS; closed-form spectra omitted";
    return j;
  }
  const unsigned q = code.field().q();
  const std::size_t n = code.n(), s = code.s(), k = code.k();
  const SpectrumVector formula = spectrum_mds_formula(q, n, s, k);
  const SpectrumVector alt = spectrum_mds_formula_alt(q, n, s, k);
  j["formula"] = big_vector(formula.w);
  j["formula_alt"] = big_vector(alt.w);
  bool equal = bf == formula && bf == alt;
  const std::size_t rho = n * s - k + 1;
  if (rho <= n * s) {
    const BigInt first = mds_first_term(q, n, s, k);
    j["first_term"] = big(first);
    equal = equal && first == bf.w[rho];
  }
  if (rho + 1 <= n * s) {
    const BigInt second = mds_second_term(q, n, s, k);
    j["second_term"] = big(second);
    equal = equal && second == bf.w[rho + 1];
  }
  if (k == s) {
    const SpectrumVector net = spectrum_net_formula(q, n, s);
    j["net_formula"] = big_vector(net.w);
    equal = equal && net == bf;
  }
  j["equal"] = equal;
  mismatch = !equal;
  return j;
}

Json dual_section(const LinearCode& code, const LinearCode& dual, bool& failed) {
  Json j;
  j["k"] = code.k();
  j["k_dual"] = dual.k();
  j["dim_sum"] = code.k() + dual.k();
  j["rho"] = weight_json(weight_or_infinity(code, Metric::rho));
  j["kappa"] = weight_json(weight_or_infinity(code, Metric::kappa));
  j["rho_dual"] = weight_json(weight_or_infinity(dual, Metric::rho));
  j["kappa_dual"] = weight_json(weight_or_infinity(dual, Metric::kappa));
  const bool mds = is_mds(code), dual_mds = is_mds(dual);
  j["mds"] = mds;
  j["dual_mds"] = dual_mds;
  const bool involution = dual_code(dual) == code;
  j["double_dual_equal"] = involution;
  failed = !involution || code.k() + dual.k() != code.n() * code.s() || (mds && !dual_mds);
  return j;
}

Json enumerator_section(const LinearCode& code, const LinearCode& dual, bool& failed) {
  require_enumerable(code);
  require_enumerable(dual);
  Json j;
  j["weight_enumerator"] = big_vector(weight_enumerator(code));
  const BoxEnumerator be = box_enumerator(code);
  Json map = Json::object();
  for (std::size_t i = 0; i < be.c.size(); ++i) map[join(be.exponents(i))] = big(be.c[i]);
  j["box_enumerator"] = map;
  const bool box = box_duality_check(code, dual);
  j["box_duality"] = box;
  failed = !box;
  if (code.n() == 1) {
    const bool mw = macwilliams_n1_check(code, dual);
    const bool rel = weight_box_relation_check(code);
    j["macwilliams_n1"] = mw;
    j["weight_box_relation"] = rel;
    failed = failed || !mw || !rel;
  } else {
    j["macwilliams_n1"] = "identity unavailable for n>1";
  }
  return j;
}

Json character_section(const LinearCode& code, const RunConfig& c, bool& failed) {
  require_enumerable(code);
  const CharacterSumReport r = character_sum_check(code, c.bound, 4096, c.seed);
  failed = !r.ok;
  Json j{{"ok", r.ok}, {"ys_checked", r.ys_checked}, {"boxes_checked", r.boxes_checked}, {"sampled", r.sampled}};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

Json discrepancy_json(const Distribution& d) {
  Json j;
  try {
    j["star_discrepancy"] = rational_string(star_discrepancy(d));
    j["count_form"] = rational_string(discrepancy_count_form(d));
  } catch (const std::length_error& ex) {
    j["skipped"] = ex.what();
  }
  return j;
}

Json claims_json(const std::vector<WeightClaim>& claims, bool& failed) {
  Json a = Json::array();
  for (const auto& cl : claims) {
    Json j{{"claim", cl.name}};
    if (cl.infinite) j["measured"] = "inf";
    else j["measured"] = cl.measured;
    j["bound"] = cl.bound;
    j["holds"] = cl.holds();
    failed = failed || !cl.holds();
    a.push_back(j);
  }
  return a;
}

// Per-word transport of weights under pi, aggregated over the code.
Json transport_section(const LinearCode& code, std::size_t g, bool& failed) {
  require_enumerable(code);
  std::uint64_t words = 0, kappa_ok = 0, rho_ok = 0, block_ok = 0, interleaved_ok = 0, inverse_ok = 0;
  code.for_each_word([&](std::span<const Label> flat) {
    const CodeWord w(code.field(), code.n(), code.s(), std::vector<Label>(flat.begin(), flat.end()));
    const WeightTransport t = weight_transport(w, g);
    ++words;
    kappa_ok += t.kappa_preserved();
    rho_ok += t.rho_not_decreased();
    block_ok += t.block_formula_holds();
    interleaved_ok += t.interleaved_formula_holds();
    inverse_ok += peano_inverse(peano_forward(w, g), g) == w;
  });
  const DualTransport dt = dual_transport(code, g);
  failed = kappa_ok != words || rho_ok != words || interleaved_ok != words || inverse_ok != words || !dt.equal;
  return Json{{"g", g},
              {"words", words},
              {"kappa_preserved", kappa_ok},
              {"rho_not_decreased", rho_ok},
              {"rho_interleaved_formula", interleaved_ok},
              {"rho_block_formula", block_ok},
              {"inverse_round_trip", inverse_ok},
              {"dual_commutes", dt.equal}};
}

// F_p-span of the base-p expansions of the words of an F_q-linear code.
LinearCode expand_code(const LinearCode& code) {
  const Field& f = code.field();
  const Field& fp = Field::get(f.p(), 1);
  std::vector<CodeWord> words;
  Label scale = 1;
  for (unsigned m = 0; m < f.e(); ++m, scale *= f.p()) {
    for (std::size_t r = 0; r < code.k(); ++r) {
      const CodeWord w = code.basis_word(r);
      const CodeWord scaled = linear_combine(scale, w, 0, w);
      const CodeWord x = expand_to_prime_field(scaled);
      words.emplace_back(fp, x.n(), x.s(), x.flat());
    }
  }
  return LinearCode::span_of(fp, code.n(), code.s() * f.e(), words);
}

Json base_change_json(const DistributionBaseChange& b) {
  Json j{{"e", b.e}, {"rho_q", b.rho_q}, {"rho_p", b.rho_p}, {"kappa_q", b.kappa_q}, {"kappa_p", b.kappa_p},
         {"rho_bounds", b.rho_bounds}, {"kappa_bounds", b.kappa_bounds}};
  if (b.optimum_bound) {
    j["optimum_bound"] = *b.optimum_bound;
    j["optimum_bound_holds"] = b.optimum_bound_holds;
  }
  return j;
}

std::vector<std::string> header_comments(const RunConfig& c, const std::string& what) {
  std::vector<std::string> out{"generated by nrtcodes " + c.command + ": " + what};
  return out;
}

// --- commands -----------------------------------------------------------------

Outcome cmd_generate(const RunConfig& c) {
  const Field& f = resolve_field(c);
  const std::size_t n = need(c.n, "n"), s = need(c.s, "s"), k = need(c.k, "k");
  if (!existence_condition(n, f.q()))
    throw UsageError("q < n-1: no MDS code exists for these parameters (existence condition q >= n-1)");
  check_nsk(n, s, k);
  NodeSet nodes;
  try {
    const auto given = resolve_nodes(c, f);
    nodes = given ? *given : default_nodes(f, n);
    check_construction_params(f, n, s, k, nodes);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }

  Outcome o;
  const LinearCode code = build_mds_code(f, n, s, k, nodes);
  const std::size_t rho = code_weight(code, Metric::rho);
  const bool mds = rho == n * s - k + 1;
  o.body["params"] = params_json(code);
  o.body["nodes"] = nodes.to_string();
  o.body["rho"] = rho;
  o.body["mds"] = mds;

  const std::string prefix =
      c.out.value_or("nrt_q" + std::to_string(f.q()) + "_n" + std::to_string(n) + "_s" + std::to_string(s) + "_k" +
                     std::to_string(k));
  std::vector<std::string> comments{"nodes " + nodes.to_string(),
                                    "params q=" + std::to_string(f.q()) + " n=" + std::to_string(n) +
                                        " s=" + std::to_string(s) + " k=" + std::to_string(k)};
  Json files = Json::array();
  write_file(prefix + ".code", [&](std::ostream& os) { write_code(os, code, comments); });
  files.push_back(prefix + ".code");

  bool ok = mds;
  if (code.size() <= kEnumerationBound) {
    const Distribution d = build_optimum_distribution(f, n, s, k, nodes);
    const bool optimum = is_optimum(d, k);
    const bool same = same_words(d, code);
    o.body["optimum"] = optimum;
    o.body["points_match_code"] = same;
    if (k >= s) o.body["net"] = Json{{"delta", k - s}, {"s", k}, {"n", n}};
    ok = ok && optimum && same;
    write_file(prefix + ".points", [&](std::ostream& os) { write_points(os, d, comments); });
    files.push_back(prefix + ".points");
  } else {
    o.body["points"] = "omitted: more than " + std::to_string(kEnumerationBound) + " points";
  }
  o.body["files"] = files;
  o.body["verdict"] = ok ? "MDS verified" : "MDS verification FAILED";
  o.code = ok ? 0 : 1;
  return o;
}

Outcome verify_points(const RunConfig& c, const Distribution& d) {
  Outcome o;
  const unsigned q = d.field().q();
  o.body["params"] = Json{{"field", d.field().spec().to_string()}, {"q", q}, {"n", d.n()}, {"s", d.s()}, {"N", d.size()}};
  const auto k = exact_log(d.size(), q);
  if (!k) {
    o.body["verdict"] = "FAIL: " + std::to_string(d.size()) + " points is not a power of q";
    o.code = 1;
    return o;
  }
  std::string check = c.check;
  if (check == "auto") check = c.delta ? "net" : "optimum";
  BoxReport r;
  std::string what;
  if (check == "optimum") {
    if (*k > d.n() * d.s()) throw UsageError("q^k points with k > ns cannot be an optimum distribution");
    r = check_optimum(d, *k);
    what = "optimum [" + std::to_string(d.n() * d.s()) + "," + std::to_string(*k) + "]_" + std::to_string(d.s()) +
           " distribution";
  } else if (check == "net") {
    std::size_t delta;
    if (c.delta) delta = *c.delta;
    else if (*k >= d.s()) delta = *k - d.s();
    else throw UsageError("--delta is required when fewer than q^s points are given");
    if (delta > *k) throw UsageError("delta exceeds the net dimension");
    r = check_net(d, delta, *k);
    what = "(" + std::to_string(delta) + "," + std::to_string(*k) + "," + std::to_string(d.n()) + ")-net";
  } else if (check == "mds") {
    if (!is_linear(d)) {
      o.body["verdict"] = "FAIL: point set is not linear";
      o.code = 1;
      return o;
    }
    const LinearCode code = linear_code_of(d);
    const bool mds = is_mds(code);
    o.body["rho"] = code_weight(code, Metric::rho);
    o.body["verdict"] = mds ? "PASS: MDS code" : "FAIL: not MDS";
    o.code = mds ? 0 : 1;
    return o;
  } else {
    throw UsageError("--check must be auto, optimum, net or mds");
  }
  o.body["check"] = what;
  o.body["boxes_checked"] = r.boxes_checked;
  if (r.ok) {
    o.body["verdict"] = "PASS: " + what;
  } else {
    o.body["counterexample"] = violation_json(*r.violation);
    o.body["verdict"] = "FAIL: " + violation_text(*r.violation);
    o.code = 1;
  }
  return o;
}

Outcome verify_code(const RunConfig& c, const LinearCode& code) {
  Outcome o;
  o.body["params"] = params_json(code);
  if (code.k() == 0) throw UsageError("empty code");
  std::string check = c.check == "auto" ? "mds" : c.check;
  if (check == "mds") {
    const std::size_t rho = code_weight(code, Metric::rho);
    const std::size_t want = code.n() * code.s() - code.k() + 1;
    o.body["rho"] = rho;
    o.body["singleton_bound"] = want;
    const bool ok = rho == want;
    o.body["verdict"] = ok ? "PASS: MDS code" : "FAIL: rho(C) = " + std::to_string(rho) + " < ns-k+1 = " + std::to_string(want);
    o.code = ok ? 0 : 1;
    return o;
  }
  require_enumerable(code);
  return verify_points(c, distribution_of(code));
}

Outcome cmd_verify(const RunConfig& c) {
  Input in = load_input(c);
  if (in.points) return verify_points(c, in.points->dist);
  return verify_code(c, in.code->code);
}

Outcome cmd_spectrum(const RunConfig& c) {
  const LinearCode code = code_from(c);
  Outcome o;
  o.body["params"] = params_json(code);
  bool mismatch = false;
  o.body["spectrum"] = spectrum_section(code, mismatch);
  o.body["verdict"] = mismatch ? "FAIL: spectrum differs from the closed form" : "spectrum ok";
  o.code = mismatch ? 1 : 0;
  return o;
}

Outcome cmd_dual(const RunConfig& c) {
  const LinearCode code = code_from(c);
  const LinearCode dual = dual_code(code);
  Outcome o;
  o.body["params"] = params_json(code);
  bool failed = false;
  o.body["dual"] = dual_section(code, dual, failed);
  if (c.out) {
    write_file(*c.out, [&](std::ostream& os) { write_code(os, dual, header_comments(c, "dual code")); });
    o.body["files"] = Json::array({*c.out});
  }
  o.body["verdict"] = failed ? "FAIL: duality relations violated" : "duality ok";
  o.code = failed ? 1 : 0;
  return o;
}

Outcome cmd_peano(const RunConfig& c) {
  const std::size_t g = need(c.g, "g");
  if (g == 0) throw UsageError("g must be positive");
  Outcome o;
  bool failed = false;
  if (c.in) {
    Input in = load_input(c);
    const std::size_t rows = in.points ? in.points->dist.n() : in.code->code.n();
    if (rows % g != 0) throw UsageError("row count " + std::to_string(rows) + " is not a multiple of g");
    if (in.points) {
      const Distribution& d = in.points->dist;
      Distribution mapped(d.field(), d.n() / g, d.s() * g);
      for (const auto& x : d.points()) mapped.add(peano_forward(x, g));
      o.body["mapped"] = Json{{"n", mapped.n()}, {"s", mapped.s()}, {"N", mapped.size()}};
      if (c.out)
        write_file(*c.out, [&](std::ostream& os) { write_points(os, mapped, header_comments(c, "Peano image")); });
    } else {
      const LinearCode& code = in.code->code;
      const LinearCode mapped = peano_forward(code, g);
      o.body["params"] = params_json(code);
      o.body["mapped"] = params_json(mapped);
      o.body["transport"] = transport_section(code, g, failed);
      if (c.out)
        write_file(*c.out, [&](std::ostream& os) { write_code(os, mapped, header_comments(c, "Peano image")); });
    }
  } else {
    const Field& f = resolve_field(c);
    const std::size_t n = need(c.n, "n"), s = need(c.s, "s"), k = need(c.k, "k");
    check_nsk(n, s, k);
    if (!existence_condition(g * n, f.q())) throw UsageError("q < gn-1: composite construction needs q >= gn-1");
    const auto nodes = resolve_nodes(c, f);
    CompositeResult r = build_composite(f, g, n, s, k, nodes);
    o.body["base"] = params_json(r.base);
    o.body["mapped"] = params_json(r.mapped);
    o.body["nodes"] = r.nodes.to_string();
    if (r.t) o.body["t"] = *r.t;
    else o.body["note"] = "k is not s t with 1 <= t <= n-1; weights reported without claims";
    o.body["rho"] = code_weight(r.mapped, Metric::rho);
    o.body["kappa"] = code_weight(r.mapped, Metric::kappa);
    o.body["claims"] = claims_json(r.claims, failed);
    if (c.out)
      write_file(*c.out, [&](std::ostream& os) { write_code(os, r.mapped, header_comments(c, "composite code")); });
  }
  if (c.out) o.body["files"] = Json::array({*c.out});
  o.body["verdict"] = failed ? "FAIL: Peano relations violated" : "Peano relations hold";
  o.code = failed ? 1 : 0;
  return o;
}

Outcome cmd_basechange(const RunConfig& c) {
  Outcome o;
  bool failed = false;
  if (c.in) {
    Input in = load_input(c);
    if (in.points) {
      const Distribution& d = in.points->dist;
      const std::size_t delta = need(c.delta, "delta");
      if (!is_net(d, delta)) {
        o.body["verdict"] = "FAIL: input is not a (" + std::to_string(delta) + "," + std::to_string(d.s()) + "," +
                            std::to_string(d.n()) + ")-net";
        o.code = 1;
        return o;
      }
      BaseReduction r = base_reduce_net(d, delta);
      o.body["reduced"] = Json{{"p", r.reduced.field().q()}, {"delta", r.delta_prime}, {"s", r.s_prime}, {"n", r.reduced.n()},
                               {"net", r.report.ok}};
      if (!r.report.ok) o.body["counterexample"] = violation_json(*r.report.violation);
      failed = !r.report.ok;
      if (c.out)
        write_file(*c.out, [&](std::ostream& os) { write_points(os, r.reduced, header_comments(c, "base p points")); });
    } else {
      const LinearCode& code = in.code->code;
      if (code.k() == 0) throw UsageError("empty code");
      require_enumerable(code);
      const DistributionBaseChange b =
          base_change_distribution(code, is_mds(code) ? std::optional<std::size_t>(code.k()) : std::nullopt);
      o.body["params"] = params_json(code);
      o.body["weights"] = base_change_json(b);
      failed = !b.ok();
      if (c.out) {
        const LinearCode expanded = expand_code(code);
        write_file(*c.out, [&](std::ostream& os) { write_code(os, expanded, header_comments(c, "base p code")); });
      }
    }
  } else {
    const Field& f = resolve_field(c);
    const std::size_t n = need(c.n, "n"), s = need(c.s, "s"), k = need(c.k, "k");
    const std::size_t g = c.g.value_or(1);
    check_nsk(n, s, k);
    if (g == 0) throw UsageError("g must be positive");
    if (!existence_condition(g * n, f.q())) throw UsageError("q < gn-1: composite construction needs q >= gn-1");
    const CompositeBaseP r = composite_base_p_weights(f, g, n, s, k, resolve_nodes(c, f));
    o.body["params"] = params_json(r.composite.mapped);
    if (!r.composite.t) o.body["note"] = "k is not s t with 1 <= t <= n-1; no bounds asserted";
    const DistributionBaseChange b = base_change_distribution(r.composite.mapped);
    o.body["weights"] = base_change_json(b);
    failed = !b.ok();
    o.body["claims"] = claims_json(r.claims, failed);
  }
  if (c.out) o.body["files"] = Json::array({*c.out});
  o.body["verdict"] = failed ? "FAIL: base change bounds violated" : "base change bounds hold";
  o.code = failed ? 1 : 0;
  return o;
}

Outcome cmd_discrepancy(const RunConfig& c) {
  Outcome o;
  std::optional<Distribution> d;
  if (c.in) {
    Input in = load_input(c);
    if (in.points) d = in.points->dist;
    else {
      require_enumerable(in.code->code);
      d = distribution_of(in.code->code);
    }
  } else {
    const Field& f = resolve_field(c);
    const std::size_t n = need(c.n, "n"), s = need(c.s, "s"), k = need(c.k, "k");
    check_nsk(n, s, k);
    if (std::pow(static_cast<double>(f.q()), static_cast<double>(k)) > static_cast<double>(kEnumerationBound))
      throw UsageError("too many points");
    const auto nodes = resolve_nodes(c, f);
    try {
      d = nodes ? build_optimum_distribution(f, n, s, k, *nodes) : build_optimum_distribution(f, n, s, k);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  if (d->size() == 0) throw UsageError("empty point set");
  o.body["params"] = Json{{"q", d->field().q()}, {"n", d->n()}, {"s", d->s()}, {"N", d->size()}};
  try {
    const Rational v = star_discrepancy(*d);
    o.body["star_discrepancy"] = rational_string(v);
    o.body["count_form"] = rational_string(discrepancy_count_form(*d));
    o.body["verdict"] = "D* = " + rational_string(v);
  } catch (const std::length_error& ex) {
    throw UsageError(std::string("discrepancy: ") + ex.what());
  }
  return o;
}

Outcome cmd_field_info(const RunConfig& c) {
  const Field& f = resolve_field(c);
  Outcome o;
  o.body["field"] = f.spec().to_string();
  o.body["p"] = f.p();
  o.body["e"] = f.e();
  o.body["q"] = f.q();
  o.body["modulus"] = f.spec().modulus;
  o.body["primitive"] = f.primitive();
  o.body["log_tables"] = f.uses_log_tables();
  if (f.q() <= 16) {
    Json elems = Json::array();
    for (Label a = 0; a < f.q(); ++a)
      elems.push_back(Json{{"label", a},
                           {"digits", f.digits(a)},
                           {"inverse", a ? Json(f.inv(a)) : Json(nullptr)},
                           {"trace", f.trace(a)}});
    o.body["elements"] = elems;
  }
  return o;
}

Outcome cmd_report(const RunConfig& c) {
  const LinearCode code = code_from(c);
  const LinearCode dual = dual_code(code);
  Outcome o;
  o.body["params"] = params_json(code);

  struct Section {
    std::string name;
    std::function<Json(bool&)> fn;
  };
  std::vector<Section> sections{
      {"spectrum", [&](bool& f) { return spectrum_section(code, f); }},
      {"dual", [&](bool& f) { return dual_section(code, dual, f); }},
      {"enumerators", [&](bool& f) { return enumerator_section(code, dual, f); }},
      {"character_sums", [&](bool& f) { return character_section(code, c, f); }},
      {"discrepancy",
       [&](bool&) {
         if (code.size() > 4096) return Json{{"skipped", "more than 4096 points"}};
         return discrepancy_json(distribution_of(code));
       }},
  };
  if (c.g) {
    if (*c.g == 0 || code.n() % *c.g != 0) throw UsageError("--g must divide n");
    sections.push_back({"peano", [&](bool& f) { return transport_section(code, *c.g, f); }});
  }
  if (code.field().e() > 1)
    sections.push_back({"basechange", [&](bool& f) {
                          const auto b = base_change_distribution(
                              code, is_mds(code) ? std::optional<std::size_t>(code.k()) : std::nullopt);
                          f = !b.ok();
                          return base_change_json(b);
                        }});

  // Sections are independent; with --threads > 1 they run concurrently, results are
  // assembled in the fixed order above either way.
  std::vector<bool> failed(sections.size(), false);
  std::vector<Json> results(sections.size());
  auto run = [&](std::size_t i) {
    bool f = false;
    results[i] = sections[i].fn(f);
    failed[i] = f;
  };
  if (c.threads > 1) {
    std::vector<std::future<void>> futs;
    for (std::size_t i = 0; i < sections.size(); ++i) {
      futs.push_back(std::async(std::launch::async, run, i));
      if (futs.size() >= c.threads) {
        futs.front().get();
        futs.erase(futs.begin());
      }
    }
    for (auto& fu : futs) fu.get();
  } else {
    for (std::size_t i = 0; i < sections.size(); ++i) run(i);
  }
  bool any = false;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    o.body[sections[i].name] = results[i];
    any = any || failed[i];
  }
  o.body["verdict"] = any ? "FAIL: some report checks failed" : "all report checks pass";
  o.code = any ? 1 : 0;
  return o;
}

// --- output -----------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (indent == 0 && it.key() == "verdict") continue;
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        render_text(os, item, indent + 4);
      }
    } else if (v.is_array()) {
      os << pad << it.key() << ":";
      for (const auto& x : v) os << ' ' << scalar_text(x);
      os << '\n';
    } else {
      os << pad << it.key() << ": " << scalar_text(v) << '\n';
    }
  }
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Linear codes in the NRT metric, optimum distributions and nets", "nrtcodes"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--p", cfg.p, "field characteristic");
  app.add_option("--e", cfg.e, "extension degree");
  app.add_option("--q", cfg.q, "field order p^e");
  app.add_option("--n", cfg.n, "dimension (rows)");
  app.add_option("--s", cfg.s, "digits per coordinate (columns)");
  app.add_option("--k", cfg.k, "code dimension");
  app.add_option("--g", cfg.g, "Peano block size");
  app.add_option("--t", cfg.t, "k / s for composite claims (checked against k)");
  app.add_option("--delta", cfg.delta, "net deficiency");
  app.add_option("--nodes", cfg.nodes, "interpolation nodes, e.g. 0,1,inf");
  app.add_option("--in", cfg.in, "input point or code file");
  app.add_option("--out", cfg.out, "output file (generate: file prefix)");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--kind", cfg.kind, "input kind when it cannot be detected")->check(CLI::IsMember({"points", "code"}));
  app.add_option("--check", cfg.check, "verify: auto, optimum, net or mds")
      ->check(CLI::IsMember({"auto", "optimum", "net", "mds"}));
  app.add_option("--bound", cfg.bound, "character-sum enumeration bound");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"generate", "build an MDS code and its optimum distribution"},
      {"verify", "check a point set or code file"},
      {"spectrum", "weight spectrum, brute force against closed form"},
      {"dual", "dual code and its parameters"},
      {"peano", "digit interleaving of codes and point sets"},
      {"basechange", "weights and nets after passing from base q to base p"},
      {"discrepancy", "exact star discrepancy"},
      {"field-info", "field description"},
      {"report", "combined report"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const std::map<std::string, std::function<Outcome(const RunConfig&)>> dispatch{
      {"generate", cmd_generate},       {"verify", cmd_verify},   {"spectrum", cmd_spectrum},
      {"dual", cmd_dual},               {"peano", cmd_peano},     {"basechange", cmd_basechange},
      {"discrepancy", cmd_discrepancy}, {"field-info", cmd_field_info}, {"report", cmd_report},
  };

  Outcome o;
  try {
    if (cfg.delta && cfg.s && *cfg.delta > *cfg.s && cfg.command != "basechange")
      throw UsageError("delta must satisfy 0 <= delta <= s");
    if (cfg.t && cfg.k && cfg.s && *cfg.t * *cfg.s != *cfg.k) throw UsageError("--t must equal k/s");
    o = dispatch.at(cfg.command)(cfg);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  if (cfg.format == "json") {
    Json root{{"schema", 1}, {"command", cfg.command}, {"exit_code", o.code}};
    for (auto it = o.body.begin(); it != o.body.end(); ++it) root[it.key()] = it.value();
    out << root.dump(2) << '\n';
  } else {
    render_text(out, o.body, 0);
    if (o.body.contains("verdict")) out << o.body["verdict"].get<std::string>() << '\n';
  }
  return o.code;
}

}  // namespace nrt
