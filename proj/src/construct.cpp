#include "nrt/construct.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nrt {

void NodeSet::validate(const Field& f) const {
  if (nodes.empty()) throw std::invalid_argument("empty node set");
  if (nodes.size() > f.q() + 1) throw std::invalid_argument("more than q+1 nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].is_infinity() && nodes[i].value() >= f.q()) throw std::invalid_argument("node label out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("nodes must be pairwise distinct");
  }
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i];
  return os.str();
}

NodeSet NodeSet::parse(const std::string& text) {
  NodeSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item == "inf" || item == "infinity") {
      out.nodes.push_back(Node::infinity());
      continue;
    }
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("bad node '" + item + "'");
    out.nodes.push_back(Node::at(static_cast<Label>(std::stoul(item))));
  }
  if (out.nodes.empty()) throw std::invalid_argument("empty node set");
  return out;
}

NodeSet default_nodes(const Field& f, std::size_t n) {
  if (n > f.q() + 1) throw std::invalid_argument("q < n-1: no MDS code exists for these parameters (existence condition q >= n-1)");
  NodeSet out;
  for (std::size_t i = 0; i < n && i < f.q(); ++i) out.nodes.push_back(Node::at(static_cast<Label>(i)));
  if (n == f.q() + 1) out.nodes.push_back(Node::infinity());
  return out;
}

CodeWord gamma_word(const Poly& f, const NodeSet& nodes, std::size_t s, std::size_t t) {
  CodeWord w(f.field(), nodes.size(), s);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t c = 0; c < s; ++c) w.at(i, c) = eval(f, nodes.nodes[i], s - 1 - c, t);
  return w;
}

Matrix coefficient_matrix(const Field& f, const NodeSet& nodes, std::size_t s, std::size_t k) {
  Matrix m(f, nodes.size() * s, k);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& beta = nodes.nodes[i];
    for (std::size_t c = 0; c < s; ++c) {
      const std::size_t h = s - 1 - c;  // derivative order
      const std::size_t row = i * s + c;
      if (beta.is_infinity()) {
        if (h < k) m.at(row, k - 1 - h) = 1;
        continue;
      }
      for (std::size_t l = h; l < k; ++l) {
        const unsigned b = binomial_mod_p(l, h, f.p());
        if (b == 0) continue;
        m.at(row, l) = f.mul(b, f.pow(beta.value(), l - h));  // pow(0, 0) = 1
      }
    }
  }
  return m;
}

void check_construction_params(const Field& f, std::size_t n, std::size_t s, std::size_t k, const NodeSet& nodes) {
  if (n == 0 || s == 0) throw std::invalid_argument("n and s must be positive");
  if (!existence_condition(n, f.q()))
    throw std::invalid_argument("q < n-1: no MDS code exists for these parameters (existence condition q >= n-1)");
  if (k < 1 || k > n * s) throw std::invalid_argument("k must satisfy 1 <= k <= ns");
  if (nodes.size() != n) throw std::invalid_argument("node count differs from n");
  nodes.validate(f);
}

LinearCode build_mds_code(const Field& f, std::size_t n, std::size_t s, std::size_t k, const NodeSet& nodes) {
  check_construction_params(f, n, s, k, nodes);
  LinearCode c(f, n, s, coefficient_matrix(f, nodes, s, k).transpose());
  if (c.k() != k) throw std::logic_error("interpolation map lost rank");
  return c;
}

LinearCode build_mds_code(const Field& f, std::size_t n, std::size_t s, std::size_t k) {
  return build_mds_code(f, n, s, k, default_nodes(f, n));
}

Distribution build_optimum_distribution(const Field& f, std::size_t n, std::size_t s, std::size_t k,
                                        const NodeSet& nodes) {
  check_construction_params(f, n, s, k, nodes);
  const std::uint64_t count = checked_power(f.q(), k);
  // Walks the coefficient vectors in the same order as before, updating the word by
  // the change in one coefficient per step instead of re-evaluating.
  const Matrix m = coefficient_matrix(f, nodes, s, k);
  const std::size_t len = n * s;
  const unsigned q = f.q();
  // delta[i][a] = (a+1)M_i - a M_i, with a+1 taken mod q as a label
  std::vector<std::vector<std::vector<Label>>> delta(k, std::vector<std::vector<Label>>(q, std::vector<Label>(len)));
  for (std::size_t i = 0; i < k; ++i)
    for (Label a = 0; a < q; ++a) {
      const Label b = (a + 1) % q;
      for (std::size_t r = 0; r < len; ++r) delta[i][a][r] = f.sub(f.mul(b, m.at(r, i)), f.mul(a, m.at(r, i)));
    }
  std::vector<Label> coeffs(k, 0), w(len, 0);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    pts.emplace_back(CodeWord(f, n, s, w));
    for (std::size_t i = 0; i < k; ++i) {
      const auto& step = delta[i][coeffs[i]];
      for (std::size_t r = 0; r < len; ++r) w[r] = f.add(w[r], step[r]);
      coeffs[i] = (coeffs[i] + 1) % q;
      if (coeffs[i] != 0) break;
    }
  }
  return Distribution(f, n, s, std::move(pts));
}

Distribution build_optimum_distribution(const Field& f, std::size_t n, std::size_t s, std::size_t k) {
  return build_optimum_distribution(f, n, s, k, default_nodes(f, n));
}

bool same_words(const Distribution& d, const LinearCode& c) {
  if (d.params() != c.params()) return false;
  std::vector<std::vector<Label>> a, b;
  for (const auto& x : d.points()) a.push_back(x.word().flat());
  c.for_each_word([&](std::span<const Label> w) { b.emplace_back(w.begin(), w.end()); });
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace nrt
