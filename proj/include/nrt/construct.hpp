#pragma once

// Interpolation constructions: the maps Gamma_{n,s} / gamma_{n,s} from polynomials
// of degree < k to code words / points, giving MDS codes and optimum distributions.

#include <string>
#include <vector>

#include "nrt/codes.hpp"
#include "nrt/geometry.hpp"
#include "nrt/matrix.hpp"
#include "nrt/poly.hpp"

namespace nrt {

struct NodeSet {
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
  // Pairwise distinct, finite labels below q, at most q+1 nodes.
  void validate(const Field& f) const;
  // "0,1,2" or "0,1,inf"
  std::string to_string() const;
  static NodeSet parse(const std::string& text);
};

// Labels 0..n-1, with infinity as the last node when n = q+1.
NodeSet default_nodes(const Field& f, std::size_t n);

// Row i is (d^{s-1} f(beta_i), ..., d f(beta_i), f(beta_i)); t is the dimension of the
// ambient polynomial space, used for the values at infinity.
CodeWord gamma_word(const Poly& f, const NodeSet& nodes, std::size_t s, std::size_t t);

// ns x k matrix taking (f_0, ..., f_{k-1}) to the flattened gamma_word of f.
Matrix coefficient_matrix(const Field& f, const NodeSet& nodes, std::size_t s, std::size_t k);

// Throws std::invalid_argument when q < n - 1 or the parameters are out of range.
void check_construction_params(const Field& f, std::size_t n, std::size_t s, std::size_t k, const NodeSet& nodes);

LinearCode build_mds_code(const Field& f, std::size_t n, std::size_t s, std::size_t k, const NodeSet& nodes);
LinearCode build_mds_code(const Field& f, std::size_t n, std::size_t s, std::size_t k);

// The q^k points gamma f, f running over M^k with f_0 varying fastest.
Distribution build_optimum_distribution(const Field& f, std::size_t n, std::size_t s, std::size_t k,
                                        const NodeSet& nodes);
Distribution build_optimum_distribution(const Field& f, std::size_t n, std::size_t s, std::size_t k);

// The words of d, as a multiset, coincide with the words of c.
bool same_words(const Distribution& d, const LinearCode& c);

}  // namespace nrt
