#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kyfan/bounds.hpp"
#include "kyfan/graph.hpp"
#include "kyfan/matrix.hpp"

namespace kyfan {

enum class SearchKind { XI, TAU };

/// Result of an exhaustive scan over all labeled graphs of order n: the
/// extremal value, every attaining graph within the equality tolerance
/// (sorted by graph6 string), and the number of graphs examined.
struct SearchResult {
    int n = 0;
    int k = 0;
    SearchKind kind = SearchKind::XI;
    double value = 0.0;
    std::vector<std::string> argmax;
    std::uint64_t scanned = 0;
};

// max over all labeled graphs of order n of the Ky Fan k-norm
SearchResult search_xi(int n, int k, const CertOptions& opts = {}, int threads = 1);

// max over all labeled graphs of order n of mu_1 + ... + mu_k
SearchResult search_tau(int n, int k, const CertOptions& opts = {}, int threads = 1);

// Sylvester-type Hadamard matrix of the given order (a power of two)
Matrix sylvester_hadamard(int order);

// blow-up of the order-k extremal base (k = 4: K_4) by coefficient t
Graph construct_blowup_extremal(int k, int t);
Graph construct_blowup_extremal(const Graph& base, int t);

// B (x) J_{r,s} where B is k rows of a scaled Sylvester matrix: pairwise
// orthogonal rows of length c, q a power of two, q >= k
Matrix construct_orthogonal_rows(int k, int q, double c, int r, int s);

// (0,1)-matrix attaining the (1/2)(1+sqrt(k))sqrt(mn) bound, optionally
// blown up by (x) J_{r,s}; supported bases: k = 1 and k = 4
Matrix construct_tnik_equality(int k, int r = 1, int s = 1);

} // namespace kyfan
