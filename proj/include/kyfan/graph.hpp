#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kyfan/matrix.hpp"

namespace kyfan {

/// Simple undirected graph: vertex count plus an edge bitset over the C(n,2)
/// unordered pairs in graph6 column-major order, so the bitset doubles as the
/// codec payload. Pair (i,j) with i<j has index j*(j-1)/2 + i.
class Graph {
public:
    explicit Graph(int n);

    // edge bits taken from the low C(n,2) bits of `code`; requires C(n,2) <= 64
    static Graph from_code(int n, std::uint64_t code);

    static int pair_index(int i, int j);

    int order() const { return n_; }
    int edge_count() const;

    bool edge(int i, int j) const;
    void set_edge(int i, int j, bool present = true);
    bool edge_bit(int idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1u; }

    // bitset as an integer; requires C(n,2) <= 64
    std::uint64_t code() const;

    Matrix adjacency() const;
    // neighbor bitmask per vertex (n <= 62 so one word suffices)
    std::vector<std::uint64_t> neighbor_masks() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

// graph6 codec, single-byte header form (1 <= n <= 62)
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

Graph complete_multipartite(const std::vector<int>& parts, int isolated = 0);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// each vertex becomes an independent t-set, each edge a complete join;
// adjacency(blow_up(g,t)) == kronecker(adjacency(g), ones(t,t))
Graph blow_up(const Graph& g, int t);

bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_complete_multipartite_plus_isolated(const Graph& g);
bool is_complete_bipartite_plus_isolated(const Graph& g);

// exact chromatic number (DSATUR-ordered branch and bound); n <= 16
int chromatic_number(const Graph& g);

// Exhaustive labeled-graph enumeration: every edge bitset exactly once, in
// increasing integer order. Hard cap n <= 8.
std::uint64_t labeled_graph_count(int n);

struct EnumerationRange {
    int n;
    std::uint64_t begin;
    std::uint64_t end;
};

// split [0, 2^C(n,2)) into at most `parts` contiguous non-empty ranges
std::vector<EnumerationRange> partition_enumeration(int n, int parts);

template <typename F>
void enumerate_range(const EnumerationRange& r, F&& fn) {
    for (std::uint64_t code = r.begin; code < r.end; ++code)
        fn(Graph::from_code(r.n, code));
}

template <typename F>
void enumerate_labeled(int n, F&& fn) {
    enumerate_range(EnumerationRange{n, 0, labeled_graph_count(n)}, fn);
}

namespace detail {

// mask-level predicate kernels shared with the exhaustive scanners
bool triangle_free_from_masks(const std::uint64_t* rows, int n);
bool cmpi_from_masks(const std::uint64_t* rows, int n);
bool cbpi_from_masks(const std::uint64_t* rows, int n);
bool bipartite_from_masks(const std::uint64_t* rows, int n);
int chromatic_from_masks(const std::uint64_t* rows, int n);

} // namespace detail

} // namespace kyfan
