#include "kyfan/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "kyfan/errors.hpp"

namespace kyfan {

namespace {

constexpr int kMaxOrder = 62;      // single-byte graph6 header
constexpr int kMaxEnumOrder = 8;   // 2^28 graphs
constexpr int kMaxChromaticOrder = 16;

int pair_count(int n) { return n * (n - 1) / 2; }

} // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [1, 62]");
    bits_.assign(static_cast<size_t>(pair_count(n) + 63) / 64 + (pair_count(n) == 0 ? 1 : 0), 0);
    if (bits_.empty()) bits_.push_back(0);
}

Graph Graph::from_code(int n, std::uint64_t code) {
    Graph g(n);
    const int m = pair_count(n);
    if (m > 64)
        throw precondition_error("from_code requires C(n,2) <= 64");
    if (m < 64 && (code >> m) != 0)
        throw std::invalid_argument("code has bits beyond C(n,2)");
    g.bits_[0] = code;
    return g;
}

int Graph::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

int Graph::edge_count() const {
    int m = 0;
    for (std::uint64_t w : bits_) m += std::popcount(w);
    return m;
}

bool Graph::edge(int i, int j) const {
    if (i == j) return false;
    const int idx = pair_index(i, j);
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
}

void Graph::set_edge(int i, int j, bool present) {
    if (i == j)
        throw std::invalid_argument("self-loops are not representable");
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("vertex index out of range");
    const int idx = pair_index(i, j);
    if (present)
        bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    else
        bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

std::uint64_t Graph::code() const {
    if (pair_count(n_) > 64)
        throw precondition_error("code requires C(n,2) <= 64");
    return bits_[0];
}

Matrix Graph::adjacency() const {
    Matrix a(n_, n_);
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (edge(i, j)) a(i, j) = a(j, i) = 1.0;
    return a;
}

std::vector<std::uint64_t> Graph::neighbor_masks() const {
    std::vector<std::uint64_t> rows(n_, 0);
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (edge(i, j)) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
    return rows;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string s;
    s.push_back(static_cast<char>(63 + n));
    const int nbits = pair_count(n);
    int acc = 0, used = 0;
    for (int idx = 0; idx < nbits; ++idx) {
        acc = (acc << 1) | (g.edge_bit(idx) ? 1 : 0);
        if (++used == 6) {
            s.push_back(static_cast<char>(63 + acc));
            acc = 0;
            used = 0;
        }
    }
    if (used > 0) {
        acc <<= (6 - used);
        s.push_back(static_cast<char>(63 + acc));
    }
    return s;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");
    const int header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw std::invalid_argument("graph6: multi-byte order header not supported (n > 62)");
    const int n = header - 63;
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph6: malformed order header");
    const int nbits = pair_count(n);
    const size_t need = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (text.size() < need)
        throw std::invalid_argument("graph6: truncated bit payload");
    if (text.size() > need)
        throw std::invalid_argument("graph6: trailing bytes after payload");
    Graph g(n);
    int idx = 0;
    for (size_t b = 1; b < text.size(); ++b) {
        const int byte = static_cast<unsigned char>(text[b]);
        if (byte < 63 || byte > 126)
            throw std::invalid_argument("graph6: byte out of range");
        const int val = byte - 63;
        for (int bit = 5; bit >= 0 && idx < nbits; --bit, ++idx) {
            if ((val >> bit) & 1) {
                // idx -> pair (i, j): find j with j(j-1)/2 <= idx < j(j+1)/2
                int j = 1;
                while ((j + 1) * j / 2 <= idx) ++j;
                const int i = idx - j * (j - 1) / 2;
                g.set_edge(i, j);
            }
        }
    }
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts, int isolated) {
    if (parts.empty())
        throw std::invalid_argument("complete_multipartite needs at least one part");
    for (int p : parts)
        if (p < 1)
            throw std::invalid_argument("part sizes must be positive");
    if (isolated < 0)
        throw std::invalid_argument("isolated count must be non-negative");
    const int n = std::accumulate(parts.begin(), parts.end(), 0) + isolated;
    Graph g(n);
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    for (size_t u = 0; u < part_of.size(); ++u)
        for (size_t v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                g.set_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

Graph complete_graph(int n) {
    return complete_multipartite(std::vector<int>(n, 1), 0);
}

Graph complete_bipartite(int a, int b) {
    return complete_multipartite({a, b}, 0);
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.set_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.set_edge(i, i + 1);
    return g;
}

Graph blow_up(const Graph& g, int t) {
    if (t < 1)
        throw std::invalid_argument("blow-up coefficient must be positive");
    const long long n = static_cast<long long>(g.order()) * t;
    if (n > kMaxOrder)
        throw std::invalid_argument("blow-up exceeds the order-62 cap");
    Graph h(static_cast<int>(n));
    for (int x = 0; x < h.order(); ++x)
        for (int y = x + 1; y < h.order(); ++y)
            if (g.edge(x / t, y / t))
                h.set_edge(x, y);
    return h;
}

namespace detail {

bool triangle_free_from_masks(const std::uint64_t* rows, int n) {
    for (int i = 0; i < n; ++i) {
        std::uint64_t nbr = rows[i] >> (i + 1); // neighbors j > i
        while (nbr) {
            const int j = i + 1 + std::countr_zero(nbr);
            nbr &= nbr - 1;
            if (rows[i] & rows[j]) return false;
        }
    }
    return true;
}

bool cmpi_from_masks(const std::uint64_t* rows, int n) {
    // complete multipartite + isolated <=> every non-adjacent pair of
    // non-isolated vertices has identical neighborhoods
    for (int u = 0; u < n; ++u) {
        if (rows[u] == 0) continue;
        for (int v = u + 1; v < n; ++v) {
            if (rows[v] == 0) continue;
            const bool adjacent = (rows[u] >> v) & 1u;
            if (!adjacent && rows[u] != rows[v]) return false;
        }
    }
    return true;
}

bool cbpi_from_masks(const std::uint64_t* rows, int n) {
    bool any_edge = false;
    for (int u = 0; u < n; ++u)
        if (rows[u]) { any_edge = true; break; }
    if (!any_edge) return false; // at least one edge required (K_{a,b}, a,b >= 1)
    if (!cmpi_from_masks(rows, n)) return false;
    // parts = distinct neighborhoods among non-isolated vertices
    std::vector<std::uint64_t> distinct;
    for (int u = 0; u < n; ++u) {
        if (rows[u] == 0) continue;
        if (std::find(distinct.begin(), distinct.end(), rows[u]) == distinct.end())
            distinct.push_back(rows[u]);
    }
    return distinct.size() == 2;
}

bool bipartite_from_masks(const std::uint64_t* rows, int n) {
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            std::uint64_t nbr = rows[u];
            while (nbr) {
                const int v = std::countr_zero(nbr);
                nbr &= nbr - 1;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// DSATUR-ordered branch and bound; exact for n <= 16
struct ChromaticSolver {
    int n;
    const std::uint64_t* adj;
    int best;                      // best complete coloring found so far
    std::uint32_t forbidden[16];   // colors used by already-colored neighbors
    int degree[16];

    int greedy_clique() const {
        std::uint64_t cand = (n == 64) ? ~0ULL : ((std::uint64_t{1} << n) - 1);
        int size = 0;
        while (cand) {
            int pick = -1, pickdeg = -1;
            std::uint64_t c = cand;
            while (c) {
                const int v = std::countr_zero(c);
                c &= c - 1;
                const int d = std::popcount(adj[v] & cand);
                if (d > pickdeg) { pickdeg = d; pick = v; }
            }
            ++size;
            cand &= adj[pick];
        }
        return size;
    }

    int dsatur_greedy() const {
        std::uint32_t forb[16] = {};
        int color[16];
        std::fill(color, color + n, -1);
        int used = 0;
        for (int step = 0; step < n; ++step) {
            int pick = -1, picksat = -1, pickdeg = -1;
            for (int v = 0; v < n; ++v) {
                if (color[v] != -1) continue;
                const int sat = std::popcount(forb[v]);
                if (sat > picksat || (sat == picksat && degree[v] > pickdeg)) {
                    picksat = sat;
                    pickdeg = degree[v];
                    pick = v;
                }
            }
            int c = std::countr_one(forb[pick]); // lowest color not forbidden
            color[pick] = c;
            used = std::max(used, c + 1);
            std::uint64_t nbr = adj[pick];
            while (nbr) {
                const int w = std::countr_zero(nbr);
                nbr &= nbr - 1;
                forb[w] |= std::uint32_t{1} << c;
            }
        }
        return used;
    }

    void branch(int colored, int used, int lower, int* color) {
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        if (std::max(used, lower) >= best) return;
        int pick = -1, picksat = -1, pickdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            const int sat = std::popcount(forbidden[v]);
            if (sat > picksat || (sat == picksat && degree[v] > pickdeg)) {
                picksat = sat;
                pickdeg = degree[v];
                pick = v;
            }
        }
        const int cap = std::min(used + 1, best - 1); // colors 0..cap-1 are candidates
        for (int c = 0; c < cap; ++c) {
            if ((forbidden[pick] >> c) & 1u) continue;
            color[pick] = c;
            std::uint64_t touched = 0;
            std::uint64_t nbr = adj[pick];
            while (nbr) {
                const int w = std::countr_zero(nbr);
                nbr &= nbr - 1;
                if (!((forbidden[w] >> c) & 1u)) {
                    forbidden[w] |= std::uint32_t{1} << c;
                    touched |= std::uint64_t{1} << w;
                }
            }
            branch(colored + 1, std::max(used, c + 1), lower, color);
            while (touched) {
                const int w = std::countr_zero(touched);
                touched &= touched - 1;
                forbidden[w] &= ~(std::uint32_t{1} << c);
            }
            color[pick] = -1;
            if (best <= std::max(used, lower)) return;
        }
    }
};

} // namespace

int chromatic_from_masks(const std::uint64_t* rows, int n) {
    bool any_edge = false;
    for (int v = 0; v < n; ++v)
        if (rows[v]) { any_edge = true; break; }
    if (!any_edge) return 1;

    ChromaticSolver solver;
    solver.n = n;
    solver.adj = rows;
    for (int v = 0; v < n; ++v) {
        solver.degree[v] = std::popcount(rows[v]);
        solver.forbidden[v] = 0;
    }
    const int lower = solver.greedy_clique();
    solver.best = solver.dsatur_greedy();
    if (solver.best > lower) {
        int color[16];
        std::fill(color, color + n, -1);
        solver.branch(0, 0, lower, color);
    }
    return solver.best;
}

} // namespace detail

bool is_triangle_free(const Graph& g) {
    const auto rows = g.neighbor_masks();
    return detail::triangle_free_from_masks(rows.data(), g.order());
}

bool is_bipartite(const Graph& g) {
    const auto rows = g.neighbor_masks();
    return detail::bipartite_from_masks(rows.data(), g.order());
}

bool is_complete_multipartite_plus_isolated(const Graph& g) {
    const auto rows = g.neighbor_masks();
    return detail::cmpi_from_masks(rows.data(), g.order());
}

bool is_complete_bipartite_plus_isolated(const Graph& g) {
    const auto rows = g.neighbor_masks();
    return detail::cbpi_from_masks(rows.data(), g.order());
}

int chromatic_number(const Graph& g) {
    if (g.order() > kMaxChromaticOrder)
        throw precondition_error("chromatic_number supports n <= 16");
    const auto rows = g.neighbor_masks();
    return detail::chromatic_from_masks(rows.data(), g.order());
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > kMaxEnumOrder)
        throw precondition_error("labeled enumeration supports n <= 8");
    return std::uint64_t{1} << pair_count(n);
}

std::vector<EnumerationRange> partition_enumeration(int n, int parts) {
    const std::uint64_t total = labeled_graph_count(n);
    if (parts < 1) parts = 1;
    const std::uint64_t want = std::min<std::uint64_t>(static_cast<std::uint64_t>(parts), total);
    std::vector<EnumerationRange> out;
    std::uint64_t begin = 0;
    for (std::uint64_t p = 0; p < want; ++p) {
        std::uint64_t end = begin + total / want + (p < total % want ? 1 : 0);
        out.push_back({n, begin, end});
        begin = end;
    }
    return out;
}

} // namespace kyfan
