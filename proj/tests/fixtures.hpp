#ifndef CUBICCOVER_TESTS_FIXTURES_HPP
#define CUBICCOVER_TESTS_FIXTURES_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <cubiccover/corpus.hpp>
#include <cubiccover/cubiccover.hpp>

namespace fixtures {

using cubiccover::Edge;
using cubiccover::EdgeSet;
using cubiccover::Graph;

inline Graph theta() { return Graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph k33()
{
    std::vector<Edge> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            e.push_back({a, b});
    return Graph(6, e);
}

// Two triangles joined by a perfect matching.
inline Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
inline Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i)
        e.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i)
        e.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i)
        e.push_back({5 + i, 5 + (i + 2) % 5});
    return Graph(10, e);
}

// Two copies of K_4 minus an edge joined by one edge (not cubic).
inline Graph diamonds_joined_once()
{
    return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}, {0, 4}});
}

// The same diamonds joined by two edges: cubic with a 2-edge-cut.
inline Graph diamonds_joined_twice()
{
    return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {3, 7}});
}

// Cubic with exactly one bridge: two K_4 with one edge subdivided each,
// the subdivision vertices 4 and 9 joined.
inline Graph bridged_pair()
{
    return Graph(10, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {5, 9}, {9, 6}, {5, 7}, {5, 8}, {6, 7},
                      {6, 8}, {7, 8}, {4, 9}});
}

inline Graph cube()
{
    std::vector<Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b) {
            int w = v ^ (1 << b);
            if (v < w)
                e.push_back({v, w});
        }
    return Graph(8, e);
}

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<cubiccover::CorpusEntry> corpus()
{
    return cubiccover::read_corpus(read_text(std::string(CUBICCOVER_DATA_DIR) + "/corpus.mgf"));
}

// ------------------------------------------------------------------ oracles

/// graph6 encoder written from the format description: n as one byte (n
/// <= 62) or '~' plus three bytes, then the upper triangle column by column,
/// six bits per byte, each byte offset by 63.
inline std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (const Edge& e : g.edges())
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
            adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    std::vector<bool> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    while (bits.size() % 6 != 0)
        bits.push_back(false);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t b = 0; b < 6; ++b)
            v = (v << 1) | (bits[i + b] ? 1 : 0);
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

/// Connected components of the vertices when the edges of `removed` are
/// deleted, by repeated relaxation.
inline std::vector<int> component_labels(const Graph& g, const EdgeSet& removed = {})
{
    std::vector<int> label(static_cast<std::size_t>(g.order()));
    std::iota(label.begin(), label.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < g.size(); ++e) {
            if (removed.test(e))
                continue;
            auto& a = label[static_cast<std::size_t>(g.edge(e).u)];
            auto& b = label[static_cast<std::size_t>(g.edge(e).v)];
            if (a != b) {
                a = b = std::min(a, b);
                changed = true;
            }
        }
    }
    return label;
}

/// Shortest circuit: for each edge uv, 1 + the BFS distance from u to v in G - uv.
inline int girth_by_edge_removal(const Graph& g)
{
    int best = 1 << 30;
    for (int e = 0; e < g.size(); ++e) {
        const int s = g.edge(e).u;
        const int t = g.edge(e).v;
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        std::vector<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int f = 0; f < g.size(); ++f) {
                if (f == e)
                    continue;
                const int x = queue[i];
                int y = -1;
                if (g.edge(f).u == x)
                    y = g.edge(f).v;
                else if (g.edge(f).v == x)
                    y = g.edge(f).u;
                if (y >= 0 && dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
            }
        if (dist[static_cast<std::size_t>(t)] >= 0)
            best = std::min(best, dist[static_cast<std::size_t>(t)] + 1);
    }
    return best;
}

inline EdgeSet bridges_by_removal(const Graph& g)
{
    EdgeSet out;
    for (int e = 0; e < g.size(); ++e) {
        auto label = component_labels(g, EdgeSet::of({e}));
        if (label[static_cast<std::size_t>(g.edge(e).u)] != label[static_cast<std::size_t>(g.edge(e).v)])
            out.set(e);
    }
    return out;
}

/// All perfect matchings by checking every n/2-subset of edges.
inline std::vector<EdgeSet> perfect_matchings_by_subsets(const Graph& g)
{
    std::vector<EdgeSet> out;
    const int m = g.size();
    const int half = g.order() / 2;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == half) {
            std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
            for (int e : pick) {
                ++deg[static_cast<std::size_t>(g.edge(e).u)];
                ++deg[static_cast<std::size_t>(g.edge(e).v)];
            }
            if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) {
                EdgeSet s;
                for (int e : pick)
                    s.set(e);
                out.push_back(s);
            }
            return;
        }
        for (int e = from; e < m; ++e) {
            pick.push_back(e);
            rec(e + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

/// mu_k over all multisets of k matchings.
inline int mu_by_multisets(const Graph& g, const std::vector<EdgeSet>& pms, int k)
{
    int best = g.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    std::function<void(int, std::size_t, EdgeSet)> rec = [&](int depth, std::size_t lo, EdgeSet u) {
        if (depth == k) {
            best = std::min(best, g.size() - u.count());
            return;
        }
        for (std::size_t j = lo; j < pms.size(); ++j)
            rec(depth + 1, j, u | pms[j]);
    };
    rec(0, 0, {});
    return best;
}

/// Proper 3-edge-coloring by trying all 3^m assignments.
inline bool colorable_by_brute_force(const Graph& g)
{
    const int m = g.size();
    std::vector<int> c(static_cast<std::size_t>(m), 0);
    while (true) {
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
            for (int f = e + 1; f < m && ok; ++f) {
                const Edge& a = g.edge(e);
                const Edge& b = g.edge(f);
                const bool adjacent = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
                ok = !(adjacent && c[static_cast<std::size_t>(e)] == c[static_cast<std::size_t>(f)]);
            }
        if (ok)
            return true;
        int i = 0;
        while (i < m && ++c[static_cast<std::size_t>(i)] == 3)
            c[static_cast<std::size_t>(i++)] = 0;
        if (i == m)
            return false;
    }
}

/// Hamiltonicity by permutations of the vertices other than the first kept one.
inline bool hamiltonian_by_permutations(const Graph& g, int skip = -1)
{
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if (v != skip)
            verts.push_back(v);
    if (verts.size() < 2)
        return false;
    auto count_edges = [&](int a, int b) {
        int c = 0;
        for (const Edge& e : g.edges())
            c += ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ? 1 : 0;
        return c;
    };
    if (verts.size() == 2)
        return count_edges(verts[0], verts[1]) >= 2;
    std::sort(verts.begin() + 1, verts.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < verts.size() && ok; ++i)
            ok = count_edges(verts[i], verts[(i + 1) % verts.size()]) > 0;
        if (ok)
            return true;
    } while (std::next_permutation(verts.begin() + 1, verts.end()));
    return false;
}

/// Non-trivial 3-edge-cut by trying every vertex subset S with 2 <= |S| <= n-2.
inline bool nontrivial_3_cut_by_subsets(const Graph& g)
{
    const int n = g.order();
    for (long mask = 1; mask < (1L << n) - 1; ++mask) {
        const int size = __builtin_popcountl(static_cast<unsigned long>(mask));
        if (size < 2 || size > n - 2 || !(mask & 1))
            continue;
        int cut = 0;
        for (const Edge& e : g.edges())
            cut += ((mask >> e.u & 1) != (mask >> e.v & 1)) ? 1 : 0;
        if (cut == 3)
            return true;
    }
    return false;
}

/// Odd circuits of the 2-factor E - pm, counted by component sizes.
inline int odd_circuits_by_components(const Graph& g, const EdgeSet& pm)
{
    auto label = component_labels(g, pm);
    std::vector<int> size(static_cast<std::size_t>(g.order()), 0);
    for (int l : label)
        ++size[static_cast<std::size_t>(l)];
    return static_cast<int>(std::count_if(size.begin(), size.end(), [](int s) { return s % 2 == 1; }));
}

/// Every element of the cycle space: all edge subsets with even degrees,
/// listed from a basis found by Gaussian elimination over edge subsets.
inline std::vector<EdgeSet> cycle_space(const Graph& g, const EdgeSet& active)
{
    // Fundamental cycles w.r.t. a spanning forest grown edge by edge.
    std::vector<EdgeSet> basis;
    std::vector<int> label(static_cast<std::size_t>(g.order()));
    std::iota(label.begin(), label.end(), 0);
    EdgeSet forest;
    active.for_each([&](int e) {
        const int a = label[static_cast<std::size_t>(g.edge(e).u)];
        const int b = label[static_cast<std::size_t>(g.edge(e).v)];
        if (a != b) {
            for (auto& l : label)
                if (l == b)
                    l = a;
            forest.set(e);
        }
    });
    active.for_each([&](int e) {
        if (forest.test(e))
            return;
        // Path in the forest between the ends: search over forest edges.
        const int s = g.edge(e).u;
        const int t = g.edge(e).v;
        std::vector<int> via(static_cast<std::size_t>(g.order()), -2);
        std::vector<int> queue{s};
        via[static_cast<std::size_t>(s)] = -1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            forest.for_each([&](int f) {
                const int x = queue[i];
                int y = g.edge(f).u == x ? g.edge(f).v : (g.edge(f).v == x ? g.edge(f).u : -1);
                if (y >= 0 && via[static_cast<std::size_t>(y)] == -2) {
                    via[static_cast<std::size_t>(y)] = f;
                    queue.push_back(y);
                }
            });
        EdgeSet c = EdgeSet::of({e});
        for (int x = t; x != s;) {
            const int f = via[static_cast<std::size_t>(x)];
            c ^= EdgeSet::of({f});
            x = g.edge(f).u == x ? g.edge(f).v : g.edge(f).u;
        }
        basis.push_back(c);
    });
    std::vector<EdgeSet> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << basis.size()); ++mask) {
        EdgeSet c;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (mask >> b & 1U)
                c ^= basis[b];
        out.push_back(c);
    }
    return out;
}

/// Shortest cover of `active` by at most `r` distinct non-empty cycles,
/// trying every such family.
inline int shortest_cover_by_brute_force(const Graph& g, const EdgeSet& active, int r)
{
    const auto cycles = cycle_space(g, active);
    int best = 1 << 30;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, EdgeSet, int)> rec = [&](std::size_t from, EdgeSet u, int len) {
        if (len >= best)
            return;
        if (u == active) {
            best = len;
            return;
        }
        if (static_cast<int>(pick.size()) == r)
            return;
        for (std::size_t i = from; i < cycles.size(); ++i) {
            pick.push_back(i);
            rec(i + 1, u | cycles[i], len + cycles[i].count());
            pick.pop_back();
        }
    };
    rec(0, {}, 0);
    return best;
}

inline int shortest_cover_by_brute_force(const Graph& g, int r)
{
    return shortest_cover_by_brute_force(g, g.all_edges(), r);
}

} // namespace fixtures

#endif
