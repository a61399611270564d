#ifndef CUBICCOVER_STRUCTURE_HPP
#define CUBICCOVER_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"
#include "graph.hpp"

// Structural queries. Every query has a variant restricted to the subgraph
// formed by an edge set `active` (vertices are the endpoints of `active`),
// which is how cores are inspected without copying the graph.

namespace cubiccover {

/// Connected components of the subgraph spanned by `active`, as edge sets,
/// ordered by their lowest edge index.
inline std::vector<EdgeSet> edge_components(const Graph& g, const EdgeSet& active)
{
    std::vector<EdgeSet> comps;
    EdgeSet left = active;
    while (left.any()) {
        EdgeSet comp;
        std::vector<Vertex> stack;
        int e0 = left.first();
        comp.set(e0);
        left.reset(e0);
        stack.push_back(g.edge(e0).u);
        stack.push_back(g.edge(e0).v);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (EdgeIndex e : g.incident(x)) {
                if (!left.test(e))
                    continue;
                left.reset(e);
                comp.set(e);
                stack.push_back(g.other(e, x));
            }
        }
        comps.push_back(comp);
    }
    return comps;
}

/// Vertex component labels of the whole graph; returns the component count.
inline int vertex_components(const Graph& g, std::vector<int>& label, const EdgeSet& removed = {})
{
    label.assign(static_cast<std::size_t>(g.order()), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0)
            continue;
        label[static_cast<std::size_t>(s)] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (EdgeIndex e : g.incident(x)) {
                if (removed.test(e))
                    continue;
                Vertex y = g.other(e, x);
                if (label[static_cast<std::size_t>(y)] < 0) {
                    label[static_cast<std::size_t>(y)] = count;
                    stack.push_back(y);
                }
            }
        }
        ++count;
    }
    return count;
}

inline bool is_connected(const Graph& g)
{
    std::vector<int> label;
    return vertex_components(g, label) <= 1;
}

/// Length of a shortest circuit in the subgraph, or nullopt if it is a
/// forest. Parallel edges form circuits of length 2; no edge is used twice.
inline std::optional<int> girth(const Graph& g, const EdgeSet& active)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> dist(n);
    std::vector<EdgeIndex> via(n);
    std::deque<Vertex> queue;
    int best = 0;
    for (Vertex root : g.vertices_of(active)) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        via[static_cast<std::size_t>(root)] = -1;
        queue.assign(1, root);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            const int dx = dist[static_cast<std::size_t>(x)];
            if (best > 0 && 2 * dx >= best)
                break;
            for (EdgeIndex e : g.incident(x)) {
                if (!active.test(e) || e == via[static_cast<std::size_t>(x)])
                    continue;
                Vertex y = g.other(e, x);
                int& dy = dist[static_cast<std::size_t>(y)];
                if (dy < 0) {
                    dy = dx + 1;
                    via[static_cast<std::size_t>(y)] = e;
                    queue.push_back(y);
                } else {
                    int len = dx + dy + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    if (best == 0)
        return std::nullopt;
    return best;
}

inline std::optional<int> girth(const Graph& g) { return girth(g, g.all_edges()); }

/// Cut edges of the subgraph (Tarjan low-link over edge indices, so a
/// parallel pair is never a bridge).
inline EdgeSet bridges(const Graph& g, const EdgeSet& active)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    EdgeSet result;
    int timer = 0;

    std::function<void(Vertex, EdgeIndex)> dfs = [&](Vertex x, EdgeIndex parent_edge) {
        disc[static_cast<std::size_t>(x)] = low[static_cast<std::size_t>(x)] = timer++;
        for (EdgeIndex e : g.incident(x)) {
            if (!active.test(e) || e == parent_edge)
                continue;
            Vertex y = g.other(e, x);
            if (disc[static_cast<std::size_t>(y)] < 0) {
                dfs(y, e);
                low[static_cast<std::size_t>(x)] =
                    std::min(low[static_cast<std::size_t>(x)], low[static_cast<std::size_t>(y)]);
                if (low[static_cast<std::size_t>(y)] > disc[static_cast<std::size_t>(x)])
                    result.set(e);
            } else {
                low[static_cast<std::size_t>(x)] =
                    std::min(low[static_cast<std::size_t>(x)], disc[static_cast<std::size_t>(y)]);
            }
        }
    };
    for (Vertex v : g.vertices_of(active))
        if (disc[static_cast<std::size_t>(v)] < 0)
            dfs(v, -1);
    return result;
}

inline EdgeSet bridges(const Graph& g) { return bridges(g, g.all_edges()); }

inline bool is_bridgeless(const Graph& g) { return bridges(g).empty(); }

/// Two-coloring of the subgraph's vertices (0/1, -1 outside the subgraph),
/// or nullopt if the subgraph has an odd circuit.
inline std::optional<std::vector<int>> bipartition(const Graph& g, const EdgeSet& active)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    for (Vertex s : g.vertices_of(active)) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (EdgeIndex e : g.incident(x)) {
                if (!active.test(e))
                    continue;
                Vertex y = g.other(e, x);
                int& sy = side[static_cast<std::size_t>(y)];
                if (sy < 0) {
                    sy = 1 - side[static_cast<std::size_t>(x)];
                    stack.push_back(y);
                } else if (sy == side[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

inline std::optional<std::vector<int>> bipartition(const Graph& g) { return bipartition(g, g.all_edges()); }

inline bool is_bipartite(const Graph& g, const EdgeSet& active) { return bipartition(g, active).has_value(); }
inline bool is_bipartite(const Graph& g) { return is_bipartite(g, g.all_edges()); }

/// Every vertex has even degree in `s`.
inline bool is_cycle(const Graph& g, const EdgeSet& s)
{
    if (!s.subset_of(g.all_edges()))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree_in(s, v) % 2 != 0)
            return false;
    return true;
}

/// Splits a cycle whose vertices all have degree 0 or 2 into its circuits.
/// Each circuit is traced from its lowest edge towards the lower-indexed
/// continuation; circuits are ordered by lowest edge.
inline std::vector<std::vector<EdgeIndex>> trace_circuits(const Graph& g, const EdgeSet& cycle)
{
    std::vector<std::vector<EdgeIndex>> out;
    EdgeSet left = cycle;
    while (left.any()) {
        int e0 = left.first();
        std::vector<EdgeIndex> circuit{e0};
        left.reset(e0);
        const Vertex start = g.edge(e0).u;
        Vertex x = g.edge(e0).v;
        while (x != start) {
            EdgeIndex step = -1;
            for (EdgeIndex e : g.incident(x))
                if (left.test(e) && (step < 0 || e < step))
                    step = e;
            if (step < 0)
                throw Error(ErrorKind::invalid_argument, "edge set is not a union of circuits");
            left.reset(step);
            circuit.push_back(step);
            x = g.other(step, x);
        }
        out.push_back(std::move(circuit));
    }
    return out;
}

/// Circuit lengths of a 2-regular (or degree 0/2) edge set.
inline std::vector<int> circuit_lengths(const Graph& g, const EdgeSet& cycle)
{
    std::vector<int> lens;
    for (const auto& c : trace_circuits(g, cycle))
        lens.push_back(static_cast<int>(c.size()));
    return lens;
}

/// Both sides of a cut δ(S) with |δ(S)| = 3 have at least two vertices.
/// Returns the first such edge triple in lexicographic order, if any.
inline std::optional<std::array<EdgeIndex, 3>> nontrivial_3_edge_cut(const Graph& g)
{
    if (!is_connected(g))
        throw Error(ErrorKind::disconnected, "3-edge-cut test needs a connected graph");
    const int m = g.size();
    const int n = g.order();
    std::vector<int> label;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                const EdgeSet removed = EdgeSet::of({a, b, c});
                const int comps = vertex_components(g, label, removed);
                if (comps < 2)
                    continue;
                std::vector<int> comp_size(static_cast<std::size_t>(comps), 0);
                for (int l : label)
                    ++comp_size[static_cast<std::size_t>(l)];
                // S ranges over unions of components; δ(S) lies inside the triple.
                for (unsigned mask = 1; mask + 1 < (1U << comps); ++mask) {
                    int s_size = 0;
                    for (int i = 0; i < comps; ++i)
                        if (mask >> i & 1U)
                            s_size += comp_size[static_cast<std::size_t>(i)];
                    if (s_size < 2 || n - s_size < 2)
                        continue;
                    int crossing = 0;
                    for (int e : {a, b, c}) {
                        bool in_u = mask >> label[static_cast<std::size_t>(g.edge(e).u)] & 1U;
                        bool in_v = mask >> label[static_cast<std::size_t>(g.edge(e).v)] & 1U;
                        crossing += in_u != in_v ? 1 : 0;
                    }
                    if (crossing == 3)
                        return std::array<EdgeIndex, 3>{a, b, c};
                }
            }
    return std::nullopt;
}

inline bool has_nontrivial_3_edge_cut(const Graph& g) { return nontrivial_3_edge_cut(g).has_value(); }

/// Some pair of edges disconnects the graph.
inline bool has_2_edge_cut(const Graph& g)
{
    std::vector<int> label;
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (vertex_components(g, label, EdgeSet::of({a, b})) > 1)
                return true;
    return false;
}

/// Hamiltonian circuit as an edge sequence, optionally in G - skip.
/// Exact backtracking; a single vertex has no circuit.
inline std::optional<std::vector<EdgeIndex>> hamiltonian_circuit(const Graph& g, Vertex skip = -1,
                                                                 const SearchLimits& limits = {})
{
    const int n = g.order();
    const int target = n - (skip >= 0 ? 1 : 0);
    if (target < 2)
        return std::nullopt;
    Vertex start = skip == 0 ? 1 : 0;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    if (skip >= 0)
        on_path[static_cast<std::size_t>(skip)] = 1;
    std::vector<EdgeIndex> path;
    DeadlineTicker ticker(limits);

    auto free_degree_ok = [&](Vertex head) {
        // Every vertex still to visit needs two usable neighbours (visited
        // endpoints of the path count).
        for (Vertex v = 0; v < n; ++v) {
            if (on_path[static_cast<std::size_t>(v)])
                continue;
            int usable = 0;
            for (EdgeIndex e : g.incident(v)) {
                Vertex w = g.other(e, v);
                if (!on_path[static_cast<std::size_t>(w)] || w == head || w == start)
                    ++usable;
            }
            if (usable < 2)
                return false;
        }
        return true;
    };

    std::function<bool(Vertex, int)> extend = [&](Vertex x, int visited) -> bool {
        ticker.tick();
        if (visited == target) {
            EdgeIndex last = path.empty() ? -1 : path.back();
            for (EdgeIndex e : g.incident(x))
                if (e != last && g.other(e, x) == start) {
                    path.push_back(e);
                    return true;
                }
            return false;
        }
        if (!free_degree_ok(x))
            return false;
        for (EdgeIndex e : g.incident(x)) {
            Vertex y = g.other(e, x);
            if (on_path[static_cast<std::size_t>(y)])
                continue;
            on_path[static_cast<std::size_t>(y)] = 1;
            path.push_back(e);
            if (extend(y, visited + 1))
                return true;
            path.pop_back();
            on_path[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    };
    on_path[static_cast<std::size_t>(start)] = 1;
    if (extend(start, 1))
        return path;
    return std::nullopt;
}

inline bool is_hamiltonian(const Graph& g, const SearchLimits& limits = {})
{
    return hamiltonian_circuit(g, -1, limits).has_value();
}

/// Not hamiltonian, but G - v is hamiltonian for every vertex v.
inline bool is_hypohamiltonian(const Graph& g, const SearchLimits& limits = {})
{
    if (is_hamiltonian(g, limits))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!hamiltonian_circuit(g, v, limits))
            return false;
    return true;
}

} // namespace cubiccover

#endif
