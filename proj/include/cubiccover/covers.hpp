#ifndef CUBICCOVER_COVERS_HPP
#define CUBICCOVER_COVERS_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "structure.hpp"

// 1-factor covers: exact m_k / mu_k, and witness searches for the
// Fan-Raspaud, Berge and Fulkerson properties.

namespace cubiccover {

/// The best k-cover found by `mu_k`. Factors may repeat.
struct CoverWitness {
    int k = 0;
    std::vector<std::size_t> factor_indices; // into the matching list
    std::vector<EdgeSet> factors;
    EdgeSet covered;
    EdgeSet uncovered;
    int mu = 0;
    bool optimal = false;
};

/// Six perfect matchings, every edge in exactly two of them.
struct FulkersonWitness {
    std::array<std::size_t, 6> factor_indices{};
    std::array<EdgeSet, 6> factors;
};

/// Three perfect matchings with empty common intersection.
struct FanRaspaudWitness {
    std::array<std::size_t, 3> factor_indices{};
    std::array<EdgeSet, 3> factors;
};

inline EdgeSet union_of(std::span<const EdgeSet> sets)
{
    EdgeSet u;
    for (const auto& s : sets)
        u |= s;
    return u;
}

/// Exact mu_k: the fewest edges left uncovered by a multiset of k perfect
/// matchings, by branch and bound over non-decreasing factor indices.
///
/// A branch is cut when the current union plus the best conceivable gain of
/// the remaining picks cannot beat the incumbent; only strict improvements
/// replace it, so the reported witness is the lexicographically first
/// optimum.
inline CoverWitness mu_k(const Graph& g, const MatchingList& pms, int k, const SearchLimits& limits = {})
{
    if (k < 1 || k > 6)
        throw Error(ErrorKind::invalid_argument, "k must lie in 1..6, got " + std::to_string(k));
    if (pms.empty())
        throw Error(ErrorKind::no_perfect_matching, "graph has no perfect matching");

    const int m = g.size();
    const int half = g.order() / 2;
    const std::size_t p = pms.size();
    std::vector<std::size_t> picks(static_cast<std::size_t>(k));
    std::vector<std::size_t> best_picks;
    int best = -1;
    std::vector<int> gains;
    DeadlineTicker ticker(limits);

    std::function<void(int, std::size_t, const EdgeSet&)> search = [&](int depth, std::size_t lo,
                                                                       const EdgeSet& cover) {
        ticker.tick();
        const int have = cover.count();
        if (depth == k) {
            if (have > best) {
                best = have;
                best_picks = picks;
            }
            return;
        }
        const int remaining = k - depth;
        if (have + remaining * half <= best)
            return;
        // Sharper bound: sum of the `remaining` largest individual gains.
        gains.clear();
        for (std::size_t j = lo; j < p; ++j)
            gains.push_back((pms[j] - cover).count());
        const auto r = std::min<std::size_t>(static_cast<std::size_t>(remaining), gains.size());
        std::partial_sort(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(r), gains.end(),
                          std::greater<>());
        int optimistic = have;
        for (std::size_t i = 0; i < r; ++i)
            optimistic += gains[i];
        if (optimistic <= best)
            return;
        for (std::size_t j = lo; j < p; ++j) {
            picks[static_cast<std::size_t>(depth)] = j;
            search(depth + 1, j, cover | pms[j]);
            if (best == m)
                return;
        }
    };
    search(0, 0, EdgeSet{});

    CoverWitness w;
    w.k = k;
    w.factor_indices = best_picks;
    for (std::size_t i : best_picks)
        w.factors.push_back(pms[i]);
    w.covered = union_of(w.factors);
    w.uncovered = g.all_edges() - w.covered;
    w.mu = m - best;
    w.optimal = true;
    return w;
}

inline CoverWitness mu_k(const Graph& g, int k, const SearchLimits& limits = {})
{
    return mu_k(g, enumerate_perfect_matchings(g, limits), k, limits);
}

/// First triple of distinct matchings (lexicographic index order) with empty
/// common intersection; triples with a repeated factor are tried only when
/// no distinct triple qualifies.
inline std::optional<FanRaspaudWitness> fan_raspaud_witness(const MatchingList& pms, const SearchLimits& limits = {})
{
    const std::size_t p = pms.size();
    DeadlineTicker ticker(limits);
    auto make = [&](std::size_t a, std::size_t b, std::size_t c) {
        return FanRaspaudWitness{{a, b, c}, {pms[a], pms[b], pms[c]}};
    };
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b) {
            const EdgeSet ab = pms[a] & pms[b];
            for (std::size_t c = b + 1; c < p; ++c) {
                ticker.tick();
                if (!(ab & pms[c]).any())
                    return make(a, b, c);
            }
        }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b)
            if (!(pms[a] & pms[b]).any())
                return make(a, a, b);
    return std::nullopt;
}

inline std::optional<FanRaspaudWitness> fan_raspaud_witness(const Graph& g, const SearchLimits& limits = {})
{
    return fan_raspaud_witness(enumerate_perfect_matchings(g, limits), limits);
}

/// mu_5 = 0: five perfect matchings cover every edge.
inline bool berge_check(const Graph& g, const MatchingList& pms, const SearchLimits& limits = {})
{
    return mu_k(g, pms, 5, limits).mu == 0;
}

inline bool berge_check(const Graph& g, const SearchLimits& limits = {})
{
    return berge_check(g, enumerate_perfect_matchings(g, limits), limits);
}

/// Depth-first search for six matchings (non-decreasing indices) covering
/// every edge exactly twice. Exhaustive before returning nullopt.
inline std::optional<FulkersonWitness> fulkerson_witness(const Graph& g, const MatchingList& pms,
                                                         const SearchLimits& limits = {})
{
    const std::size_t p = pms.size();
    if (p == 0)
        return std::nullopt;
    const int m = g.size();
    // Highest matching index containing each edge, for the reachability cut.
    std::vector<long> last_holder(static_cast<std::size_t>(m), -1);
    for (std::size_t j = 0; j < p; ++j)
        pms[j].for_each([&](int e) { last_holder[static_cast<std::size_t>(e)] = static_cast<long>(j); });

    std::array<std::size_t, 6> picks{};
    EdgeSet once;  // covered exactly once
    EdgeSet twice; // covered exactly twice
    DeadlineTicker ticker(limits);
    const EdgeSet all = g.all_edges();

    std::function<bool(int, std::size_t)> search = [&](int depth, std::size_t lo) -> bool {
        ticker.tick();
        if (depth == 6)
            return twice == all;
        const int remaining = 6 - depth;
        const EdgeSet zero = all - once - twice;
        // An uncovered edge needs two more picks, and every deficient edge
        // needs a holder at index >= lo.
        if (zero.any() && remaining < 2)
            return false;
        bool reachable = true;
        (all - twice).for_each([&](int e) {
            if (last_holder[static_cast<std::size_t>(e)] < static_cast<long>(lo))
                reachable = false;
        });
        if (!reachable)
            return false;
        for (std::size_t j = lo; j < p; ++j) {
            const EdgeSet& pm = pms[j];
            if (pm.intersects(twice))
                continue;
            const EdgeSet saved_once = once;
            const EdgeSet saved_twice = twice;
            twice |= pm & once;
            once = (once - pm) | (pm - saved_once);
            picks[static_cast<std::size_t>(depth)] = j;
            if (search(depth + 1, j))
                return true;
            once = saved_once;
            twice = saved_twice;
        }
        return false;
    };
    if (!search(0, 0))
        return std::nullopt;
    FulkersonWitness w;
    w.factor_indices = picks;
    for (std::size_t i = 0; i < 6; ++i)
        w.factors[i] = pms[picks[i]];
    return w;
}

inline std::optional<FulkersonWitness> fulkerson_witness(const Graph& g, const SearchLimits& limits = {})
{
    return fulkerson_witness(g, enumerate_perfect_matchings(g, limits), limits);
}

/// Every edge lies in exactly two of the six factors, each a perfect matching.
inline bool is_fulkerson_cover(const Graph& g, std::span<const EdgeSet> factors)
{
    if (factors.size() != 6)
        return false;
    std::vector<int> depth(static_cast<std::size_t>(g.size()), 0);
    for (const auto& f : factors) {
        if (!is_perfect_matching(g, f))
            return false;
        f.for_each([&](int e) { ++depth[static_cast<std::size_t>(e)]; });
    }
    return std::all_of(depth.begin(), depth.end(), [](int d) { return d == 2; });
}

/// For a vertex v whose deletion leaves a hamiltonian circuit H, each
/// neighbour x of v yields the perfect matching {vx} plus the alternate
/// edges of the path H - x. Returns the first pair of these (neighbours in
/// incidence order) meeting in exactly one edge.
inline std::optional<std::pair<EdgeSet, EdgeSet>>
matchings_from_deleted_vertex_circuit(const Graph& g, Vertex v, std::span<const EdgeIndex> circuit)
{
    if (circuit.empty())
        return std::nullopt;
    // Vertex sequence x_0..x_{L-1} along the circuit, with edge i = x_i x_{i+1}.
    const auto len = circuit.size();
    std::vector<Vertex> seq;
    {
        const Edge& e0 = g.edge(circuit[0]);
        const Edge& e1 = g.edge(circuit[len > 1 ? 1 : 0]);
        Vertex x = (e0.v == e1.u || e0.v == e1.v) ? e0.u : e0.v;
        for (EdgeIndex e : circuit) {
            seq.push_back(x);
            x = g.other(e, x);
        }
    }
    std::vector<EdgeSet> built;
    for (EdgeIndex ve : g.incident(v)) {
        Vertex x = g.other(ve, v);
        auto it = std::find(seq.begin(), seq.end(), x);
        if (it == seq.end())
            return std::nullopt;
        const auto pos = static_cast<std::size_t>(it - seq.begin());
        EdgeSet pm = EdgeSet::of({ve});
        // Path x_{pos+1} .. x_{pos-1}: take its 1st, 3rd, ... edges.
        for (std::size_t step = 1; step + 1 < len; step += 2)
            pm.set(circuit[(pos + step) % len]);
        if (!is_perfect_matching(g, pm))
            return std::nullopt;
        built.push_back(pm);
    }
    for (std::size_t i = 0; i < built.size(); ++i)
        for (std::size_t j = i + 1; j < built.size(); ++j)
            if ((built[i] & built[j]).count() == 1)
                return std::pair{built[i], built[j]};
    return std::nullopt;
}

} // namespace cubiccover

#endif
