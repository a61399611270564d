#ifndef CUBICCOVER_MATCHING_HPP
#define CUBICCOVER_MATCHING_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "structure.hpp"

namespace cubiccover {

using MatchingList = std::vector<EdgeSet>;

/// All perfect matchings, sorted lexicographically by edge index.
///
/// The search branches on the lowest uncovered vertex and tries its edges in
/// index order. More than `limits.pm_cap` matchings is an error rather than
/// a truncated list.
inline MatchingList enumerate_perfect_matchings(const Graph& g, const SearchLimits& limits = {})
{
    MatchingList out;
    const int n = g.order();
    if (n % 2 != 0)
        return out;
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    EdgeSet current;
    DeadlineTicker ticker(limits);

    std::function<void(Vertex)> branch = [&](Vertex from) {
        ticker.tick();
        Vertex x = from;
        while (x < n && covered[static_cast<std::size_t>(x)])
            ++x;
        if (x == n) {
            if (out.size() >= limits.pm_cap)
                throw Error(ErrorKind::pm_cap_exceeded,
                            "more than " + std::to_string(limits.pm_cap) + " perfect matchings");
            out.push_back(current);
            return;
        }
        covered[static_cast<std::size_t>(x)] = 1;
        for (EdgeIndex e : g.incident(x)) {
            Vertex y = g.other(e, x);
            if (covered[static_cast<std::size_t>(y)])
                continue;
            covered[static_cast<std::size_t>(y)] = 1;
            current.set(e);
            branch(x + 1);
            current.reset(e);
            covered[static_cast<std::size_t>(y)] = 0;
        }
        covered[static_cast<std::size_t>(x)] = 0;
    };
    branch(0);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

/// Proper 3-edge-coloring of the subgraph `active`, as three color classes.
inline std::optional<std::array<EdgeSet, 3>> three_edge_coloring(const Graph& g, const EdgeSet& active,
                                                                 const SearchLimits& limits = {})
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree_in(active, v) > 3)
            return std::nullopt;

    // BFS edge order keeps every edge adjacent to already colored ones.
    std::vector<EdgeIndex> order;
    {
        EdgeSet seen;
        std::vector<char> vseen(static_cast<std::size_t>(g.order()), 0);
        for (int root = active.first(); root >= 0; root = active.next(root)) {
            if (seen.test(root))
                continue;
            std::vector<Vertex> queue{g.edge(root).u};
            vseen[static_cast<std::size_t>(g.edge(root).u)] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                Vertex x = queue[qi];
                for (EdgeIndex e : g.incident(x)) {
                    if (!active.test(e) || seen.test(e))
                        continue;
                    seen.set(e);
                    order.push_back(e);
                    Vertex y = g.other(e, x);
                    if (!vseen[static_cast<std::size_t>(y)]) {
                        vseen[static_cast<std::size_t>(y)] = 1;
                        queue.push_back(y);
                    }
                }
            }
        }
    }

    std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
    DeadlineTicker ticker(limits);
    std::function<bool(std::size_t, int)> assign = [&](std::size_t i, int max_used) -> bool {
        ticker.tick();
        if (i == order.size())
            return true;
        EdgeIndex e = order[i];
        unsigned forbidden = 0;
        for (Vertex end : {g.edge(e).u, g.edge(e).v})
            for (EdgeIndex f : g.incident(end))
                if (f != e && active.test(f) && color[static_cast<std::size_t>(f)] >= 0)
                    forbidden |= 1U << color[static_cast<std::size_t>(f)];
        for (int c = 0; c < 3 && c <= max_used + 1; ++c) {
            if (forbidden >> c & 1U)
                continue;
            color[static_cast<std::size_t>(e)] = c;
            if (assign(i + 1, std::max(max_used, c)))
                return true;
        }
        color[static_cast<std::size_t>(e)] = -1;
        return false;
    };
    if (!assign(0, -1))
        return std::nullopt;
    std::array<EdgeSet, 3> classes;
    for (EdgeIndex e : order)
        classes[static_cast<std::size_t>(color[static_cast<std::size_t>(e)])].set(e);
    return classes;
}

inline std::optional<std::array<EdgeSet, 3>> three_edge_coloring(const Graph& g, const SearchLimits& limits = {})
{
    return three_edge_coloring(g, g.all_edges(), limits);
}

inline bool is_three_edge_colorable(const Graph& g, const SearchLimits& limits = {})
{
    return three_edge_coloring(g, limits).has_value();
}

/// Complement of a perfect matching in a cubic graph.
struct TwoFactor {
    EdgeSet edges;
    std::vector<int> circuits; // lengths, in tracing order

    [[nodiscard]] int odd_circuits() const
    {
        return static_cast<int>(std::count_if(circuits.begin(), circuits.end(), [](int l) { return l % 2 != 0; }));
    }
};

inline TwoFactor two_factor_of(const Graph& g, const EdgeSet& matching)
{
    TwoFactor f;
    f.edges = g.all_edges() - matching;
    f.circuits = circuit_lengths(g, f.edges);
    return f;
}

/// Fewest odd circuits over all 2-factors, from the complete matching list.
inline int oddness(const Graph& g, const MatchingList& pms)
{
    if (pms.empty())
        throw Error(ErrorKind::no_two_factor, "graph has no perfect matching, hence no 2-factor");
    int best = g.order() + 1;
    for (const auto& pm : pms)
        best = std::min(best, two_factor_of(g, pm).odd_circuits());
    return best;
}

inline int oddness(const Graph& g, const SearchLimits& limits = {})
{
    require_cubic(g);
    return oddness(g, enumerate_perfect_matchings(g, limits));
}

/// A proper 4-edge-coloring whose fourth class has exactly `class_size`
/// edges: the fourth class is a matching S and G - S is 3-edge-colored.
/// Matchings S are tried in lexicographic order.
inline std::optional<std::array<EdgeSet, 4>> four_edge_coloring_with_class(const Graph& g, int class_size,
                                                                           const SearchLimits& limits = {})
{
    if (class_size < 0)
        return std::nullopt;
    std::optional<std::array<EdgeSet, 4>> found;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    EdgeSet chosen;
    std::function<bool(EdgeIndex, int)> pick = [&](EdgeIndex from, int left) -> bool {
        if (left == 0) {
            auto rest = three_edge_coloring(g, g.all_edges() - chosen, limits);
            if (!rest)
                return false;
            found = std::array<EdgeSet, 4>{(*rest)[0], (*rest)[1], (*rest)[2], chosen};
            return true;
        }
        for (EdgeIndex e = from; e < g.size(); ++e) {
            auto [u, v] = g.edge(e);
            if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)])
                continue;
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
            chosen.set(e);
            if (pick(e + 1, left - 1))
                return true;
            chosen.reset(e);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    pick(0, class_size);
    return found;
}

inline bool exists_4ec_with_class_of_size(const Graph& g, int class_size, const SearchLimits& limits = {})
{
    return four_edge_coloring_with_class(g, class_size, limits).has_value();
}

} // namespace cubiccover

#endif
