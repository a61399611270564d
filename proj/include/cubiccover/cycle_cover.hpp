#ifndef CUBICCOVER_CYCLE_COVER_HPP
#define CUBICCOVER_CYCLE_COVER_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core.hpp"
#include "covers.hpp"
#include "edge_set.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "structure.hpp"

namespace cubiccover {

/// A family of cycles together with its statistics and validity verdict.
struct CycleCover {
    std::vector<EdgeSet> cycles;
    int length = 0;
    int ced = 0; // largest number of members sharing one edge
    int count = 0;
    bool even = false;
    bool valid = false;
    bool double_cover = false;
    EdgeSet uncovered;                // edges of the target no member contains
    std::vector<int> invalid_members; // members that are not cycles of the target
    std::vector<int> depth;           // per edge index
};

/// Computes all statistics of `cycles` as a cover of the edge set `target`.
inline CycleCover verify_cover(const Graph& g, std::vector<EdgeSet> cycles, const EdgeSet& target)
{
    CycleCover c;
    c.cycles = std::move(cycles);
    c.count = static_cast<int>(c.cycles.size());
    c.depth.assign(static_cast<std::size_t>(g.size()), 0);
    c.even = true;
    EdgeSet covered;
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        const EdgeSet& s = c.cycles[i];
        c.length += s.count();
        covered |= s;
        s.for_each([&](int e) { ++c.depth[static_cast<std::size_t>(e)]; });
        bool is_member_ok = s.subset_of(target) && is_cycle(g, s);
        if (is_member_ok)
            for (Vertex v : g.vertices_of(s))
                is_member_ok = is_member_ok && g.degree_in(s, v) == 2;
        if (!is_member_ok) {
            c.invalid_members.push_back(static_cast<int>(i));
            c.even = false;
            continue;
        }
        for (int len : circuit_lengths(g, s))
            c.even = c.even && len % 2 == 0;
    }
    c.uncovered = target - covered;
    c.ced = c.depth.empty() ? 0 : *std::max_element(c.depth.begin(), c.depth.end());
    c.valid = c.invalid_members.empty() && c.uncovered.empty();
    c.double_cover = c.valid;
    target.for_each([&](int e) { c.double_cover = c.double_cover && c.depth[static_cast<std::size_t>(e)] == 2; });
    return c;
}

inline CycleCover verify_cover(const Graph& g, std::vector<EdgeSet> cycles)
{
    return verify_cover(g, std::move(cycles), g.all_edges());
}

/// The two color-pair cycles {a+b, a+c} of a 3-edge-coloring, a = classes[0].
inline CycleCover canonical_cover(const Graph& g, const std::array<EdgeSet, 3>& classes)
{
    const auto& [a, b, c] = classes;
    const bool partition = is_perfect_matching(g, a) && is_perfect_matching(g, b) && is_perfect_matching(g, c) &&
                           !a.intersects(b) && !a.intersects(c) && !b.intersects(c) && (a | b | c) == g.all_edges();
    if (!partition)
        throw Error(ErrorKind::not_a_partition, "coloring classes do not partition E into perfect matchings");
    return verify_cover(g, {a | b, a | c});
}

/// Extends a cover of the core to a cover of G by the two even cycles
/// M1 ^ M2 and M1 ^ M3, where M1 is the first factor sharing at least
/// two thirds of the exactly-twice-covered edges with the other two.
inline CycleCover cover_from_core(const Graph& g, const Core& core, const std::vector<EdgeSet>& core_cover)
{
    const CycleCover inner = verify_cover(g, core_cover, core.edges);
    if (!inner.valid)
        throw Error(ErrorKind::invalid_core_cover, "cycles do not form a cover of the core");
    const auto& f = core.factors;
    const int twice = core.in_two.count();
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        const std::size_t l = (i + 2) % 3;
        const int shared = ((f[i] & f[j]) - core.in_all).count() + ((f[i] & f[l]) - core.in_all).count();
        if (3 * shared >= 2 * twice) {
            pivot = i;
            break;
        }
    }
    std::vector<EdgeSet> cycles = core_cover;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != pivot)
            cycles.push_back(f[pivot] ^ f[i]);
    return verify_cover(g, std::move(cycles));
}

/// Even cover of a bipartite core of length 2k by at most two cycles.
///
/// Circuit components cover themselves. In a subdivided component the
/// cycle K - E* is 2-edge-colored starting with color 1 at the lowest edge of
/// each circuit; every suppressed path takes the color of its end edges, and
/// the cycles are E* plus the color-1 paths and E* plus the color-2 paths.
inline std::vector<EdgeSet> bipartite_core_cover(const Graph& g, const Core& core)
{
    if (!is_bipartite(g, core.edges))
        throw Error(ErrorKind::core_not_bipartite, "core has an odd circuit");
    if (core.empty())
        return {};
    EdgeSet first;
    EdgeSet second;
    for (const CoreComponent& comp : classify_core(g, core).components) {
        if (comp.kind == CoreComponent::Kind::even_circuit) {
            first |= comp.edges;
            continue;
        }
        EdgeSet color1;
        EdgeSet color2;
        for (const auto& circuit : trace_circuits(g, comp.edges - comp.estar))
            for (std::size_t i = 0; i < circuit.size(); ++i)
                (i % 2 == 0 ? color1 : color2).set(circuit[i]);
        first |= comp.estar;
        second |= comp.estar;
        for (const auto& link : comp.underlying->links) {
            if (link.path.intersects(comp.estar))
                continue;
            const bool one = link.path.intersects(color1);
            const bool two = link.path.intersects(color2);
            // End edges share a color; interior edges alternate.
            int end1 = -1;
            int end2 = -1;
            link.path.for_each([&](int e) {
                for (Vertex x : {g.edge(e).u, g.edge(e).v})
                    if (g.degree_in(comp.edges, x) == 3)
                        (end1 < 0 ? end1 : end2) = e;
            });
            const int end = end1 >= 0 ? end1 : end2;
            if (!(one || two) || end < 0)
                throw std::logic_error("bipartite core cover: path without colored end edge");
            if (end1 >= 0 && end2 >= 0 && color1.test(end1) != color1.test(end2))
                throw std::logic_error("bipartite core cover: path end edges differ in color");
            (color1.test(end) ? first : second) |= link.path;
        }
    }
    std::vector<EdgeSet> out;
    for (const EdgeSet& s : {first, second})
        if (s.any())
            out.push_back(s);
    return out;
}

/// Even cover of G through a bipartite core: the core's own cover of length
/// 2k extended by two symmetric differences.
inline CycleCover cover_from_bipartite_core(const Graph& g, const Core& core)
{
    return cover_from_core(g, core, bipartite_core_cover(g, core));
}

/// Even 3-cycle cover from six perfect matchings covering every edge twice.
///
/// Takes the first pair with the smallest intersection, then the first third
/// factor minimising the pairwise intersections of the triple; the other
/// three factors then have a cyclic core with k equal to that sum. If those
/// three are not distinct the graph is 3-edge-colorable and the canonical
/// cover is returned instead.
inline CycleCover cover_from_fulkerson(const Graph& g, const std::array<EdgeSet, 6>& factors,
                                       const SearchLimits& limits = {})
{
    if (!is_fulkerson_cover(g, factors))
        throw Error(ErrorKind::invalid_argument, "factors do not cover every edge exactly twice");
    std::size_t a = 0;
    std::size_t b = 1;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if ((factors[i] & factors[j]).count() < (factors[a] & factors[b]).count()) {
                a = i;
                b = j;
            }
    std::size_t c = 6;
    int best = INT32_MAX;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i == a || i == b)
            continue;
        const int s = (factors[a] & factors[b]).count() + (factors[a] & factors[i]).count() +
                      (factors[b] & factors[i]).count();
        if (s < best) {
            best = s;
            c = i;
        }
    }
    std::vector<EdgeSet> rest;
    for (std::size_t i = 0; i < 6; ++i)
        if (i != a && i != b && i != c)
            rest.push_back(factors[i]);
    if (rest[0] == rest[1] || rest[0] == rest[2] || rest[1] == rest[2]) {
        auto coloring = three_edge_coloring(g, limits);
        if (!coloring)
            throw std::logic_error("repeated Fulkerson factor on a non-3-edge-colorable graph");
        return canonical_cover(g, *coloring);
    }
    return cover_from_bipartite_core(g, build_core(g, rest[0], rest[1], rest[2]));
}

namespace detail {

inline std::vector<int> factor_counts(const Graph& g, std::span<const EdgeSet> factors)
{
    std::vector<int> cnt(static_cast<std::size_t>(g.size()), 0);
    for (const auto& f : factors)
        f.for_each([&](int e) { ++cnt[static_cast<std::size_t>(e)]; });
    return cnt;
}

} // namespace detail

/// Four cycles from four perfect matchings with empty common intersection:
/// C_i = (edges of M_i in exactly one or three factors) + (edges outside M_i
/// in exactly two) + (edges in none). Length is 4/3 |E| + 4k for k edges in
/// no factor. Empty cycles are dropped.
inline CycleCover four_cover_cycles(const Graph& g, const std::array<EdgeSet, 4>& factors)
{
    for (const auto& f : factors)
        if (!is_perfect_matching(g, f))
            throw Error(ErrorKind::not_a_perfect_matching, "four-cover factor is not a perfect matching");
    if ((factors[0] & factors[1] & factors[2] & factors[3]).any())
        throw Error(ErrorKind::nonempty_intersection, "the four matchings share an edge");
    const auto cnt = detail::factor_counts(g, factors);
    std::vector<EdgeSet> cycles;
    for (const auto& mi : factors) {
        EdgeSet c;
        for (int e = 0; e < g.size(); ++e) {
            const int t = cnt[static_cast<std::size_t>(e)];
            const bool in = mi.test(e);
            if (t == 0 || (in && (t == 1 || t == 3)) || (!in && t == 2))
                c.set(e);
        }
        if (c.any())
            cycles.push_back(c);
    }
    return verify_cover(g, std::move(cycles));
}

/// Five cycles covering every edge exactly twice, from four perfect
/// matchings whose union is E: the four cycles above plus the 2-factor of
/// singly covered edges.
inline CycleCover five_cdc(const Graph& g, const std::array<EdgeSet, 4>& factors)
{
    for (const auto& f : factors)
        if (!is_perfect_matching(g, f))
            throw Error(ErrorKind::not_a_perfect_matching, "factor is not a perfect matching");
    if ((factors[0] | factors[1] | factors[2] | factors[3]) != g.all_edges())
        throw Error(ErrorKind::union_not_all_edges, "the four matchings leave edges uncovered");
    CycleCover four = four_cover_cycles(g, factors);
    const auto cnt = detail::factor_counts(g, factors);
    EdgeSet singles;
    for (int e = 0; e < g.size(); ++e)
        if (cnt[static_cast<std::size_t>(e)] == 1)
            singles.set(e);
    std::vector<EdgeSet> cycles = four.cycles;
    cycles.push_back(singles);
    return verify_cover(g, std::move(cycles));
}

/// m - n + c for the subgraph `active`.
inline int cycle_space_dimension(const Graph& g, const EdgeSet& active)
{
    const int nv = static_cast<int>(g.vertices_of(active).size());
    return active.count() - nv + static_cast<int>(edge_components(g, active).size());
}

namespace detail {

/// Exact shortest cover of `active` by at most `width` cycles.
///
/// A cover by r cycles is a labelling of the edges by non-zero r-bit
/// vectors (bit i: the edge lies in cycle i) whose XOR vanishes at every
/// vertex; its length is the total popcount. The search assigns labels with
/// forced completion at vertices, first-use ordering of bits, and a
/// per-vertex lower bound, deepening the length target from the root bound.
class ShortestCoverSearch {
public:
    ShortestCoverSearch(const Graph& g, const EdgeSet& active, int width, const SearchLimits& limits)
        : g_(g)
        , active_(active)
        , width_(width)
        , full_((1 << width) - 1)
        , ticker_(limits)
    {
        const auto n = static_cast<std::size_t>(g.order());
        deg_.assign(n, 0);
        for (Vertex v = 0; v < g.order(); ++v)
            deg_[static_cast<std::size_t>(v)] = g.degree_in(active, v);
        // Cheapest completion of a degree-3 vertex with one label a.
        one3_.assign(static_cast<std::size_t>(full_) + 1, inf);
        for (int a = 1; a <= full_; ++a)
            for (int y = 1; y <= full_; ++y)
                if (y != a)
                    one3_[static_cast<std::size_t>(a)] =
                        std::min(one3_[static_cast<std::size_t>(a)], std::popcount(unsigned(y)) + std::popcount(unsigned(a ^ y)));
        for (int a = 1; a <= full_; ++a)
            candidates_.push_back(a);
        std::stable_sort(candidates_.begin(), candidates_.end(),
                         [](int x, int y) { return std::popcount(unsigned(x)) < std::popcount(unsigned(y)); });
        // BFS edge order.
        EdgeSet seen;
        std::vector<char> vseen(n, 0);
        for (int root = active.first(); root >= 0; root = active.next(root)) {
            if (seen.test(root))
                continue;
            std::vector<Vertex> queue{g.edge(root).u};
            vseen[static_cast<std::size_t>(g.edge(root).u)] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi)
                for (EdgeIndex e : g.incident(queue[qi])) {
                    if (!active.test(e) || seen.test(e))
                        continue;
                    seen.set(e);
                    order_.push_back(e);
                    Vertex y = g.other(e, queue[qi]);
                    if (!vseen[static_cast<std::size_t>(y)]) {
                        vseen[static_cast<std::size_t>(y)] = 1;
                        queue.push_back(y);
                    }
                }
        }
        label_.assign(static_cast<std::size_t>(g.size()), 0);
        assigned_.assign(n, 0);
        xor_.assign(n, 0);
        weight_.assign(n, 0);
        lb2_ = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            lb2_ = add_bound(lb2_, vertex_bound(v));
    }

    /// Labels of a minimum cover, or nullopt if no cover with `width` cycles exists.
    std::optional<std::vector<EdgeSet>> run()
    {
        if (lb2_ >= inf)
            return std::nullopt;
        for (int target = (lb2_ + 1) / 2; target <= width_ * active_.count(); ++target) {
            target2_ = 2 * target;
            cut_by_length_ = false;
            if (dfs(0, 0))
                return extract();
            if (!cut_by_length_)
                return std::nullopt;
        }
        return std::nullopt;
    }

private:
    // Large enough to dominate any finite bound, small enough to sum over
    // all vertices without overflow, so the running total stays reversible.
    static constexpr int inf = 1 << 20;

    static int add_bound(int a, int b) { return a + b; }

    int vertex_bound(Vertex v) const
    {
        const auto i = static_cast<std::size_t>(v);
        const int d = deg_[i];
        const int k = assigned_[i];
        const int w = weight_[i];
        const int x = xor_[i];
        if (d == 0)
            return 0;
        if (d == 2)
            return k == 0 ? 2 : (k == 1 ? 2 * w : w);
        if (d == 3) {
            if (k == 0)
                return width_ >= 2 ? 4 : inf;
            if (k == 1)
                return add_bound(w, one3_[static_cast<std::size_t>(x)]);
            if (k == 2)
                return x == 0 ? inf : w + std::popcount(unsigned(x));
            return w;
        }
        return inf; // degree 1: a bridge end
    }

    // Assigns `lab` to e and propagates forced labels. Returns false on
    // conflict; the trail keeps everything needed to undo.
    bool assign(EdgeIndex e0, int lab0)
    {
        std::vector<std::pair<EdgeIndex, int>> queue{{e0, lab0}};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto [e, lab] = queue[qi];
            int& cur = label_[static_cast<std::size_t>(e)];
            if (cur != 0) {
                if (cur != lab)
                    return false;
                continue;
            }
            if (lab == 0)
                return false;
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v})
                lb2_ -= vertex_bound(x);
            cur = lab;
            trail_.push_back(e);
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
                const auto i = static_cast<std::size_t>(x);
                ++assigned_[i];
                xor_[i] ^= lab;
                weight_[i] += std::popcount(unsigned(lab));
            }
            bool ok = true;
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
                const int b = vertex_bound(x);
                lb2_ = add_bound(lb2_, b);
                if (b >= inf)
                    ok = false;
            }
            if (!ok)
                return false;
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
                const auto i = static_cast<std::size_t>(x);
                if (deg_[i] - assigned_[i] != 1)
                    continue;
                for (EdgeIndex f : g_.incident(x))
                    if (active_.test(f) && label_[static_cast<std::size_t>(f)] == 0) {
                        queue.emplace_back(f, xor_[i]);
                        break;
                    }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            EdgeIndex e = trail_.back();
            trail_.pop_back();
            const int lab = label_[static_cast<std::size_t>(e)];
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v})
                lb2_ -= vertex_bound(x);
            label_[static_cast<std::size_t>(e)] = 0;
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
                const auto i = static_cast<std::size_t>(x);
                --assigned_[i];
                xor_[i] ^= lab;
                weight_[i] -= std::popcount(unsigned(lab));
            }
            for (Vertex x : {g_.edge(e).u, g_.edge(e).v})
                lb2_ = add_bound(lb2_, vertex_bound(x));
        }
    }

    bool dfs(std::size_t pos, int used)
    {
        ticker_.tick();
        while (pos < order_.size() && label_[static_cast<std::size_t>(order_[pos])] != 0)
            ++pos;
        if (pos == order_.size())
            return true;
        const EdgeIndex e = order_[pos];
        const int next_bit = std::popcount(unsigned(used));
        for (int lab : candidates_) {
            // New bits must be the lowest unused ones.
            const int fresh = (lab & ~used) >> next_bit;
            if ((lab & ~used) != fresh << next_bit || (fresh & (fresh + 1)) != 0)
                continue;
            const std::size_t mark = trail_.size();
            const bool ok = assign(e, lab);
            if (ok && lb2_ > target2_)
                cut_by_length_ = true;
            else if (ok && dfs(pos + 1, used | lab))
                return true;
            undo_to(mark);
        }
        return false;
    }

    std::vector<EdgeSet> extract() const
    {
        std::vector<EdgeSet> cycles(static_cast<std::size_t>(width_));
        active_.for_each([&](int e) {
            for (int b = 0; b < width_; ++b)
                if (label_[static_cast<std::size_t>(e)] >> b & 1)
                    cycles[static_cast<std::size_t>(b)].set(e);
        });
        std::erase_if(cycles, [](const EdgeSet& s) { return s.empty(); });
        return cycles;
    }

    const Graph& g_;
    EdgeSet active_;
    int width_;
    int full_;
    DeadlineTicker ticker_;
    std::vector<int> deg_;
    std::vector<int> one3_;
    std::vector<int> candidates_;
    std::vector<EdgeIndex> order_;
    std::vector<int> label_;
    std::vector<int> assigned_;
    std::vector<int> xor_;
    std::vector<int> weight_;
    std::vector<EdgeIndex> trail_;
    int lb2_ = 0;
    int target2_ = 0;
    bool cut_by_length_ = false;
};

} // namespace detail

/// Minimum-length cover of the subgraph `active` by at most `max_cycles`
/// cycles. Exact; refuses subgraphs whose cycle space exceeds `dim_cap`.
inline CycleCover scc_exact(const Graph& g, const EdgeSet& active, int max_cycles, int dim_cap = 16,
                            const SearchLimits& limits = {})
{
    if (max_cycles < 1 || max_cycles > 8)
        throw Error(ErrorKind::invalid_argument, "max_cycles must lie in 1..8");
    const int dim = cycle_space_dimension(g, active);
    if (dim > dim_cap)
        throw Error(ErrorKind::dimension_cap_exceeded,
                    "cycle space dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dim_cap));
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree_in(active, v) > 3)
            throw Error(ErrorKind::invalid_argument, "shortest cover search needs maximum degree 3");
    if (bridges(g, active).any())
        throw Error(ErrorKind::no_cycle_cover, "a bridge lies on no cycle");
    detail::ShortestCoverSearch search(g, active, max_cycles, limits);
    auto cycles = search.run();
    if (!cycles)
        throw Error(ErrorKind::no_cycle_cover,
                    "no cover by at most " + std::to_string(max_cycles) + " cycles exists");
    return verify_cover(g, std::move(*cycles), active);
}

inline CycleCover scc_exact(const Graph& g, int max_cycles, int dim_cap = 16, const SearchLimits& limits = {})
{
    return scc_exact(g, g.all_edges(), max_cycles, dim_cap, limits);
}

} // namespace cubiccover

#endif
