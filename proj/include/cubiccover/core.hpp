#ifndef CUBICCOVER_CORE_HPP
#define CUBICCOVER_CORE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "structure.hpp"

namespace cubiccover {

/// The core of G with respect to three pairwise distinct perfect matchings:
/// the subgraph induced by the edges lying in at least two of them together
/// with the edges lying in none.
struct Core {
    std::array<EdgeSet, 3> factors;
    std::array<std::size_t, 3> factor_indices{}; // into the matching list, when known
    EdgeSet multi;      // in >= 2 factors
    EdgeSet uncovered;  // in no factor
    EdgeSet in_all;     // in all three factors
    EdgeSet in_two;     // in exactly two factors
    int k = 0;          // |uncovered|
    EdgeSet edges;      // multi | uncovered
    std::vector<Vertex> vertices;

    [[nodiscard]] bool empty() const { return edges.empty(); }
};

/// A vertex-disjoint piece of a core after suppressing its degree-2
/// vertices. Loops are possible (a path leaving and re-entering one branch
/// vertex), so this is kept apart from Graph.
struct SuppressedGraph {
    struct Link {
        int a = 0; // local branch-vertex indices
        int b = 0;
        EdgeSet path;
    };
    std::vector<Vertex> branch_vertices;
    std::vector<Link> links;

    [[nodiscard]] int degree(int local) const
    {
        int d = 0;
        for (const auto& l : links)
            d += (l.a == local ? 1 : 0) + (l.b == local ? 1 : 0);
        return d;
    }
    [[nodiscard]] bool is_cubic() const
    {
        for (int i = 0; i < static_cast<int>(branch_vertices.size()); ++i)
            if (degree(i) != 3)
                return false;
        return true;
    }
};

struct CoreComponent {
    enum class Kind { even_circuit, cubic_subdivision };
    Kind kind = Kind::even_circuit;
    EdgeSet edges;
    std::optional<SuppressedGraph> underlying; // cubic_subdivision only
    EdgeSet estar;                             // edges of the component in all three factors
};

struct CoreClassification {
    std::vector<CoreComponent> components;
    bool is_empty = false;
    bool is_cyclic = false; // vacuously true for the empty core
    bool is_bipartite = false;
    bool is_bridgeless = false;
};

/// Named outcome of one structural check, with the measured quantities.
struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace detail {

inline void core_invariant(bool ok, const char* what)
{
    if (!ok)
        throw std::logic_error(std::string("core invariant violated: ") + what);
}

} // namespace detail

/// Builds the core for three pairwise distinct perfect matchings and
/// asserts its counting and degree structure.
inline Core build_core(const Graph& g, const EdgeSet& m1, const EdgeSet& m2, const EdgeSet& m3)
{
    for (const EdgeSet* f : {&m1, &m2, &m3})
        if (!is_perfect_matching(g, *f))
            throw Error(ErrorKind::not_a_perfect_matching, "core factor is not a perfect matching");
    if (m1 == m2 || m1 == m3 || m2 == m3)
        throw Error(ErrorKind::factors_not_distinct, "core factors must be pairwise different");

    Core c;
    c.factors = {m1, m2, m3};
    c.in_all = m1 & m2 & m3;
    c.multi = (m1 & m2) | (m1 & m3) | (m2 & m3);
    c.in_two = c.multi - c.in_all;
    c.uncovered = g.all_edges() - (m1 | m2 | m3);
    c.k = c.uncovered.count();
    c.edges = c.multi | c.uncovered;
    c.vertices = g.vertices_of(c.edges);

    const int t = c.in_all.count();
    detail::core_invariant(!c.multi.intersects(c.uncovered), "M and U disjoint");
    detail::core_invariant(c.multi.count() == c.k - t, "|M| = k - |T|");
    detail::core_invariant(static_cast<int>(c.vertices.size()) == 2 * c.k - 2 * t, "|V(Gc)| = 2k - 2|T|");
    detail::core_invariant(c.edges.count() == 2 * c.k - t, "|E(Gc)| = 2k - |T|");
    for (Vertex v : c.vertices) {
        detail::core_invariant(g.degree_in(c.multi, v) == 1, "M is a perfect matching of Gc");
        const int d = g.degree_in(c.edges, v);
        const bool on_triple = g.degree_in(c.in_all, v) == 1;
        detail::core_invariant(d == (on_triple ? 3 : 2), "degree 3 exactly at ends of triple edges");
    }
    return c;
}

inline Core build_core(const Graph& g, const MatchingList& pms, std::size_t i, std::size_t j, std::size_t l)
{
    Core c = build_core(g, pms[i], pms[j], pms[l]);
    c.factor_indices = {i, j, l};
    return c;
}

/// Contracts the degree-2 vertices of one core component.
inline SuppressedGraph suppress_degree_two(const Graph& g, const EdgeSet& component)
{
    SuppressedGraph h;
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : g.vertices_of(component))
        if (g.degree_in(component, v) == 3) {
            local[static_cast<std::size_t>(v)] = static_cast<int>(h.branch_vertices.size());
            h.branch_vertices.push_back(v);
        }
    EdgeSet used;
    for (Vertex start : h.branch_vertices)
        for (EdgeIndex e0 : g.incident(start)) {
            if (!component.test(e0) || used.test(e0))
                continue;
            SuppressedGraph::Link link;
            link.a = local[static_cast<std::size_t>(start)];
            EdgeIndex e = e0;
            Vertex x = g.other(e0, start);
            link.path.set(e0);
            used.set(e0);
            while (local[static_cast<std::size_t>(x)] < 0) {
                EdgeIndex step = -1;
                for (EdgeIndex f : g.incident(x))
                    if (f != e && component.test(f)) {
                        step = f;
                        break;
                    }
                e = step;
                link.path.set(e);
                used.set(e);
                x = g.other(e, x);
            }
            link.b = local[static_cast<std::size_t>(x)];
            h.links.push_back(link);
        }
    return h;
}

/// Splits the core into components (even circuits or subdivided cubic
/// multigraphs) and records cyclicity, bipartiteness and bridgelessness.
inline CoreClassification classify_core(const Graph& g, const Core& core)
{
    CoreClassification out;
    out.is_empty = core.empty();
    out.is_cyclic = core.in_all.empty();
    out.is_bipartite = is_bipartite(g, core.edges);
    out.is_bridgeless = bridges(g, core.edges).empty();
    for (const EdgeSet& comp : edge_components(g, core.edges)) {
        CoreComponent cc;
        cc.edges = comp;
        cc.estar = comp & core.in_all;
        if (cc.estar.empty()) {
            cc.kind = CoreComponent::Kind::even_circuit;
        } else {
            cc.kind = CoreComponent::Kind::cubic_subdivision;
            cc.underlying = suppress_degree_two(g, comp);
        }
        out.components.push_back(std::move(cc));
    }
    return out;
}

/// Which cores `find_core` accepts.
enum class CorePredicate { any, cyclic, bipartite, bridgeless };

inline bool core_satisfies(const Graph& g, const Core& core, CorePredicate pred)
{
    switch (pred) {
    case CorePredicate::any: return true;
    case CorePredicate::cyclic: return core.in_all.empty();
    case CorePredicate::bipartite: return is_bipartite(g, core.edges);
    case CorePredicate::bridgeless: return bridges(g, core.edges).empty();
    }
    return false;
}

/// First core, over distinct matching triples in lexicographic index
/// order, with at most `k_budget` uncovered edges and satisfying `pred`.
inline std::optional<Core> find_core(const Graph& g, const MatchingList& pms, CorePredicate pred, int k_budget,
                                     const SearchLimits& limits = {})
{
    const std::size_t p = pms.size();
    const EdgeSet all = g.all_edges();
    DeadlineTicker ticker(limits);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const EdgeSet ij = pms[i] | pms[j];
            for (std::size_t l = j + 1; l < p; ++l) {
                ticker.tick();
                const EdgeSet u = all - (ij | pms[l]);
                if (u.count() > k_budget)
                    continue;
                if (pred == CorePredicate::cyclic && (pms[i] & pms[j] & pms[l]).any())
                    continue;
                Core c = build_core(g, pms, i, j, l);
                if (core_satisfies(g, c, pred))
                    return c;
            }
        }
    return std::nullopt;
}

inline std::optional<Core> find_core(const Graph& g, CorePredicate pred, int k_budget, const SearchLimits& limits = {})
{
    return find_core(g, enumerate_perfect_matchings(g, limits), pred, k_budget, limits);
}

/// Every element of the cycle space of the subgraph `active` that is a
/// single circuit (connected). Requires a small cycle space.
inline std::vector<EdgeSet> circuits_of(const Graph& g, const EdgeSet& active, int dim_cap = 16)
{
    // Fundamental cycles with respect to a spanning forest.
    std::vector<int> parent_edge(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
    EdgeSet tree;
    for (Vertex root : g.vertices_of(active)) {
        if (depth[static_cast<std::size_t>(root)] >= 0)
            continue;
        depth[static_cast<std::size_t>(root)] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex x = queue[qi];
            for (EdgeIndex e : g.incident(x)) {
                if (!active.test(e))
                    continue;
                Vertex y = g.other(e, x);
                if (depth[static_cast<std::size_t>(y)] < 0) {
                    depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                    parent_edge[static_cast<std::size_t>(y)] = e;
                    tree.set(e);
                    queue.push_back(y);
                }
            }
        }
    }
    std::vector<EdgeSet> basis;
    (active - tree).for_each([&](int e) {
        EdgeSet c = EdgeSet::of({e});
        Vertex a = g.edge(e).u;
        Vertex b = g.edge(e).v;
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)])
                std::swap(a, b);
            EdgeIndex pe = parent_edge[static_cast<std::size_t>(a)];
            c ^= EdgeSet::of({pe});
            a = g.other(pe, a);
        }
        basis.push_back(c);
    });
    if (static_cast<int>(basis.size()) > dim_cap)
        throw Error(ErrorKind::dimension_cap_exceeded,
                    "cycle space dimension " + std::to_string(basis.size()) + " exceeds cap");
    std::vector<EdgeSet> out;
    const std::size_t total = std::size_t{1} << basis.size();
    for (std::size_t mask = 1; mask < total; ++mask) {
        EdgeSet c;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (mask >> b & 1U)
                c ^= basis[b];
        if (edge_components(g, c).size() == 1)
            out.push_back(c);
    }
    return out;
}

/// Structural statements about a core, each evaluated on this instance.
/// With `mu3` supplied and equal to the core's k, the statements about
/// optimal cores are included as well.
inline std::vector<Check> verify_core_theorems(const Graph& g, const Core& core, std::optional<int> mu3 = std::nullopt,
                                               const SearchLimits& limits = {})
{
    std::vector<Check> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back(Check{std::move(name), ok, std::move(detail)});
    };
    const int k = core.k;
    const int t = core.in_all.count();
    const int nv = static_cast<int>(core.vertices.size());
    const int ne = core.edges.count();

    add("core_count_M", core.multi.count() == k - t,
        "|M|=" + std::to_string(core.multi.count()) + " k-|T|=" + std::to_string(k - t));
    add("core_count_V", nv == 2 * k - 2 * t,
        "|V|=" + std::to_string(nv) + " 2k-2|T|=" + std::to_string(2 * k - 2 * t));
    add("core_count_E", ne == 2 * k - t, "|E|=" + std::to_string(ne) + " 2k-|T|=" + std::to_string(2 * k - t));
    {
        bool ok = true;
        for (Vertex v : core.vertices)
            ok = ok && g.degree_in(core.multi, v) == 1;
        add("core_M_is_perfect_matching", ok, "");
    }

    const CoreClassification cls = classify_core(g, core);
    {
        bool ok = true;
        std::string why;
        for (const auto& comp : cls.components) {
            if (comp.kind == CoreComponent::Kind::even_circuit) {
                // 2-regular, even, alternating M/U.
                bool two_regular = true;
                for (Vertex v : g.vertices_of(comp.edges))
                    two_regular = two_regular && g.degree_in(comp.edges, v) == 2;
                const bool single = two_regular && trace_circuits(g, comp.edges).size() == 1;
                const bool even = comp.edges.count() % 2 == 0;
                const bool alternating = (comp.edges & core.multi).count() == (comp.edges & core.uncovered).count();
                if (!(single && even && alternating)) {
                    ok = false;
                    why += "bad circuit component;";
                }
            } else {
                const SuppressedGraph& h = *comp.underlying;
                if (!h.is_cubic()) {
                    ok = false;
                    why += "suppressed graph not cubic;";
                }
                // E* is a perfect matching of H: each branch vertex meets
                // exactly one E*-link, and each E* edge is a whole link.
                std::vector<int> hits(h.branch_vertices.size(), 0);
                for (const auto& link : h.links) {
                    if (!link.path.intersects(comp.estar))
                        continue;
                    if (link.path != (link.path & comp.estar) || link.path.count() != 1 || link.a == link.b) {
                        ok = false;
                        why += "E* edge not a link;";
                    }
                    ++hits[static_cast<std::size_t>(link.a)];
                    ++hits[static_cast<std::size_t>(link.b)];
                }
                if (!std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; })) {
                    ok = false;
                    why += "E* not a perfect matching of H;";
                }
            }
        }
        add("core_component_structure", ok, why);
    }

    if (!core.empty()) {
        const auto gc = girth(g, core.edges);
        const int gg = gc.value_or(0);
        add("core_girth_le_2k", gc.has_value() && gg <= 2 * k,
            "girth(Gc)=" + std::to_string(gg) + " 2k=" + std::to_string(2 * k));
        const int comps = static_cast<int>(cls.components.size());
        add("core_components_le_2k_over_girth", gc.has_value() && comps * gg <= 2 * k,
            "components=" + std::to_string(comps) + " 2k/girth=" + std::to_string(2 * k) + "/" + std::to_string(gg));
        if (gc && t + comps <= 16) {
            bool ok = true;
            int worst = ne;
            for (const EdgeSet& c : circuits_of(g, core.edges)) {
                const int u = (c & core.uncovered).count();
                worst = std::min(worst, u);
                ok = ok && 2 * u >= gg;
            }
            add("core_circuits_have_half_girth_U_edges", ok,
                "min U-edges on a circuit=" + std::to_string(worst) + " girth/2=" + std::to_string(gg) + "/2");
        }
    }

    if (k < 3) {
        const bool colorable = three_edge_coloring(g, limits).has_value();
        add("core_k_lt_3_implies_colorable", colorable, "k=" + std::to_string(k));
    }
    if (cls.is_bipartite)
        add("core_bipartite_implies_bridgeless", cls.is_bridgeless, "");

    if (mu3 && *mu3 == k) {
        const int gG = girth(g).value_or(0);
        if (gG >= k)
            add("optimal_core_bipartite_when_girth_ge_mu3", cls.is_bipartite,
                "girth=" + std::to_string(gG) + " mu3=" + std::to_string(k));
        if (gG > k)
            add("optimal_core_cyclic_when_girth_gt_mu3", cls.is_cyclic,
                "girth=" + std::to_string(gG) + " mu3=" + std::to_string(k));
        const auto gc = girth(g, core.edges);
        if (gc && *gc == k && t > 0) {
            bool theta = cls.components.size() == 1 && cls.components[0].underlying &&
                         cls.components[0].underlying->branch_vertices.size() == 2 &&
                         cls.components[0].underlying->links.size() == 3;
            add("remark_even_mu3_theta_core", k % 2 == 0 && theta,
                "mu3=" + std::to_string(k) + " |T|=" + std::to_string(t));
        }
    }
    return out;
}

} // namespace cubiccover

#endif
