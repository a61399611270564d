#ifndef CUBICCOVER_GRAPH_HPP
#define CUBICCOVER_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"

namespace cubiccover {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr int max_vertices = 128;
inline constexpr int max_edges = EdgeSet::capacity;

/// Loop-free multigraph with stable edge indices.
///
/// Edge i is the i-th pair given at construction; every witness the library
/// reports is a set of these indices. Parallel edges are distinct indices.
/// The type does not force 3-regularity: cores and test gadgets are
/// subcubic, and `require_cubic` performs the check where it matters.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges)
        : n_(n)
        , edges_(std::move(edges))
    {
        if (n < 0)
            throw Error(ErrorKind::invalid_argument, "negative vertex count");
        if (n > max_vertices || static_cast<int>(edges_.size()) > max_edges)
            throw Error(ErrorKind::too_large,
                        "graph exceeds " + std::to_string(max_vertices) + " vertices or " +
                            std::to_string(max_edges) + " edges");
        incidence_.assign(static_cast<std::size_t>(n), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::vertex_out_of_range,
                            "edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                                std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw Error(ErrorKind::loop_edge, "loop at vertex " + std::to_string(u));
            incidence_[static_cast<std::size_t>(u)].push_back(static_cast<EdgeIndex>(i));
            incidence_[static_cast<std::size_t>(v)].push_back(static_cast<EdgeIndex>(i));
        }
    }

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }

    [[nodiscard]] const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

    [[nodiscard]] std::span<const EdgeIndex> incident(Vertex v) const
    {
        return incidence_[static_cast<std::size_t>(v)];
    }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    [[nodiscard]] Vertex other(EdgeIndex e, Vertex v) const
    {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }

    [[nodiscard]] EdgeSet all_edges() const { return EdgeSet::first_n(size()); }

    [[nodiscard]] bool is_cubic() const
    {
        return std::all_of(incidence_.begin(), incidence_.end(),
                           [](const auto& inc) { return inc.size() == 3; });
    }

    /// Number of edges of `s` incident to v.
    [[nodiscard]] int degree_in(const EdgeSet& s, Vertex v) const
    {
        int d = 0;
        for (EdgeIndex e : incident(v))
            d += s.test(e) ? 1 : 0;
        return d;
    }

    /// Vertices touched by `s`, ascending.
    [[nodiscard]] std::vector<Vertex> vertices_of(const EdgeSet& s) const
    {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        s.for_each([&](int e) {
            seen[static_cast<std::size_t>(edge(e).u)] = 1;
            seen[static_cast<std::size_t>(edge(e).v)] = 1;
        });
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n_; ++v)
            if (seen[static_cast<std::size_t>(v)])
                out.push_back(v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

inline void require_cubic(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw Error(ErrorKind::not_cubic,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
}

/// True iff `s` is a perfect matching of g.
inline bool is_perfect_matching(const Graph& g, const EdgeSet& s)
{
    if (!s.subset_of(g.all_edges()))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree_in(s, v) != 1)
            return false;
    return true;
}

namespace detail {

inline std::string_view strip_comment(std::string_view line)
{
    auto pos = line.find('#');
    if (pos != std::string_view::npos)
        line = line.substr(0, pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
        line.remove_prefix(1);
    return line;
}

inline bool parse_int_pair(std::string_view line, long long& a, long long& b)
{
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
        while (p < end && (*p == ' ' || *p == '\t'))
            ++p;
    };
    skip_ws();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end || (*r1.ptr != ' ' && *r1.ptr != '\t'))
        return false;
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{})
        return false;
    p = r2.ptr;
    skip_ws();
    return p == end;
}

inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

} // namespace detail

enum class Validation { cubic, none };

/// Parses one graph in MGF: a header line "n m" followed by exactly m lines
/// "u v". Text after '#' is ignored and blank lines are skipped.
inline Graph parse_mgf(std::string_view text, Validation validation = Validation::cubic)
{
    std::vector<std::string_view> lines;
    for (auto raw : detail::split_lines(text)) {
        auto line = detail::strip_comment(raw);
        if (!line.empty())
            lines.push_back(line);
    }
    if (lines.empty())
        throw Error(ErrorKind::parse, "missing header line");
    long long n = 0;
    long long m = 0;
    if (!detail::parse_int_pair(lines[0], n, m) || n < 0 || m < 0)
        throw Error(ErrorKind::parse, "malformed header '" + std::string(lines[0]) + "'");
    if (n > max_vertices || m > max_edges)
        throw Error(ErrorKind::too_large, "header declares n=" + std::to_string(n) + " m=" + std::to_string(m));
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw Error(ErrorKind::parse, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(lines.size() - 1) + " edge lines");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        long long u = 0;
        long long v = 0;
        if (!detail::parse_int_pair(lines[i], u, v))
            throw Error(ErrorKind::parse, "malformed edge line '" + std::string(lines[i]) + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::vertex_out_of_range, "edge line '" + std::string(lines[i]) + "'");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    Graph g(static_cast<int>(n), std::move(edges));
    if (validation == Validation::cubic)
        require_cubic(g);
    return g;
}

inline std::string to_mgf(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        os << e.u << ' ' << e.v << '\n';
    return os.str();
}

/// Decodes one graph6 line (simple graphs only). Edges come out in the
/// format's bit order: column j ascending, then row i < j ascending.
inline Graph parse_graph6(std::string_view line, Validation validation = Validation::cubic)
{
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw Error(ErrorKind::parse, "empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126)
            throw Error(ErrorKind::parse, "bad graph6 character");

    auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i] - 63); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (line[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4)
            throw Error(ErrorKind::parse, "truncated graph6 size field");
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        if (line.size() < 8)
            throw Error(ErrorKind::parse, "truncated graph6 size field");
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | byte(i);
        pos = 8;
    }
    if (n > static_cast<std::uint64_t>(max_vertices))
        throw Error(ErrorKind::too_large, "graph6 declares " + std::to_string(n) + " vertices");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected_bytes = (bits + 5) / 6;
    if (line.size() - pos != expected_bytes)
        throw Error(ErrorKind::parse, "graph6 length mismatch: expected " + std::to_string(expected_bytes) +
                                          " data bytes, found " + std::to_string(line.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::uint64_t b = byte(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1U) {
                edges.push_back({i, j});
                if (static_cast<int>(edges.size()) > max_edges)
                    throw Error(ErrorKind::too_large, "graph6 graph exceeds edge capacity");
            }
        }
    }
    // Padding bits must be zero.
    for (; k < expected_bytes * 6; ++k)
        if ((byte(pos + k / 6) >> (5 - k % 6)) & 1U)
            throw Error(ErrorKind::parse, "nonzero graph6 padding");

    Graph g(static_cast<int>(n), std::move(edges));
    if (validation == Validation::cubic)
        require_cubic(g);
    return g;
}

/// Flower snark J_t on 4t vertices: hubs a_i, spokes to b_i, c_i, d_i, the
/// b's on a t-cycle, and the c's and d's on one 2t-cycle.
inline Graph flower_snark(int t)
{
    if (t < 5 || t % 2 == 0)
        throw Error(ErrorKind::invalid_argument, "flower snark needs odd t >= 5, got " + std::to_string(t));
    auto a = [](int i) { return 4 * i; };
    auto b = [](int i) { return 4 * i + 1; };
    auto c = [](int i) { return 4 * i + 2; };
    auto d = [](int i) { return 4 * i + 3; };
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i) {
        edges.push_back({a(i), b(i)});
        edges.push_back({a(i), c(i)});
        edges.push_back({a(i), d(i)});
    }
    for (int i = 0; i < t; ++i)
        edges.push_back({b(i), b((i + 1) % t)});
    for (int i = 0; i + 1 < t; ++i) {
        edges.push_back({c(i), c(i + 1)});
        edges.push_back({d(i), d(i + 1)});
    }
    edges.push_back({c(t - 1), d(0)});
    edges.push_back({d(t - 1), c(0)});
    Graph g(4 * t, std::move(edges));
    require_cubic(g);
    return g;
}

} // namespace cubiccover

#endif
