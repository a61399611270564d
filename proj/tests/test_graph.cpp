#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cubiccover;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::invalid_argument;
}

} // namespace

TEST(EdgeSet, BasicOperations)
{
    EdgeSet a = EdgeSet::of({0, 5, 70, 191});
    EdgeSet b = EdgeSet::of({5, 64, 191});
    EXPECT_EQ(a.count(), 4);
    EXPECT_EQ((a & b), EdgeSet::of({5, 191}));
    EXPECT_EQ((a | b).count(), 5);
    EXPECT_EQ((a - b), EdgeSet::of({0, 70}));
    EXPECT_EQ((a ^ b), EdgeSet::of({0, 64, 70}));
    EXPECT_EQ(a.first(), 0);
    EXPECT_EQ(a.next(5), 70);
    EXPECT_EQ(a.next(191), -1);
    EXPECT_EQ(EdgeSet{}.first(), -1);
    EXPECT_TRUE(EdgeSet::of({5}).subset_of(a));
    EXPECT_EQ(EdgeSet::first_n(130).count(), 130);
    EXPECT_EQ(a.indices(), (std::vector<int>{0, 5, 70, 191}));
}

TEST(EdgeSet, LexicographicOrderOnSortedIndexSequences)
{
    EXPECT_TRUE(lex_less(EdgeSet::of({0, 3}), EdgeSet::of({0, 4})));
    EXPECT_TRUE(lex_less(EdgeSet::of({0, 3}), EdgeSet::of({1})));
    EXPECT_TRUE(lex_less(EdgeSet::of({0}), EdgeSet::of({0, 1})));
    EXPECT_FALSE(lex_less(EdgeSet::of({0, 1}), EdgeSet::of({0})));
    EXPECT_FALSE(lex_less(EdgeSet::of({2}), EdgeSet::of({2})));
    EXPECT_TRUE(lex_less(EdgeSet{}, EdgeSet::of({0})));
}

TEST(Mgf, ParsesThetaAndK4)
{
    Graph t = parse_mgf("2 3\n0 1\n0 1\n0 1");
    EXPECT_EQ(t.order(), 2);
    EXPECT_EQ(t.size(), 3);
    Graph k = parse_mgf("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
    EXPECT_EQ(k, fixtures::k4());
}

TEST(Mgf, CommentsAndBlankLinesAreIgnored)
{
    Graph t = parse_mgf("# theta\n2 3 # header\n0 1\n\n0 1\n0 1   \n");
    EXPECT_EQ(t, fixtures::theta());
}

TEST(Mgf, ErrorsAreDistinct)
{
    EXPECT_EQ(kind_of([] { parse_mgf("2 2\n0 1\n0 1"); }), ErrorKind::not_cubic);
    EXPECT_EQ(kind_of([] { parse_mgf("2 3\n0 1\n0 0\n0 1"); }), ErrorKind::loop_edge);
    EXPECT_EQ(kind_of([] { parse_mgf("2 3\n0 1\n0 2\n0 1"); }), ErrorKind::vertex_out_of_range);
    EXPECT_EQ(kind_of([] { parse_mgf("2 3\n0 1\n0 1"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_mgf("two 3\n0 1\n0 1\n0 1"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_mgf("2 3\n0 1\n0 1x\n0 1"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_mgf(""); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_mgf("200 300\n"); }), ErrorKind::too_large);
}

TEST(Mgf, UncheckedParseAcceptsNonCubic)
{
    Graph g = parse_mgf("3 2\n0 1\n1 2", Validation::none);
    EXPECT_EQ(g.size(), 2);
    EXPECT_FALSE(g.is_cubic());
}

TEST(Mgf, RoundTripReproducesEdgeOrder)
{
    for (const Graph& g : {fixtures::theta(), fixtures::k4(), fixtures::petersen(), flower_snark(7)}) {
        Graph back = parse_mgf(to_mgf(g));
        EXPECT_EQ(back, g);
    }
}

TEST(Graph6, RoundTripAgainstReferenceEncoder)
{
    for (const Graph& g : {fixtures::k4(), fixtures::k33(), fixtures::petersen(), fixtures::prism(), fixtures::cube()}) {
        Graph back = parse_graph6(fixtures::encode_graph6(g));
        ASSERT_EQ(back.order(), g.order());
        ASSERT_EQ(back.size(), g.size());
        // Same edge set, and the decoded order re-encodes identically.
        EXPECT_EQ(fixtures::encode_graph6(back), fixtures::encode_graph6(g));
    }
    Graph k = parse_graph6(fixtures::encode_graph6(fixtures::k4()));
    EXPECT_EQ(k.size(), 6);
    EXPECT_TRUE(is_bipartite(parse_graph6(fixtures::encode_graph6(fixtures::k33()))));
    Graph p = parse_graph6(fixtures::encode_graph6(fixtures::petersen()));
    EXPECT_EQ(p.size(), 15);
    EXPECT_EQ(girth(p), 5);
}

TEST(Graph6, EdgesFollowColumnOrder)
{
    Graph k = parse_graph6("C~");
    std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    ASSERT_EQ(k.size(), 6);
    for (int e = 0; e < 6; ++e) {
        EXPECT_EQ(k.edge(e).u, expected[static_cast<std::size_t>(e)].u);
        EXPECT_EQ(k.edge(e).v, expected[static_cast<std::size_t>(e)].v);
    }
}

TEST(Graph6, MultiByteSize)
{
    Graph big = flower_snark(17); // 68 vertices
    std::string enc = fixtures::encode_graph6(big);
    ASSERT_EQ(enc[0], '~');
    Graph back = parse_graph6(enc);
    EXPECT_EQ(back.order(), 68);
    EXPECT_EQ(back.size(), 102);
    EXPECT_EQ(fixtures::encode_graph6(back), enc);
}

TEST(Graph6, HeaderAndErrors)
{
    EXPECT_EQ(parse_graph6(">>graph6<<C~").size(), 6);
    EXPECT_EQ(kind_of([] { parse_graph6("C~~"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_graph6("C"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_graph6("C\x7f"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_graph6("C "); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { parse_graph6("Cw"); }), ErrorKind::not_cubic);
    // n = 2: one bit used, the five padding bits must be zero.
    EXPECT_EQ(kind_of([] { parse_graph6("A`"); }), ErrorKind::parse);
}

TEST(Graph6, AllCorpusLinesRoundTrip)
{
    std::istringstream in(fixtures::read_text(std::string(CUBICCOVER_DATA_DIR) + "/bridgeless_cubic_le14.g6"));
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        Graph g = parse_graph6(line);
        EXPECT_TRUE(g.is_cubic());
        EXPECT_EQ(fixtures::encode_graph6(g), line);
        ++count;
    }
    EXPECT_EQ(count, 587);
}

TEST(Graph, RejectsLoopsAndOversize)
{
    EXPECT_EQ(kind_of([] { Graph(2, {{1, 1}}); }), ErrorKind::loop_edge);
    EXPECT_EQ(kind_of([] { Graph(2, {{0, 2}}); }), ErrorKind::vertex_out_of_range);
    EXPECT_EQ(kind_of([] { Graph(129, {}); }), ErrorKind::too_large);
}

TEST(Graph, CubicGraphsHaveThreeHalvesEdges)
{
    for (const auto& entry : fixtures::corpus()) {
        ASSERT_TRUE(entry.graph.has_value()) << entry.id;
        const Graph& g = *entry.graph;
        EXPECT_EQ(2 * g.size(), 3 * g.order());
        int degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            degree_sum += g.degree(v);
        EXPECT_EQ(degree_sum, 2 * g.size());
    }
}

TEST(FlowerSnark, SizesAndErrors)
{
    for (int t : {5, 7, 9}) {
        Graph j = flower_snark(t);
        EXPECT_EQ(j.order(), 4 * t);
        EXPECT_EQ(j.size(), 6 * t);
        EXPECT_TRUE(j.is_cubic());
    }
    EXPECT_EQ(kind_of([] { flower_snark(6); }), ErrorKind::invalid_argument);
    EXPECT_EQ(kind_of([] { flower_snark(3); }), ErrorKind::invalid_argument);
}

TEST(Corpus, ReadsMgfBlocksWithNames)
{
    auto entries = read_corpus("# first\n2 3\n0 1\n0 1\n0 1\n\n\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n\n# bad\n2 2\n0 1\n0 1\n");
    ASSERT_EQ(entries.size(), 3U);
    EXPECT_EQ(entries[0].id, "first");
    EXPECT_EQ(entries[1].id, "graph 1");
    EXPECT_TRUE(entries[1].graph.has_value());
    EXPECT_EQ(entries[2].id, "bad");
    ASSERT_TRUE(entries[2].error.has_value());
    EXPECT_EQ(entries[2].error->kind(), ErrorKind::not_cubic);
}

TEST(Corpus, ReadsGraph6Lines)
{
    auto entries = read_corpus("C~\nEFz_\n\nbad!\n");
    ASSERT_EQ(entries.size(), 3U);
    EXPECT_EQ(entries[0].id, "C~");
    EXPECT_TRUE(entries[1].graph.has_value());
    EXPECT_TRUE(entries[2].error.has_value());
}

TEST(Corpus, ShippedCorpusHas590Graphs)
{
    auto entries = fixtures::corpus();
    EXPECT_EQ(entries.size(), 590U);
    for (const auto& e : entries)
        EXPECT_TRUE(e.graph.has_value()) << e.id;
    EXPECT_EQ(entries.front().id, "theta K_2^3");
    EXPECT_EQ(*entries[entries.size() - 2].graph, flower_snark(5));
    EXPECT_EQ(*entries.back().graph, flower_snark(7));
}
