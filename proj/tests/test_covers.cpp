#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cubiccover;

namespace {

// First non-decreasing index tuple (lexicographic) reaching the optimum.
std::vector<std::size_t> first_optimal_tuple(const Graph& g, const MatchingList& pms, int k, int mu)
{
    std::vector<std::size_t> idx;
    std::vector<std::size_t> found;
    std::function<bool(std::size_t, EdgeSet)> rec = [&](std::size_t lo, EdgeSet u) {
        if (static_cast<int>(idx.size()) == k) {
            if (g.size() - u.count() == mu) {
                found = idx;
                return true;
            }
            return false;
        }
        for (std::size_t j = lo; j < pms.size(); ++j) {
            idx.push_back(j);
            if (rec(j, u | pms[j]))
                return true;
            idx.pop_back();
        }
        return false;
    };
    rec(0, {});
    return found;
}

} // namespace

TEST(Mu, PetersenValues)
{
    const Graph p = fixtures::petersen();
    const std::vector<int> expected{10, 6, 3, 1, 0, 0};
    for (int k = 1; k <= 6; ++k)
        EXPECT_EQ(mu_k(p, k).mu, expected[static_cast<std::size_t>(k - 1)]) << k;
}

TEST(Mu, ColorableGraphsHaveMu3Zero)
{
    for (const Graph& g : {fixtures::k4(), fixtures::k33(), fixtures::theta(), fixtures::cube()}) {
        EXPECT_EQ(mu_k(g, 3).mu, 0);
        EXPECT_EQ(mu_k(g, 1).mu, g.size() - g.order() / 2);
    }
}

TEST(Mu, RejectsBadArguments)
{
    EXPECT_THROW(mu_k(fixtures::k4(), 0), Error);
    EXPECT_THROW(mu_k(fixtures::k4(), 7), Error);
    EXPECT_THROW(mu_k(fixtures::k4(), MatchingList{}, 3), Error);
}

TEST(Mu, MatchesMultisetOracleWithLexFirstWitness)
{
    for (const auto& entry : fixtures::corpus()) {
        const Graph& g = *entry.graph;
        if (g.order() > 12)
            continue;
        const auto pms = enumerate_perfect_matchings(g);
        for (int k = 2; k <= 4; ++k) {
            const CoverWitness w = mu_k(g, pms, k);
            const int mu = fixtures::mu_by_multisets(g, pms, k);
            ASSERT_EQ(w.mu, mu) << entry.id << " k=" << k;
            EXPECT_EQ(w.uncovered.count(), mu);
            EXPECT_EQ(w.covered | w.uncovered, g.all_edges());
            EXPECT_EQ(w.factor_indices, first_optimal_tuple(g, pms, k, mu)) << entry.id << " k=" << k;
            EXPECT_TRUE(std::is_sorted(w.factor_indices.begin(), w.factor_indices.end()));
        }
    }
}

TEST(Mu, MonotoneAndBounded)
{
    for (const auto& entry : fixtures::corpus()) {
        const Graph& g = *entry.graph;
        const auto pms = enumerate_perfect_matchings(g);
        int prev = g.size();
        for (int k = 1; k <= 5; ++k) {
            const int mu = mu_k(g, pms, k).mu;
            EXPECT_LE(mu, prev) << entry.id;
            prev = mu;
        }
        const int mu3 = mu_k(g, pms, 3).mu;
        EXPECT_EQ(mu3 == 0, is_three_edge_colorable(g)) << entry.id;
        if (mu3 > 0) {
            EXPECT_GE(mu3, 3) << entry.id;
            EXPECT_LE(*girth(g), 2 * mu3) << entry.id;
        }
        EXPECT_EQ(mu_k(g, pms, 5).mu, 0) << entry.id;
    }
}

TEST(FanRaspaud, PetersenTriple)
{
    const Graph p = fixtures::petersen();
    auto w = fan_raspaud_witness(p);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE((w->factors[0] & w->factors[1] & w->factors[2]).empty());
    EXPECT_EQ(w->factor_indices, (std::array<std::size_t, 3>{0, 1, 2}));
}

TEST(FanRaspaud, CorpusTriplesAreValid)
{
    for (const auto& entry : fixtures::corpus()) {
        const Graph& g = *entry.graph;
        const auto pms = enumerate_perfect_matchings(g);
        auto w = fan_raspaud_witness(pms);
        ASSERT_TRUE(w.has_value()) << entry.id;
        EXPECT_TRUE((w->factors[0] & w->factors[1] & w->factors[2]).empty()) << entry.id;
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_EQ(w->factors[i], pms[w->factor_indices[i]]);
            EXPECT_TRUE(is_perfect_matching(g, w->factors[i]));
        }
        if (pms.size() >= 3) {
            EXPECT_LT(w->factor_indices[0], w->factor_indices[1]) << entry.id;
            EXPECT_LT(w->factor_indices[1], w->factor_indices[2]) << entry.id;
        }
    }
}

TEST(FanRaspaud, ThetaUsesDistinctMatchings)
{
    auto w = fan_raspaud_witness(fixtures::theta());
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->factors[0] | w->factors[1] | w->factors[2], fixtures::theta().all_edges());
}

TEST(Berge, FiveMatchingsCoverCorpus)
{
    EXPECT_TRUE(berge_check(fixtures::petersen()));
    for (const auto& entry : fixtures::corpus())
        EXPECT_TRUE(berge_check(*entry.graph)) << entry.id;
}

TEST(Fulkerson, PetersenUsesEachMatchingOnce)
{
    const Graph p = fixtures::petersen();
    auto w = fulkerson_witness(p);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_fulkerson_cover(p, w->factors));
    EXPECT_EQ(w->factor_indices, (std::array<std::size_t, 6>{0, 1, 2, 3, 4, 5}));
}

TEST(Fulkerson, ColorableGraphDoublesItsColors)
{
    const Graph k33 = fixtures::k33();
    auto w = fulkerson_witness(k33);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_fulkerson_cover(k33, w->factors));
}

TEST(Fulkerson, CoverCheckRejects)
{
    const Graph p = fixtures::petersen();
    const auto pms = enumerate_perfect_matchings(p);
    std::vector<EdgeSet> five(pms.begin(), pms.begin() + 5);
    EXPECT_FALSE(is_fulkerson_cover(p, five));
    std::vector<EdgeSet> repeated(pms.begin(), pms.end());
    repeated[5] = repeated[0];
    EXPECT_FALSE(is_fulkerson_cover(p, repeated));
    std::vector<EdgeSet> bad(pms.begin(), pms.end());
    bad[0] = EdgeSet::of({0});
    EXPECT_FALSE(is_fulkerson_cover(p, bad));
}

TEST(Fulkerson, SmallCorpusWitnesses)
{
    for (const auto& entry : fixtures::corpus()) {
        const Graph& g = *entry.graph;
        if (g.order() > 12)
            continue;
        auto w = fulkerson_witness(g);
        ASSERT_TRUE(w.has_value()) << entry.id;
        EXPECT_TRUE(is_fulkerson_cover(g, w->factors)) << entry.id;
    }
}

TEST(DeletedVertexCircuit, PetersenMatchingsMeetOnce)
{
    const Graph p = fixtures::petersen();
    for (Vertex v = 0; v < p.order(); ++v) {
        auto circuit = hamiltonian_circuit(p, v);
        ASSERT_TRUE(circuit.has_value());
        auto pair = matchings_from_deleted_vertex_circuit(p, v, *circuit);
        ASSERT_TRUE(pair.has_value()) << v;
        EXPECT_TRUE(is_perfect_matching(p, pair->first));
        EXPECT_TRUE(is_perfect_matching(p, pair->second));
        EXPECT_EQ((pair->first & pair->second).count(), 1);
    }
}

TEST(DeletedVertexCircuit, RejectsEmptyCircuit)
{
    EXPECT_FALSE(matchings_from_deleted_vertex_circuit(fixtures::petersen(), 0, {}).has_value());
}
