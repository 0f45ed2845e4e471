#include <doctest.h>

#include "../support/oracles.hpp"
#include "hypershuffle/dhg.hpp"
#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/instances.hpp"

using namespace hypershuffle;

TEST_CASE("multiset stores sorted entries with counts") {
    Multiset m{3, 1, 3, 3};
    CHECK(m.size() == 4);
    CHECK(m.distinct() == 2);
    CHECK(m.count(3) == 3);
    CHECK(m.count(2) == 0);
    CHECK(m.expand() == std::vector<VertexId>{1, 3, 3, 3});
    CHECK(m.has_repeated_vertex());
    CHECK_FALSE(Multiset{1, 2}.has_repeated_vertex());
    CHECK(Multiset{1, 2}.shares_vertex_with(Multiset{2, 5}));
    CHECK_FALSE(Multiset{1, 2}.shares_vertex_with(Multiset{3}));
    CHECK(Multiset{2, 1} == Multiset{1, 2});
    CHECK(Multiset{1, 2}.merged(Multiset{2}) == Multiset{1, 2, 2});
}

TEST_CASE("multiset order follows the ascending expansion") {
    CHECK(Multiset{0, 1} < Multiset{0, 2});
    CHECK(Multiset{0} < Multiset{0, 0});
    CHECK(Multiset{0, 0} < Multiset{0, 1});
    CHECK(Multiset{1} > Multiset{0, 5});
}

TEST_CASE("degree sequence of the example hypergraph") {
    const auto h = load_instance("example");
    const auto d = degree_sequence(h);
    // d_V = ((1,1),(1,2),(3,1),(0,3),(1,0),(1,1)) as (in, out)
    const std::vector<VertexDegree> dv = {{1, 1}, {1, 2}, {3, 1}, {0, 3}, {1, 0}, {1, 1}};
    const std::vector<ArcDegree> da = {{2, 2}, {2, 1}, {1, 1}, {1, 1}, {2, 2}};
    CHECK(d.vertices == dv);
    CHECK(d.arcs == da);
    CHECK(d.conserves_stubs());
}

TEST_CASE("hypergraph without arcs has zero degrees") {
    DirectedHypergraph h(3);
    const auto d = degree_sequence(h);
    CHECK(d.vertices.size() == 3);
    for (const auto& v : d.vertices) CHECK(v == VertexDegree{0, 0});
    CHECK(d.arcs.empty());
    CHECK(d.conserves_stubs());
}

TEST_CASE("degrees agree with an incidence recount on random hypergraphs") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 5, 4);
        const auto d = degree_sequence(h);
        const auto ref = oracle::recount_degrees(h);
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            CHECK(d.vertices[v].in == ref[v].first);
            CHECK(d.vertices[v].out == ref[v].second);
        }
        CHECK(d.total_out() == [&] {
            std::size_t s = 0;
            for (const auto& a : h.arcs()) s += a.tail.size();
            return s;
        }());
        CHECK(d.conserves_stubs());
    }
}

TEST_CASE("degree sequences compare vertices positionally and arcs as a multiset") {
    DegreeSequence a{{{1, 0}, {0, 1}}, {{1, 2}, {2, 1}}};
    DegreeSequence b{{{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}};
    DegreeSequence c{{{0, 1}, {1, 0}}, {{1, 2}, {2, 1}}};
    CHECK(a.matches(b));
    CHECK_FALSE(a.matches(c));
}

TEST_CASE("malformed hypergraphs are rejected") {
    CHECK_THROWS_AS(DirectedHypergraph(2, {{Multiset{}, Multiset{0}}}), HypergraphError);
    CHECK_THROWS_AS(DirectedHypergraph(2, {{Multiset{0}, Multiset{}}}), HypergraphError);
    CHECK_THROWS_AS(DirectedHypergraph(2, {{Multiset{0}, Multiset{2}}}), HypergraphError);
    DirectedHypergraph h(2, {{Multiset{0}, Multiset{1}}});
    CHECK_THROWS_AS(h.set_labels({"only-one"}), HypergraphError);
}

TEST_CASE("multiplicity counts identical arcs") {
    const auto h = load_instance("example");
    CHECK(h.multiplicity(h.arc(2)) == 2);
    CHECK(h.multiplicity(h.arc(0)) == 1);
    CHECK(h.multiplicity({Multiset{0}, Multiset{0}}) == 0);
}
