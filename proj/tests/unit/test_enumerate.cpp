#include <doctest.h>

#include <map>
#include <set>

#include "../support/oracles.hpp"
#include "hypershuffle/dhg.hpp"
#include "hypershuffle/enumerate.hpp"
#include "hypershuffle/instances.hpp"

using namespace hypershuffle;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> in_out(const DegreeSequence& d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> v;
    for (const auto& x : d.vertices) v.emplace_back(x.in, x.out);
    return v;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sizes(const DegreeSequence& d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> v;
    for (const auto& a : d.arcs) v.emplace_back(a.tail, a.head);
    return v;
}

std::set<oracle::Graph> library_space(const DegreeSequence& d, const SpaceSpec& x) {
    std::set<oracle::Graph> out;
    for (const auto& h : enumerate_vertex_space(d, x)) out.insert(oracle::graph_of(h));
    return out;
}

}  // namespace

TEST_CASE("fixed-degrees figure: 11 / 8 / 5 / 4") {
    const auto d = degree_sequence(load_instance("fixed-degrees"));
    CHECK(enumerate_vertex_space(d, SpaceSpec::from_features("sdm")).size() == 11);
    CHECK(enumerate_vertex_space(d, SpaceSpec::from_features("sm")).size() == 8);
    CHECK(enumerate_vertex_space(d, SpaceSpec::from_features("d")).size() == 5);
    CHECK(enumerate_vertex_space(d, SpaceSpec::from_features("")).size() == 4);
}

TEST_CASE("vertex enumeration matches the brute-force oracle") {
    std::vector<DegreeSequence> battery;
    for (const char* name : {"fixed-degrees", "d1", "identical-pair", "cycle3", "star", "loops"})
        battery.push_back(degree_sequence(load_instance(name)));
    Rng rng(404);
    while (battery.size() < 40) battery.push_back(degree_sequence(oracle::random_hypergraph(rng, 4, 3, 2)));

    for (const auto& d : battery) {
        for (const auto& x : all_feature_subsets()) {
            oracle::Features f{x.allow_self_loops, x.allow_degenerate, x.allow_multi};
            CHECK(library_space(d, x) == oracle::vertex_space(in_out(d), sizes(d), f));
        }
    }
}

TEST_CASE("a forced single arc is the only hypergraph in every space") {
    DegreeSequence d{{{0, 1}, {1, 0}}, {{1, 1}}};
    for (const auto& x : all_feature_subsets()) {
        CHECK(enumerate_vertex_space(d, x).size() == 1);
        CHECK(enumerate_stub_space(d, x).size() == 1);
    }
    CHECK(count_stub_realizations(parse_dhg("vertices u v\narc u -> v\n")) == 1);
}

TEST_CASE("d1 space in {s,d} contains both endpoints of the counterexample") {
    const auto h0 = load_instance("d1");
    const auto hstar = parse_dhg("vertices u v w x\narc u v -> x\narc u w -> x\narc v w -> x\n");
    const auto space = enumerate_vertex_space(degree_sequence(h0), SpaceSpec::from_features("sd"));
    std::set<CanonicalForm> keys;
    for (const auto& h : space) keys.insert(canonical_form(h));
    CHECK(keys.count(canonical_form(h0)) == 1);
    CHECK(keys.count(canonical_form(hstar)) == 1);
}

TEST_CASE("stub realization counts by hand") {
    const auto shared_head = parse_dhg("vertices u v w\narc u -> w\narc v -> w\n");
    CHECK(count_stub_realizations(shared_head) == 2);
    CHECK(enumerate_stub_space(degree_sequence(shared_head), SpaceSpec::from_features("sdm")).size() == 2);

    const auto multi = parse_dhg("vertices b c\narc b -> c\narc b -> c\n");
    // 2! * 2! / 2! for the identical pair
    CHECK(count_stub_realizations(multi) == 2);
    CHECK(enumerate_stub_space(degree_sequence(multi), SpaceSpec::from_features("sdm")).size() == 2);
}

TEST_CASE("realization counts match the stub enumeration per class") {
    std::vector<DirectedHypergraph> battery;
    battery.push_back(parse_dhg("vertices a b c d e\narc a d -> a b\narc d d -> e\narc b -> c\narc b -> c\n"));
    for (const char* name : {"fixed-degrees", "d1", "identical-pair", "cycle3", "star", "loops", "two-tail-3"})
        battery.push_back(load_instance(name));
    for (const auto& h : battery) {
        const auto d = degree_sequence(h);
        REQUIRE(d.total_stubs() <= default_stub_stub_limit);
        const StubLayout layout(d);
        for (const auto& x : all_feature_subsets()) {
            std::map<CanonicalForm, BigInt> per_class;
            for (const auto& s : enumerate_stub_space(d, x)) per_class[canonical_form(layout.project(s))] += 1;
            const auto vertex_space = enumerate_vertex_space(d, x);
            CHECK(per_class.size() == vertex_space.size());
            for (const auto& v : vertex_space) CHECK(per_class[canonical_form(v)] == count_stub_realizations(v));
        }
    }
}

TEST_CASE("stub layout projects and lifts consistently") {
    const auto h = load_instance("fixed-degrees");
    const StubLayout layout(degree_sequence(h));
    CHECK(layout.stub_count() == 7);
    const auto lifted = layout.lift(h);
    CHECK(canonical_form(layout.project(lifted)) == canonical_form(h));
    std::multiset<VertexId> used;
    for (const auto& a : lifted.arcs()) {
        for (auto v : a.tail.expand()) used.insert(v);
        for (auto v : a.head.expand()) used.insert(v);
    }
    CHECK(used.size() == 7);
    CHECK(std::set<VertexId>(used.begin(), used.end()).size() == 7);
    CHECK(layout.owner(layout.in_stub(0, 1)) == 0);
    CHECK(layout.owner(layout.out_stub(1, 1)) == 1);
}

TEST_CASE("size guards") {
    DegreeSequence big{{{9, 0}, {0, 9}}, std::vector<ArcDegree>(9, ArcDegree{1, 1})};
    CHECK_THROWS_AS(enumerate_vertex_space(big, SpaceSpec::from_features("sdm")), SizeLimitError);
    DegreeSequence mid{{{7, 0}, {0, 7}}, std::vector<ArcDegree>(7, ArcDegree{1, 1})};
    CHECK_THROWS_AS(enumerate_stub_space(mid, SpaceSpec::from_features("sdm")), SizeLimitError);
    CHECK(enumerate_vertex_space(mid, SpaceSpec::from_features("sdm")).size() == 1);
}

TEST_CASE("degree sequences without a realization give an empty space") {
    DegreeSequence unbalanced{{{1, 0}, {0, 2}}, {{1, 1}}};
    CHECK(enumerate_vertex_space(unbalanced, SpaceSpec::from_features("sdm")).empty());
}
