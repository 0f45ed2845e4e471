#include <doctest.h>

#include <map>
#include <set>

#include "../support/oracles.hpp"
#include "hypershuffle/chain_graph.hpp"
#include "hypershuffle/dhg.hpp"
#include "hypershuffle/instances.hpp"
#include "hypershuffle/shuffle.hpp"
#include "hypershuffle/stats.hpp"

using namespace hypershuffle;

namespace {

const DirectedHypergraph two_arcs = parse_dhg("vertices u v x y\narc u -> x\narc v -> y\n");

std::map<CanonicalForm, Rational> proposal_outcomes(const DirectedHypergraph& h) {
    std::map<CanonicalForm, Rational> out;
    for_each_proposal(h, [&](const ShuffleProposal& p) {
        DirectedHypergraph next = h;
        next.replace_pair(p.arc_i, p.arc_j, p.result_i(), p.result_j());
        out[canonical_form(next)] += p.probability();
    });
    return out;
}

ShuffleProposal make_proposal(const DirectedHypergraph& h, std::size_t i, std::size_t j, Hyperarc ri, Hyperarc rj) {
    ShuffleProposal p;
    p.arc_i = i;
    p.arc_j = j;
    p.new_tail_i = ri.tail;
    p.new_head_i = ri.head;
    p.new_tail_j = rj.tail;
    p.new_head_j = rj.head;
    const auto n = h.arc_count();
    p.pair_choices = n * (n - 1) / 2;
    p.tail_splits = binomial_u64(h.arc(i).tail.size() + h.arc(j).tail.size(), h.arc(i).tail.size());
    p.head_splits = binomial_u64(h.arc(i).head.size() + h.arc(j).head.size(), h.arc(i).head.size());
    return p;
}

}  // namespace

TEST_CASE("two single-stub arcs: four proposals of probability 1/4") {
    std::vector<ShuffleProposal> all;
    for_each_proposal(two_arcs, [&](const ShuffleProposal& p) { all.push_back(p); });
    REQUIRE(all.size() == 4);
    for (const auto& p : all) CHECK(p.probability() == Rational(1, 4));

    // Slot level: identity, tails swapped, heads swapped, both swapped.
    std::set<std::pair<std::string, std::string>> slots;
    for (const auto& p : all) slots.emplace(arc_key(p.result_i()), arc_key(p.result_j()));
    CHECK(slots == std::set<std::pair<std::string, std::string>>{{"0>2", "1>3"}, {"1>2", "0>3"}, {"0>3", "1>2"}, {"1>3", "0>2"}});

    // As arc multisets the two single swaps coincide, as do identity and double swap.
    const auto out = proposal_outcomes(two_arcs);
    CHECK(out.size() == 2);
    CHECK(out.at(canonical_form(two_arcs)) == Rational(1, 2));
    CHECK(out.at("4:0>3|1>2") == Rational(1, 2));
}

TEST_CASE("indistinguishable pooled tails give a deterministic tail split") {
    const auto h = parse_dhg("vertices u x y\narc u -> x\narc u -> y\n");
    for_each_proposal(h, [&](const ShuffleProposal& p) {
        CHECK(p.new_tail_i == Multiset{0});
        CHECK(p.new_tail_j == Multiset{0});
    });
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        auto p = propose(h, rng);
        CHECK(p.new_tail_i == Multiset{0});
    }
}

TEST_CASE("proposal probabilities sum to one") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 4, 4, 3);
        if (h.arc_count() < 2) continue;
        Rational total = 0;
        for_each_proposal(h, [&](const ShuffleProposal& p) { total += p.probability(); });
        CHECK(total == 1);
    }
}

TEST_CASE("arc pairs are drawn uniformly") {
    const auto h = load_instance("cycle3");
    Rng rng(2024);
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;
    const std::uint64_t n = 1000000;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto p = propose(h, rng);
        REQUIRE(p.arc_i < p.arc_j);
        ++counts[{p.arc_i, p.arc_j}];
    }
    REQUIRE(counts.size() == 3);
    const double sigma = std::sqrt(n * (1.0 / 3) * (2.0 / 3));
    for (const auto& [pair, c] : counts) CHECK(std::abs(static_cast<double>(c) - n / 3.0) < 3 * sigma);
}

TEST_CASE("a shuffle needs two arcs") {
    const auto h = parse_dhg("vertices u v\narc u -> v\n");
    Rng rng(1);
    CHECK_THROWS_AS(propose(h, rng), ShuffleError);
    auto copy = h;
    CHECK_FALSE(step_in_place(copy, SpaceSpec::from_features("sdm"), rng));
    CHECK(copy == h);
}

TEST_CASE("d1 start state: every mixing proposal is rejected in {s,d}") {
    const auto h0 = load_instance("d1");
    const auto spec = SpaceSpec::from_features("sd");
    for_each_proposal(h0, [&](const ShuffleProposal& p) {
        auto [next, ok] = apply(h0, p, spec);
        if (ok) CHECK(canonical_form(next) == canonical_form(h0));
        else CHECK(next == h0);
    });
    for (std::uint64_t k : {0ull, 1ull, 10ull, 5000ull}) {
        ChainConfig cfg;
        cfg.steps = k;
        cfg.seed = 31;
        cfg.spec = spec;
        CHECK(canonical_form(run_chain(h0, cfg).state) == canonical_form(h0));
    }
}

TEST_CASE("identity proposal is accepted and leaves the state unchanged") {
    const auto h = load_instance("fixed-degrees");
    const auto spec = SpaceSpec::from_features("");
    auto p = make_proposal(h, 0, 1, h.arc(0), h.arc(1));
    auto [next, ok] = apply(h, p, spec);
    CHECK(ok);
    CHECK(next == h);
}

TEST_CASE("accepted steps preserve degrees and stay in the space") {
    Rng rng(123);
    const auto specs = all_feature_subsets();
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 5, 5, 3);
        const auto d = degree_sequence(h);
        for (const auto& x : specs) {
            if (!in_space(h, x, d)) continue;
            DirectedHypergraph cur = h;
            for (int s = 0; s < 20; ++s) {
                step_in_place(cur, x, rng);
                REQUIRE(degree_sequence(cur).matches(d));
                REQUIRE(in_space(cur, x, d));
            }
        }
    }
}

TEST_CASE("acceptance examples") {
    const auto h = parse_dhg("vertices t1 t2 h1 h2\narc t1 -> h1\narc t2 -> h2\n");
    auto p = make_proposal(h, 0, 1, h.arc(0), h.arc(1));
    CHECK(acceptance_probability(h, p) == 1);
    CHECK(balanced_acceptance_probability(h, p) == 1);

    // result heads {v,w} and {v,u}: v contributes C(2,1) = 2
    const auto g = parse_dhg("vertices t1 t2 u v w\narc t1 -> v w\narc t2 -> u v\n");
    auto q = make_proposal(g, 0, 1, g.arc(0), g.arc(1));
    CHECK(acceptance_probability(g, q) == Rational(1, 2));
    CHECK(balanced_acceptance_probability(g, q) == Rational(1, 2));
    CHECK(acceptance(g, q, AcceptanceRule::always_accept).certain());
}

TEST_CASE("balanced acceptance corrects identical arcs and identical results") {
    const auto h = load_instance("identical-pair");  // two copies of uv -> x
    auto same = make_proposal(h, 0, 1, h.arc(0), h.arc(1));
    // binomials C(2,1) for u, v and x: 8. literal: 1 / (2 * 2 * 8); balanced: 2 / (C(2,2) * 8)
    CHECK(acceptance_probability(h, same) == Rational(1, 32));
    CHECK(balanced_acceptance_probability(h, same) == Rational(1, 4));
    const auto ux = parse_dhg("vertices u v x\narc u u -> x\n").arc(0);
    const auto vx = parse_dhg("vertices u v x\narc v v -> x\n").arc(0);
    auto split = make_proposal(h, 0, 1, ux, vx);
    // literal: 1 / (2 * 2 * 1 * 2) ; balanced: 1 / (C(2,2) * 2)
    CHECK(acceptance_probability(h, split) == Rational(1, 8));
    CHECK(balanced_acceptance_probability(h, split) == Rational(1, 2));
}

TEST_CASE("reciprocal of m_a m_b alpha is the product of binomials") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 3, 4, 2);
        if (h.arc_count() < 2) continue;
        for_each_proposal(h, [&](const ShuffleProposal& p) {
            const auto alpha = acceptance_probability(h, p);
            const Rational inv = Rational(1) / (alpha * h.multiplicity(h.arc(p.arc_i)) * h.multiplicity(h.arc(p.arc_j)));
            CHECK(denominator(inv) == 1);
            BigInt prod = 1;
            for (VertexId v = 0; v < h.vertex_count(); ++v) {
                prod *= binomial(p.new_tail_i.count(v) + p.new_tail_j.count(v), p.new_tail_i.count(v));
                prod *= binomial(p.new_head_i.count(v) + p.new_head_j.count(v), p.new_head_i.count(v));
            }
            CHECK(numerator(inv) == prod);
        });
    }
}

TEST_CASE("rejected steps return the input unchanged") {
    const auto h0 = load_instance("d1");
    const auto spec = SpaceSpec::from_features("sd");
    const auto uv = parse_dhg("vertices u v w x\narc u v -> x\n").arc(0);
    auto p = make_proposal(h0, 0, 1, uv, uv);
    auto [next, ok] = apply(h0, p, spec);
    CHECK_FALSE(ok);
    CHECK(next == h0);
    CHECK(introduces_forbidden_feature(h0, 0, 1, uv, uv, spec));
}

TEST_CASE("run_chain with zero steps and its trace") {
    const auto h = load_instance("fixed-degrees");
    ChainConfig cfg;
    cfg.spec = SpaceSpec::from_features("sdm");
    cfg.record_trace = true;
    auto r = run_chain(h, cfg);
    CHECK(r.state == h);
    CHECK(r.trace == std::vector<CanonicalForm>{canonical_form(h)});
    cfg.steps = 50;
    cfg.seed = 9;
    r = run_chain(h, cfg);
    CHECK(r.trace.size() == 51);
    CHECK(run_chain(h, cfg).state == r.state);
}

TEST_CASE("run_chain refuses a start state outside the space") {
    ChainConfig cfg;
    cfg.spec = SpaceSpec::from_features("");
    CHECK_THROWS_AS(run_chain(load_instance("example"), cfg), ConfigError);
}

TEST_CASE("sampled steps match the exact transition row") {
    const std::uint64_t n = 1000000;
    auto check_row = [&](const DirectedHypergraph& h, const SpaceSpec& spec, const ChainGraph& exact) {
        const auto start = *exact.index_of(canonical_form(h));
        std::vector<std::uint64_t> counts(exact.size(), 0);
        std::vector<double> probs(exact.size(), 0.0);
        for (const auto& [j, p] : exact.rows[start]) probs[j] = to_double(p);
        Rng rng(555);
        for (std::uint64_t i = 0; i < n; ++i) {
            DirectedHypergraph cur = h;
            step_in_place(cur, spec, rng);
            auto idx = exact.index_of(canonical_form(cur));
            REQUIRE(idx.has_value());
            ++counts[*idx];
        }
        return chi_square_test(counts, probs).p_value;
    };

    SUBCASE("stub labeling on two arcs") {
        const auto spec = SpaceSpec::from_features("sdm");
        const auto stub = build_chain_graph(degree_sequence(two_arcs), spec);
        const auto exact = lump_stub_chain(stub, LumpMode::sum);
        CHECK(check_row(two_arcs, spec, exact) > pass_p_value);
    }
    SUBCASE("vertex labeling on two arcs") {
        const auto spec = SpaceSpec::from_features("sdm", Labeling::vertex);
        const auto exact = build_chain_graph(degree_sequence(two_arcs), spec);
        CHECK(check_row(two_arcs, spec, exact) > pass_p_value);
    }
}
