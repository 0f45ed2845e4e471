#pragma once
// Brute-force reference implementations used only by tests. They share the
// plain data types with the library but none of its algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/rational.hpp"
#include "hypershuffle/rng.hpp"

namespace oracle {

using hypershuffle::DirectedHypergraph;
using hypershuffle::Hyperarc;
using hypershuffle::Multiset;
using hypershuffle::Rational;
using hypershuffle::VertexId;

using Side = std::vector<VertexId>;               // sorted, with repetition
using Arc = std::pair<Side, Side>;                // (tail, head)
using Graph = std::vector<Arc>;                   // sorted arc list

struct Features {
    bool s = true, d = true, m = true;
};

inline Side side_of(const Multiset& m) {
    Side out;
    for (const auto& e : m.entries())
        for (std::uint32_t k = 0; k < e.count; ++k) out.push_back(e.vertex);
    return out;
}

inline Graph graph_of(const DirectedHypergraph& h) {
    Graph g;
    for (const auto& a : h.arcs()) g.emplace_back(side_of(a.tail), side_of(a.head));
    std::sort(g.begin(), g.end());
    return g;
}

inline DirectedHypergraph hypergraph_of(std::size_t n, const Graph& g) {
    std::vector<Hyperarc> arcs;
    for (const auto& [t, h] : g) arcs.push_back({Multiset(std::span<const VertexId>(t)), Multiset(std::span<const VertexId>(h))});
    return DirectedHypergraph(n, std::move(arcs));
}

// Degrees by walking every incidence; returns (in, out) per vertex.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> recount_degrees(const DirectedHypergraph& h) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> d(h.vertex_count());
    for (std::size_t a = 0; a < h.arc_count(); ++a)
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            d[v].first += h.arc(a).head.count(v);
            d[v].second += h.arc(a).tail.count(v);
        }
    return d;
}

inline bool has_repeat(const Side& s) { return std::adjacent_find(s.begin(), s.end()) != s.end(); }

inline bool admissible(const Graph& g, Features x) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!x.s && g[i].first == g[i].second) return false;
        if (!x.d && (has_repeat(g[i].first) || has_repeat(g[i].second))) return false;
        if (!x.m)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g[i] == g[j]) return false;
    }
    return true;
}

// All sorted vertex vectors of length k over 0..n-1.
inline std::vector<Side> all_multisets(std::size_t n, std::size_t k) {
    std::vector<Side> out;
    Side cur;
    auto rec = [&](auto&& self, VertexId from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (VertexId v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Every vertex-labeled hypergraph with the given (in, out) per vertex and
// (tail, head) per arc slot, by trying every multiset in every slot.
inline std::set<Graph> vertex_space(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& vertex_in_out,
                                    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arc_sizes,
                                    Features x) {
    const auto n = vertex_in_out.size();
    std::set<Graph> out;
    Graph cur(arc_sizes.size());
    std::map<std::size_t, std::vector<Side>> cache;
    auto options = [&](std::size_t k) -> const std::vector<Side>& {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, all_multisets(n, k)).first;
        return it->second;
    };
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == arc_sizes.size()) {
            std::vector<std::uint32_t> in(n, 0), outd(n, 0);
            for (const auto& [t, h] : cur) {
                for (auto v : t) ++outd[v];
                for (auto v : h) ++in[v];
            }
            for (std::size_t v = 0; v < n; ++v)
                if (in[v] != vertex_in_out[v].first || outd[v] != vertex_in_out[v].second) return;
            Graph g = cur;
            std::sort(g.begin(), g.end());
            if (admissible(g, x)) out.insert(g);
            return;
        }
        for (const auto& t : options(arc_sizes[slot].first))
            for (const auto& h : options(arc_sizes[slot].second)) {
                cur[slot] = {t, h};
                self(self, slot + 1);
            }
    };
    rec(rec, 0);
    return out;
}

// Exact vertex-level transition row of the stub kernel from h: every ordered
// permutation of the pooled tail stubs and of the pooled head stubs is equally
// likely, the first |tail_i| (|head_i|) go to arc i. Rejected outcomes stay.
inline std::map<Graph, Rational> stub_row(const DirectedHypergraph& h, Features x) {
    std::map<Graph, Rational> row;
    const Graph base = [&] {
        Graph g;
        for (const auto& a : h.arcs()) g.emplace_back(side_of(a.tail), side_of(a.head));
        return g;
    }();
    const auto m = base.size();
    if (m < 2) {
        row[graph_of(h)] = 1;
        return row;
    }
    const Rational pair_p = Rational(2) / (m * (m - 1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Side tails = base[i].first, heads = base[i].second;
            tails.insert(tails.end(), base[j].first.begin(), base[j].first.end());
            heads.insert(heads.end(), base[j].second.begin(), base[j].second.end());
            std::vector<std::size_t> tp(tails.size()), hp(heads.size());
            std::iota(tp.begin(), tp.end(), 0);
            std::vector<std::pair<Side, Side>> tail_outcomes, head_outcomes;
            do {
                Side a, b;
                for (std::size_t k = 0; k < tp.size(); ++k) (k < base[i].first.size() ? a : b).push_back(tails[tp[k]]);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                tail_outcomes.emplace_back(a, b);
            } while (std::next_permutation(tp.begin(), tp.end()));
            std::iota(hp.begin(), hp.end(), 0);
            do {
                Side a, b;
                for (std::size_t k = 0; k < hp.size(); ++k) (k < base[i].second.size() ? a : b).push_back(heads[hp[k]]);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                head_outcomes.emplace_back(a, b);
            } while (std::next_permutation(hp.begin(), hp.end()));
            const Rational each = pair_p / (tail_outcomes.size() * head_outcomes.size());
            for (const auto& [ti, tj] : tail_outcomes)
                for (const auto& [hi, hj] : head_outcomes) {
                    Graph g = base;
                    g[i] = {ti, hi};
                    g[j] = {tj, hj};
                    std::sort(g.begin(), g.end());
                    if (!admissible(g, x)) g = graph_of(h);
                    row[g] += each;
                }
        }
    return row;
}

// Random well-formed hypergraph: 1..max_vertices vertices, 1..max_arcs arcs,
// sides of size 1..max_side.
inline DirectedHypergraph random_hypergraph(hypershuffle::Rng& rng, std::size_t max_vertices = 5,
                                            std::size_t max_arcs = 5, std::size_t max_side = 3) {
    const std::size_t n = 1 + rng.below(max_vertices);
    const std::size_t m = 1 + rng.below(max_arcs);
    std::vector<Hyperarc> arcs;
    for (std::size_t a = 0; a < m; ++a) {
        Hyperarc arc;
        const auto t = 1 + rng.below(max_side), hd = 1 + rng.below(max_side);
        for (std::size_t k = 0; k < t; ++k) arc.tail.insert(static_cast<VertexId>(rng.below(n)));
        for (std::size_t k = 0; k < hd; ++k) arc.head.insert(static_cast<VertexId>(rng.below(n)));
        arcs.push_back(std::move(arc));
    }
    return DirectedHypergraph(n, std::move(arcs));
}

}  // namespace oracle
