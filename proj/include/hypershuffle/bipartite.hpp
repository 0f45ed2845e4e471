#pragma once

#include <cstdint>
#include <vector>

#include "hypershuffle/hypergraph.hpp"

namespace hypershuffle {

// Bipartite digraph with arcs from a source side to a target side; parallel
// arcs are stored once with their multiplicity.
struct BipartiteDigraph {
    struct Arc {
        std::uint32_t source;
        std::uint32_t target;
        std::uint32_t multiplicity;
    };
    std::size_t source_count = 0;
    std::size_t target_count = 0;
    std::vector<Arc> arcs;

    bool has_multi_arc() const noexcept;
    std::size_t arc_total() const noexcept;
};

/// Image of a hypergraph under the incidence map: G^t has an arc
/// (u_out(v), u_t(a)) for every occurrence of v in tail(a), G^h an arc
/// (u_in(v), u_h(a)) for every occurrence of v in head(a). Sources are
/// indexed by vertex, targets by arc position.
struct BipartiteImage {
    BipartiteDigraph tails;
    BipartiteDigraph heads;

    bool has_multi_arc() const noexcept { return tails.has_multi_arc() || heads.has_multi_arc(); }
};

BipartiteImage map_to_bipartite(const DirectedHypergraph& h);

/// Membership in the {s,m} feature class decided on the image: no multi-arcs.
bool in_sm_via_bipartite(const DirectedHypergraph& h);

/// Both sides of H in H_{s,m} <=> f(H) has no multi-arcs. Self-loops and
/// multi-hyperarcs are allowed in {s,m}, so membership by features means no
/// degenerate hyperarc.
struct SmEquivalence {
    bool by_features = false;
    bool by_image = false;
    bool holds() const noexcept { return by_features == by_image; }
};

SmEquivalence check_sm_equivalence(const DirectedHypergraph& h);

}  // namespace hypershuffle
