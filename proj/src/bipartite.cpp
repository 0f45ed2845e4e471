#include "hypershuffle/bipartite.hpp"

#include <algorithm>

#include "hypershuffle/space.hpp"

namespace hypershuffle {

bool BipartiteDigraph::has_multi_arc() const noexcept {
    return std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.multiplicity >= 2; });
}

std::size_t BipartiteDigraph::arc_total() const noexcept {
    std::size_t s = 0;
    for (const auto& a : arcs) s += a.multiplicity;
    return s;
}

BipartiteImage map_to_bipartite(const DirectedHypergraph& h) {
    BipartiteImage img;
    img.tails.source_count = img.heads.source_count = h.vertex_count();
    img.tails.target_count = img.heads.target_count = h.arc_count();
    for (std::uint32_t a = 0; a < h.arc_count(); ++a) {
        for (const auto& e : h.arc(a).tail.entries()) img.tails.arcs.push_back({e.vertex, a, e.count});
        for (const auto& e : h.arc(a).head.entries()) img.heads.arcs.push_back({e.vertex, a, e.count});
    }
    return img;
}

bool in_sm_via_bipartite(const DirectedHypergraph& h) { return !map_to_bipartite(h).has_multi_arc(); }

SmEquivalence check_sm_equivalence(const DirectedHypergraph& h) {
    return {!classify_features(h).any_degenerate(), in_sm_via_bipartite(h)};
}

}  // namespace hypershuffle
