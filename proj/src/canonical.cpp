#include "hypershuffle/canonical.hpp"

#include <algorithm>

namespace hypershuffle {

namespace {

void append_multiset(std::string& out, const Multiset& m) {
    bool first = true;
    for (const auto& e : m.entries()) {
        for (std::uint32_t k = 0; k < e.count; ++k) {
            if (!first) out += ',';
            out += std::to_string(e.vertex);
            first = false;
        }
    }
}

}  // namespace

std::string arc_key(const Hyperarc& a) {
    std::string out;
    append_multiset(out, a.tail);
    out += '>';
    append_multiset(out, a.head);
    return out;
}

CanonicalForm canonical_form(const DirectedHypergraph& h) {
    std::vector<const Hyperarc*> order;
    order.reserve(h.arc_count());
    for (const auto& a : h.arcs()) order.push_back(&a);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return *x < *y; });

    std::string out = std::to_string(h.vertex_count());
    out += ':';
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += '|';
        append_multiset(out, order[i]->tail);
        out += '>';
        append_multiset(out, order[i]->head);
    }
    return out;
}

}  // namespace hypershuffle
