#include "hypershuffle/space.hpp"

#include <algorithm>
#include <numeric>

namespace hypershuffle {

SpaceSpec SpaceSpec::from_features(std::string_view features, Labeling labeling) {
    SpaceSpec spec;
    spec.allow_self_loops = spec.allow_degenerate = spec.allow_multi = false;
    spec.labeling = labeling;
    for (char c : features) {
        bool* flag = nullptr;
        switch (c) {
            case 's': flag = &spec.allow_self_loops; break;
            case 'd': flag = &spec.allow_degenerate; break;
            case 'm': flag = &spec.allow_multi; break;
            default:
                throw std::invalid_argument(std::string("unknown feature '") + c +
                                            "' in space subset (expected letters from \"sdm\")");
        }
        if (*flag)
            throw std::invalid_argument(std::string("feature '") + c + "' listed twice");
        *flag = true;
    }
    return spec;
}

std::string SpaceSpec::features() const {
    std::string s;
    if (allow_self_loops) s += 's';
    if (allow_degenerate) s += 'd';
    if (allow_multi) s += 'm';
    return s;
}

std::string SpaceSpec::name() const {
    std::string out = labeling == Labeling::stub ? "stub{" : "vert{";
    auto f = features();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += f[i];
    }
    return out + "}";
}

bool SpaceSpec::is_subspace_of(const SpaceSpec& other) const noexcept {
    return labeling == other.labeling && (!allow_self_loops || other.allow_self_loops) &&
           (!allow_degenerate || other.allow_degenerate) && (!allow_multi || other.allow_multi);
}

std::vector<SpaceSpec> all_feature_subsets(Labeling labeling) {
    std::vector<SpaceSpec> out;
    for (auto f : {"", "s", "d", "m", "sd", "sm", "dm", "sdm"})
        out.push_back(SpaceSpec::from_features(f, labeling));
    return out;
}

std::string_view to_string(Labeling l) noexcept { return l == Labeling::stub ? "stub" : "vertex"; }

Labeling parse_labeling(std::string_view s) {
    if (s == "stub") return Labeling::stub;
    if (s == "vertex" || s == "vert") return Labeling::vertex;
    throw std::invalid_argument("labeling must be 'stub' or 'vertex'");
}

bool is_self_loop(const Hyperarc& a, SelfLoopRule rule) noexcept {
    if (rule == SelfLoopRule::overlap) return a.tail.shares_vertex_with(a.head);
    return a.tail == a.head;
}

bool is_degenerate(const Hyperarc& a) noexcept {
    return a.tail.has_repeated_vertex() || a.head.has_repeated_vertex();
}

bool FeatureReport::any_self_loop() const noexcept {
    return std::find(self_loop.begin(), self_loop.end(), true) != self_loop.end();
}

bool FeatureReport::any_degenerate() const noexcept {
    return std::find(degenerate.begin(), degenerate.end(), true) != degenerate.end();
}

FeatureReport classify_features(const DirectedHypergraph& h, SelfLoopRule rule) {
    FeatureReport r;
    const auto& arcs = h.arcs();
    r.self_loop.reserve(arcs.size());
    r.degenerate.reserve(arcs.size());
    for (const auto& a : arcs) {
        r.self_loop.push_back(is_self_loop(a, rule));
        r.degenerate.push_back(is_degenerate(a));
    }
    std::vector<std::size_t> order(arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return arcs[x] < arcs[y]; });
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && arcs[order[j]] == arcs[order[i]]) ++j;
        if (j - i >= 2) {
            std::vector<std::size_t> group(order.begin() + i, order.begin() + j);
            std::sort(group.begin(), group.end());
            r.multi_groups.push_back(std::move(group));
        }
        i = j;
    }
    std::sort(r.multi_groups.begin(), r.multi_groups.end());
    return r;
}

bool has_forbidden_feature(const DirectedHypergraph& h, const SpaceSpec& spec) {
    const auto& arcs = h.arcs();
    for (const auto& a : arcs) {
        if (!spec.allow_self_loops && is_self_loop(a, spec.self_loop_rule)) return true;
        if (!spec.allow_degenerate && is_degenerate(a)) return true;
    }
    if (!spec.allow_multi) {
        std::vector<const Hyperarc*> sorted;
        sorted.reserve(arcs.size());
        for (const auto& a : arcs) sorted.push_back(&a);
        std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) { return *x < *y; });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (*sorted[i] == *sorted[i - 1]) return true;
    }
    return false;
}

bool in_space(const DirectedHypergraph& h, const SpaceSpec& spec, const DegreeSequence& d) {
    return degree_sequence(h).matches(d) && !has_forbidden_feature(h, spec);
}

}  // namespace hypershuffle
