#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypershuffle/hypergraph.hpp"

namespace hypershuffle {

enum class Labeling { stub, vertex };

/// How a self-loop is recognised. `equal_multisets` is the default: tail and
/// head must be equal as multisets. `overlap` flags any arc whose tail and head
/// share a vertex.
enum class SelfLoopRule { equal_multisets, overlap };

/// One of the 16 spaces: a subset x of {s, d, m} of allowed features plus a
/// labeling mode.
struct SpaceSpec {
    bool allow_self_loops = true;
    bool allow_degenerate = true;
    bool allow_multi = true;
    Labeling labeling = Labeling::stub;
    SelfLoopRule self_loop_rule = SelfLoopRule::equal_multisets;

    /// Parses a feature subset such as "", "sm" or "sdm" (any order, no repeats).
    static SpaceSpec from_features(std::string_view features, Labeling labeling = Labeling::stub);
    /// Canonical "sdm"-ordered subset string, e.g. "sm".
    std::string features() const;
    /// Readable name like "stub{s,m}" or "vert{}".
    std::string name() const;

    /// x subset-of other.x and same labeling.
    bool is_subspace_of(const SpaceSpec& other) const noexcept;

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// All 8 feature subsets in a fixed order: {}, s, d, m, sd, sm, dm, sdm.
std::vector<SpaceSpec> all_feature_subsets(Labeling labeling = Labeling::stub);

std::string_view to_string(Labeling l) noexcept;
Labeling parse_labeling(std::string_view s);

bool is_self_loop(const Hyperarc& a, SelfLoopRule rule = SelfLoopRule::equal_multisets) noexcept;
bool is_degenerate(const Hyperarc& a) noexcept;

struct FeatureReport {
    std::vector<bool> self_loop;
    std::vector<bool> degenerate;
    /// Groups of >= 2 arc indices with identical (tail, head), ascending.
    std::vector<std::vector<std::size_t>> multi_groups;

    bool any_self_loop() const noexcept;
    bool any_degenerate() const noexcept;
    bool any_multi() const noexcept { return !multi_groups.empty(); }
};

FeatureReport classify_features(const DirectedHypergraph& h,
                                SelfLoopRule rule = SelfLoopRule::equal_multisets);

/// True iff `h` carries a feature that `spec` forbids.
bool has_forbidden_feature(const DirectedHypergraph& h, const SpaceSpec& spec);

bool in_space(const DirectedHypergraph& h, const SpaceSpec& spec, const DegreeSequence& d);

}  // namespace hypershuffle
