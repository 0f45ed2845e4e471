#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypershuffle/hypergraph.hpp"

namespace hypershuffle {

// Small built-in instances, each given as a starting hypergraph in .dhg form.
// The degree sequence of an instance is the one of its starting hypergraph.
struct NamedInstance {
    std::string name;
    std::string summary;
    std::string dhg;
};

const std::vector<NamedInstance>& instance_catalog();

/// Throws std::invalid_argument for unknown names.
DirectedHypergraph load_instance(std::string_view name);

}  // namespace hypershuffle
