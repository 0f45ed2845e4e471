#pragma once

#include <string>

#include "hypershuffle/hypergraph.hpp"

namespace hypershuffle {

// Canonical key of a hypergraph under fixed vertex labels: the vertex count,
// then every arc as "tail>head" (ascending ids with repetition), arcs sorted.
// Two hypergraphs share a key iff their arc multisets are equal.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const DirectedHypergraph& h);

std::string arc_key(const Hyperarc& a);

}  // namespace hypershuffle
