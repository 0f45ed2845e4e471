#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/space.hpp"

namespace hypershuffle {

struct DisconnectedInstance {
    DegreeSequence degrees;
    std::size_t states = 0;
    std::size_t components = 0;
};

/// Exhaustive search over degree sequences whose arcs are all (1,1): vertex
/// counts 2..max_vertices, per-vertex in/out degree 0..2, 2..max_arcs arcs,
/// visited in a fixed order. Returns the first one whose chain graph under
/// `spec` has at least two states and is not strongly connected.
std::optional<DisconnectedInstance> find_disconnected_digraph_instance(const SpaceSpec& spec,
                                                                       std::size_t max_vertices = 4,
                                                                       std::size_t max_arcs = 4);

struct CounterexampleEntry {
    std::string space;
    std::string instance;
    bool expect_connected = false;
    std::size_t states = 0;
    std::size_t components = 0;
    bool pass = false;
    std::string detail;
};

struct CounterexampleReport {
    std::vector<CounterexampleEntry> entries;
    bool pass() const noexcept;
};

/// The {s,d} instance d1 (start state isolated), a disconnected (1,1) instance
/// for each of {}, {d}, {m}, {d,m}, and {s,d,m} on d1 as a connected control.
/// All spaces are stub-labeled.
CounterexampleReport counterexample_suite();

std::string describe(const DegreeSequence& d);

}  // namespace hypershuffle
