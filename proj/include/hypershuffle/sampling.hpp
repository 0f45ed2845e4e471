#pragma once

#include <cstdint>
#include <vector>

#include "hypershuffle/canonical.hpp"
#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/shuffle.hpp"

namespace hypershuffle {

struct ReplicaConfig {
    std::uint64_t replicas = 1;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    SpaceSpec spec;
    AcceptanceRule acceptance = AcceptanceRule::balanced;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Runs independent chains from h0; replica r uses seed mix_seed(seed, r), so
/// the result does not depend on the thread count. Returns final states in
/// replica order. Throws ConfigError when h0 is outside the space.
std::vector<DirectedHypergraph> sample_replicas(const DirectedHypergraph& h0, const ReplicaConfig& config);

/// Same, keeping only canonical forms.
std::vector<CanonicalForm> sample_replica_keys(const DirectedHypergraph& h0, const ReplicaConfig& config);

}  // namespace hypershuffle
