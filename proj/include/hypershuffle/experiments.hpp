#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypershuffle/chain_graph.hpp"
#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/space.hpp"
#include "hypershuffle/stats.hpp"

namespace hypershuffle {

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct ExperimentReport {
    std::string target;
    std::vector<CheckLine> checks;

    bool pass() const noexcept;
    void add(std::string label, bool pass, std::string detail = {});
    nlohmann::ordered_json to_json() const;
    /// One "PASS|FAIL  label  detail" line per check.
    std::string to_text() const;
};

struct ExperimentOptions {
    std::uint64_t seed = 1;
    /// Replicas for the sampled part of thm1; 0 skips it.
    std::uint64_t samples = 20000;
    std::uint64_t steps = 1000;
    std::size_t state_limit = default_state_limit;
};

inline constexpr double stationary_tolerance = 1e-10;

/// Space sizes of every feature subset on the fixed-degrees instance,
/// with the stub space checked against the realization counts.
ExperimentReport reproduce_fixed_degrees(const ExperimentOptions& options = {});
/// Stub chains for {s,d,m} and {s,m}: symmetric, aperiodic, strongly
/// connected, uniform stationary distribution; optionally a sampled check.
ExperimentReport reproduce_theorem1(const ExperimentOptions& options = {});
/// Strong connectivity of stub {s} on instances with arcs (1,2) and two tail vertices.
ExperimentReport reproduce_theorem2(const ExperimentOptions& options = {});
/// The counterexample suite.
ExperimentReport reproduce_theorem3(const ExperimentOptions& options = {});
/// Vertex-labeled chains with acceptance: uniform stationary, pushforward of
/// the stub chain, and the lumped stub matrix agreeing with the direct one.
ExperimentReport reproduce_theorem4(const ExperimentOptions& options = {});

/// Dispatch on "fig-fixed-degrees", "thm1", ..., "thm4".
/// Throws std::invalid_argument for unknown targets.
ExperimentReport reproduce(std::string_view target, const ExperimentOptions& options = {});
const std::vector<std::string>& reproduce_targets();

/// Instances used by the batteries (catalog names).
const std::vector<std::string>& theorem1_instances();
const std::vector<std::string>& theorem2_instances();
const std::vector<std::string>& theorem4_instances();

struct SampleReport {
    std::string instance;
    SpaceSpec spec;
    std::uint64_t steps = 0;
    std::uint64_t replicas = 0;
    std::uint64_t seed = 0;
    std::vector<CanonicalForm> space;
    UniformityResult result;

    std::string verdict() const { return result.pass() ? "pass" : "fail"; }
    nlohmann::ordered_json to_json() const;
};

/// Samples `replicas` chains of `steps` steps from h0 and tests the final
/// states against the stationary weights of the space.
SampleReport sample_and_test(const DirectedHypergraph& h0, std::string instance, const SpaceSpec& spec,
                             std::uint64_t steps, std::uint64_t replicas, std::uint64_t seed,
                             AcceptanceRule acceptance = AcceptanceRule::balanced);

}  // namespace hypershuffle
