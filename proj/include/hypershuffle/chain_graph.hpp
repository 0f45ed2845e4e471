#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypershuffle/canonical.hpp"
#include "hypershuffle/enumerate.hpp"
#include "hypershuffle/rational.hpp"
#include "hypershuffle/shuffle.hpp"
#include "hypershuffle/space.hpp"

namespace hypershuffle {

inline constexpr std::size_t default_state_limit = 5000;

/// The "graph of graphs": an enumerated space with its exact transition
/// matrix, stored as sparse rows of exact rationals.
///
/// In stub mode the states are stub-labeled (hypergraphs over stub ids, see
/// StubLayout); in vertex mode they are canonical vertex-labeled hypergraphs.
struct ChainGraph {
    SpaceSpec spec;
    DegreeSequence degrees;
    std::vector<DirectedHypergraph> states;
    std::vector<CanonicalForm> keys;
    /// rows[i][j] = p(state_j | state_i); zero entries are absent.
    std::vector<std::map<std::size_t, Rational>> rows;
    std::optional<StubLayout> layout;

    std::size_t size() const noexcept { return states.size(); }
    Rational entry(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> index_of(const CanonicalForm& key) const;
    /// Vertex-labeled view of state i (projection in stub mode).
    DirectedHypergraph vertex_state(std::size_t i) const;
};

struct ChainBuildOptions {
    std::size_t state_limit = default_state_limit;
    std::size_t stub_limit = 16;
    AcceptanceRule acceptance = AcceptanceRule::balanced;
};

/// Enumerates the space of `spec` for `d` and sums, for every state, the mass
/// of every (arc pair, stub split) proposal into its target. Rejected
/// proposals add to the diagonal. Vertex mode multiplies each proposal by its
/// acceptance probability and routes the remainder to the diagonal.
/// Throws SizeLimitError when the space exceeds the limits.
ChainGraph build_chain_graph(const DegreeSequence& d, const SpaceSpec& spec,
                             const ChainBuildOptions& options = {});

/// Same construction on an explicit state list (vertex-labeled hypergraphs in
/// vertex mode). The states must be closed under the kernel.
ChainGraph build_chain_graph_on(std::vector<DirectedHypergraph> states, const DegreeSequence& d,
                                const SpaceSpec& spec, const ChainBuildOptions& options = {});

enum class LumpMode {
    /// p(H*|H0) = p(S*|S0) for one representative S0 of H0 and any S* of H*
    /// reachable from it; all reachable realizations must agree.
    single_realization,
    /// p(H*|H0) = sum over S* of p(S*|S0): the stub chain seen through labels.
    sum,
};

/// Vertex-labeled chain obtained from a stub-mode chain graph through the
/// projection g. Throws std::logic_error if single_realization finds
/// disagreeing realizations or the stub chain is not lumpable.
ChainGraph lump_stub_chain(const ChainGraph& stub_chain, LumpMode mode);

struct MatrixWitness {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Exact symmetry P[i][j] == P[j][i]; the first asymmetric pair on failure.
MatrixWitness check_regular(const ChainGraph& g);
/// Every row sums to exactly 1; offending (row, row) on failure.
MatrixWitness check_row_stochastic(const ChainGraph& g);
/// Every column sums to exactly 1; offending (column, column) on failure.
MatrixWitness check_column_stochastic(const ChainGraph& g);
/// Every diagonal entry positive.
MatrixWitness check_aperiodic(const ChainGraph& g);

struct Connectivity {
    bool strongly_connected = false;
    /// Strongly connected components, each ascending, ordered by first state.
    std::vector<std::vector<std::size_t>> components;
    std::size_t component_of(std::size_t state) const;
};

Connectivity check_strongly_connected(const ChainGraph& g);

struct StationaryResult {
    bool irreducible = false;
    /// Full stationary vector when irreducible.
    std::vector<double> distribution;
    /// For a reducible chain: stationary vectors of each closed component,
    /// indexed like Connectivity::components (empty for transient ones).
    std::vector<std::vector<double>> per_component;
};

/// Solves pi P = pi, sum pi = 1 with a sparse LU factorisation.
StationaryResult stationary_distribution(const ChainGraph& g);

/// Largest |pi_i - w_i / sum w| over states.
double max_deviation(const std::vector<double>& pi, const std::vector<double>& weights);
double max_deviation_from_uniform(const std::vector<double>& pi);

/// TV(delta_start P^t, uniform over all states) for t = 0..steps.
std::vector<double> tv_curve(const ChainGraph& g, std::size_t start, std::size_t steps);

/// Edge list "i j num/den", one nonzero entry per line, rows ascending.
std::string export_edge_list(const ChainGraph& g);
/// CSV "t,tv" with a header line.
std::string tv_curve_csv(const std::vector<double>& curve);

}  // namespace hypershuffle
