#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypershuffle/canonical.hpp"
#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/rational.hpp"
#include "hypershuffle/rng.hpp"
#include "hypershuffle/space.hpp"

namespace hypershuffle {

class ShuffleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One double hyperarc shuffle: the arc pair (arc_i < arc_j) and the
/// repartition of their pooled tail and head stubs. Slot arc_i keeps the
/// tail/head sizes of the original arc_i.
struct ShuffleProposal {
    std::size_t arc_i = 0;
    std::size_t arc_j = 0;
    Multiset new_tail_i;
    Multiset new_tail_j;
    Multiset new_head_i;
    Multiset new_head_j;

    // Probability of this exact stub-level split is
    // 1 / (pair_choices * tail_splits * head_splits).
    std::uint64_t pair_choices = 1;
    std::uint64_t tail_splits = 1;
    std::uint64_t head_splits = 1;

    Hyperarc result_i() const { return {new_tail_i, new_head_i}; }
    Hyperarc result_j() const { return {new_tail_j, new_head_j}; }
    Rational probability() const;
};

/// Which acceptance probability the vertex-labeled chain applies.
enum class AcceptanceRule {
    /// Pair count and outcome symmetry folded in so that the vertex-labeled
    /// kernel is symmetric for every instance (see
    /// balanced_acceptance_probability).
    balanced,
    /// The literal formula (m_a m_b)^-1 prod_v (...)^-1.
    literal,
    /// alpha == 1; the stub-labeled kernel projected to vertex labels. Used as a
    /// biased negative control in vertex mode.
    always_accept,
};

std::string_view to_string(AcceptanceRule rule) noexcept;
AcceptanceRule parse_acceptance_rule(std::string_view s);

/// Exact acceptance probability as a reduced 64-bit fraction.
struct Acceptance {
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 1;
    bool certain() const noexcept { return numerator == denominator; }
    Rational value() const { return Rational(numerator) / denominator; }
};

/// Draws a proposal: a uniform unordered pair of distinct arc positions, then
/// a uniform subset of the pooled (distinguishable) tail stubs of size
/// |tail(arc_i)| for slot arc_i, and likewise for heads.
/// Throws ShuffleError when the hypergraph has fewer than two arcs.
ShuffleProposal propose(const DirectedHypergraph& h, Rng& rng);

/// Calls `fn` once for every stub-level proposal (every pair, every tail
/// subset, every head subset). The probabilities of all proposals sum to 1.
void for_each_proposal(const DirectedHypergraph& h,
                       const std::function<void(const ShuffleProposal&)>& fn);

/// Applies `p`. If the result has a feature forbidden by `spec` the step is
/// undone and (h, false) is returned.
std::pair<DirectedHypergraph, bool> apply(const DirectedHypergraph& h, const ShuffleProposal& p,
                                          const SpaceSpec& spec);

/// alpha(H'|H) = (m_a m_b)^-1 prod_v [C(m_ah(v)+m_bh(v), m_ah(v)) C(m_at(v)+m_bt(v), m_at(v))]^-1
/// with m_a, m_b the multiplicities of the selected arcs in h and a^, b^ the
/// resulting arcs.
Rational acceptance_probability(const DirectedHypergraph& h, const ShuffleProposal& p);

/// Acceptance probability that makes the vertex-labeled kernel exactly
/// symmetric: c / (P * B), where B is the binomial product above,
/// P = m_a m_b for distinct arcs and C(m_a, 2) for two copies of the same arc
/// (the number of position pairs holding {a, b}), and c = 2 when a^ == b^
/// (the outcome then fills both slots in only one order), else 1.
/// Coincides with acceptance_probability whenever a != b and a^ != b^.
Rational balanced_acceptance_probability(const DirectedHypergraph& h, const ShuffleProposal& p);

Acceptance acceptance(const DirectedHypergraph& h, const ShuffleProposal& p, AcceptanceRule rule);

/// True when replacing arcs (i, j) by (new_i, new_j) creates a feature `spec`
/// forbids, assuming every other arc pair of h is already admissible.
bool introduces_forbidden_feature(const DirectedHypergraph& h, std::size_t i, std::size_t j,
                                  const Hyperarc& new_i, const Hyperarc& new_j,
                                  const SpaceSpec& spec);

/// One chain step on an in-space hypergraph. Stub labeling: propose then
/// apply. Vertex labeling: propose, accept with the rule's probability, then
/// apply. Rejections leave `h` unchanged. Returns whether `h` changed state.
bool step_in_place(DirectedHypergraph& h, const SpaceSpec& spec, Rng& rng,
                   AcceptanceRule rule = AcceptanceRule::balanced);

DirectedHypergraph step(const DirectedHypergraph& h, const SpaceSpec& spec, Rng& rng,
                        AcceptanceRule rule = AcceptanceRule::balanced);

struct ChainConfig {
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    SpaceSpec spec;
    bool record_trace = false;
    AcceptanceRule acceptance = AcceptanceRule::balanced;
};

struct ChainResult {
    DirectedHypergraph state;
    std::uint64_t changed_steps = 0;
    /// Canonical forms of the initial state and every state after each step.
    std::vector<CanonicalForm> trace;
};

/// Runs `config.steps` steps from h0. Throws ConfigError when h0 is outside
/// the configured space. With fewer than two arcs every step is the identity.
ChainResult run_chain(const DirectedHypergraph& h0, const ChainConfig& config);

}  // namespace hypershuffle
