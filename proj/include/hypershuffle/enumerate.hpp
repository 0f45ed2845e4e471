#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hypershuffle/canonical.hpp"
#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/rational.hpp"
#include "hypershuffle/space.hpp"

namespace hypershuffle {

class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_vertex_stub_limit = 16;
inline constexpr std::size_t default_stub_stub_limit = 12;

/// Labels of the individual stubs of a degree sequence. Out-stubs of vertex v
/// get ids out_offset[v] .. out_offset[v] + d_out(v) - 1, in-stubs are numbered
/// after all out-stubs. A stub-labeled state is a DirectedHypergraph whose
/// "vertices" are these stub ids; every id appears exactly once.
class StubLayout {
public:
    explicit StubLayout(const DegreeSequence& d);

    std::size_t out_stub_count() const noexcept { return out_owner_.size(); }
    std::size_t in_stub_count() const noexcept { return in_owner_.size(); }
    std::size_t stub_count() const noexcept { return out_owner_.size() + in_owner_.size(); }
    std::size_t vertex_count() const noexcept { return vertex_count_; }

    VertexId out_stub(VertexId v, std::size_t k) const { return out_offset_.at(v) + static_cast<VertexId>(k); }
    VertexId in_stub(VertexId v, std::size_t k) const {
        return static_cast<VertexId>(out_owner_.size()) + in_offset_.at(v) + static_cast<VertexId>(k);
    }
    /// Vertex owning a stub id (either kind).
    VertexId owner(VertexId stub) const;

    /// Forgets stub labels: the map g from stub-labeled to vertex-labeled.
    DirectedHypergraph project(const DirectedHypergraph& stub_state) const;

    /// One stub-labeled realization of `h`: stubs handed out in arc order.
    DirectedHypergraph lift(const DirectedHypergraph& h) const;

private:
    std::size_t vertex_count_;
    std::vector<VertexId> out_offset_, in_offset_;
    std::vector<VertexId> out_owner_, in_owner_;
};

/// All vertex-labeled hypergraphs with degree sequence `d` that carry no
/// feature forbidden by `spec`, as canonical (arc-sorted) hypergraphs ordered
/// by canonical form. Throws SizeLimitError when d has more than
/// `stub_limit` stubs in total.
std::vector<DirectedHypergraph> enumerate_vertex_space(const DegreeSequence& d, const SpaceSpec& spec,
                                                       std::size_t stub_limit = default_vertex_stub_limit);

/// All stub-labeled states for `d` admissible under `spec` (features judged on
/// vertex labels), found by brute force over every assignment of labeled
/// stubs to arc slots; ordered by canonical form.
std::vector<DirectedHypergraph> enumerate_stub_space(const DegreeSequence& d, const SpaceSpec& spec,
                                                     std::size_t stub_limit = default_stub_stub_limit);

/// Number of stub-labeled states projecting onto `h`:
/// prod_v d_in(v)! d_out(v)! / (prod_a prod_v m_at(v)! m_ah(v)! * prod_classes mult!).
BigInt count_stub_realizations(const DirectedHypergraph& h);

}  // namespace hypershuffle
