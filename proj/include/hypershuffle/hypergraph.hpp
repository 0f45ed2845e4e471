#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hypershuffle {

// Dense vertex index 0..n-1. External names live in DirectedHypergraph::labels.
using VertexId = std::uint32_t;

class HypergraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiset of vertices stored as (vertex, multiplicity) entries sorted by
/// vertex. Multiplicities are always >= 1.
class Multiset {
public:
    struct Entry {
        VertexId vertex;
        std::uint32_t count;
        friend constexpr auto operator<=>(const Entry&, const Entry&) = default;
    };
    using Storage = boost::container::small_vector<Entry, 4>;

    Multiset() = default;
    Multiset(std::initializer_list<VertexId> vertices);
    explicit Multiset(std::span<const VertexId> vertices);

    static Multiset from_entries(std::span<const Entry> entries);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    std::size_t distinct() const noexcept { return entries_.size(); }
    std::uint32_t count(VertexId v) const noexcept;
    const Storage& entries() const noexcept { return entries_; }

    /// Vertices with repetition in ascending order.
    std::vector<VertexId> expand() const;
    void append_expanded(std::vector<VertexId>& out) const;

    void insert(VertexId v, std::uint32_t times = 1);
    Multiset merged(const Multiset& other) const;

    bool has_repeated_vertex() const noexcept;
    bool shares_vertex_with(const Multiset& other) const noexcept;
    VertexId max_vertex() const noexcept { return entries_.empty() ? 0 : entries_.back().vertex; }

    friend bool operator==(const Multiset& a, const Multiset& b) noexcept {
        return a.entries_ == b.entries_;
    }
    // Lexicographic on the ascending expansion; arcs sort by this order.
    friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) noexcept;

private:
    Storage entries_;
    std::size_t size_ = 0;
};

struct Hyperarc {
    Multiset tail;
    Multiset head;

    friend bool operator==(const Hyperarc&, const Hyperarc&) = default;
    friend std::strong_ordering operator<=>(const Hyperarc& a, const Hyperarc& b) noexcept {
        if (auto c = a.tail <=> b.tail; c != 0) return c;
        return a.head <=> b.head;
    }
};

struct VertexDegree {
    std::uint32_t in = 0;
    std::uint32_t out = 0;
    friend constexpr auto operator<=>(const VertexDegree&, const VertexDegree&) = default;
};

struct ArcDegree {
    std::uint32_t tail = 0;
    std::uint32_t head = 0;
    friend constexpr auto operator<=>(const ArcDegree&, const ArcDegree&) = default;
};

/// Vertex degrees are positional (vertex labels are fixed); arc degrees are
/// compared as a multiset of pairs since arcs carry no identity.
struct DegreeSequence {
    std::vector<VertexDegree> vertices;
    std::vector<ArcDegree> arcs;

    std::size_t total_out() const noexcept;
    std::size_t total_in() const noexcept;
    std::size_t total_stubs() const noexcept { return total_out() + total_in(); }
    bool conserves_stubs() const noexcept;

    /// Positional vertex comparison, multiset comparison for arcs.
    bool matches(const DegreeSequence& other) const;
    DegreeSequence with_sorted_arcs() const;
};

class DirectedHypergraph {
public:
    DirectedHypergraph() = default;
    explicit DirectedHypergraph(std::size_t n_vertices, std::vector<Hyperarc> arcs = {});

    std::size_t vertex_count() const noexcept { return n_vertices_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Hyperarc>& arcs() const noexcept { return arcs_; }
    const Hyperarc& arc(std::size_t i) const { return arcs_.at(i); }

    /// Replaces two arcs in place; used by the shuffle kernel.
    void replace_pair(std::size_t i, std::size_t j, Hyperarc new_i, Hyperarc new_j);

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(VertexId v) const;

    /// Number of arcs equal to `a` (including `a` itself when present).
    std::size_t multiplicity(const Hyperarc& a) const noexcept;

    /// Same arcs in canonical (sorted) order.
    DirectedHypergraph sorted() const;

    friend bool operator==(const DirectedHypergraph& a, const DirectedHypergraph& b) {
        return a.n_vertices_ == b.n_vertices_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t n_vertices_ = 0;
    std::vector<Hyperarc> arcs_;
    std::vector<std::string> labels_;
};

DegreeSequence degree_sequence(const DirectedHypergraph& h);

/// Builds the all-default-names hypergraph "v0".."v{n-1}" label table.
std::vector<std::string> default_labels(std::size_t n);

}  // namespace hypershuffle
