#include "hypershuffle/hypergraph.hpp"

#include <algorithm>

namespace hypershuffle {

Multiset::Multiset(std::initializer_list<VertexId> vertices)
    : Multiset(std::span<const VertexId>(vertices.begin(), vertices.size())) {}

Multiset::Multiset(std::span<const VertexId> vertices) {
    for (auto v : vertices) insert(v);
}

Multiset Multiset::from_entries(std::span<const Entry> entries) {
    Multiset m;
    for (const auto& e : entries) m.insert(e.vertex, e.count);
    return m;
}

std::uint32_t Multiset::count(VertexId v) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VertexId x) { return e.vertex < x; });
    return (it != entries_.end() && it->vertex == v) ? it->count : 0;
}

std::vector<VertexId> Multiset::expand() const {
    std::vector<VertexId> out;
    out.reserve(size_);
    append_expanded(out);
    return out;
}

void Multiset::append_expanded(std::vector<VertexId>& out) const {
    for (const auto& e : entries_)
        for (std::uint32_t k = 0; k < e.count; ++k) out.push_back(e.vertex);
}

void Multiset::insert(VertexId v, std::uint32_t times) {
    if (times == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VertexId x) { return e.vertex < x; });
    if (it != entries_.end() && it->vertex == v)
        it->count += times;
    else
        entries_.insert(it, Entry{v, times});
    size_ += times;
}

Multiset Multiset::merged(const Multiset& other) const {
    Multiset m = *this;
    for (const auto& e : other.entries_) m.insert(e.vertex, e.count);
    return m;
}

bool Multiset::has_repeated_vertex() const noexcept {
    return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.count >= 2; });
}

bool Multiset::shares_vertex_with(const Multiset& other) const noexcept {
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->vertex == b->vertex) return true;
        if (a->vertex < b->vertex)
            ++a;
        else
            ++b;
    }
    return false;
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) noexcept {
    // Walk both ascending expansions without materialising them.
    std::size_t ia = 0, ib = 0;
    std::uint32_t used_a = 0, used_b = 0;
    while (ia < a.entries_.size() && ib < b.entries_.size()) {
        const auto& ea = a.entries_[ia];
        const auto& eb = b.entries_[ib];
        if (ea.vertex != eb.vertex) return ea.vertex <=> eb.vertex;
        auto left_a = ea.count - used_a;
        auto left_b = eb.count - used_b;
        auto step = std::min(left_a, left_b);
        used_a += step;
        used_b += step;
        if (used_a == ea.count) {
            ++ia;
            used_a = 0;
        }
        if (used_b == eb.count) {
            ++ib;
            used_b = 0;
        }
    }
    bool a_done = ia == a.entries_.size();
    bool b_done = ib == b.entries_.size();
    if (a_done && b_done) return std::strong_ordering::equal;
    return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t DegreeSequence::total_out() const noexcept {
    std::size_t s = 0;
    for (const auto& d : vertices) s += d.out;
    return s;
}

std::size_t DegreeSequence::total_in() const noexcept {
    std::size_t s = 0;
    for (const auto& d : vertices) s += d.in;
    return s;
}

bool DegreeSequence::conserves_stubs() const noexcept {
    std::size_t tails = 0, heads = 0;
    for (const auto& a : arcs) {
        tails += a.tail;
        heads += a.head;
    }
    return tails == total_out() && heads == total_in();
}

bool DegreeSequence::matches(const DegreeSequence& other) const {
    if (vertices != other.vertices || arcs.size() != other.arcs.size()) return false;
    auto a = arcs;
    auto b = other.arcs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

DegreeSequence DegreeSequence::with_sorted_arcs() const {
    DegreeSequence d = *this;
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

DirectedHypergraph::DirectedHypergraph(std::size_t n_vertices, std::vector<Hyperarc> arcs)
    : n_vertices_(n_vertices), arcs_(std::move(arcs)) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto& a = arcs_[i];
        if (a.tail.empty() || a.head.empty())
            throw HypergraphError("arc " + std::to_string(i) + " has an empty tail or head");
        if (a.tail.max_vertex() >= n_vertices_ || a.head.max_vertex() >= n_vertices_)
            throw HypergraphError("arc " + std::to_string(i) + " references a vertex >= " +
                                  std::to_string(n_vertices_));
    }
}

void DirectedHypergraph::replace_pair(std::size_t i, std::size_t j, Hyperarc new_i, Hyperarc new_j) {
    arcs_.at(i) = std::move(new_i);
    arcs_.at(j) = std::move(new_j);
}

void DirectedHypergraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_vertices_)
        throw HypergraphError("label table size does not match vertex count");
    labels_ = std::move(labels);
}

std::string DirectedHypergraph::label(VertexId v) const {
    if (v < labels_.size()) return labels_[v];
    return "v" + std::to_string(v);
}

std::size_t DirectedHypergraph::multiplicity(const Hyperarc& a) const noexcept {
    return static_cast<std::size_t>(std::count(arcs_.begin(), arcs_.end(), a));
}

DirectedHypergraph DirectedHypergraph::sorted() const {
    DirectedHypergraph h = *this;
    std::sort(h.arcs_.begin(), h.arcs_.end());
    return h;
}

DegreeSequence degree_sequence(const DirectedHypergraph& h) {
    DegreeSequence d;
    d.vertices.resize(h.vertex_count());
    d.arcs.reserve(h.arc_count());
    for (const auto& a : h.arcs()) {
        for (const auto& e : a.tail.entries()) d.vertices[e.vertex].out += e.count;
        for (const auto& e : a.head.entries()) d.vertices[e.vertex].in += e.count;
        d.arcs.push_back({static_cast<std::uint32_t>(a.tail.size()),
                          static_cast<std::uint32_t>(a.head.size())});
    }
    return d;
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

}  // namespace hypershuffle
