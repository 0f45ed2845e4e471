#include "hypershuffle/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hypershuffle/detail/combinations.hpp"

namespace hypershuffle {

StubLayout::StubLayout(const DegreeSequence& d) : vertex_count_(d.vertices.size()) {
    out_offset_.reserve(d.vertices.size());
    in_offset_.reserve(d.vertices.size());
    for (VertexId v = 0; v < d.vertices.size(); ++v) {
        out_offset_.push_back(static_cast<VertexId>(out_owner_.size()));
        in_offset_.push_back(static_cast<VertexId>(in_owner_.size()));
        out_owner_.insert(out_owner_.end(), d.vertices[v].out, v);
        in_owner_.insert(in_owner_.end(), d.vertices[v].in, v);
    }
}

VertexId StubLayout::owner(VertexId stub) const {
    if (stub < out_owner_.size()) return out_owner_[stub];
    return in_owner_.at(stub - out_owner_.size());
}

DirectedHypergraph StubLayout::project(const DirectedHypergraph& stub_state) const {
    std::vector<Hyperarc> arcs;
    arcs.reserve(stub_state.arc_count());
    for (const auto& a : stub_state.arcs()) {
        Hyperarc p;
        for (const auto& e : a.tail.entries()) p.tail.insert(owner(e.vertex), e.count);
        for (const auto& e : a.head.entries()) p.head.insert(owner(e.vertex), e.count);
        arcs.push_back(std::move(p));
    }
    return DirectedHypergraph(vertex_count_, std::move(arcs));
}

DirectedHypergraph StubLayout::lift(const DirectedHypergraph& h) const {
    if (h.vertex_count() != vertex_count_) throw HypergraphError("lift: vertex count mismatch");
    std::vector<std::size_t> next_out(vertex_count_, 0), next_in(vertex_count_, 0);
    std::vector<Hyperarc> arcs;
    arcs.reserve(h.arc_count());
    for (const auto& a : h.arcs()) {
        Hyperarc s;
        for (const auto& e : a.tail.entries())
            for (std::uint32_t k = 0; k < e.count; ++k) s.tail.insert(out_stub(e.vertex, next_out[e.vertex]++));
        for (const auto& e : a.head.entries())
            for (std::uint32_t k = 0; k < e.count; ++k) s.head.insert(in_stub(e.vertex, next_in[e.vertex]++));
        arcs.push_back(std::move(s));
    }
    for (VertexId v = 0; v < vertex_count_; ++v) {
        auto out_deg = (v + 1 < vertex_count_ ? out_offset_[v + 1] : out_owner_.size()) - out_offset_[v];
        auto in_deg = (v + 1 < vertex_count_ ? in_offset_[v + 1] : in_owner_.size()) - in_offset_[v];
        if (next_out[v] != out_deg || next_in[v] != in_deg)
            throw HypergraphError("lift: hypergraph does not match the layout's degree sequence");
    }
    return DirectedHypergraph(stub_count(), std::move(arcs));
}

namespace {

void check_limit(const DegreeSequence& d, std::size_t limit) {
    if (d.total_stubs() > limit)
        throw SizeLimitError("degree sequence has " + std::to_string(d.total_stubs()) +
                             " stubs, above the enumeration limit of " + std::to_string(limit));
}

// Visits every multiset of exactly `size` vertices drawn within `caps`,
// starting at vertex `from`. Multiplicity is capped at 1 when repeats are off.
template <class Fn>
void for_each_multiset(std::vector<std::uint32_t>& caps, std::size_t size, bool allow_repeat,
                       VertexId from, Multiset& current, Fn& fn) {
    if (size == 0) {
        fn(current);
        return;
    }
    for (VertexId v = from; v < caps.size(); ++v) {
        if (caps[v] == 0) continue;
        std::uint32_t most = std::min<std::uint32_t>(caps[v], static_cast<std::uint32_t>(size));
        if (!allow_repeat) most = 1;
        for (std::uint32_t c = 1; c <= most; ++c) {
            caps[v] -= c;
            Multiset next = current;
            next.insert(v, c);
            for_each_multiset(caps, size - c, allow_repeat, v + 1, next, fn);
            caps[v] += c;
        }
    }
}

class VertexSpaceWalker {
public:
    VertexSpaceWalker(const DegreeSequence& d, const SpaceSpec& spec)
        : spec_(spec), slots_(d.with_sorted_arcs().arcs), n_(d.vertices.size()) {
        for (const auto& v : d.vertices) {
            out_cap_.push_back(v.out);
            in_cap_.push_back(v.in);
        }
        current_.reserve(slots_.size());
    }

    std::vector<DirectedHypergraph> run() {
        fill(0);
        std::vector<DirectedHypergraph> out;
        out.reserve(found_.size());
        for (auto& [key, h] : found_) out.push_back(std::move(h));
        return out;
    }

private:
    void fill(std::size_t k) {
        if (k == slots_.size()) {
            DirectedHypergraph h(n_, current_);
            if (has_forbidden_feature(h, spec_)) return;
            auto key = canonical_form(h);
            found_.emplace(std::move(key), h.sorted());
            return;
        }
        const bool same_class = k > 0 && slots_[k] == slots_[k - 1];
        auto on_tail = [&](const Multiset& tail) {
            auto on_head = [&](const Multiset& head) {
                Hyperarc arc{tail, head};
                if (!spec_.allow_self_loops && is_self_loop(arc, spec_.self_loop_rule)) return;
                if (same_class) {
                    const auto& prev = current_.back();
                    if (arc < prev || (!spec_.allow_multi && arc == prev)) return;
                }
                current_.push_back(std::move(arc));
                fill(k + 1);
                current_.pop_back();
            };
            Multiset empty;
            for_each_multiset(in_cap_, slots_[k].head, spec_.allow_degenerate, 0, empty, on_head);
        };
        Multiset empty;
        for_each_multiset(out_cap_, slots_[k].tail, spec_.allow_degenerate, 0, empty, on_tail);
    }

    const SpaceSpec& spec_;
    std::vector<ArcDegree> slots_;
    std::size_t n_;
    std::vector<std::uint32_t> out_cap_, in_cap_;
    std::vector<Hyperarc> current_;
    std::map<CanonicalForm, DirectedHypergraph> found_;
};

}  // namespace

std::vector<DirectedHypergraph> enumerate_vertex_space(const DegreeSequence& d, const SpaceSpec& spec,
                                                       std::size_t stub_limit) {
    check_limit(d, stub_limit);
    if (!d.conserves_stubs()) return {};
    for (const auto& a : d.arcs)
        if (a.tail == 0 || a.head == 0) return {};
    return VertexSpaceWalker(d, spec).run();
}

std::vector<DirectedHypergraph> enumerate_stub_space(const DegreeSequence& d, const SpaceSpec& spec,
                                                     std::size_t stub_limit) {
    check_limit(d, stub_limit);
    if (!d.conserves_stubs()) return {};
    for (const auto& a : d.arcs)
        if (a.tail == 0 || a.head == 0) return {};

    const StubLayout layout(d);
    const auto slots = d.arcs;
    std::vector<Multiset> tails(slots.size()), heads(slots.size());
    std::map<CanonicalForm, DirectedHypergraph> found;

    auto emit = [&] {
        std::vector<Hyperarc> arcs;
        arcs.reserve(slots.size());
        for (std::size_t k = 0; k < slots.size(); ++k) arcs.push_back({tails[k], heads[k]});
        DirectedHypergraph state(layout.stub_count(), std::move(arcs));
        if (has_forbidden_feature(layout.project(state), spec)) return;
        auto key = canonical_form(state);
        if (!found.count(key)) found.emplace(std::move(key), state.sorted());
    };

    // Hands the remaining stubs of one side to slot k, k+1, ... in turn.
    std::function<void(std::size_t, std::vector<VertexId>&, bool)> assign;
    assign = [&](std::size_t k, std::vector<VertexId>& remaining, bool tail_side) {
        if (k == slots.size()) {
            if (tail_side) {
                std::vector<VertexId> in_stubs;
                for (std::size_t s = 0; s < layout.in_stub_count(); ++s)
                    in_stubs.push_back(static_cast<VertexId>(layout.out_stub_count() + s));
                assign(0, in_stubs, false);
            } else {
                emit();
            }
            return;
        }
        const std::size_t take = tail_side ? slots[k].tail : slots[k].head;
        detail::for_each_combination(remaining.size(), take, [&](auto pick) {
            Multiset chosen;
            std::vector<VertexId> rest;
            rest.reserve(remaining.size() - take);
            std::size_t p = 0;
            for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
                if (p < pick.size() && pick[p] == idx) {
                    chosen.insert(remaining[idx]);
                    ++p;
                } else {
                    rest.push_back(remaining[idx]);
                }
            }
            (tail_side ? tails : heads)[k] = std::move(chosen);
            assign(k + 1, rest, tail_side);
            return true;
        });
    };

    std::vector<VertexId> out_stubs;
    for (std::size_t s = 0; s < layout.out_stub_count(); ++s) out_stubs.push_back(static_cast<VertexId>(s));
    assign(0, out_stubs, true);

    std::vector<DirectedHypergraph> out;
    out.reserve(found.size());
    for (auto& [key, h] : found) out.push_back(std::move(h));
    return out;
}

BigInt count_stub_realizations(const DirectedHypergraph& h) {
    const auto d = degree_sequence(h);
    BigInt numerator = 1;
    for (const auto& v : d.vertices) numerator *= factorial(v.in) * factorial(v.out);
    BigInt denominator = 1;
    for (const auto& a : h.arcs()) {
        for (const auto& e : a.tail.entries()) denominator *= factorial(e.count);
        for (const auto& e : a.head.entries()) denominator *= factorial(e.count);
    }
    auto sorted = h.sorted();
    const auto& arcs = sorted.arcs();
    for (std::size_t i = 0; i < arcs.size();) {
        std::size_t j = i + 1;
        while (j < arcs.size() && arcs[j] == arcs[i]) ++j;
        denominator *= factorial(j - i);
        i = j;
    }
    return numerator / denominator;
}

}  // namespace hypershuffle
