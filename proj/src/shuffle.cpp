#include "hypershuffle/shuffle.hpp"

#include <algorithm>
#include <numeric>

#include "hypershuffle/detail/combinations.hpp"

namespace hypershuffle {

namespace {

using TokenBuffer = boost::container::small_vector<VertexId, 16>;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("acceptance denominator overflow");
    return r;
}

void pool(const Multiset& a, const Multiset& b, TokenBuffer& out) {
    out.clear();
    for (const auto* m : {&a, &b})
        for (const auto& e : m->entries())
            for (std::uint32_t k = 0; k < e.count; ++k) out.push_back(e.vertex);
}

// Splits `tokens` into the multiset indexed by `chosen` and the rest.
template <class Indices>
std::pair<Multiset, Multiset> split(const TokenBuffer& tokens, const Indices& chosen) {
    Multiset first, second;
    boost::container::small_vector<bool, 16> taken(tokens.size(), false);
    for (auto c : chosen) taken[c] = true;
    for (std::size_t p = 0; p < tokens.size(); ++p) (taken[p] ? first : second).insert(tokens[p]);
    return {std::move(first), std::move(second)};
}

// prod_v C(x(v) + y(v), x(v)) over the union of supports.
std::uint64_t binomial_product(const Multiset& x, const Multiset& y) {
    std::uint64_t prod = 1;
    const auto& ex = x.entries();
    const auto& ey = y.entries();
    std::size_t i = 0, j = 0;
    while (i < ex.size() || j < ey.size()) {
        std::uint32_t cx = 0, cy = 0;
        if (j == ey.size() || (i < ex.size() && ex[i].vertex < ey[j].vertex)) {
            cx = ex[i++].count;
        } else if (i == ex.size() || ey[j].vertex < ex[i].vertex) {
            cy = ey[j++].count;
        } else {
            cx = ex[i++].count;
            cy = ey[j++].count;
        }
        if (cx && cy) prod = checked_mul(prod, binomial_u64(cx + cy, cx));
    }
    return prod;
}

Acceptance reduced(std::uint64_t num, std::uint64_t den) {
    auto g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace

Rational ShuffleProposal::probability() const {
    return Rational(1) / (BigInt(pair_choices) * tail_splits * head_splits);
}

std::string_view to_string(AcceptanceRule rule) noexcept {
    switch (rule) {
        case AcceptanceRule::balanced: return "balanced";
        case AcceptanceRule::literal: return "literal";
        case AcceptanceRule::always_accept: return "always";
    }
    return "?";
}

AcceptanceRule parse_acceptance_rule(std::string_view s) {
    if (s == "balanced") return AcceptanceRule::balanced;
    if (s == "literal") return AcceptanceRule::literal;
    if (s == "always") return AcceptanceRule::always_accept;
    throw std::invalid_argument("acceptance rule must be one of: balanced, literal, always");
}

ShuffleProposal propose(const DirectedHypergraph& h, Rng& rng) {
    const auto n = h.arc_count();
    if (n < 2) throw ShuffleError("a shuffle needs at least two hyperarcs");

    ShuffleProposal p;
    auto first = rng.below(n);
    auto second = rng.below(n - 1);
    if (second >= first) ++second;
    p.arc_i = std::min(first, second);
    p.arc_j = std::max(first, second);
    p.pair_choices = n * (n - 1) / 2;

    const auto& a = h.arcs()[p.arc_i];
    const auto& b = h.arcs()[p.arc_j];
    TokenBuffer tokens;
    boost::container::small_vector<std::uint32_t, 16> positions;

    auto draw = [&](const Multiset& x, const Multiset& y, Multiset& out_i, Multiset& out_j,
                    std::uint64_t& splits) {
        pool(x, y, tokens);
        positions.resize(tokens.size());
        std::iota(positions.begin(), positions.end(), 0u);
        rng.choose_front(std::span<std::uint32_t>(positions.data(), positions.size()), x.size());
        auto [si, sj] = split(tokens, std::span<const std::uint32_t>(positions.data(), x.size()));
        out_i = std::move(si);
        out_j = std::move(sj);
        splits = binomial_u64(tokens.size(), x.size());
    };
    draw(a.tail, b.tail, p.new_tail_i, p.new_tail_j, p.tail_splits);
    draw(a.head, b.head, p.new_head_i, p.new_head_j, p.head_splits);
    return p;
}

void for_each_proposal(const DirectedHypergraph& h,
                       const std::function<void(const ShuffleProposal&)>& fn) {
    const auto n = h.arc_count();
    if (n < 2) throw ShuffleError("a shuffle needs at least two hyperarcs");
    TokenBuffer tails, heads;
    ShuffleProposal p;
    p.pair_choices = n * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = h.arcs()[i];
            const auto& b = h.arcs()[j];
            p.arc_i = i;
            p.arc_j = j;
            pool(a.tail, b.tail, tails);
            pool(a.head, b.head, heads);
            p.tail_splits = binomial_u64(tails.size(), a.tail.size());
            p.head_splits = binomial_u64(heads.size(), a.head.size());
            detail::for_each_combination(tails.size(), a.tail.size(), [&](auto tail_pick) {
                auto [ti, tj] = split(tails, tail_pick);
                p.new_tail_i = std::move(ti);
                p.new_tail_j = std::move(tj);
                detail::for_each_combination(heads.size(), a.head.size(), [&](auto head_pick) {
                    auto [hi, hj] = split(heads, head_pick);
                    p.new_head_i = std::move(hi);
                    p.new_head_j = std::move(hj);
                    fn(p);
                    return true;
                });
                return true;
            });
        }
    }
}

std::pair<DirectedHypergraph, bool> apply(const DirectedHypergraph& h, const ShuffleProposal& p,
                                          const SpaceSpec& spec) {
    DirectedHypergraph next = h;
    next.replace_pair(p.arc_i, p.arc_j, p.result_i(), p.result_j());
    if (has_forbidden_feature(next, spec)) return {h, false};
    return {std::move(next), true};
}

Rational acceptance_probability(const DirectedHypergraph& h, const ShuffleProposal& p) {
    return acceptance(h, p, AcceptanceRule::literal).value();
}

Rational balanced_acceptance_probability(const DirectedHypergraph& h, const ShuffleProposal& p) {
    return acceptance(h, p, AcceptanceRule::balanced).value();
}

Acceptance acceptance(const DirectedHypergraph& h, const ShuffleProposal& p, AcceptanceRule rule) {
    if (rule == AcceptanceRule::always_accept) return {1, 1};
    const auto& a = h.arcs().at(p.arc_i);
    const auto& b = h.arcs().at(p.arc_j);
    const std::uint64_t binomials = checked_mul(binomial_product(p.new_head_i, p.new_head_j),
                                                binomial_product(p.new_tail_i, p.new_tail_j));
    const std::uint64_t m_a = h.multiplicity(a);
    const std::uint64_t m_b = h.multiplicity(b);
    if (rule == AcceptanceRule::literal) return reduced(1, checked_mul(checked_mul(m_a, m_b), binomials));

    const std::uint64_t pairs = (a == b) ? m_a * (m_a - 1) / 2 : checked_mul(m_a, m_b);
    const bool same_result = p.new_tail_i == p.new_tail_j && p.new_head_i == p.new_head_j;
    return reduced(same_result ? 2 : 1, checked_mul(pairs, binomials));
}

bool introduces_forbidden_feature(const DirectedHypergraph& h, std::size_t i, std::size_t j,
                                  const Hyperarc& new_i, const Hyperarc& new_j,
                                  const SpaceSpec& spec) {
    if (!spec.allow_self_loops &&
        (is_self_loop(new_i, spec.self_loop_rule) || is_self_loop(new_j, spec.self_loop_rule)))
        return true;
    if (!spec.allow_degenerate && (is_degenerate(new_i) || is_degenerate(new_j))) return true;
    if (!spec.allow_multi) {
        if (new_i == new_j) return true;
        const auto& arcs = h.arcs();
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            if (k == i || k == j) continue;
            if (arcs[k] == new_i || arcs[k] == new_j) return true;
        }
    }
    return false;
}

bool step_in_place(DirectedHypergraph& h, const SpaceSpec& spec, Rng& rng, AcceptanceRule rule) {
    if (h.arc_count() < 2) return false;
    auto p = propose(h, rng);
    if (spec.labeling == Labeling::vertex) {
        auto alpha = acceptance(h, p, rule);
        if (!alpha.certain() && !rng.bernoulli(alpha.numerator, alpha.denominator)) return false;
    }
    Hyperarc new_i = p.result_i();
    Hyperarc new_j = p.result_j();
    if (introduces_forbidden_feature(h, p.arc_i, p.arc_j, new_i, new_j, spec)) return false;
    const auto& old_i = h.arcs()[p.arc_i];
    const auto& old_j = h.arcs()[p.arc_j];
    const bool changed = !((new_i == old_i && new_j == old_j) || (new_i == old_j && new_j == old_i));
    h.replace_pair(p.arc_i, p.arc_j, std::move(new_i), std::move(new_j));
    return changed;
}

DirectedHypergraph step(const DirectedHypergraph& h, const SpaceSpec& spec, Rng& rng,
                        AcceptanceRule rule) {
    DirectedHypergraph next = h;
    step_in_place(next, spec, rng, rule);
    return next;
}

ChainResult run_chain(const DirectedHypergraph& h0, const ChainConfig& config) {
    if (has_forbidden_feature(h0, config.spec))
        throw ConfigError("initial hypergraph is not in space " + config.spec.name());
    ChainResult result{h0, 0, {}};
    if (config.record_trace) {
        result.trace.reserve(config.steps + 1);
        result.trace.push_back(canonical_form(h0));
    }
    Rng rng(config.seed);
    for (std::uint64_t t = 0; t < config.steps; ++t) {
        if (step_in_place(result.state, config.spec, rng, config.acceptance)) ++result.changed_steps;
        if (config.record_trace) result.trace.push_back(canonical_form(result.state));
    }
    return result;
}

}  // namespace hypershuffle
