#include "hypershuffle/chain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace hypershuffle {

Rational ChainGraph::entry(std::size_t i, std::size_t j) const {
    const auto& row = rows.at(i);
    auto it = row.find(j);
    return it == row.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> ChainGraph::index_of(const CanonicalForm& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
}

DirectedHypergraph ChainGraph::vertex_state(std::size_t i) const {
    return layout ? layout->project(states.at(i)) : states.at(i);
}

namespace {

void check_state_limit(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw SizeLimitError("state space has " + std::to_string(n) + " states, above the limit of " +
                             std::to_string(limit));
}

// Fills rows for every state. `project` maps a state to vertex labels for the
// feature test; identity in vertex mode.
void fill_rows(ChainGraph& g, AcceptanceRule rule) {
    std::unordered_map<CanonicalForm, std::size_t> index;
    index.reserve(g.size() * 2);
    for (std::size_t i = 0; i < g.size(); ++i) index.emplace(g.keys[i], i);

    const bool vertex_mode = g.spec.labeling == Labeling::vertex;
    g.rows.assign(g.size(), {});
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& state = g.states[i];
        auto& row = g.rows[i];
        if (state.arc_count() < 2) {
            row[i] = 1;
            continue;
        }
        const DirectedHypergraph labeled = g.layout ? g.layout->project(state) : state;
        DirectedHypergraph target = state;
        for_each_proposal(state, [&](const ShuffleProposal& p) {
            Rational mass = p.probability();
            if (vertex_mode) {
                auto alpha = acceptance(state, p, rule);
                if (!alpha.certain()) {
                    Rational kept = mass * alpha.value();
                    row[i] += mass - kept;
                    mass = kept;
                }
            }
            Hyperarc new_i = p.result_i();
            Hyperarc new_j = p.result_j();
            bool rejected;
            if (g.layout) {
                DirectedHypergraph pair_only(state.vertex_count(), {new_i, new_j});
                auto projected = g.layout->project(pair_only);
                rejected = introduces_forbidden_feature(labeled, p.arc_i, p.arc_j, projected.arcs()[0],
                                                        projected.arcs()[1], g.spec);
            } else {
                rejected = introduces_forbidden_feature(labeled, p.arc_i, p.arc_j, new_i, new_j, g.spec);
            }
            if (rejected) {
                row[i] += mass;
                return;
            }
            target.replace_pair(p.arc_i, p.arc_j, std::move(new_i), std::move(new_j));
            auto it = index.find(canonical_form(target));
            if (it == index.end())
                throw std::logic_error("shuffle left the enumerated state space");
            row[it->second] += mass;
            target.replace_pair(p.arc_i, p.arc_j, state.arcs()[p.arc_i], state.arcs()[p.arc_j]);
        });
    }
}

}  // namespace

ChainGraph build_chain_graph_on(std::vector<DirectedHypergraph> states, const DegreeSequence& d,
                                const SpaceSpec& spec, const ChainBuildOptions& options) {
    check_state_limit(states.size(), options.state_limit);
    ChainGraph g;
    g.spec = spec;
    g.degrees = d;
    if (spec.labeling == Labeling::stub) g.layout.emplace(d);
    std::vector<std::pair<CanonicalForm, DirectedHypergraph>> keyed;
    keyed.reserve(states.size());
    for (auto& s : states) keyed.emplace_back(canonical_form(s), std::move(s));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, s] : keyed) {
        g.keys.push_back(k);
        g.states.push_back(std::move(s));
    }
    fill_rows(g, options.acceptance);
    return g;
}

ChainGraph build_chain_graph(const DegreeSequence& d, const SpaceSpec& spec,
                             const ChainBuildOptions& options) {
    auto states = spec.labeling == Labeling::stub ? enumerate_stub_space(d, spec, options.stub_limit)
                                                  : enumerate_vertex_space(d, spec, options.stub_limit);
    return build_chain_graph_on(std::move(states), d, spec, options);
}

ChainGraph lump_stub_chain(const ChainGraph& stub_chain, LumpMode mode) {
    if (!stub_chain.layout) throw std::invalid_argument("lump_stub_chain needs a stub-mode chain graph");
    const auto n = stub_chain.size();

    std::vector<std::size_t> class_of(n);
    std::map<CanonicalForm, std::vector<std::size_t>> classes;
    std::vector<CanonicalForm> projected_keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        projected_keys[i] = canonical_form(stub_chain.vertex_state(i));
        classes[projected_keys[i]].push_back(i);
    }

    ChainGraph g;
    g.spec = stub_chain.spec;
    g.spec.labeling = Labeling::vertex;
    g.degrees = stub_chain.degrees;
    std::map<CanonicalForm, std::size_t> class_index;
    for (auto& [key, members] : classes) {
        class_index.emplace(key, g.states.size());
        g.keys.push_back(key);
        g.states.push_back(stub_chain.vertex_state(members.front()).sorted());
    }
    for (std::size_t i = 0; i < n; ++i) class_of[i] = class_index.at(projected_keys[i]);

    auto lumped_row = [&](std::size_t source) {
        std::map<std::size_t, Rational> row;
        const auto own = class_of[source];
        for (const auto& [j, p] : stub_chain.rows[source]) {
            const auto c = class_of[j];
            if (c == own) continue;
            auto [it, fresh] = row.emplace(c, p);
            if (fresh) continue;
            if (mode == LumpMode::sum)
                it->second += p;
            else if (it->second != p)
                throw std::logic_error("realizations of one class disagree on the transition probability");
        }
        Rational off = 0;
        for (const auto& [c, p] : row) off += p;
        row[own] = Rational(1) - off;
        if (row[own] == 0) row.erase(own);
        return row;
    };

    g.rows.resize(g.size());
    for (std::size_t c = 0; c < g.size(); ++c) {
        const auto& members = classes.at(g.keys[c]);
        g.rows[c] = lumped_row(members.front());
        for (std::size_t k = 1; k < members.size(); ++k)
            if (lumped_row(members[k]) != g.rows[c])
                throw std::logic_error("stub chain is not lumpable through the projection");
    }
    return g;
}

MatrixWitness check_regular(const ChainGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& [j, p] : g.rows[i])
            if (g.entry(j, i) != p) return {false, std::make_pair(i, j)};
    return {};
}

MatrixWitness check_row_stochastic(const ChainGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rational s = 0;
        for (const auto& [j, p] : g.rows[i]) s += p;
        if (s != 1) return {false, std::make_pair(i, i)};
    }
    return {};
}

MatrixWitness check_column_stochastic(const ChainGraph& g) {
    std::vector<Rational> col(g.size(), Rational(0));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& [j, p] : g.rows[i]) col[j] += p;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (col[j] != 1) return {false, std::make_pair(j, j)};
    return {};
}

MatrixWitness check_aperiodic(const ChainGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.entry(i, i) <= 0) return {false, std::make_pair(i, i)};
    return {};
}

std::size_t Connectivity::component_of(std::size_t state) const {
    for (std::size_t c = 0; c < components.size(); ++c)
        if (std::binary_search(components[c].begin(), components[c].end(), state)) return c;
    throw std::out_of_range("state not in any component");
}

Connectivity check_strongly_connected(const ChainGraph& g) {
    // Iterative Tarjan over edges with positive probability.
    const auto n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;
    Connectivity result;

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, p] : g.rows[i])
            if (p > 0 && j != i) adj[i].push_back(j);

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.next < adj[f.v].size()) {
                auto w = adj[f.v][f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const auto v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                result.components.push_back(std::move(comp));
            }
        }
    }
    std::sort(result.components.begin(), result.components.end());
    result.strongly_connected = result.components.size() <= 1;
    return result;
}

namespace {

std::vector<double> solve_stationary(const ChainGraph& g, const std::vector<std::size_t>& members) {
    const auto m = members.size();
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < m; ++k) local.emplace(members[k], k);

    // Rows of (P^T - I) restricted to the component; the last equation is
    // replaced by the normalisation sum(pi) = 1.
    std::vector<Eigen::Triplet<double>> triplets;
    for (std::size_t k = 0; k < m; ++k) {
        const auto i = members[k];
        for (const auto& [j, p] : g.rows[i]) {
            auto it = local.find(j);
            if (it == local.end()) continue;
            const auto row = it->second;
            if (row + 1 == m) continue;
            triplets.emplace_back(static_cast<int>(row), static_cast<int>(k), to_double(p));
        }
        if (k + 1 < m) triplets.emplace_back(static_cast<int>(k), static_cast<int>(k), -1.0);
        triplets.emplace_back(static_cast<int>(m - 1), static_cast<int>(k), 1.0);
    }
    Eigen::SparseMatrix<double> a(static_cast<int>(m), static_cast<int>(m));
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<int>(m));
    b(static_cast<int>(m - 1)) = 1.0;

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) throw std::runtime_error("stationary solve: factorisation failed");
    Eigen::VectorXd x = lu.solve(b);
    if (lu.info() != Eigen::Success) throw std::runtime_error("stationary solve: back substitution failed");
    return std::vector<double>(x.data(), x.data() + m);
}

}  // namespace

StationaryResult stationary_distribution(const ChainGraph& g) {
    StationaryResult result;
    if (g.size() == 0) return result;
    auto conn = check_strongly_connected(g);
    if (conn.strongly_connected) {
        std::vector<std::size_t> all(g.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        result.irreducible = true;
        result.distribution = solve_stationary(g, all);
        return result;
    }
    for (const auto& comp : conn.components) {
        bool closed = true;
        for (auto i : comp)
            for (const auto& [j, p] : g.rows[i])
                if (p > 0 && !std::binary_search(comp.begin(), comp.end(), j)) closed = false;
        result.per_component.push_back(closed ? solve_stationary(g, comp) : std::vector<double>{});
    }
    return result;
}

double max_deviation(const std::vector<double>& pi, const std::vector<double>& weights) {
    if (pi.size() != weights.size()) throw std::invalid_argument("max_deviation: size mismatch");
    double total = 0;
    for (auto w : weights) total += w;
    double worst = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) worst = std::max(worst, std::abs(pi[i] - weights[i] / total));
    return worst;
}

double max_deviation_from_uniform(const std::vector<double>& pi) {
    return max_deviation(pi, std::vector<double>(pi.size(), 1.0));
}

std::vector<double> tv_curve(const ChainGraph& g, std::size_t start, std::size_t steps) {
    const auto n = g.size();
    if (start >= n) throw std::out_of_range("tv_curve: start state out of range");
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, p] : g.rows[i]) rows[i].emplace_back(j, to_double(p));

    std::vector<double> dist(n, 0.0), next(n);
    dist[start] = 1.0;
    const double u = 1.0 / static_cast<double>(n);
    std::vector<double> curve;
    curve.reserve(steps + 1);
    for (std::size_t t = 0;; ++t) {
        double tv = 0;
        for (auto x : dist) tv += std::abs(x - u);
        curve.push_back(0.5 * tv);
        if (t == steps) break;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            if (dist[i] != 0.0)
                for (const auto& [j, p] : rows[i]) next[j] += dist[i] * p;
        dist.swap(next);
    }
    return curve;
}

std::string export_edge_list(const ChainGraph& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& [j, p] : g.rows[i]) out << i << ' ' << j << ' ' << to_string(p) << '\n';
    return out.str();
}

std::string tv_curve_csv(const std::vector<double>& curve) {
    std::ostringstream out;
    out.precision(17);
    out << "t,tv\n";
    for (std::size_t t = 0; t < curve.size(); ++t) out << t << ',' << curve[t] << '\n';
    return out.str();
}

}  // namespace hypershuffle
