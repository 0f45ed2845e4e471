#include "hypershuffle/counterexamples.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hypershuffle/chain_graph.hpp"
#include "hypershuffle/instances.hpp"

namespace hypershuffle {

bool CounterexampleReport::pass() const noexcept {
    return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

std::string describe(const DegreeSequence& d) {
    std::ostringstream os;
    os << "d_V=(";
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        os << (i ? "," : "") << '(' << d.vertices[i].in << ',' << d.vertices[i].out << ')';
    os << ") delta_A=(";
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        os << (i ? "," : "") << '(' << d.arcs[i].tail << ',' << d.arcs[i].head << ')';
    os << ')';
    return os.str();
}

std::optional<DisconnectedInstance> find_disconnected_digraph_instance(const SpaceSpec& spec,
                                                                       std::size_t max_vertices,
                                                                       std::size_t max_arcs) {
    std::optional<DisconnectedInstance> found;
    for (std::size_t n = 2; n <= max_vertices && !found; ++n) {
        std::vector<VertexDegree> degrees(n);
        // Odometer over (in, out) in {0,1,2}^2 per vertex.
        std::function<void(std::size_t)> visit = [&](std::size_t v) {
            if (found) return;
            if (v == n) {
                std::size_t in = 0, out = 0;
                for (const auto& x : degrees) {
                    in += x.in;
                    out += x.out;
                }
                if (in != out || in < 2 || in > max_arcs) return;
                DegreeSequence d{degrees, std::vector<ArcDegree>(in, ArcDegree{1, 1})};
                auto g = build_chain_graph(d, spec);
                if (g.size() < 2) return;
                auto c = check_strongly_connected(g);
                if (!c.strongly_connected) found = DisconnectedInstance{d, g.size(), c.components.size()};
                return;
            }
            for (std::uint32_t in = 0; in <= 2; ++in)
                for (std::uint32_t out = 0; out <= 2; ++out) {
                    degrees[v] = {in, out};
                    visit(v + 1);
                }
        };
        visit(0);
    }
    return found;
}

namespace {

CounterexampleEntry d1_isolation_entry() {
    const auto h0 = load_instance("d1");
    const auto d = degree_sequence(h0);
    const auto spec = SpaceSpec::from_features("sd", Labeling::stub);
    CounterexampleEntry e{spec.name(), "d1 " + describe(d), false, 0, 0, false, {}};

    auto g = build_chain_graph(d, spec);
    auto conn = check_strongly_connected(g);
    e.states = g.size();
    e.components = conn.components.size();

    // The component of any lift of H0 must project onto H0 alone.
    const auto h0_key = canonical_form(h0);
    const auto start = g.index_of(canonical_form(g.layout->lift(h0)));
    std::size_t classes_in_space = 0;
    {
        std::vector<CanonicalForm> seen;
        for (std::size_t i = 0; i < g.size(); ++i) seen.push_back(canonical_form(g.vertex_state(i)));
        std::sort(seen.begin(), seen.end());
        classes_in_space = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }
    bool isolated = start.has_value();
    if (start) {
        for (auto s : conn.components[conn.component_of(*start)])
            if (canonical_form(g.vertex_state(s)) != h0_key) isolated = false;
    }

    const auto vspec = SpaceSpec::from_features("sd", Labeling::vertex);
    auto vg = build_chain_graph(d, vspec);
    auto vconn = check_strongly_connected(vg);
    auto vstart = vg.index_of(h0_key);
    const bool vertex_isolated = vstart && vconn.components[vconn.component_of(*vstart)].size() == 1;

    // Mass never leaves the start component C, so TV >= 1 - |C| / |space| at every t.
    auto tv = tv_curve(g, *start, 50);
    const double tv_min = *std::min_element(tv.begin(), tv.end());
    const double tv_floor =
        1.0 - static_cast<double>(conn.components[conn.component_of(*start)].size()) / static_cast<double>(g.size());

    e.pass = isolated && vertex_isolated && classes_in_space >= 2 && !conn.strongly_connected && tv_floor > 0 &&
             tv_min >= tv_floor - 1e-12;
    std::ostringstream os;
    os << "H0 component projects to H0 only: " << (isolated ? "yes" : "no") << "; vertex classes: " << classes_in_space
       << "; vertex-labeled H0 component size 1: " << (vertex_isolated ? "yes" : "no")
       << "; min TV to uniform over 50 steps: " << tv_min << " (floor " << tv_floor << ")";
    e.detail = os.str();
    return e;
}

CounterexampleEntry digraph_entry(const char* features) {
    const auto spec = SpaceSpec::from_features(features, Labeling::stub);
    CounterexampleEntry e{spec.name(), "", false, 0, 0, false, {}};
    auto found = find_disconnected_digraph_instance(spec);
    if (!found) {
        e.instance = "none found";
        e.detail = "no disconnected (1,1) instance up to 4 vertices and 4 arcs";
        return e;
    }
    e.instance = describe(found->degrees);
    e.states = found->states;
    e.components = found->components;
    e.pass = found->components >= 2;
    e.detail = "first disconnected (1,1) instance in search order";
    return e;
}

CounterexampleEntry control_entry() {
    const auto h0 = load_instance("d1");
    const auto d = degree_sequence(h0);
    const auto spec = SpaceSpec::from_features("sdm", Labeling::stub);
    CounterexampleEntry e{spec.name(), "d1 " + describe(d), true, 0, 0, false, {}};
    auto g = build_chain_graph(d, spec);
    auto conn = check_strongly_connected(g);
    e.states = g.size();
    e.components = conn.components.size();
    e.pass = conn.strongly_connected;
    e.detail = "control: multi-arcs reconnect d1";
    return e;
}

}  // namespace

CounterexampleReport counterexample_suite() {
    CounterexampleReport r;
    r.entries.push_back(d1_isolation_entry());
    for (const char* x : {"", "d", "m", "dm"}) r.entries.push_back(digraph_entry(x));
    r.entries.push_back(control_entry());
    return r;
}

}  // namespace hypershuffle
