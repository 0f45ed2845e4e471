#include "hypershuffle/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hypershuffle/counterexamples.hpp"
#include "hypershuffle/enumerate.hpp"
#include "hypershuffle/instances.hpp"
#include "hypershuffle/sampling.hpp"

namespace hypershuffle {

bool ExperimentReport::pass() const noexcept {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

void ExperimentReport::add(std::string label, bool ok, std::string detail) {
    checks.push_back({std::move(label), ok, std::move(detail)});
}

nlohmann::ordered_json ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["target"] = target;
    j["verdict"] = pass() ? "pass" : "fail";
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) arr.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    return j;
}

std::string ExperimentReport::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.pass ? "PASS  " : "FAIL  ";
        out += c.label;
        if (!c.detail.empty()) out += "  " + c.detail;
        out += '\n';
    }
    out += target + ": " + (pass() ? "PASS" : "FAIL") + '\n';
    return out;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

std::vector<CanonicalForm> keys_of(const std::vector<DirectedHypergraph>& hs) {
    std::vector<CanonicalForm> out;
    out.reserve(hs.size());
    for (const auto& h : hs) out.push_back(canonical_form(h));
    return out;
}

ChainBuildOptions build_options(const ExperimentOptions& o, AcceptanceRule rule = AcceptanceRule::balanced) {
    ChainBuildOptions b;
    b.state_limit = o.state_limit;
    b.acceptance = rule;
    return b;
}

bool same_matrix(const ChainGraph& a, const ChainGraph& b) { return a.keys == b.keys && a.rows == b.rows; }

// True when some proposal from some state has acceptance probability < 1.
bool has_nontrivial_acceptance(const ChainGraph& vertex_chain) {
    for (const auto& h : vertex_chain.states) {
        if (h.arc_count() < 2) continue;
        bool found = false;
        for_each_proposal(h, [&](const ShuffleProposal& p) {
            if (!found && !acceptance(h, p, AcceptanceRule::balanced).certain())
                found = true;
        });
        if (found) return true;
    }
    return false;
}

}  // namespace

const std::vector<std::string>& theorem1_instances() {
    static const std::vector<std::string> v = {"fixed-degrees", "d1", "identical-pair", "cycle3", "star", "loops"};
    return v;
}

const std::vector<std::string>& theorem2_instances() {
    static const std::vector<std::string> v = {"two-tail-3", "two-tail-4", "two-tail-overlap", "two-tail-skew"};
    return v;
}

const std::vector<std::string>& theorem4_instances() {
    static const std::vector<std::string> v = {"fixed-degrees", "identical-pair", "star", "d1", "loops"};
    return v;
}

ExperimentReport reproduce_fixed_degrees(const ExperimentOptions&) {
    ExperimentReport r{"fig-fixed-degrees", {}};
    const auto h = load_instance("fixed-degrees");
    const auto d = degree_sequence(h);
    const std::map<std::string, std::size_t> expected = {{"sdm", 11}, {"sm", 8}, {"d", 5}, {"", 4}};

    for (const auto& spec : all_feature_subsets(Labeling::vertex)) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto space = enumerate_vertex_space(d, spec);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        SpaceSpec stub_spec = spec;
        stub_spec.labeling = Labeling::stub;
        const auto stub_space = enumerate_stub_space(d, stub_spec);
        BigInt realizations = 0;
        for (const auto& x : space) realizations += count_stub_realizations(x);

        std::string detail = std::to_string(space.size()) + " vertex-labeled, " + std::to_string(stub_space.size()) +
                             " stub-labeled";
        bool ok = realizations == stub_space.size() && secs < 1.0;
        if (auto it = expected.find(spec.features()); it != expected.end()) {
            ok = ok && space.size() == it->second;
            detail += " (expected " + std::to_string(it->second) + ")";
        }
        r.add("x={" + spec.features() + "}", ok, detail);
    }
    return r;
}

ExperimentReport reproduce_theorem1(const ExperimentOptions& o) {
    ExperimentReport r{"thm1", {}};
    for (const char* x : {"sdm", "sm"}) {
        const auto spec = SpaceSpec::from_features(x, Labeling::stub);
        for (const auto& name : theorem1_instances()) {
            const auto d = degree_sequence(load_instance(name));
            auto g = build_chain_graph(d, spec, build_options(o));
            const bool regular = check_regular(g).ok;
            const bool stochastic = check_row_stochastic(g).ok;
            const bool aperiodic = check_aperiodic(g).ok;
            const bool connected = check_strongly_connected(g).strongly_connected;
            const auto st = stationary_distribution(g);
            const double dev = st.irreducible ? max_deviation_from_uniform(st.distribution) : 1.0;
            const bool ok = g.size() > 0 && regular && stochastic && aperiodic && connected && dev < stationary_tolerance;
            r.add(spec.name() + " " + name, ok,
                  std::to_string(g.size()) + " states, symmetric=" + (regular ? "yes" : "no") +
                      ", aperiodic=" + (aperiodic ? "yes" : "no") + ", connected=" + (connected ? "yes" : "no") +
                      ", max|pi-1/N|=" + fmt(dev));
        }
    }
    if (o.samples > 0) {
        const auto h0 = load_instance("fixed-degrees");
        auto s = sample_and_test(h0, "fixed-degrees", SpaceSpec::from_features("sdm", Labeling::stub), o.steps,
                                 o.samples, o.seed);
        r.add("sampled stub{s,d,m} fixed-degrees", s.result.pass(),
              std::to_string(o.samples) + " chains x " + std::to_string(o.steps) +
                  " steps, chi2=" + fmt(s.result.chi_square.statistic) + ", p=" + fmt(s.result.chi_square.p_value));
    }
    return r;
}

ExperimentReport reproduce_theorem2(const ExperimentOptions& o) {
    ExperimentReport r{"thm2", {}};
    const auto spec = SpaceSpec::from_features("s", Labeling::stub);
    for (const auto& name : theorem2_instances()) {
        const auto d = degree_sequence(load_instance(name));
        std::size_t tails = 0;
        bool in_class = true;
        for (const auto& v : d.vertices) tails += v.out > 0;
        for (const auto& a : d.arcs) in_class = in_class && a.tail == 1 && a.head == 2;
        in_class = in_class && tails == 2;
        auto g = build_chain_graph(d, spec, build_options(o));
        auto c = check_strongly_connected(g);
        r.add(spec.name() + " " + name, in_class && g.size() >= 2 && c.strongly_connected,
              describe(d) + ", " + std::to_string(g.size()) + " states, " + std::to_string(c.components.size()) +
                  " component(s)");
    }
    return r;
}

ExperimentReport reproduce_theorem3(const ExperimentOptions&) {
    ExperimentReport r{"thm3", {}};
    for (const auto& e : counterexample_suite().entries) {
        r.add(e.space + (e.expect_connected ? " connected" : " disconnected"), e.pass,
              e.instance + ", " + std::to_string(e.states) + " states, " + std::to_string(e.components) +
                  " component(s); " + e.detail);
    }
    return r;
}

ExperimentReport reproduce_theorem4(const ExperimentOptions& o) {
    ExperimentReport r{"thm4", {}};
    const auto vspec = SpaceSpec::from_features("sdm", Labeling::vertex);
    const auto sspec = SpaceSpec::from_features("sdm", Labeling::stub);
    for (const auto& name : theorem4_instances()) {
        const auto d = degree_sequence(load_instance(name));

        auto vg = build_chain_graph(d, vspec, build_options(o));
        const bool nontrivial = has_nontrivial_acceptance(vg);
        const auto vst = stationary_distribution(vg);
        const double vdev = vst.irreducible ? max_deviation_from_uniform(vst.distribution) : 1.0;
        r.add(vspec.name() + " " + name + " uniform", nontrivial && check_regular(vg).ok && vdev < stationary_tolerance,
              std::to_string(vg.size()) + " classes, acceptance<1 somewhere=" + (nontrivial ? "yes" : "no") +
                  ", max|pi-1/N|=" + fmt(vdev));

        auto sg = build_chain_graph(d, sspec, build_options(o));
        const auto sst = stationary_distribution(sg);
        double push_dev = 1.0;
        if (sst.irreducible) {
            std::vector<double> pushed(vg.size(), 0.0);
            bool mapped = true;
            for (std::size_t i = 0; i < sg.size(); ++i) {
                auto k = vg.index_of(canonical_form(sg.vertex_state(i)));
                if (!k) {
                    mapped = false;
                    break;
                }
                pushed[*k] += sst.distribution[i];
            }
            if (mapped) push_dev = max_deviation(pushed, stationary_weights(vg.states, Labeling::stub));
        }
        r.add(sspec.name() + " " + name + " pushforward", push_dev < stationary_tolerance,
              std::to_string(sg.size()) + " stub states, max|g(pi)-count/total|=" + fmt(push_dev));

        bool routes_agree = false;
        bool free_agree = false;
        std::string detail;
        try {
            routes_agree = same_matrix(vg, lump_stub_chain(sg, LumpMode::single_realization));
            auto free_direct = build_chain_graph(d, vspec, build_options(o, AcceptanceRule::always_accept));
            free_agree = same_matrix(free_direct, lump_stub_chain(sg, LumpMode::sum));
        } catch (const std::logic_error& e) {
            detail = e.what();
        }
        if (detail.empty())
            detail = std::string("with acceptance: ") + (routes_agree ? "equal" : "differ") +
                     "; without acceptance vs summed lumping: " + (free_agree ? "equal" : "differ");
        r.add(vspec.name() + " " + name + " direct vs lumped", routes_agree && free_agree, detail);
    }
    return r;
}

const std::vector<std::string>& reproduce_targets() {
    static const std::vector<std::string> v = {"fig-fixed-degrees", "thm1", "thm2", "thm3", "thm4"};
    return v;
}

ExperimentReport reproduce(std::string_view target, const ExperimentOptions& options) {
    if (target == "fig-fixed-degrees") return reproduce_fixed_degrees(options);
    if (target == "thm1") return reproduce_theorem1(options);
    if (target == "thm2") return reproduce_theorem2(options);
    if (target == "thm3") return reproduce_theorem3(options);
    if (target == "thm4") return reproduce_theorem4(options);
    throw std::invalid_argument("unknown reproduce target '" + std::string(target) + "'");
}

nlohmann::ordered_json SampleReport::to_json() const {
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["spec"] = spec.features();
    j["labeling"] = std::string(to_string(spec.labeling));
    j["k"] = steps;
    j["replicas"] = replicas;
    j["seed"] = seed;
    const double total_w = [&] {
        double s = 0;
        for (auto w : result.expected_weights) s += w;
        return s;
    }();
    auto& hist = j["histogram"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < space.size(); ++i)
        hist.push_back({{"state", space[i]},
                        {"count", result.histogram[i]},
                        {"expected", static_cast<double>(replicas) * result.expected_weights[i] / total_w}});
    j["chi2"] = result.chi_square.statistic;
    j["df"] = result.chi_square.degrees_of_freedom;
    j["p"] = result.chi_square.p_value;
    j["pass_threshold"] = pass_p_value;
    j["verdict"] = verdict();
    return j;
}

SampleReport sample_and_test(const DirectedHypergraph& h0, std::string instance, const SpaceSpec& spec,
                             std::uint64_t steps, std::uint64_t replicas, std::uint64_t seed,
                             AcceptanceRule acceptance) {
    SampleReport rep;
    rep.instance = std::move(instance);
    rep.spec = spec;
    rep.steps = steps;
    rep.replicas = replicas;
    rep.seed = seed;
    const auto space = enumerate_vertex_space(degree_sequence(h0), spec);
    rep.space = keys_of(space);

    ReplicaConfig cfg;
    cfg.replicas = replicas;
    cfg.steps = steps;
    cfg.seed = seed;
    cfg.spec = spec;
    cfg.acceptance = acceptance;
    const auto samples = sample_replica_keys(h0, cfg);
    rep.result = uniformity_test(samples, rep.space, stationary_weights(space, spec.labeling));
    return rep;
}

}  // namespace hypershuffle
