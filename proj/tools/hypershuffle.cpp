// hypershuffle: sample, enumerate and analyse spaces of directed hypergraphs
// with fixed degrees.
//
// Exit codes: 0 pass, 1 verdict failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypershuffle/chain_graph.hpp"
#include "hypershuffle/dhg.hpp"
#include "hypershuffle/enumerate.hpp"
#include "hypershuffle/experiments.hpp"
#include "hypershuffle/instances.hpp"
#include "hypershuffle/sampling.hpp"
#include "hypershuffle/space.hpp"

using namespace hypershuffle;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string input;
    std::string instance;
    std::string degrees;
};

struct SpaceFlags {
    std::string space = "sdm";
    std::string labeling = "stub";
    std::string acceptance = "balanced";
};

void add_source(CLI::App* cmd, Source& s) {
    cmd->add_option("--input", s.input, ".dhg file");
    cmd->add_option("--instance", s.instance, "built-in instance (see `hypershuffle instances`)");
    cmd->add_option("--degrees", s.degrees, "degree sequence \"in,out ... / tail,head ...\"");
}

void add_space(CLI::App* cmd, SpaceFlags& f) {
    cmd->add_option("--space", f.space, "allowed features, a subset of sdm (\"\" for none)")->capture_default_str();
    cmd->add_option("--labeling", f.labeling, "stub or vertex")->capture_default_str();
    cmd->add_option("--acceptance", f.acceptance, "vertex-mode acceptance: balanced, literal or always")
        ->capture_default_str();
}

SpaceSpec resolve_space(const SpaceFlags& f) {
    std::string x;
    for (char c : f.space)
        if (c != '{' && c != '}' && c != ',' && c != ' ') x += c;
    try {
        return SpaceSpec::from_features(x, parse_labeling(f.labeling));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

AcceptanceRule resolve_acceptance(const SpaceFlags& f) {
    try {
        return parse_acceptance_rule(f.acceptance);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::optional<DirectedHypergraph> load_hypergraph(const Source& s) {
    if (!s.input.empty()) return read_dhg_file(s.input);
    if (!s.instance.empty()) {
        try {
            return load_instance(s.instance);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return std::nullopt;
}

DegreeSequence load_degrees(const Source& s) {
    const int given = !s.input.empty() + !s.instance.empty() + !s.degrees.empty();
    if (given != 1) throw UsageError("give exactly one of --input, --instance, --degrees");
    if (!s.degrees.empty()) {
        try {
            return parse_degree_sequence(s.degrees);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return degree_sequence(*load_hypergraph(s));
}

DirectedHypergraph require_hypergraph(const Source& s) {
    if (!s.degrees.empty()) throw UsageError("this command needs a hypergraph: use --input or --instance");
    const int given = !s.input.empty() + !s.instance.empty();
    if (given != 1) throw UsageError("give exactly one of --input, --instance");
    return *load_hypergraph(s);
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string instance_name(const Source& s) { return !s.instance.empty() ? s.instance : s.input; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform sampling of directed hypergraphs with fixed degrees"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::uint64_t steps = 1000;
    std::uint64_t samples = 1;
    std::size_t limit = default_state_limit;
    std::string out_path;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed")->envname("HYPERSHUFFLE_SEED")->capture_default_str();
    };

    // sample
    Source sample_src;
    SpaceFlags sample_space;
    std::string report_path;
    unsigned threads = 0;
    auto* sample = app.add_subcommand("sample", "run independent chains and print their final states");
    add_source(sample, sample_src);
    add_space(sample, sample_space);
    add_seed(sample);
    sample->add_option("--steps", steps, "steps per chain")->capture_default_str();
    sample->add_option("--samples", samples, "number of chains")->capture_default_str();
    sample->add_option("--out", out_path, "write samples here instead of stdout");
    sample->add_option("--report", report_path, "run a uniformity test and write a JSON report here");
    sample->add_option("--threads", threads, "worker threads (0 = all cores)");
    sample->add_option("--limit", limit, "state cap for the enumerated space")->capture_default_str();

    // enumerate
    Source enum_src;
    SpaceFlags enum_space;
    bool enum_list = false;
    auto* enumerate = app.add_subcommand("enumerate", "count (and list) every hypergraph of a space");
    add_source(enumerate, enum_src);
    add_space(enumerate, enum_space);
    enumerate->add_flag("--list", enum_list, "print every state as .dhg after the count");
    enumerate->add_option("--out", out_path, "write output here instead of stdout");

    // chain-verify
    Source verify_src;
    SpaceFlags verify_space;
    std::string edges_path, tv_path;
    std::size_t tv_steps = 50;
    auto* verify = app.add_subcommand("chain-verify", "build the exact chain and check its properties");
    add_source(verify, verify_src);
    add_space(verify, verify_space);
    verify->add_option("--limit", limit, "state cap")->capture_default_str();
    verify->add_option("--out", out_path, "write a JSON report here");
    verify->add_option("--edges", edges_path, "export the transition matrix as \"i j num/den\" lines");
    verify->add_option("--tv", tv_path, "write the TV-to-uniform curve from state 0 (or the input) as CSV");
    verify->add_option("--tv-steps", tv_steps, "length of the TV curve")->capture_default_str();

    // reproduce
    std::string target;
    auto* repro = app.add_subcommand("reproduce", "run one of the built-in verification targets");
    repro->add_option("target", target, "fig-fixed-degrees | thm1 | thm2 | thm3 | thm4")
        ->required()
        ->check(CLI::IsMember(reproduce_targets()));
    add_seed(repro);
    repro->add_option("--samples", samples, "chains for sampled checks (thm1)");
    repro->add_option("--steps", steps, "steps per chain for sampled checks")->capture_default_str();
    repro->add_option("--limit", limit, "state cap")->capture_default_str();
    repro->add_option("--out", out_path, "write a JSON report here");

    // check
    Source check_src;
    SpaceFlags check_space;
    auto* check = app.add_subcommand("check", "check that a hypergraph lies in a space");
    add_source(check, check_src);
    add_space(check, check_space);

    auto* instances = app.add_subcommand("instances", "list the built-in instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*sample) {
            const auto h0 = require_hypergraph(sample_src);
            const auto spec = resolve_space(sample_space);
            if (has_forbidden_feature(h0, spec)) throw UsageError("input is outside " + spec.name());
            ReplicaConfig cfg;
            cfg.replicas = samples;
            cfg.steps = steps;
            cfg.seed = seed;
            cfg.spec = spec;
            cfg.acceptance = resolve_acceptance(sample_space);
            cfg.threads = threads;
            const auto states = sample_replicas(h0, cfg);
            std::string text;
            for (std::size_t i = 0; i < states.size(); ++i) {
                DirectedHypergraph s = states[i];
                s.set_labels(h0.labels());
                text += "# sample " + std::to_string(i) + "\n" + serialize_dhg(s);
            }
            emit(out_path, text);
            if (report_path.empty()) return exit_pass;

            const auto space = enumerate_vertex_space(degree_sequence(h0), spec);
            if (space.size() > limit) throw UsageError("space exceeds --limit");
            SampleReport rep;
            rep.instance = instance_name(sample_src);
            rep.spec = spec;
            rep.steps = steps;
            rep.replicas = samples;
            rep.seed = seed;
            for (const auto& h : space) rep.space.push_back(canonical_form(h));
            std::vector<CanonicalForm> keys;
            keys.reserve(states.size());
            for (const auto& s : states) keys.push_back(canonical_form(s));
            rep.result = uniformity_test(keys, rep.space, stationary_weights(space, spec.labeling));
            emit(report_path, rep.to_json().dump(2) + "\n");
            return rep.result.pass() ? exit_pass : exit_fail;
        }

        if (*enumerate) {
            const auto d = load_degrees(enum_src);
            const auto spec = resolve_space(enum_space);
            std::ostringstream os;
            if (spec.labeling == Labeling::vertex) {
                const auto space = enumerate_vertex_space(d, spec);
                os << space.size() << '\n';
                if (enum_list) {
                    for (auto h : space) {
                        if (auto src = load_hypergraph(enum_src)) h.set_labels(src->labels());
                        os << '\n' << serialize_dhg(h);
                    }
                }
            } else {
                const auto space = enumerate_stub_space(d, spec);
                os << space.size() << '\n';
                if (enum_list)
                    for (const auto& s : space) os << canonical_form(s) << '\n';
            }
            emit(out_path, os.str());
            return exit_pass;
        }

        if (*verify) {
            const auto d = load_degrees(verify_src);
            const auto spec = resolve_space(verify_space);
            ChainBuildOptions opts;
            opts.state_limit = limit;
            opts.acceptance = resolve_acceptance(verify_space);
            const auto g = build_chain_graph(d, spec, opts);

            ExperimentReport r{"chain-verify " + spec.name(), {}};
            r.add("states", g.size() > 0, std::to_string(g.size()));
            r.add("row-stochastic", check_row_stochastic(g).ok);
            const auto reg = check_regular(g);
            r.add("symmetric", reg.ok,
                  reg.offending ? "first asymmetric pair (" + std::to_string(reg.offending->first) + ", " +
                                      std::to_string(reg.offending->second) + ")"
                                : "");
            r.add("aperiodic", check_aperiodic(g).ok);
            const auto conn = check_strongly_connected(g);
            r.add("strongly connected", conn.strongly_connected,
                  std::to_string(conn.components.size()) + " component(s)");
            const auto st = stationary_distribution(g);
            const double dev = st.irreducible ? max_deviation_from_uniform(st.distribution) : 1.0;
            std::ostringstream dv;
            dv << "max|pi-1/N|=" << dev;
            r.add("uniform stationary", st.irreducible && dev < stationary_tolerance, dv.str());

            if (!edges_path.empty()) emit(edges_path, export_edge_list(g));
            if (!tv_path.empty()) {
                std::size_t start = 0;
                if (auto h = load_hypergraph(verify_src); h && spec.labeling == Labeling::vertex) {
                    if (auto idx = g.index_of(canonical_form(*h))) start = *idx;
                } else if (h && g.layout) {
                    if (auto idx = g.index_of(canonical_form(g.layout->lift(*h)))) start = *idx;
                }
                emit(tv_path, tv_curve_csv(tv_curve(g, start, tv_steps)));
            }
            std::cout << r.to_text();
            if (!out_path.empty()) emit(out_path, r.to_json().dump(2) + "\n");
            return r.pass() ? exit_pass : exit_fail;
        }

        if (*repro) {
            ExperimentOptions o;
            o.seed = seed;
            o.steps = steps;
            o.state_limit = limit;
            if (repro->count("--samples")) o.samples = samples;
            const auto r = reproduce(target, o);
            std::cout << r.to_text();
            if (!out_path.empty()) emit(out_path, r.to_json().dump(2) + "\n");
            return r.pass() ? exit_pass : exit_fail;
        }

        if (*check) {
            const auto h = require_hypergraph(check_src);
            const auto spec = resolve_space(check_space);
            const auto f = classify_features(h, spec.self_loop_rule);
            std::cout << "self-loops: " << std::count(f.self_loop.begin(), f.self_loop.end(), true)
                      << "\ndegenerate: " << std::count(f.degenerate.begin(), f.degenerate.end(), true)
                      << "\nmulti-arc groups: " << f.multi_groups.size() << '\n';
            const bool ok = in_space(h, spec, degree_sequence(h));
            std::cout << (ok ? "in " : "not in ") << spec.name() << '\n';
            return ok ? exit_pass : exit_fail;
        }

        if (*instances) {
            for (const auto& i : instance_catalog()) std::cout << i.name << "  " << i.summary << '\n';
            return exit_pass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DhgParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << " (raise --limit or pick a smaller instance)\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
