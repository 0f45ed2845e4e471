#include "hypershuffle/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace hypershuffle {

namespace {

template <class Out, class Convert>
std::vector<Out> run_replicas(const DirectedHypergraph& h0, const ReplicaConfig& config, Convert convert) {
    if (has_forbidden_feature(h0, config.spec))
        throw ConfigError("initial hypergraph is outside " + config.spec.name());

    std::vector<Out> out(config.replicas);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (auto r = next.fetch_add(1); r < config.replicas; r = next.fetch_add(1)) {
                Rng rng(mix_seed(config.seed, r));
                DirectedHypergraph h = h0;
                for (std::uint64_t s = 0; s < config.steps; ++s)
                    step_in_place(h, config.spec, rng, config.acceptance);
                out[r] = convert(std::move(h));
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = config.replicas;
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(config.replicas, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace

std::vector<DirectedHypergraph> sample_replicas(const DirectedHypergraph& h0, const ReplicaConfig& config) {
    return run_replicas<DirectedHypergraph>(h0, config, [](DirectedHypergraph h) { return h; });
}

std::vector<CanonicalForm> sample_replica_keys(const DirectedHypergraph& h0, const ReplicaConfig& config) {
    return run_replicas<CanonicalForm>(h0, config, [](const DirectedHypergraph& h) { return canonical_form(h); });
}

}  // namespace hypershuffle
