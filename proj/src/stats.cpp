#include "hypershuffle/stats.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <boost/math/special_functions/gamma.hpp>

#include "hypershuffle/enumerate.hpp"

namespace hypershuffle {

double chi_square_survival(double statistic, std::size_t degrees_of_freedom) {
    if (degrees_of_freedom == 0) return 1.0;
    if (statistic <= 0) return 1.0;
    return boost::math::gamma_q(static_cast<double>(degrees_of_freedom) / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected_weights) {
    if (observed.size() != expected_weights.size())
        throw std::invalid_argument("chi_square_test: size mismatch");
    const double n = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    const double total_weight = std::accumulate(expected_weights.begin(), expected_weights.end(), 0.0);
    if (total_weight <= 0) throw std::invalid_argument("chi_square_test: weights must have positive sum");

    std::vector<std::size_t> order(observed.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return expected_weights[a] < expected_weights[b]; });

    struct Cell {
        double observed = 0, expected = 0;
    };
    std::vector<Cell> cells;
    Cell open;
    for (auto idx : order) {
        const double e = n * expected_weights[idx] / total_weight;
        if (e == 0.0) {
            if (observed[idx] != 0)
                throw std::invalid_argument("chi_square_test: observation in a zero-probability cell");
            continue;
        }
        open.observed += static_cast<double>(observed[idx]);
        open.expected += e;
        if (open.expected >= min_expected_per_cell) {
            cells.push_back(open);
            open = {};
        }
    }
    if (open.expected > 0) {
        if (cells.empty()) {
            cells.push_back(open);
        } else {
            cells.back().observed += open.observed;
            cells.back().expected += open.expected;
        }
    }

    ChiSquareResult r;
    r.pooled_cells = cells.size();
    for (const auto& c : cells) r.statistic += (c.observed - c.expected) * (c.observed - c.expected) / c.expected;
    r.degrees_of_freedom = cells.size() > 0 ? cells.size() - 1 : 0;
    r.p_value = chi_square_survival(r.statistic, r.degrees_of_freedom);
    return r;
}

UniformityResult uniformity_test(const std::vector<CanonicalForm>& samples,
                                 const std::vector<CanonicalForm>& space,
                                 const std::vector<double>& weights) {
    if (space.size() != weights.size()) throw std::invalid_argument("uniformity_test: size mismatch");
    std::unordered_map<CanonicalForm, std::size_t> index;
    for (std::size_t i = 0; i < space.size(); ++i) index.emplace(space[i], i);
    UniformityResult r;
    r.histogram.assign(space.size(), 0);
    r.expected_weights = weights;
    for (const auto& s : samples) {
        auto it = index.find(s);
        if (it == index.end()) throw SampleOutsideSpaceError("sample outside the enumerated space: " + s);
        ++r.histogram[it->second];
    }
    r.chi_square = chi_square_test(r.histogram, weights);
    return r;
}

std::vector<double> stationary_weights(const std::vector<DirectedHypergraph>& vertex_space,
                                       Labeling labeling) {
    std::vector<double> w;
    w.reserve(vertex_space.size());
    for (const auto& h : vertex_space)
        w.push_back(labeling == Labeling::vertex ? 1.0 : count_stub_realizations(h).convert_to<double>());
    return w;
}

}  // namespace hypershuffle
