#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypershuffle/canonical.hpp"
#include "hypershuffle/hypergraph.hpp"
#include "hypershuffle/space.hpp"

namespace hypershuffle {

/// A sample fell outside the enumerated space: the kernel is broken.
class SampleOutsideSpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimum expected count per chi-square cell; smaller cells are pooled.
inline constexpr double min_expected_per_cell = 5.0;
/// Pass threshold for uniformity and concordance tests.
inline constexpr double pass_p_value = 0.01;
/// Negative controls must fall below this p-value.
inline constexpr double negative_control_p_value = 1e-4;

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
    double p_value = 1.0;
    std::size_t pooled_cells = 0;
};

/// Pearson goodness of fit of `observed` against probabilities proportional
/// to `expected_weights`. Cells are pooled in ascending order of expected
/// count until each pooled cell expects at least min_expected_per_cell.
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected_weights);

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, std::size_t degrees_of_freedom);

struct UniformityResult {
    std::vector<std::uint64_t> histogram;  // aligned with the space list
    std::vector<double> expected_weights;
    ChiSquareResult chi_square;
    bool pass() const noexcept { return chi_square.p_value > pass_p_value; }
};

/// Histograms `samples` over `space` (canonical forms, any order) and tests
/// them against `weights`. Throws SampleOutsideSpaceError on unknown samples.
UniformityResult uniformity_test(const std::vector<CanonicalForm>& samples,
                                 const std::vector<CanonicalForm>& space,
                                 const std::vector<double>& weights);

/// Target weights for samples drawn from a space: uniform over stub-labeled
/// states in stub mode (so proportional to the stub realization count of each
/// vertex class), uniform over classes in vertex mode.
std::vector<double> stationary_weights(const std::vector<DirectedHypergraph>& vertex_space,
                                       Labeling labeling);

}  // namespace hypershuffle
