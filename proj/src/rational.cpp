#include "hypershuffle/rational.hpp"

#include <stdexcept>

namespace hypershuffle {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    auto b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("binomial does not fit in 64 bits");
    return b.convert_to<std::uint64_t>();
}

BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace hypershuffle
