#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypershuffle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

double to_double(const Rational& r);
/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace hypershuffle
