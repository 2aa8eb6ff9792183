#ifndef MULTIEULER_NUMERIC_HPP
#define MULTIEULER_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "multieuler/errors.hpp"

namespace multieuler {

// All counting in this library is exact. Tree counts, tour counts and
// factorials overflow 64-bit integers already on modest graphs.
using Int = boost::multiprecision::cpp_int;

// Row-major square matrix of exact integers.
using IntMatrix = std::vector<std::vector<Int>>;

// gcd of all entries, folded with Euclid. Empty input yields 0.
Int gcd_all(const std::vector<Int>& values);

// a / b, throwing if the division leaves a remainder.
Int exact_div(const Int& a, const Int& b);

} // namespace multieuler

#endif // MULTIEULER_NUMERIC_HPP
