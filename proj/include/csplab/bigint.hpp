#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace csplab {

// All counting is done in exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

namespace qexact {

// C(n, k) as an exact integer; 0 for k < 0 or k > n.
Int binomial(long n, long k);

// n! / (parts[0]! * ... * parts.back()!), requires sum(parts) == n.
Int multinomial(long n, const std::vector<long>& parts);

}  // namespace qexact
}  // namespace csplab
