#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace menage {

// Exact nonnegative integer. No counting path in this library ever touches
// floating point.
using Count = boost::multiprecision::cpp_int;

Count factorial(int n);

// C(n, k); zero outside 0 <= k <= n.
Count binomial(int n, int k);

Count pow_count(const Count& base, int exponent);

}  // namespace menage
