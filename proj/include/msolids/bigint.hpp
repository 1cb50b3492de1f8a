#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace msolids {

// All combinatorial counts are exact; 24!-scale values overflow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace msolids
