#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hntau {

// Ground field: exact rationals. Arbitrary precision so Gaussian elimination
// can never overflow, however long a pivot chain gets.
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

}  // namespace hntau
