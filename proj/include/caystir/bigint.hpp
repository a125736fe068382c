#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace caystir {

// All counts in this library (class sizes, sphere sizes, intersection
// numbers) are exact integers that routinely exceed 64 bits; cpp_int keeps
// everything header-only and exact.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace caystir
