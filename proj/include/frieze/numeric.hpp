#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace frieze {

// Frieze entries outgrow 64 bits quickly (a constant-3 row grows like 4.79^d),
// so everything arithmetic is exact and arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Index = long long;

} // namespace frieze
