#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace knspec {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

} // namespace knspec
