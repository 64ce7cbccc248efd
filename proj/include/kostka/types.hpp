#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kostka {

// Exact tableau counts.  These exceed 64 bits quickly (K(1^{2n-2}) is a
// Catalan number), so everything that stores or returns a count uses this.
using KostkaValue = boost::multiprecision::cpp_int;

using Rational = boost::multiprecision::cpp_rational;

}  // namespace kostka
