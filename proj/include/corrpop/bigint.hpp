#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace corrpop {

// Population sizes reach sigma^(2n); exact unbounded arithmetic throughout.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_int(unsigned base, std::size_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace corrpop
