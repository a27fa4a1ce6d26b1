#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace r3 {

using Bigint = boost::multiprecision::cpp_int;

inline Bigint bigint_pow(Bigint b, unsigned e)
{
  Bigint r = 1;
  while (e) {
    if (e & 1u)
      r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

} // namespace r3
