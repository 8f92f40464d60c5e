#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace aschar {

using Rational = boost::rational<std::int64_t>;

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace aschar
