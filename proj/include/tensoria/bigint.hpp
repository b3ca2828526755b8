#ifndef TENSORIA_BIGINT_HPP_
#define TENSORIA_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tensoria {

  using BigInt = boost::multiprecision::cpp_int;

  inline std::string to_string(BigInt const& n) {
    return n.str();
  }

}  // namespace tensoria

#endif  // TENSORIA_BIGINT_HPP_
