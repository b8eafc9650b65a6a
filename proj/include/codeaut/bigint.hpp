#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace codeaut {

// Group orders overflow 64 bits quickly (6^13 for three levels of Sym(3)).
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt factorial(unsigned n);

}  // namespace codeaut
