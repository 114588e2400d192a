#pragma once

#include <gmpxx.h>

#include <string>

namespace sdres {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace sdres
