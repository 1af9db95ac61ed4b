#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace elr {

using rat = mpq_class;

// parse "p", "p/q" or a plain decimal like "3.01" into an exact rational
rat parse_rat(const std::string& s);

// canonical serialization, always "p/q" with q > 0 and gcd(p,q) = 1
std::string format_rat(const rat& v);

double rat_to_double(const rat& v);

// exact value of a finite double as a rational
rat rat_from_double(double x);

inline int sign_rat(const rat& v) { return sgn(v); }

} // namespace elr
