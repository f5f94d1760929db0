#ifndef MAPPERFORGE_RATIONAL_HPP
#define MAPPERFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mapperforge {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Canonicalized rational from an integer pair.
Rat rat(long num, long den = 1);

/// Parses "p/q", plain integers, and decimal literals ("0.25", "-1.5e-3") exactly.
Rat rat_from_string(const std::string& text);

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

double to_double(const Rat& q);
std::vector<double> to_double_vec(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& v);
Rat norm2(const RatVec& v);
Rat dist2(const RatVec& a, const RatVec& b);

/// Rational lower bound q on sqrt(s) with sqrt(s) - q < 2^-bits.  Requires s >= 0.
Rat sqrt_lower(const Rat& s, unsigned bits);

/// Sign of (a1 + sqrt(s1)) - (a2 + sqrt(s2)), computed exactly.  Requires s1, s2 >= 0.
int cmp_base_plus_sqrt(const Rat& a1, const Rat& s1, const Rat& a2, const Rat& s2);

} // namespace mapperforge

#endif
