#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arrlab {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator, which is exactly the canonical form required everywhere here.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign_of(const Rational& q) { return sgn(q); }

Rational dot(const RatVec& a, const RatVec& b);

bool is_zero_vec(const RatVec& v);

RatVec scaled(const RatVec& v, const Rational& s);

/// Smallest integer vector with the same direction (entries divided by the
/// gcd of numerators times lcm of denominators). Sign is preserved.
RatVec primitive_integer_direction(const RatVec& v);

std::vector<double> to_double_vec(const RatVec& v);

std::string vec_str(const RatVec& v);

}  // namespace arrlab
