#include "arrlab/rational.hpp"

#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw IoError("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw IoError("bad rational literal: " + text);
  if (q.get_den() == 0) throw IoError("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVec scaled(const RatVec& v, const Rational& s) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

RatVec primitive_integer_direction(const RatVec& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return RatVec(v.size(), Rational(0));
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    mpz_class n = v[i].get_num() * (den_lcm / v[i].get_den());
    out[i] = Rational(n / num_gcd);
  }
  return out;
}

std::vector<double> to_double_vec(const RatVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rational_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace arrlab
