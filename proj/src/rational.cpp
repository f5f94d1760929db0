#include "mapperforge/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "mapperforge/errors.hpp"

namespace mapperforge {

Rat rat(long num, long den) {
  if (den == 0) fail(Errc::BadInput, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_decimal(const std::string& text) {
  // mantissa [. fraction] [e exponent]
  std::string s = text;
  long exp10 = 0;
  size_t epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string etok = s.substr(epos + 1);
    if (!is_integer_token(etok)) fail(Errc::BadInput, "bad numeric literal: " + text);
    exp10 = std::strtol(etok.c_str(), nullptr, 10);
    s = s.substr(0, epos);
  }
  std::string digits = s;
  size_t dpos = s.find('.');
  if (dpos != std::string::npos) {
    digits = s.substr(0, dpos) + s.substr(dpos + 1);
    exp10 -= static_cast<long>(s.size() - dpos - 1);
  }
  if (!is_integer_token(digits)) fail(Errc::BadInput, "bad numeric literal: " + text);
  mpz_class mantissa(digits, 10);
  Rat value(mantissa);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    value *= Rat(pow10);
  else
    value /= Rat(pow10);
  value.canonicalize();
  return value;
}

} // namespace

Rat rat_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(Errc::BadInput, "empty numeric literal");
  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      fail(Errc::BadInput, "bad rational literal: " + text);
    mpz_class d(den, 10);
    if (d == 0) fail(Errc::BadInput, "zero denominator: " + text);
    Rat q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
  }
  if (is_integer_token(s)) return Rat(mpz_class(s, 10));
  return parse_decimal(s);
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

std::vector<double> to_double_vec(const RatVec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(q.get_d());
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vec_add: dimension mismatch");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vec_sub: dimension mismatch");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rat norm2(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x * x;
  return s;
}

Rat dist2(const RatVec& a, const RatVec& b) { return norm2(vec_sub(a, b)); }

Rat sqrt_lower(const Rat& s, unsigned bits) {
  if (s < 0) fail(Errc::BadInput, "sqrt_lower of negative value");
  // sqrt(n/d) = sqrt(n*d)/d; floor-sqrt of the scaled integer gives the bound.
  mpz_class n = s.get_num();
  mpz_class d = s.get_den();
  mpz_class scaled = n * d;
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, bits);
  scaled *= four_pow;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, bits);
  Rat out(root, d * two_pow);
  out.canonicalize();
  return out;
}

int cmp_base_plus_sqrt(const Rat& a1, const Rat& s1, const Rat& a2, const Rat& s2) {
  if (s1 < 0 || s2 < 0) fail(Errc::BadInput, "cmp_base_plus_sqrt: negative radicand");
  Rat d = a1 - a2;
  int sd = sgn(d);
  if (s1 == s2) return sd;
  bool s1_larger = s1 > s2;
  if (sd == 0) return s1_larger ? 1 : -1;
  if (sd > 0 && s1_larger) return 1;
  if (sd < 0 && !s1_larger) return -1;
  if (sd < 0 && s1_larger) return -cmp_base_plus_sqrt(a2, s2, a1, s1);
  // D > 0 and s1 < s2: compare D with sqrt(s2) - sqrt(s1), both positive.
  // D > sqrt(s2)-sqrt(s1)  <=>  2*sqrt(s1*s2) > s1 + s2 - D^2.
  Rat w = s1 + s2 - d * d;
  if (w < 0) return 1;
  Rat lhs = 4 * s1 * s2;
  Rat rhs = w * w;
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

} // namespace mapperforge
