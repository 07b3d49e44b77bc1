#include "affschur/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace affschur {

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  Rational d = o.norm();
  if (sgn(d) == 0) throw std::domain_error("division by zero scalar");
  Rational r = (re * o.re + im * o.im) / d;
  Rational i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::complex<long double> ComplexRational::to_complex() const {
  // mpq -> double loses range for huge values; desk-scale inputs only.
  return {static_cast<long double>(re.get_d()), static_cast<long double>(im.get_d())};
}

namespace {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

ComplexRational parse_scalar(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw std::invalid_argument("empty scalar");
  text = text.substr(first, last - first + 1);
  if (text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unterminated complex scalar");
    auto inner = text.substr(1, text.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("complex scalar needs (re,im)");
    return {parse_rational(inner.substr(0, comma)), parse_rational(inner.substr(comma + 1))};
  }
  return {parse_rational(text)};
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re);
  return "(" + to_string(z.re) + "," + to_string(z.im) + ")";
}

Rational rational_from_long_double(long double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value");
  int exp = 0;
  long double mant = std::frexp(x, &exp);
  // 64 mantissa bits cover the x87 long double format.
  auto scaled = static_cast<long long>(std::ldexp(mant, 62));
  exp -= 62;
  Rational q{Integer(static_cast<long>(scaled))};
  if (exp > 0) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(exp));
    q *= f;
  } else if (exp < 0) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    q /= f;
  }
  q.canonicalize();
  return q;
}

}  // namespace affschur
