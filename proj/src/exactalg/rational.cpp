#include "scoin/exactalg/rational.hpp"

#include <stdexcept>

namespace scoin::exact {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("Rational::parse: bad rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("Rational::to_int64: not an integer: " + to_string());
  const mpz_class& z = v_.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("Rational::to_int64: overflow");
  return z.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace scoin::exact
