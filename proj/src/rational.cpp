#include "lefschetz/rational.hpp"

#include <ostream>

namespace lefschetz {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::size_t start = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!all_digits(num, start, num.size()))
    throw RationalParseError("not a rational literal: '" + text + "' (expected p or p/q)");
  mpz_class n(num, 10);
  mpz_class d(1);
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!all_digits(den, 0, den.size()))
      throw RationalParseError("not a rational literal: '" + text + "' (expected p or p/q)");
    d = mpz_class(den, 10);
    if (d == 0) throw RationalParseError("zero denominator in '" + text + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lefschetz
