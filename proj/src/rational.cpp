#include "severi/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace severi {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

}  // namespace severi
