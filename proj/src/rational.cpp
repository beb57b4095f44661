#include "filaff/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace filaff {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  // strip surrounding whitespace
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s = text.substr(b, e - b);
  if (s.empty()) throw std::invalid_argument("empty scalar");

  const auto check_part = [&](const std::string& part, const char* what) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
    if (i == part.size())
      throw std::invalid_argument(std::string("missing digits in ") + what +
                                  " of '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument(std::string("invalid character in ") +
                                    what + " of '" + s + "'");
  };

  // mpz_class's string constructor rejects a leading '+'
  const auto drop_plus = [](const std::string& part) {
    return (!part.empty() && part[0] == '+') ? part.substr(1) : part;
  };

  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    check_part(s, "numerator");
    Rational q(mpz_class(drop_plus(s), 10));
    return q;
  }
  if (s.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("more than one '/' in '" + s + "'");
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_part(num, "numerator");
  check_part(den, "denominator");
  if (!den.empty() && (den[0] == '+' || den[0] == '-'))
    throw std::invalid_argument("sign not allowed in denominator of '" + s +
                                "'");
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(mpz_class(drop_plus(num), 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1;
}

}  // namespace filaff
