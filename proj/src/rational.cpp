#include "simplotope/rational.hpp"

#include <cctype>

namespace spt {

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto check_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!check_int(text)) throw std::invalid_argument("bad integer");
      return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!check_int(num) || !check_int(den)) throw std::invalid_argument("bad fraction");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(Integer(num), d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p[i]);
  }
  return out + ")";
}

}  // namespace spt
