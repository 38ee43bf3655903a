#include "planar_gw/rational.hpp"

#include <algorithm>
#include <cctype>

namespace planar_gw {

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string to_string(const BigInt& x) { return x.get_str(10); }

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace planar_gw
