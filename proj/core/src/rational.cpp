#include "monoflow/rational.hpp"

#include <charconv>

#include "monoflow/errors.hpp"

namespace monoflow {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(0, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t floor_of(const Rational& r) {
  std::int64_t n = r.numerator();
  std::int64_t d = r.denominator();
  std::int64_t q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

Rational mod_positive(const Rational& r, const Rational& m) {
  return r - m * Rational(floor_of(r / m));
}

}  // namespace monoflow
