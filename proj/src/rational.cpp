#include "frobcrit/rational.hpp"

#include <charconv>

#include "frobcrit/error.hpp"

namespace frobcrit {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error("invalid rational \"" + std::string(whole) + "\"");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::int64_t ceil(const Rational& q) {
  auto n = q.numerator();
  auto d = q.denominator();
  auto f = n / d;
  if (n % d != 0 && n > 0) ++f;
  return f;
}

bool is_integral(const Rational& q) { return q.denominator() == 1; }

}  // namespace frobcrit
