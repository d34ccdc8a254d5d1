#include "diffset/rational.hpp"

#include <cctype>

#include "diffset/errors.hpp"

namespace diffset {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool negative = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip = "0";
    BigInt whole = parse_integer(ip, text);
    if (whole < 0) whole = -whole;
    BigInt frac = 0, scale = 1;
    for (char c : fp) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("malformed rational '" + std::string(text) + "'");
      frac = frac * 10 + (c - '0');
      scale *= 10;
    }
    Rational r = Rational(whole) + Rational(frac, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

static std::int64_t narrow(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InputError(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t numerator_i64(const Rational& r) { return narrow(numerator(r), "numerator"); }
std::int64_t denominator_i64(const Rational& r) { return narrow(denominator(r), "denominator"); }

std::int64_t floor_i64(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return narrow(q, "floor");
}

bool fraction_greater(std::int64_t hits, std::int64_t den, std::int64_t rnum, std::int64_t rden) {
  return static_cast<__int128>(hits) * rden > static_cast<__int128>(rnum) * den;
}

bool fraction_greater_equal(std::int64_t hits, std::int64_t den, std::int64_t rnum,
                            std::int64_t rden) {
  return static_cast<__int128>(hits) * rden >= static_cast<__int128>(rnum) * den;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace diffset
