#include "indexcap/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "indexcap/error.hpp"

namespace indexcap {

namespace {

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed number '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InputError("malformed number '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

}  // namespace

std::string to_pq_string(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rat parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0)
                                                               : parse_integer(whole);
    if (frac.empty()) return Rat(w);
    BigInt f = parse_integer(frac);
    if (f < 0) throw InputError("malformed number '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rat out = Rat(w) + Rat(f, scale) * (negative ? -1 : 1);
    return out;
  }
  return Rat(parse_integer(text));
}

std::string to_decimal(const Rat& r, int digits) {
  Rat a = r < 0 ? Rat(-r) : r;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = boost::multiprecision::numerator(a) * scale /
                  boost::multiprecision::denominator(a);
  std::string s = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (r < 0 ? "-" : "") + s;
}

Rat pow(const Rat& base, unsigned exp) {
  Rat result = 1;
  Rat b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

BigInt ceil(const Rat& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) q += 1;
  return q;
}

}  // namespace indexcap
