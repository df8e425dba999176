#include "capcone/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace capcone {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // tolerate surrounding whitespace, nothing else
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  s = s.substr(first, last - first + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  Int p(num), q(den);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  }
  Rat r(p, q);
  return negative ? Rat(-r) : r;
}

std::string format_rational(const Rat& value) {
  std::ostringstream os;
  os << value;  // cpp_rational streams as "p/q", or "p" when q == 1
  return os.str();
}

Int rat_ceil(const Rat& value) {
  const Int p = numerator(value);
  const Int q = denominator(value);  // > 0
  Int d = p / q;                     // truncates toward zero
  if (p > 0 && p % q != 0) ++d;
  return d;
}

}  // namespace capcone
