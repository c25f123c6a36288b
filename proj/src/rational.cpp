#include "asymgauge/rational.hpp"

#include <cctype>
#include <ostream>

namespace asymgauge {

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // mpq_set_str accepts whitespace and some exotic forms; pre-validate to a
  // strict [-]digits[/digits] grammar so round-trips stay bit-exact.
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t num_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++num_digits;
  }
  if (num_digits == 0) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != s.size()) return std::nullopt;
  }
  Rational r;
  if (mpq_set_str(r.v_, std::string(s).c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(r.v_)) == 0) return std::nullopt;  // "p/0"
  mpq_canonicalize(r.v_);
  return r;
}

std::optional<Rational> Rational::parse_decimal(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return parse(s);
  std::string_view head = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  if (frac.empty() || frac.find('/') != std::string_view::npos)
    return std::nullopt;
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  bool negative = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '-' || head[0] == '+'))
    head.remove_prefix(1);
  if (head.empty() && frac.empty()) return std::nullopt;
  for (char c : head)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;

  std::string digits = std::string(head) + std::string(frac);
  auto integral = parse(digits.empty() ? "0" : digits);
  if (!integral) return std::nullopt;
  Rational scale(1);
  for (std::size_t k = 0; k < frac.size(); ++k) scale *= Rational(10);
  Rational r = *integral / scale;
  return negative ? -r : r;
}

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, v_);
  std::string out(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace asymgauge
