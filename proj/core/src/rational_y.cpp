#include "romlab/rational_y.hpp"

#include <cctype>
#include <stdexcept>

namespace romlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_digits(std::string_view s) {
  return mpz_class(std::string(s), 10);
}

}  // namespace

RationalY::RationalY(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 1) {
    throw std::invalid_argument("y must exceed 1 (got " + value_.get_str() + ")");
  }
}

std::string RationalY::str() const { return value_.get_str(); }

RationalY parse_y(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty y");

  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction: " + std::string(text));
    }
    mpz_class d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return RationalY(mpq_class(parse_digits(num), d));
  }
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = parse_digits(whole) * scale + parse_digits(frac);
    return RationalY(mpq_class(num, scale));
  }
  if (!all_digits(text)) {
    throw std::invalid_argument("malformed y: " + std::string(text));
  }
  return RationalY(mpq_class(parse_digits(text)));
}

}  // namespace romlab
