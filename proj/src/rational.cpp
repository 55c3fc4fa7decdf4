#include "costfair/rational.hpp"

#include <cctype>

namespace costfair {

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  std::string_view head = text;
  std::string_view tail;
  char sep = 0;
  if (auto pos = text.find_first_of("/."); pos != std::string_view::npos) {
    sep = text[pos];
    head = text.substr(0, pos);
    tail = text.substr(pos + 1);
  }

  if (!all_digits(head)) return std::nullopt;
  Rat value;
  if (sep == 0) {
    value = Rat(mpz_class(std::string(head), 10));
  } else if (sep == '/') {
    if (!all_digits(tail)) return std::nullopt;
    mpz_class den(std::string(tail), 10);
    if (den == 0) return std::nullopt;
    value = Rat(mpz_class(std::string(head), 10), den);
    value.canonicalize();
  } else {  // decimal point
    if (!all_digits(tail)) return std::nullopt;
    mpz_class scaled(std::string(head) + std::string(tail), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
    value = Rat(scaled, den);
    value.canonicalize();
  }
  if (negative) value = -value;
  return value;
}

std::string format_rat(const Rat& value) { return value.get_str(); }

std::string format_fixed2(const Rat& value) {
  // Round value*100 half-to-even to an integer number of cents.
  Rat scaled = value * 100;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
              scaled.get_den().get_mpz_t());
  mpz_class twice_r = 2 * r;
  int c = ::cmp(twice_r, scaled.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  bool negative = q < 0;
  mpz_class cents = negative ? mpz_class(-q) : q;
  mpz_class whole = cents / 100;
  mpz_class frac = cents % 100;
  std::string frac_str = frac.get_str();
  if (frac_str.size() < 2) frac_str.insert(frac_str.begin(), 2 - frac_str.size(), '0');
  return (negative ? "-" : "") + whole.get_str() + "." + frac_str;
}

}  // namespace costfair
