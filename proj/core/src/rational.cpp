#include "diosum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace diosum {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: " + std::string(s));
  BigInt z(std::string(s), 10);
  return neg ? BigInt(-z) : z;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// sign? digits [. digits] [(e|E) sign? digits]
Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) throw std::invalid_argument("bad exponent in: " + original);
    exponent = std::stol(std::string(es));
    if (eneg) exponent = -exponent;
  }
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("not a number: " + original);
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    throw std::invalid_argument("not a number: " + original);
  std::string digits = std::string(int_part) + std::string(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  Rational q(BigInt(digits, 10));
  if (exponent >= 0) {
    q *= pow10(static_cast<unsigned long>(exponent));
  } else {
    q /= pow10(static_cast<unsigned long>(-exponent));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::uint64_t parse_count(std::string_view text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1 || q < 1)
    throw std::invalid_argument("expected a positive integer: " + std::string(text));
  return to_u64(q.get_num());
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::uint64_t to_u64(const BigInt& z) {
  if (sgn(z) < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
    throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) {
  Rational r = q - Rational(floor(q));
  r.canonicalize();
  return r;
}

}  // namespace diosum
