#include "alphacalc/rat.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  mpz_class v(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

Rat Rat::from_double(double d) {
  if (!std::isfinite(d)) throw InputError("non-finite value");
  return Rat(mpq_class(d));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return Rat(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

Rat factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

long gcd_index(long a, long b) { return std::gcd(a, b); }

long lcm_index(long a, long b) { return std::lcm(a, b); }

long to_index(const Rat& r) {
  if (!r.is_integer()) throw InputError("expected an integer, got " + r.str());
  const mpz_class n = r.num();
  if (!n.fits_slong_p()) throw InputError("integer out of range: " + r.str());
  return n.get_si();
}

}  // namespace alphacalc
