#include "spingap/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "spingap/errors.hpp"

namespace spingap {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational harmonic_number(unsigned long n) {
  Rational h = 0;
  for (unsigned long k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return 1;
  if (base == 0 && exp < 0) fail(ErrorKind::OutOfRange, "0 to a negative power");
  const unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp)
                                  : static_cast<unsigned long>(exp);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  if (exp < 0) r = 1 / r;
  return r;
}

Rational pow2(long exp) { return pow_rational(Rational(2), exp); }

Rational pow10_rational(long exp) { return pow_rational(Rational(10), exp); }

Rational rational_from_decimal(std::string_view text) {
  const auto bad = [&]() -> Rational {
    fail(ErrorKind::InvalidField,
         "not a decimal number: '" + std::string(text) + "'");
  };
  size_t i = 0;
  const size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool any_digit = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any_digit = true;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      ++frac_len;
      any_digit = true;
    }
  }
  if (!any_digit) return bad();
  long exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i == n) return bad();
    long e = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      if (e > 100000) return bad();
    }
    exponent = exp_neg ? -e : e;
  }
  if (i != n) return bad();

  BigInt mantissa(digits.empty() ? "0" : digits);
  Rational value(mantissa);
  value *= pow10_rational(exponent - frac_len);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

bool has_terminating_decimal(const Rational& value) {
  BigInt den = value.get_den();
  for (int p : {2, 5}) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    }
  }
  return den == 1;
}

std::string decimal_from_rational(const Rational& value) {
  if (!has_terminating_decimal(value)) {
    fail(ErrorKind::InvalidField,
         "rational has no terminating decimal expansion");
  }
  if (value == 0) return "0";
  BigInt num = ::abs(value.get_num());
  BigInt den = value.get_den();
  // k = number of fractional digits: den | 10^k with k = max(a, b) for
  // den = 2^a 5^b.
  long a = 0, b = 0;
  BigInt d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    ++a;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++b;
  }
  const long k = std::max(a, b);
  BigInt scaled = num;
  for (long j = 0; j < k; ++j) scaled *= 10;
  scaled /= den;
  std::string s = scaled.get_str();
  std::string out;
  if (value < 0) out += '-';
  if (k == 0) {
    out += s;
    return out;
  }
  if (static_cast<long>(s.size()) <= k) {
    out += "0.";
    out += std::string(k - s.size(), '0');
    out += s;
  } else {
    out += s.substr(0, s.size() - k);
    out += '.';
    out += s.substr(s.size() - k);
  }
  // strip trailing fractional zeros, then a bare point
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

long ceil_log10(const Rational& value) {
  if (value <= 0) fail(ErrorKind::OutOfRange, "ceil_log10 needs a positive value");
  // Smallest k with 10^k >= value <=> den * 10^k >= num.
  const BigInt& num = value.get_num();
  const BigInt& den = value.get_den();
  // Start from the digit-count difference, then correct exactly.
  long k = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
  auto holds = [&](long c) {
    Rational bound = pow10_rational(c);
    return bound >= value;
  };
  while (!holds(k)) ++k;
  while (k > -1000000 && holds(k - 1)) --k;
  return k;
}

}  // namespace spingap
