#include "purgatorio/rational.hpp"

#include <array>
#include <cmath>

namespace purgatorio {

namespace {

bool looks_like_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!looks_like_integer(num) || !looks_like_integer(den)) return std::nullopt;
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (sgn(d) == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::bit_size() const {
  std::size_t n = mpz_sizeinbase(mpq_numref(q_.get_mpq_t()), 2);
  std::size_t d = mpz_sizeinbase(mpq_denref(q_.get_mpq_t()), 2);
  return n > d ? n : d;
}

Rational rational_pow2(long e) {
  BigInt num = 1;
  BigInt den = 1;
  if (e >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-e));
  return Rational(num, den);
}

Rational rational_pow(const Rational& x, unsigned long e) {
  Rational acc(1);
  Rational base = x;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    e >>= 1UL;
    if (e > 0) base *= base;
  }
  return acc;
}

double ScalarOps<double>::pow2(long e) {
  if (e < -kMaxDyadicExponent || e > kMaxDyadicExponent)
    throw std::domain_error("Float64 mode: 2^" + std::to_string(e) + " exceeds the dyadic exponent cap of 1000");
  return std::ldexp(1.0, static_cast<int>(e));
}

std::string double_str(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("double_str: to_chars failed");
  return std::string(buf.data(), ptr);
}

std::optional<double> double_parse(std::string_view text) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return out;
}

}  // namespace purgatorio
