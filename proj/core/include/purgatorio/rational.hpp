#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace purgatorio {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. This is the scalar of ExactRational mode.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& n) : q_(n) {}

  /// Parses "p/q" or a bare integer "p". Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  /// Serializes as "p/q" in lowest terms (integers included, e.g. "3/1").
  std::string str() const;

  double to_double() const { return q_.get_d(); }

  /// Bit length of the larger of |numerator| and denominator.
  std::size_t bit_size() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}  // assumes canonical

  mpq_class q_;
};

/// 2^e as an exact rational; e may be negative.
Rational rational_pow2(long e);

/// x^e for integer e >= 0.
Rational rational_pow(const Rational& x, unsigned long e);

/// Shortest round-trip decimal representation of an IEEE-754 double.
std::string double_str(double x);
std::optional<double> double_parse(std::string_view text);

/// The scalar contract shared by the two numeric modes. Arithmetic and
/// comparisons go through the scalar's own operators; this trait supplies
/// construction, serialization and the mode's few policy constants.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool kExact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational ratio(long num, long den) { return Rational(num, den); }
  static Rational pow2(long e) { return rational_pow2(e); }
  // Exponent cap for dyadic probabilities; exact mode has none.
  static constexpr long kMaxDyadicExponent = std::numeric_limits<long>::max();
  static double to_double(const Rational& x) { return x.to_double(); }
  static std::string str(const Rational& x) { return x.str(); }
  static std::optional<Rational> parse(std::string_view t) { return Rational::parse(t); }
  static std::size_t bit_size(const Rational& x) { return x.bit_size(); }
};

template <>
struct ScalarOps<double> {
  static constexpr bool kExact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static double pow2(long e);
  static constexpr long kMaxDyadicExponent = 1000;
  static double to_double(double x) { return x; }
  static std::string str(double x) { return double_str(x); }
  static std::optional<double> parse(std::string_view t) { return double_parse(t); }
  static std::size_t bit_size(double) { return 64; }
};

template <class S>
S scalar_abs(const S& x) {
  return x < ScalarOps<S>::zero() ? -x : x;
}

}  // namespace purgatorio
