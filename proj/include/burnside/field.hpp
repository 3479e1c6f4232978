#pragma once

/* Exact scalar types.
 *
 * Every computation in the library is parameterised over a field K.
 * Two models are provided: Rational (arbitrary precision, the default)
 * and Fp (prime field with a process-global modulus, used for
 * cross-checks).  A scalar serialises to a string: "p/q" with q > 0 and
 * gcd(p, q) = 1, plain "p" when the denominator is 1, "0" for zero.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace burnside {

template <class K>
concept Field = std::regular<K> && requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
};

using Rational = boost::multiprecision::cpp_rational;

template <Field K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string name() { return "Q"; }
  static std::uint64_t characteristic() { return 0; }

  static std::string str(const Rational& x) {
    if (x.is_zero()) return "0";
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos)
        return Rational(boost::multiprecision::cpp_int(s));
      boost::multiprecision::cpp_int num(s.substr(0, slash));
      boost::multiprecision::cpp_int den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
};

/* Prime field.  The modulus is global per computation session: call
 * Fp::set_modulus once before building any Fp values.  Safe to read
 * concurrently once set. */
class Fp {
 public:
  Fp() : v_(0) {}
  explicit Fp(long n) { v_ = norm(n % static_cast<long>(modulus())); }

  static void set_modulus(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus must be a prime");
    modulus_ref() = p;
  }

  static std::uint64_t modulus() {
    if (modulus_ref() == 0)
      throw std::logic_error("Fp modulus not set");
    return modulus_ref();
  }

  std::int64_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return raw(norm(a.v_ + b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return raw(norm(a.v_ - b.v_)); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::int64_t>(
        static_cast<__int128>(a.v_) * b.v_ % static_cast<std::int64_t>(modulus())));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(norm(-v_)); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in Fp");
    // extended euclid on (v, p)
    std::int64_t a = v_, b = static_cast<std::int64_t>(modulus());
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return raw(norm(x0));
  }

 private:
  static Fp raw(std::int64_t v) { Fp r; r.v_ = v; return r; }
  static std::int64_t norm(std::int64_t v) {
    auto p = static_cast<std::int64_t>(modulus());
    v %= p;
    return v < 0 ? v + p : v;
  }
  static std::uint64_t& modulus_ref() {
    static std::uint64_t p = 0;
    return p;
  }
  std::int64_t v_;
};

template <>
struct FieldOps<Fp> {
  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }
  static Fp from_int(long n) { return Fp(n); }
  static bool is_zero(const Fp& x) { return x.value() == 0; }
  static std::string name() { return "Fp:" + std::to_string(Fp::modulus()); }
  static std::uint64_t characteristic() { return Fp::modulus(); }

  static std::string str(const Fp& x) { return std::to_string(x.value()); }

  static Fp parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Fp(std::stol(s));
      Fp num(std::stol(s.substr(0, slash)));
      Fp den(std::stol(s.substr(slash + 1)));
      return num / den;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field literal: " + s);
    }
  }
};

template <Field K> K k_zero() { return FieldOps<K>::zero(); }
template <Field K> K k_one() { return FieldOps<K>::one(); }
template <Field K> K k_int(long n) { return FieldOps<K>::from_int(n); }
template <Field K> bool k_is_zero(const K& x) { return FieldOps<K>::is_zero(x); }
template <Field K> std::string k_str(const K& x) { return FieldOps<K>::str(x); }

}  // namespace burnside
