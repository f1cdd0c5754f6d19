#ifndef SLN_FIELDS_HPP
#define SLN_FIELDS_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "sln/errors.hpp"

namespace sln {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator; zero is 0/1.
using Rational = boost::multiprecision::mpq_rational;

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of the coefficient domain: the rationals or F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

  static FieldSpec prime_field(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !detail::is_prime(p))
      throw Error("modulus must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
  }

  FieldKind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t characteristic() const { return modulus_; }

  bool operator==(const FieldSpec&) const = default;

  /// "q" for the rationals, "fp:<p>" for prime fields. The CLI wire format.
  std::string name() const {
    return kind_ == FieldKind::Rationals ? "q" : "fp:" + std::to_string(modulus_);
  }

  static FieldSpec parse(std::string_view text) {
    if (text == "q") return rationals();
    if (text.starts_with("fp:")) {
      std::int64_t p = 0;
      const char* first = text.data() + 3;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, p);
      if (ec != std::errc{} || ptr != last)
        throw ParseError("bad field spec: " + std::string(text));
      return prime_field(p);
    }
    throw ParseError("bad field spec: " + std::string(text) + " (expected \"q\" or \"fp:<p>\")");
  }

 private:
  FieldSpec(FieldKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::int64_t modulus_;
};

/// Prime-field scalar. Each value carries its modulus so mixed-field
/// arithmetic is detected at runtime. A default-constructed value (or one made
/// from a bare integer literal, as Eigen does for zero/identity fills) has
/// modulus 0 and adopts the modulus of the first bound operand it meets.
class Fp {
 public:
  Fp() : r_(0), p_(0) {}
  Fp(long long v) : r_(v), p_(0) {}  // NOLINT(google-explicit-constructor): literals must convert
  Fp(long long v, std::int64_t p) : r_(normalize(v, p)), p_(p) {}

  std::int64_t residue() const { return r_; }
  std::int64_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }

  Fp bound_to(std::int64_t p) const { return Fp(r_, p); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::int64_t p = merged_modulus(a, b);
    return from_raw(a.raw(p) + b.raw(p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::int64_t p = merged_modulus(a, b);
    return from_raw(a.raw(p) - b.raw(p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::int64_t p = merged_modulus(a, b);
    return from_raw(static_cast<__int128>(a.raw(p)) * b.raw(p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp operator-() const { return p_ ? Fp(p_ - r_, p_) : Fp(-r_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp inverse() const {
    if (!bound()) {
      if (r_ == 1 || r_ == -1) return *this;
      if (r_ == 0) throw DivisionByZero();
      throw Error("cannot invert an unbound prime-field value");
    }
    if (r_ == 0) throw DivisionByZero();
    // extended Euclid for r_^{-1} mod p_
    std::int64_t t = 0, new_t = 1, r = p_, new_r = r_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return Fp(t, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw FieldMismatch("comparing residues with moduli " + std::to_string(a.p_) +
                          " and " + std::to_string(b.p_));
    std::int64_t p = a.p_ ? a.p_ : b.p_;
    return a.raw(p) == b.raw(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.residue();
  }

 private:
  static std::int64_t normalize(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    return v;
  }

  static std::int64_t merged_modulus(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw FieldMismatch("mixing residues with moduli " + std::to_string(a.p_) +
                          " and " + std::to_string(b.p_));
    return a.p_ ? a.p_ : b.p_;
  }

  std::int64_t raw(std::int64_t p) const { return p ? normalize(r_, p) : r_; }

  static Fp from_raw(__int128 v, std::int64_t p) {
    if (p) return Fp(static_cast<std::int64_t>(v % p), p);
    if (v > INT64_MAX || v < INT64_MIN)
      throw Error("unbound prime-field arithmetic overflowed");
    return Fp(static_cast<std::int64_t>(v));
  }

  std::int64_t r_;
  std::int64_t p_;
};

/// Multiplicative inverse; throws DivisionByZero on zero input.
inline Rational inverse_of(const Rational& x) {
  if (x == 0) throw DivisionByZero();
  return Rational(1) / x;
}

inline Fp inverse_of(const Fp& x) { return x.inverse(); }

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Fp& x) { return x.residue() == 0 || x == Fp(0); }

// --- text encoding -----------------------------------------------------
//
// Rationals print as "a/b" or "a", prime-field elements as their decimal
// residue. This is the scalar wire format used by the matrix JSON encoding.

inline std::string scalar_to_string(const Rational& x) { return x.str(); }
inline std::string scalar_to_string(const Fp& x) { return std::to_string(x.residue()); }

namespace detail {

inline bool valid_rational_text(std::string_view s) {
  std::size_t i = 0, digits = 0;
  bool slash_seen = false;
  if (i < s.size() && s[i] == '-') ++i;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      ++digits;
    } else if (s[i] == '/' && !slash_seen && digits > 0) {
      slash_seen = true;
      digits = 0;
      if (i + 1 < s.size() && s[i + 1] == '-') ++i;
    } else {
      return false;
    }
  }
  return digits > 0;
}

}  // namespace detail

template <class S>
S scalar_from_string(std::string_view text, const FieldSpec& field);

template <>
inline Rational scalar_from_string<Rational>(std::string_view text, const FieldSpec& field) {
  if (field.kind() != FieldKind::Rationals)
    throw FieldMismatch("rational scalar requested for a prime field");
  if (!detail::valid_rational_text(text))
    throw ParseError("bad rational: \"" + std::string(text) + "\"");
  Rational r{std::string(text)};
  if (denominator(r) == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  mpq_canonicalize(r.backend().data());
  return r;
}

template <>
inline Fp scalar_from_string<Fp>(std::string_view text, const FieldSpec& field) {
  if (field.kind() != FieldKind::PrimeField)
    throw FieldMismatch("prime-field scalar requested for the rationals");
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("bad residue: \"" + std::string(text) + "\"");
  return Fp(v, field.modulus());
}

}  // namespace sln

namespace Eigen {

template <>
struct NumTraits<sln::Fp> {
  typedef sln::Fp Real;
  typedef sln::Fp NonInteger;
  typedef sln::Fp Nested;
  typedef sln::Fp Literal;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 9
  };

  static inline Real epsilon() { return sln::Fp(0); }
  static inline Real dummy_precision() { return sln::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SLN_FIELDS_HPP
