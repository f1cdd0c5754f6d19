#ifndef SLN_RANDOM_HPP
#define SLN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "sln/fields.hpp"

namespace sln {

/// Seeded deterministic RNG. Draws go through explicit modulo reduction
/// rather than std::uniform_int_distribution, whose output sequence is
/// implementation-defined; certificates must reproduce exactly from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish value in [0, bound). Modulo bias is irrelevant here: every
  /// accepted sample is certified downstream, only determinism matters.
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

/// Nonzero sample used by the randomized generator search: a small positive
/// integer over the rationals, a uniform nonzero residue over F_p.
template <class S>
S sample_unit(Rng& rng, const FieldSpec& field);

inline constexpr std::int64_t kRationalSampleWindow = 65536;

template <>
inline Rational sample_unit<Rational>(Rng& rng, const FieldSpec&) {
  return Rational(rng.int_in(1, kRationalSampleWindow));
}

template <>
inline Fp sample_unit<Fp>(Rng& rng, const FieldSpec& field) {
  return Fp(rng.int_in(1, field.modulus() - 1), field.modulus());
}

/// Any field element, zero included.
template <class S>
S sample_scalar(Rng& rng, const FieldSpec& field);

template <>
inline Rational sample_scalar<Rational>(Rng& rng, const FieldSpec&) {
  return Rational(rng.int_in(-kRationalSampleWindow, kRationalSampleWindow));
}

template <>
inline Fp sample_scalar<Fp>(Rng& rng, const FieldSpec& field) {
  return Fp(rng.int_in(0, field.modulus() - 1), field.modulus());
}

}  // namespace sln

#endif  // SLN_RANDOM_HPP
