#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals for characteristic 0,
// and helpers for reducing p-integral rationals into F_p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "flagsplit/errors.hpp"

namespace flagsplit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) { return r.str(); }

// --- F_p scalar helpers (p a small prime, fits in uint32) ---------------

inline uint32_t add_p(uint32_t a, uint32_t b, uint32_t p) {
  uint64_t s = uint64_t(a) + b;
  return uint32_t(s >= p ? s - p : s);
}

inline uint32_t sub_p(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t mul_p(uint32_t a, uint32_t b, uint32_t p) {
  return uint32_t((uint64_t(a) * b) % p);
}

inline uint32_t neg_p(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

uint32_t inv_p(uint32_t a, uint32_t p);  // extended Euclid; throws on a == 0

// Reduce an integer mod p into 0..p-1.
inline uint32_t mod_p(const Int& n, uint32_t p) {
  Int r = n % p;
  if (r < 0) r += p;
  return uint32_t(r);
}

// Reduce a p-integral rational mod p; throws InternalError if p divides the
// denominator (the caller is expected to have checked p-integrality).
inline uint32_t mod_p(const Rational& r, uint32_t p) {
  uint32_t den = mod_p(Int(denominator(r)), p);
  if (den == 0)
    throw InternalError("rational with denominator divisible by p=" + std::to_string(p));
  return mul_p(mod_p(Int(numerator(r)), p), inv_p(den, p), p);
}

inline bool is_p_integral(const Rational& r, uint32_t p) {
  return denominator(r) % p != 0;
}

bool is_prime(uint32_t n);

}  // namespace flagsplit
