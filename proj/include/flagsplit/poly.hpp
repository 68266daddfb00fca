#pragma once

// Exact sparse multivariate polynomials over Q, in a fixed small number of
// variables x1..xn (n <= 8). Everything the Schubert-basis machinery needs:
// arithmetic, substitution by integer matrices, exact division by a linear
// form, and the p-th power derivation used for Steenrod representatives.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flagsplit/errors.hpp"
#include "flagsplit/linalg.hpp"
#include "flagsplit/rational.hpp"

namespace flagsplit {

constexpr int kMaxVars = 8;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

// Canonical term order: total degree ascending; within a degree an
// "elimination" order that puts high-index-variable-heavy monomials first.
// Using the non-pivot columns of a row echelon form as the quotient section
// then leaves x1-heavy monomials as section representatives (x1, x1^2,
// x1*x2, ...), matching standard Schubert representative conventions.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);  // x_{i+1}, 0-based index

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly operator-() const;
  Poly scaled(const Rational&) const;
  bool operator==(const Poly&) const = default;

  // Is the polynomial homogeneous? If so and deg != nullptr, report degree.
  bool homogeneous(int* deg = nullptr) const;

  // Substitute x_j -> sum_k M(j,k) x_k (M is nvars x nvars).
  Poly substituted(const IMat& M) const;

  // Exact division by a linear form sum_k form[k] x_k; throws InternalError
  // if the division leaves a remainder.
  Poly divided_by_linear(const std::vector<long long>& form) const;

  // The derivation x_i -> x_i^p extended by the Leibniz rule: the polynomial
  // representative of the Steenrod operation P^1 (p odd) or Sq^2 (p = 2) on
  // an algebra generated by degree-2 variables.
  Poly power_derivation(uint32_t p) const;

  // If every coefficient is integral, true.
  bool integral() const;
  bool p_integral(uint32_t p) const;

  std::string str() const;  // canonical human-readable form, e.g. "x1^2*x2 - 2*x2*x3"

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational, MonomialOrder> terms_;
};

// All monomials of the given total degree, in MonomialOrder.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Elementary symmetric polynomial e_k(x1..xn).
Poly elementary_symmetric(int nvars, int k);

}  // namespace flagsplit
