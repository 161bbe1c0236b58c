#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bredonk {

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(unsigned e);

/// Exact element of the cyclotomic field Q(zeta_e).
///
/// Stored as a length-e coefficient vector over the powers zeta_e^k, kept
/// reduced modulo Phi_e, so only the first phi(e) slots can be nonzero and
/// equality of reduced vectors is equality of field elements. Values with
/// different conductors are lifted to the lcm before any binary operation.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(long value) : conductor_(1), coeffs_{mpq_class(value)} {}  // NOLINT(implicit)
  Cyclotomic(mpq_class value) : conductor_(1), coeffs_{std::move(value)} {}  // NOLINT(implicit)

  /// Builds sum_k coeffs[k] * zeta_e^k and reduces it.
  Cyclotomic(unsigned conductor, std::vector<mpq_class> coeffs);

  static Cyclotomic root_of_unity(unsigned conductor, unsigned k);

  unsigned conductor() const noexcept { return conductor_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  /// Same value, expressed in Q(zeta_target). `target` must be a multiple of
  /// the current conductor.
  Cyclotomic lift_to(unsigned target) const;

  /// Complex conjugation: zeta -> zeta^-1.
  Cyclotomic conjugate() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_rational_integer() const;
  /// Throws NonRationalProduct when the value is irrational.
  mpq_class to_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  /// Lexicographic on reduced coefficient vectors after lifting to a common
  /// conductor.
  int compare(const Cyclotomic& o) const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.compare(b) == 0; }
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.compare(b) < 0; }

  /// Integers and rationals print plainly; otherwise a polynomial in zN,
  /// e.g. "-1 - 2*z3" for -1 - 2*zeta_3.
  std::string to_string() const;

 private:
  void reduce();

  unsigned conductor_;
  std::vector<mpq_class> coeffs_;
};

}  // namespace bredonk
