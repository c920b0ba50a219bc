#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_e). A value of conductor e is
// stored as its coordinates in the power basis 1, z, ..., z^(phi(e)-1) of
// Q[z]/(Phi_e). Mixed-conductor operands are promoted to the lcm conductor.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace stacky::cyclo {

using Rational = mpq_class;

/// num/den in lowest terms.
Rational make_rational(long num, long den);

std::size_t euler_phi(std::size_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first. Results are memoised behind a mutex.
const std::vector<long long>& cyclotomic_polynomial(std::size_t n);

class Cyclotomic {
public:
  Cyclotomic();  // zero
  Cyclotomic(long long value);  // NOLINT: rationals embed implicitly
  Cyclotomic(const Rational& value);  // NOLINT

  /// zeta_conductor^power.
  static Cyclotomic zeta(std::size_t conductor, long long power = 1);
  /// Reduces sum_k coeffs[k] zeta^k modulo Phi_conductor; any length allowed.
  static Cyclotomic from_powers(std::size_t conductor, std::vector<Rational> coeffs);

  std::size_t conductor() const noexcept { return conductor_; }
  /// Power-basis coordinates, length phi(conductor()).
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Same value written over Q(zeta_target); requires conductor() | target.
  Cyclotomic promote(std::size_t target) const;

  bool is_zero() const;
  bool is_rational() const;
  /// The constant coordinate; equals the value when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Readable form, e.g. "-1 - E(3)" or "1/2*E(4)"; E(n)^k denotes zeta_n^k.
  std::string to_string() const;

private:
  Cyclotomic(std::size_t conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  std::size_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Complex conjugation, zeta -> zeta^-1.
Cyclotomic conj(const Cyclotomic& x);

/// Lexicographic order on coordinates after promoting both sides to
/// `conductor` (which both conductors must divide). Used for canonical
/// sorting of table rows.
int compare_at(const Cyclotomic& a, const Cyclotomic& b, std::size_t conductor);

}  // namespace stacky::cyclo
