#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arithk {

using Rational = mpq_class;
using Integer = mpz_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

// v_p(q) >= 0, i.e. p does not divide the denominator of q.
bool is_integral_at(const Rational& q, unsigned long p);

/// An element of Q(zeta_n), stored as a length-n coefficient vector over Q in
/// the power basis and kept reduced modulo the n-th cyclotomic polynomial, so
/// that entries at indices >= phi(n) are always zero. Equality of elements of
/// the same order is equality of coefficient vectors.
class CycNum {
 public:
  CycNum() : order_(1), c_(1) {}
  explicit CycNum(const Rational& q) : order_(1), c_{q} {}
  explicit CycNum(long v) : order_(1), c_{Rational(v)} {}

  static CycNum zeta(unsigned long n, long power = 1);
  // Takes a raw length-n vector (or shorter), reduces it to canonical form.
  static CycNum from_coeffs(unsigned long n, std::vector<Rational> coeffs);

  unsigned long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // The rational value, if the element lies in Q.
  std::optional<Rational> as_rational() const;

  // Rewrites the element in Q(zeta_m), for order() | m.
  CycNum embedded(unsigned long m) const;
  // Attempts to rewrite in Q(zeta_d) for d | order(); empty if not a member.
  std::optional<CycNum> descended(unsigned long d) const;
  // Smallest d | order() with the element in Q(zeta_d).
  unsigned long minimal_order() const;
  CycNum minimized() const;

  // The automorphism zeta_n -> zeta_n^k; requires gcd(k, order) = 1.
  CycNum galois(long k) const;
  CycNum conj() const { return order_ == 1 ? *this : galois(-1); }

  std::complex<double> complex_value() const;

  CycNum inverse() const;  // throws std::domain_error on zero

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  CycNum pow(long e) const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // Total order on canonical forms (order first, then lexicographic on
  // coefficients); used only to sort outputs deterministically.
  static int compare(const CycNum& a, const CycNum& b);

  // True if the element is q * zeta^i for some rational q; returns (i, q).
  std::optional<std::pair<unsigned long, Rational>> as_monomial() const;

  std::string to_string() const;

 private:
  unsigned long order_;
  std::vector<Rational> c_;
};

// Cached reduction data for a fixed order n: the cyclotomic polynomial and
// the expansions of x^i mod Phi_n for phi(n) <= i < n.
struct CycTable {
  unsigned long n = 1;
  unsigned long phi = 1;
  std::vector<Integer> min_poly;               // Phi_n, degree phi, monic
  std::vector<std::vector<Integer>> reduction; // reduction[i-phi] has length phi
};

const CycTable& cyc_table(unsigned long n);

// Phi_n as integer coefficients (degree phi(n), monic).
std::vector<Integer> cyclotomic_polynomial(unsigned long n);

// Exact determinant of a square CycNum matrix (Gaussian elimination over the
// field generated by all entries).
CycNum cyc_matrix_det(std::vector<std::vector<CycNum>> m);

// Solves M x = rhs for square invertible M; throws if singular.
std::vector<CycNum> cyc_solve(std::vector<std::vector<CycNum>> m, std::vector<CycNum> rhs);

}  // namespace arithk
