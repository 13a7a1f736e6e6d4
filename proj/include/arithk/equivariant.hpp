#pragma once

#include <memory>
#include <vector>

#include "arithk/characters.hpp"
#include "arithk/dirichlet.hpp"
#include "arithk/local.hpp"

namespace arithk {

/// An element of the centre of Q^c[Gamma], stored through the idempotent
/// decomposition as one cyclotomic value per irreducible character. With all
/// components nonzero this is a unit of the centre; the same container also
/// serves as a character function in Hom-descriptions.
struct EqvMap {
  std::shared_ptr<const IrrTable> table;
  std::vector<CycNum> v;

  static EqvMap ones(std::shared_ptr<const IrrTable> t);

  const CycNum& at(unsigned chi) const { return v[chi]; }
  bool all_nonzero() const;

  // Multiplicative extension to virtual characters.
  CycNum at_virtual(const VirtualChar& phi) const;

  EqvMap operator*(const EqvMap& o) const;
  EqvMap operator/(const EqvMap& o) const;
  EqvMap inverse() const;
  EqvMap pow(long k) const;
  bool operator==(const EqvMap& o) const;

  // Galois equivariance: value at chi^omega equals omega applied to the value
  // at chi, for every omega in (Z/N)^x with N = lcm(exp Gamma, value orders).
  bool is_equivariant() const;
};

/// (m + n psi_{k,*})(x): component at chi is x_chi^m * x_{psi_k(chi)}^n.
EqvMap adams_twist(const EqvMap& x, long m, long n, long k);

/// J_k = (psi_{k,*} - k)(tau) together with the equivariance report.
struct GaloisJacobi {
  EqvMap value;
  bool rational;  // the equivariance criterion
};
GaloisJacobi galois_jacobi(const EqvMap& tau, long k);

/// The Galois group of an abelian extension L/Q presented inside a cyclotomic
/// field: L = Q(zeta_m)^H for a subgroup H of (Z/m)^x. Characters of the
/// quotient group correspond to the Dirichlet characters mod m trivial on H;
/// this match drives all Gauss-sum packages and resolvents.
class CycGaloisGroup {
 public:
  CycGaloisGroup(unsigned long m, std::vector<unsigned long> h_residues);
  static CycGaloisGroup full(unsigned long m) { return CycGaloisGroup(m, {1 % m}); }

  unsigned long conductor_field() const { return m_; }
  const std::vector<unsigned long>& subgroup_residues() const { return h_; }
  const FiniteGroup& gamma() const { return table_->group(); }
  std::shared_ptr<const IrrTable> table() const { return table_; }
  unsigned degree() const { return gamma().size(); }

  const DirichletChar& dirichlet(unsigned chi) const { return dirichlet_[chi]; }
  // The group element of Gamma attached to a residue prime to m.
  unsigned element_of_residue(unsigned long a) const;

  bool contains(const CycNum& b) const;            // fixed by H
  CycNum apply(unsigned g, const CycNum& b) const; // action of Gamma on L

  // Resolvent (b | chi) = sum_g g(b) chi(g)^{-1} at a linear character.
  CycNum resolvent(const CycNum& b, unsigned chi) const;

  std::vector<unsigned long> ramified_primes() const;
  RamificationDatum ramification(unsigned long p) const;
  bool weakly_ramified() const;

  // Equivariant Gauss-sum packages.
  EqvMap tau() const;        // chi -> gauss sum of the matching character
  EqvMap y() const;          // unramified characteristic package
  EqvMap tau_prime() const;  // tau * y^{-1}
  EqvMap tau_dagger() const; // tau_Q^Gamma * tau = tau for base field Q

 private:
  unsigned long m_;
  std::vector<unsigned long> h_;
  std::shared_ptr<const IrrTable> table_;
  std::vector<DirichletChar> dirichlet_;
  std::vector<unsigned> coset_of_;  // residue index (in units) -> Gamma element
};

/// Componentwise package assembled from explicit per-character data.
EqvMap assemble_equivariant(std::shared_ptr<const IrrTable> table, std::vector<CycNum> values);

/// The identity tau^Gamma * (psi_{2,*}-1)(tau') * (tau^dagger)^{-1}
///   = J_2 * (psi_{2,*}-1)(y^{-1}),
/// checked componentwise; tau_base is the package of the base-field term
/// (all ones over Q).
bool verify_label_product(const EqvMap& tau_base, const EqvMap& tau, const EqvMap& tau_prime,
                          const EqvMap& tau_dagger, const EqvMap& y);

}  // namespace arithk
