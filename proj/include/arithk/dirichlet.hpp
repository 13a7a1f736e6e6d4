#pragma once

#include <vector>

#include "arithk/cyclotomic.hpp"
#include "arithk/group.hpp"

namespace arithk {

/// The unit group (Z/m)^x presented as a FiniteGroup, with translation
/// between residues and element indices.
class UnitGroup {
 public:
  explicit UnitGroup(unsigned long m);
  unsigned long modulus() const { return m_; }
  const FiniteGroup& group() const { return g_; }
  const std::vector<unsigned long>& residues() const { return residues_; }
  long index_of(unsigned long residue) const;  // -1 when not a unit
  unsigned long residue_of(unsigned idx) const { return residues_[idx]; }

 private:
  unsigned long m_;
  std::vector<unsigned long> residues_;
  std::vector<long> index_;
  FiniteGroup g_;
};

/// A Dirichlet character mod m. Values are stored as exponents of a root of
/// unity whose order is the order of the character.
class DirichletChar {
 public:
  // exponents indexed like UnitGroup::residues(), relative to value_order.
  DirichletChar(unsigned long modulus, unsigned long value_order,
                std::vector<unsigned long> exponents);

  static const DirichletChar& principal(unsigned long m);
  // All characters mod m in a deterministic order (trivial character first).
  static std::vector<DirichletChar> all_mod(unsigned long m);

  unsigned long modulus() const { return m_; }
  unsigned long value_order() const { return order_; }
  // zeta_order^{e(a)}, or 0 when gcd(a, m) > 1.
  CycNum operator()(long a) const;
  bool is_unit_value(long a) const;
  // exponent of the value at a unit a
  unsigned long exponent_at(unsigned long a) const;

  bool is_principal() const;
  unsigned long conductor() const;
  DirichletChar primitive_part() const;

  DirichletChar operator*(const DirichletChar& other) const;  // same modulus
  DirichletChar power(long k) const;
  DirichletChar inverse() const { return power(-1); }
  DirichletChar conj() const { return power(-1); }

  int at_minus_one() const;  // chi(-1) in {+1, -1}

  bool operator==(const DirichletChar& o) const;

 private:
  unsigned long m_;
  unsigned long order_;                  // order of the character
  std::vector<unsigned long> expo_;      // per unit residue index
  mutable unsigned long conductor_ = 0;  // cached
  void normalize();
};

/// tau(chi) = sum over a mod f of chi*(a) zeta_f^a, where chi* is the
/// primitive character inducing chi of conductor f. The result lives in
/// Q(zeta_lcm(f, ord chi)). tau of the trivial character is 1.
CycNum gauss_sum(const DirichletChar& chi);

/// J(chi, psi) = sum_a chi(a) psi(1-a) over a mod the common modulus, with
/// the usual convention that characters vanish off the units.
CycNum jacobi_sum(const DirichletChar& chi, const DirichletChar& psi);

}  // namespace arithk
