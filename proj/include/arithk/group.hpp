#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arithk {

/// A finite group given by its multiplication table. Construction verifies
/// the group axioms; element 0 is always the identity.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<unsigned>> table);

  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup cyclic(unsigned n);
  static FiniteGroup product_of_cyclics(const std::vector<unsigned>& ns);
  // Non-abelian group of order p^3 and exponent p (upper unitriangular 3x3
  // matrices over F_p), p an odd prime.
  static FiniteGroup heisenberg(unsigned p);
  // Non-abelian group of order p^3 and exponent p^2:
  // <a, b | a^{p^2} = b^p = 1, b^{-1} a b = a^{1+p}>, p an odd prime.
  static FiniteGroup modular(unsigned p);
  // Order l^2 p with normal Sylow-p subgroup C and G/C = (Z/l)^2; the two
  // order-l generators act on C by the ea-th and eb-th powers of a fixed
  // order-l automorphism. Requires l | p-1.
  static FiniteGroup metacyclic(unsigned l, unsigned p, unsigned ea = 1, unsigned eb = 0);

  // Tags like "cyclic:6", "product:3,3", "heisenberg:3", "modular:3",
  // "metacyclic:3,7" or "metacyclic:3,7,1,0".
  static FiniteGroup parse_spec(const std::string& spec);

  unsigned size() const { return n_; }
  unsigned identity() const { return 0; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a][b]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned pow(unsigned a, long e) const;
  unsigned order_of(unsigned a) const { return order_[a]; }
  unsigned exponent() const;
  bool is_abelian() const;

  const std::string& spec() const { return spec_; }

  // Conjugacy classes in canonical order: sorted by (element order, class
  // size, smallest member); each class lists its members ascending.
  const std::vector<std::vector<unsigned>>& conjugacy_classes() const;
  unsigned class_of(unsigned g) const;

  std::vector<unsigned> subgroup_closure(std::vector<unsigned> gens) const;
  // Every subgroup, each as an ascending element list; sorted by size then
  // lexicographically.
  std::vector<std::vector<unsigned>> subgroups() const;
  std::vector<unsigned> commutator_subgroup() const;
  std::vector<unsigned> center() const;
  bool is_normal(const std::vector<unsigned>& h) const;

  // Quotient by a normal subgroup: the quotient group and the projection
  // map G -> G/N (element -> quotient element index).
  std::pair<FiniteGroup, std::vector<unsigned>> quotient(const std::vector<unsigned>& normal) const;

 private:
  unsigned n_ = 1;
  std::vector<std::vector<unsigned>> mul_;
  std::vector<unsigned> inv_;
  std::vector<unsigned> order_;
  std::string spec_;
  mutable std::vector<std::vector<unsigned>> classes_;
  mutable std::vector<unsigned> class_of_;
  void verify() const;
  void fill_derived();
};

}  // namespace arithk
