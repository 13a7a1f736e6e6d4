#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "arithk/cyclotomic.hpp"
#include "arithk/group.hpp"

namespace arithk {

/// A class function on a group, stored by values at the canonical conjugacy
/// class representatives.
struct ClassFn {
  std::vector<CycNum> values;  // one per conjugacy class
};

/// Monomial data witnessing an induced character: a subgroup H, a linear
/// character of H (values per H-element), and a coset transversal. The
/// induced matrix representation has one nonzero entry per row and column.
struct MonomialRep {
  std::vector<unsigned> subgroup;           // ascending element list
  std::vector<CycNum> linear_values;        // indexed like `subgroup`
  std::vector<unsigned> transversal;        // left coset representatives
};

/// Integer combination of the irreducible characters of a fixed table.
struct VirtualChar {
  std::vector<long> coeffs;  // one per irreducible
};

/// The irreducible characters of a finite group, built by monomial induction:
/// the linear characters of G/[G,G] first, then inductions of linear
/// characters of subgroups, kept when the norm is exactly 1, until the degree
/// sum completes. Rows are sorted by degree and then by value order, so the
/// table is deterministic.
class IrrTable {
 public:
  static constexpr unsigned kDefaultOrderBound = 200;

  static IrrTable build(FiniteGroup g, unsigned order_bound = kDefaultOrderBound);

  const FiniteGroup& group() const { return g_; }
  unsigned num_classes() const { return static_cast<unsigned>(classes().size()); }
  unsigned num_chars() const { return static_cast<unsigned>(chars_.size()); }
  const std::vector<std::vector<unsigned>>& classes() const { return g_.conjugacy_classes(); }
  unsigned class_rep(unsigned c) const { return classes()[c][0]; }

  const ClassFn& character(unsigned i) const { return chars_[i]; }
  long degree(unsigned i) const;
  const CycNum& value(unsigned chi, unsigned cls) const { return chars_[chi].values[cls]; }
  CycNum value_at_element(unsigned chi, unsigned g) const;
  const MonomialRep& monomial_rep(unsigned chi) const { return monomial_[chi]; }
  // Matrix image of g under the monomial representation of character chi.
  std::vector<std::vector<CycNum>> rep_matrix(unsigned chi, unsigned g) const;

  unsigned trivial_char() const;

  // <a, b> = (1/|G|) sum_g a(g) b(g^{-1}); exact.
  Rational inner_product(const ClassFn& a, const ClassFn& b) const;
  static Rational inner_product_on(const FiniteGroup& g, const ClassFn& a, const ClassFn& b);
  // Decomposition of an arbitrary class function into irreducibles; fails if
  // some multiplicity is not an integer.
  std::optional<VirtualChar> decompose(const ClassFn& f) const;
  ClassFn realize(const VirtualChar& v) const;

  // Adams operation psi_k: the class function g -> chi(g^k), decomposed
  // exactly. Defined for every integer k.
  VirtualChar adams(const VirtualChar& v, long k) const;
  VirtualChar adams_of_irreducible(unsigned chi, long k) const;
  // If psi_k(chi) is again irreducible, its index.
  std::optional<unsigned> adams_image_index(unsigned chi, long k) const;

  // chi^omega for omega: zeta -> zeta^k, gcd(k, exp G) = 1; returns the index
  // of the resulting irreducible.
  unsigned galois_twist(unsigned chi, long k) const;

  // Index lookup by exact values; nullopt when the class function is not in
  // the table.
  std::optional<unsigned> find(const ClassFn& f) const;

  // Frobenius-Schur indicator (1/|G|) sum_g chi(g^2), in {-1, 0, 1}.
  int fs_indicator(unsigned chi) const;
  bool has_symplectic_irreducible() const;

  // Det of a group-algebra element a = sum a_g g at an irreducible character,
  // computed through the monomial representation.
  CycNum det_of(const std::map<unsigned, CycNum>& a, unsigned chi) const;
  // Same for a square matrix over the group algebra (entry maps g -> coeff).
  CycNum det_of_matrix(const std::vector<std::vector<std::map<unsigned, CycNum>>>& m,
                       unsigned chi) const;

  // det_chi as a linear character: the determinant of the representing matrix
  // of each group element.
  CycNum det_char_value(unsigned chi, unsigned g) const;

  ClassFn restrict_to(const ClassFn& f, const FiniteGroup& h,
                      const std::vector<unsigned>& embedding) const;
  ClassFn inflate_from(const ClassFn& f_on_quotient, const IrrTable& quotient_table,
                       const std::vector<unsigned>& proj) const;
  // Induction of a class function on the subgroup given by `embedding`.
  ClassFn induce_from(const ClassFn& f_on_sub, const FiniteGroup& h,
                      const std::vector<unsigned>& embedding) const;

 private:
  FiniteGroup g_;
  std::vector<ClassFn> chars_;
  std::vector<MonomialRep> monomial_;
};

// All characters of an abelian group as exponent vectors: entry e[g] with
// value zeta_exp^e[g]; deterministic order (lexicographic in exponents).
std::vector<std::vector<unsigned>> abelian_dual(const FiniteGroup& g);

}  // namespace arithk
