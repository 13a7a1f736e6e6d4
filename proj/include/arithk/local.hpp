#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "arithk/characters.hpp"
#include "arithk/cyclotomic.hpp"
#include "arithk/dirichlet.hpp"
#include "arithk/group.hpp"

namespace arithk {

/// An abelian character of the absolute Galois group of Q_p, split into its
/// ramified part (a Dirichlet character of p-power modulus, through the
/// cyclotomic description of the abelian extensions of Q_p) and an
/// unramified part given by its value on the arithmetic Frobenius.
///
/// The reciprocity normalization is fixed once and for all: a unit u of Z_p
/// acts on p-power roots of unity by zeta -> zeta^{u^{-1}}, and rec(p) is the
/// arithmetic Frobenius on the unramified tower. The stored Dirichlet
/// character is the one whose classical Gauss sum equals the local Gauss sum
/// under this identification.
struct LocalAbelianChar {
  unsigned long p;
  DirichletChar ramified;   // modulus a power of p
  CycNum frobenius_value;   // a root of unity

  bool is_unramified() const { return ramified.conductor() == 1; }
  unsigned long conductor_exponent() const;
};

/// tau(Q_p, phi): the local Gauss sum of an abelian character with the pinned
/// normalization; 1 on unramified characters.
CycNum local_galois_gauss(const LocalAbelianChar& phi, unsigned long p);

/// Inertia/Frobenius data for a local Galois group: the unramified
/// characteristic y and the twisted unramified element live here.
struct RamificationDatum {
  FiniteGroup gamma;
  std::vector<unsigned> inertia;  // ascending element list, I <= Gamma
  unsigned frobenius_lift = 0;    // element of Gamma mapping to Frob in Gamma/I
  bool weakly_ramified = true;    // second lower ramification group trivial

  void validate() const;  // Gamma/I cyclic generated by the Frobenius image
};

/// y(E, phi) per the case split: 1 if phi is nontrivial on the inertia
/// subgroup, -phi(frobenius) otherwise; extended multiplicatively to virtual
/// characters.
CycNum y_char(const RamificationDatum& d, const IrrTable& table, const VirtualChar& phi);
CycNum y_char_irreducible(const RamificationDatum& d, const IrrTable& table, unsigned chi);

/// Finite table of local reciprocity values on O^x modulo second principal
/// units, used to evaluate non-abelian local Gauss sums by the monomial
/// induction formula. `field` describes the global subfield M (inside
/// Q(zeta_m)) whose completion at p is the local base field; every residue
/// representative is a global element of M.
struct ReciprocityTable {
  unsigned long p = 0;
  // The subgroup A = Gal(N/M) the values land in is described externally;
  // entries map unit representatives x (elements of M) to elements of A.
  std::vector<std::pair<CycNum, unsigned>> entries;
  // c generates the ideal f(psi) * D_{M_p/Q_p}.
  CycNum c;
};

/// The additive character psi_p(t) = e^{2 pi i {t}_p} of Q_p evaluated at a
/// rational number: only the p-part of the denominator contributes.
CycNum additive_char_qp(const Rational& t, unsigned long p);

/// tau(M_p, psi) = sum_x psi(rec(x/c)) psi_add(Tr(x/c)) over the table's unit
/// representatives; `trace` must compute Tr_{M_p/Q_p} of a global element of
/// M (equal to the global trace when p has a single place in M), and
/// `psi_of` evaluates the inducing linear character at elements of A.
CycNum local_tau_from_table(const ReciprocityTable& table,
                            const std::function<Rational(const CycNum&)>& trace,
                            const std::function<CycNum(unsigned)>& psi_of);

/// The monomial induction step for a degree-[G:A] character chi = ind_A^G(psi):
/// tau(Q_p, chi) = tau(M_p, psi) * prod over characters phi of G trivial on A
/// of tau(Q_p, phi).
CycNum local_tau_brauer(const IrrTable& g_table, const std::vector<unsigned>& subgroup_a,
                        const CycNum& tau_m_psi,
                        const std::vector<CycNum>& tau_of_degree_one_factors);

}  // namespace arithk
