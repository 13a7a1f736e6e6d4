#include "arithk/local.hpp"

#include <functional>
#include <stdexcept>

#include "arithk/nt.hpp"

namespace arithk {

unsigned long LocalAbelianChar::conductor_exponent() const {
  unsigned long f = ramified.conductor();
  unsigned long e = 0;
  while (f > 1) {
    if (f % p != 0) throw std::logic_error("ramified part has conductor prime to p");
    f /= p;
    ++e;
  }
  return e;
}

CycNum local_galois_gauss(const LocalAbelianChar& phi, unsigned long p) {
  if (phi.p != p) throw std::invalid_argument("reciprocity table required for this base field");
  if (phi.is_unramified()) return CycNum(1);
  unsigned long n = phi.conductor_exponent();
  return phi.frobenius_value.pow(static_cast<long>(n)) * gauss_sum(phi.ramified);
}

void RamificationDatum::validate() const {
  if (inertia.empty() || inertia[0] != gamma.identity())
    throw std::invalid_argument("inertia subgroup must contain the identity");
  auto closure = gamma.subgroup_closure(inertia);
  if (closure != inertia) throw std::invalid_argument("inertia is not a subgroup");
  if (!gamma.is_normal(inertia)) throw std::invalid_argument("inertia must be normal");
  auto [q, proj] = gamma.quotient(inertia);
  unsigned frob = proj[frobenius_lift];
  if (q.subgroup_closure({frob}).size() != q.size())
    throw std::invalid_argument("Frobenius image does not generate Gamma/I");
}

CycNum y_char_irreducible(const RamificationDatum& d, const IrrTable& table, unsigned chi) {
  bool trivial_on_inertia = true;
  CycNum deg = table.value_at_element(chi, d.gamma.identity());
  for (unsigned e : d.inertia)
    if (table.value_at_element(chi, e) != deg) { trivial_on_inertia = false; break; }
  if (!trivial_on_inertia) return CycNum(1);
  // phi restricted to I is trivial, so phi factors through Gamma/I; at a
  // linear character phi(sigma) is the honest value. For higher degree with
  // trivial inertia restriction the character of the cyclic quotient is a sum
  // of degree-1 pieces; the paper's case split only needs phi(sigma).
  return -table.value_at_element(chi, d.frobenius_lift);
}

CycNum y_char(const RamificationDatum& d, const IrrTable& table, const VirtualChar& phi) {
  CycNum out(1);
  for (unsigned i = 0; i < table.num_chars(); ++i) {
    if (phi.coeffs[i] == 0) continue;
    out = out * y_char_irreducible(d, table, i).pow(phi.coeffs[i]);
  }
  return out;
}

CycNum additive_char_qp(const Rational& t, unsigned long p) {
  // Write t = a / (p^k u) with u prime to p; the value only depends on the
  // class of t modulo Z_(p), namely zeta_{p^k}^{a * u^{-1} mod p^k}.
  Integer den = t.get_den();
  unsigned long pk = 1;
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= static_cast<unsigned long>(p);
    pk *= p;
  }
  if (pk == 1) return CycNum(1);
  Integer a = t.get_num();
  Integer u = den;  // prime-to-p part of the denominator
  Integer pkz(static_cast<unsigned long>(pk));
  Integer uinv;
  if (mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), pkz.get_mpz_t()) == 0)
    throw std::logic_error("prime-to-p part not invertible");
  Integer e = a * uinv % pkz;
  if (e < 0) e += pkz;
  return CycNum::zeta(pk, static_cast<long>(e.get_ui()));
}

CycNum local_tau_from_table(const ReciprocityTable& table,
                            const std::function<Rational(const CycNum&)>& trace,
                            const std::function<CycNum(unsigned)>& psi_of) {
  CycNum inv_c = table.c.inverse();
  CycNum sum(0);
  for (const auto& [x, rec_value] : table.entries) {
    Rational tr = trace(x * inv_c);
    sum += psi_of(rec_value) * additive_char_qp(tr, table.p);
  }
  return sum;
}

CycNum local_tau_brauer(const IrrTable& g_table, const std::vector<unsigned>& subgroup_a,
                        const CycNum& tau_m_psi,
                        const std::vector<CycNum>& tau_of_degree_one_factors) {
  // The degree-one factors are the Gauss sums of the characters of G trivial
  // on A; the caller enumerates them (their count must be [G:A]).
  unsigned long index = g_table.group().size() / subgroup_a.size();
  if (tau_of_degree_one_factors.size() != index)
    throw std::invalid_argument("expected one tau factor per character of G/A");
  CycNum out = tau_m_psi;
  for (const auto& t : tau_of_degree_one_factors) out = out * t;
  return out;
}

}  // namespace arithk
