#include "arithk/dirichlet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "arithk/characters.hpp"
#include "arithk/nt.hpp"

namespace arithk {

UnitGroup::UnitGroup(unsigned long m) : m_(m) {
  if (m == 0) throw std::invalid_argument("modulus 0");
  index_.assign(m, -1);
  // Element 0 of the group must be the identity residue 1.
  if (m == 1) {
    residues_ = {0};  // the zero ring: single unit class
    index_[0] = 0;
  } else {
    residues_.push_back(1);
    index_[1] = 0;
    for (unsigned long a = 2; a < m; ++a)
      if (gcd_ul(a, m) == 1) {
        index_[a] = static_cast<long>(residues_.size());
        residues_.push_back(a);
      }
  }
  unsigned n = static_cast<unsigned>(residues_.size());
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      t[i][j] = m == 1 ? 0 : static_cast<unsigned>(index_[residues_[i] * residues_[j] % m]);
  g_ = FiniteGroup::from_table(std::move(t));
}

long UnitGroup::index_of(unsigned long residue) const {
  return index_[residue % m_ == 0 && m_ == 1 ? 0 : residue % m_];
}

namespace {

std::map<unsigned long, std::unique_ptr<UnitGroup>>& unit_cache() {
  static std::map<unsigned long, std::unique_ptr<UnitGroup>> c;
  return c;
}
std::mutex& unit_mutex() {
  static std::mutex m;
  return m;
}

const UnitGroup& units(unsigned long m) {
  std::lock_guard lk(unit_mutex());
  auto it = unit_cache().find(m);
  if (it == unit_cache().end())
    it = unit_cache().emplace(m, std::make_unique<UnitGroup>(m)).first;
  return *it->second;
}

}  // namespace

void DirichletChar::normalize() {
  // Reduce the value order to the exact order of the character.
  unsigned long g = order_;
  for (unsigned long e : expo_) g = gcd_ul(g, e);
  if (g > 1) {
    order_ /= g;
    for (auto& e : expo_) e /= g;
  }
  if (order_ == 0) order_ = 1;
}

DirichletChar::DirichletChar(unsigned long modulus, unsigned long value_order,
                             std::vector<unsigned long> exponents)
    : m_(modulus), order_(value_order), expo_(std::move(exponents)) {
  if (expo_.size() != units(m_).residues().size())
    throw std::invalid_argument("exponent vector size mismatch");
  for (auto& e : expo_) e %= order_;
  normalize();
}

const DirichletChar& DirichletChar::principal(unsigned long m) {
  static std::map<unsigned long, DirichletChar> cache;
  static std::mutex mu;
  std::lock_guard lk(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    std::vector<unsigned long> e(units(m).residues().size(), 0);
    it = cache.emplace(m, DirichletChar(m, 1, std::move(e))).first;
  }
  return it->second;
}

std::vector<DirichletChar> DirichletChar::all_mod(unsigned long m) {
  const UnitGroup& u = units(m);
  auto dual = abelian_dual(u.group());
  unsigned long e = u.group().exponent();
  std::vector<DirichletChar> out;
  out.reserve(dual.size());
  for (const auto& expo : dual) {
    std::vector<unsigned long> v(expo.begin(), expo.end());
    out.push_back(DirichletChar(m, e, std::move(v)));
  }
  return out;
}

CycNum DirichletChar::operator()(long a) const {
  unsigned long r = mod_ul(a, m_ == 1 ? 1 : m_);
  if (m_ == 1) return CycNum(1);
  long idx = units(m_).index_of(r);
  if (idx < 0) return CycNum(0);
  return CycNum::zeta(order_, static_cast<long>(expo_[static_cast<size_t>(idx)]));
}

bool DirichletChar::is_unit_value(long a) const {
  if (m_ == 1) return true;
  return units(m_).index_of(mod_ul(a, m_)) >= 0;
}

unsigned long DirichletChar::exponent_at(unsigned long a) const {
  long idx = units(m_).index_of(a % m_);
  if (idx < 0) throw std::invalid_argument("exponent_at on a non-unit");
  return expo_[static_cast<size_t>(idx)];
}

bool DirichletChar::is_principal() const { return order_ == 1; }

unsigned long DirichletChar::conductor() const {
  if (conductor_) return conductor_;
  if (is_principal()) return conductor_ = 1;
  for (unsigned long f = 1; f <= m_; ++f) {
    if (m_ % f != 0) continue;
    // chi factors through (Z/f)^x iff it is trivial on units = 1 mod f.
    bool ok = true;
    for (unsigned long a : units(m_).residues()) {
      if (a % f == 1 % f && exponent_at(a) != 0) { ok = false; break; }
    }
    if (ok) return conductor_ = f;
  }
  return conductor_ = m_;
}

DirichletChar DirichletChar::primitive_part() const {
  unsigned long f = conductor();
  if (f == m_) return *this;
  const UnitGroup& uf = units(f);
  std::vector<unsigned long> e(uf.residues().size(), 0);
  for (size_t i = 0; i < uf.residues().size() && f > 1; ++i) {
    unsigned long a = uf.residues()[i];
    // lift a to a unit mod m congruent to a mod f
    unsigned long lift = a;
    while (gcd_ul(lift, m_) != 1) lift += f;
    e[i] = exponent_at(lift % m_);
  }
  return DirichletChar(f, order_, std::move(e));
}

DirichletChar DirichletChar::operator*(const DirichletChar& other) const {
  if (m_ != other.m_) throw std::invalid_argument("character product needs a common modulus");
  unsigned long n = lcm_ul(order_, other.order_);
  std::vector<unsigned long> e(expo_.size());
  for (size_t i = 0; i < expo_.size(); ++i)
    e[i] = (expo_[i] * (n / order_) + other.expo_[i] * (n / other.order_)) % n;
  return DirichletChar(m_, n, std::move(e));
}

DirichletChar DirichletChar::power(long k) const {
  unsigned long km = mod_ul(k, order_);
  std::vector<unsigned long> e(expo_.size());
  for (size_t i = 0; i < expo_.size(); ++i) e[i] = expo_[i] * km % order_;
  return DirichletChar(m_, order_, std::move(e));
}

int DirichletChar::at_minus_one() const {
  if (m_ <= 2) return 1;
  unsigned long e = exponent_at(m_ - 1);
  if (e == 0) return 1;
  if (2 * e == order_) return -1;
  throw std::logic_error("chi(-1) is not a sign");
}

bool DirichletChar::operator==(const DirichletChar& o) const {
  return m_ == o.m_ && order_ == o.order_ && expo_ == o.expo_;
}

CycNum gauss_sum(const DirichletChar& chi) {
  DirichletChar star = chi.primitive_part();
  unsigned long f = star.modulus();
  if (f == 1) return CycNum(1);
  unsigned long n = lcm_ul(f, star.value_order());
  std::vector<Rational> acc(n);
  for (unsigned long a : units(f).residues()) {
    unsigned long e = star.exponent_at(a);
    unsigned long idx = (e * (n / star.value_order()) + a * (n / f)) % n;
    acc[idx] += 1;
  }
  return CycNum::from_coeffs(n, std::move(acc));
}

CycNum jacobi_sum(const DirichletChar& chi, const DirichletChar& psi) {
  if (chi.modulus() != psi.modulus())
    throw std::invalid_argument("jacobi_sum needs a common modulus");
  unsigned long m = chi.modulus();
  if (m == 1) return CycNum(1);
  unsigned long n = lcm_ul(chi.value_order(), psi.value_order());
  std::vector<Rational> acc(n);
  for (unsigned long a = 0; a < m; ++a) {
    if (!chi.is_unit_value(static_cast<long>(a))) continue;
    long b = static_cast<long>(1) - static_cast<long>(a);
    if (!psi.is_unit_value(b)) continue;
    unsigned long e = (chi.exponent_at(a) * (n / chi.value_order()) +
                       psi.exponent_at(mod_ul(b, m)) * (n / psi.value_order())) %
                      n;
    acc[e] += 1;
  }
  return CycNum::from_coeffs(n, std::move(acc));
}

}  // namespace arithk
