#include "arithk/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "arithk/nt.hpp"

namespace arithk {

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

bool is_integral_at(const Rational& q, unsigned long p) {
  return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), p);
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and reduction tables

namespace {

// Exact division of integer polynomials, num / den with zero remainder.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  if (den.empty() || den.back() == 0) throw std::logic_error("poly division by zero");
  if (num.size() < den.size()) throw std::logic_error("poly division: degree underflow");
  std::vector<Integer> q(num.size() - den.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    if (num[i + den.size() - 1] % den.back() != 0)
      throw std::logic_error("poly division not exact");
    q[i] = num[i + den.size() - 1] / den.back();
    if (q[i] != 0)
      for (size_t j = 0; j < den.size(); ++j)
        num[i + j] -= q[i] * den[j];
  }
  for (auto& c : num)
    if (c != 0) throw std::logic_error("poly division left a remainder");
  return q;
}

std::map<unsigned long, std::vector<Integer>>& phi_cache() {
  static std::map<unsigned long, std::vector<Integer>> cache;
  return cache;
}
std::shared_mutex& phi_mutex() {
  static std::shared_mutex m;
  return m;
}

std::vector<Integer> cyclotomic_polynomial_uncached(unsigned long n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

std::map<unsigned long, std::unique_ptr<CycTable>>& table_cache() {
  static std::map<unsigned long, std::unique_ptr<CycTable>> cache;
  return cache;
}
std::shared_mutex& table_mutex() {
  static std::shared_mutex m;
  return m;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  {
    std::shared_lock lk(phi_mutex());
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
  }
  auto result = cyclotomic_polynomial_uncached(n);
  std::unique_lock lk(phi_mutex());
  phi_cache().emplace(n, result);
  return result;
}

const CycTable& cyc_table(unsigned long n) {
  {
    std::shared_lock lk(table_mutex());
    auto it = table_cache().find(n);
    if (it != table_cache().end()) return *it->second;
  }
  auto t = std::make_unique<CycTable>();
  t->n = n;
  t->min_poly = cyclotomic_polynomial(n);
  t->phi = t->min_poly.size() - 1;
  // Row for x^i obtained from the row for x^{i-1} by a shift and one
  // reduction step using x^phi = -(lower part of Phi_n).
  t->reduction.resize(n - t->phi);
  std::vector<Integer> cur(t->phi);   // x^{phi-? } seed: x^{phi} row
  for (unsigned long j = 0; j < t->phi; ++j) cur[j] = -t->min_poly[j];
  for (unsigned long i = t->phi; i < n; ++i) {
    t->reduction[i - t->phi] = cur;
    if (i + 1 == n) break;
    // multiply by x
    Integer top = cur[t->phi - 1];
    for (unsigned long j = t->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned long j = 0; j < t->phi; ++j)
        cur[j] += top * t->reduction[0][j];
  }
  std::unique_lock lk(table_mutex());
  auto [it, inserted] = table_cache().emplace(n, std::move(t));
  return *it->second;
}

// ---------------------------------------------------------------------------
// CycNum

namespace {

bool all_integer(const std::vector<Rational>& v) {
  for (const auto& q : v)
    if (q.get_den() != 1) return false;
  return true;
}

// Reduces a raw length-n coefficient vector modulo Phi_n in place.
void canonicalize(unsigned long n, std::vector<Rational>& c) {
  c.resize(n);
  if (n == 1) return;
  const CycTable& t = cyc_table(n);
  bool tail = false;
  for (unsigned long i = t.phi; i < n && !tail; ++i) tail = (c[i] != 0);
  if (!tail) return;
  if (all_integer(c)) {
    // Integer fast lane: mpz_addmul on numerators.
    std::vector<Integer> z(n);
    for (unsigned long i = 0; i < n; ++i) z[i] = c[i].get_num();
    for (unsigned long i = t.phi; i < n; ++i) {
      if (z[i] == 0) continue;
      const auto& row = t.reduction[i - t.phi];
      for (unsigned long j = 0; j < t.phi; ++j)
        if (row[j] != 0)
          mpz_addmul(z[j].get_mpz_t(), z[i].get_mpz_t(), row[j].get_mpz_t());
      z[i] = 0;
    }
    for (unsigned long j = 0; j < t.phi; ++j) c[j] = Rational(z[j]);
    for (unsigned long j = t.phi; j < n; ++j) c[j] = 0;
    return;
  }
  for (unsigned long i = t.phi; i < n; ++i) {
    if (c[i] == 0) continue;
    const auto& row = t.reduction[i - t.phi];
    for (unsigned long j = 0; j < t.phi; ++j)
      if (row[j] != 0) c[j] += c[i] * Rational(row[j]);
    c[i] = 0;
  }
}

}  // namespace

CycNum CycNum::zeta(unsigned long n, long power) {
  if (n == 0) throw std::invalid_argument("zeta of order 0");
  std::vector<Rational> c(n);
  c[mod_ul(power, n)] = 1;
  return from_coeffs(n, std::move(c));
}

CycNum CycNum::from_coeffs(unsigned long n, std::vector<Rational> coeffs) {
  if (n == 0) throw std::invalid_argument("order 0");
  if (coeffs.size() > n) throw std::invalid_argument("coefficient vector longer than order");
  canonicalize(n, coeffs);
  CycNum x;
  x.order_ = n;
  x.c_ = std::move(coeffs);
  return x;
}

bool CycNum::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (unsigned long i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

CycNum CycNum::embedded(unsigned long m) const {
  if (m % order_ != 0) throw std::invalid_argument("embedding order must be a multiple");
  if (m == order_) return *this;
  std::vector<Rational> c(m);
  unsigned long step = m / order_;
  for (unsigned long i = 0; i < order_; ++i)
    if (c_[i] != 0) c[i * step] = c_[i];
  return from_coeffs(m, std::move(c));
}

std::optional<CycNum> CycNum::descended(unsigned long d) const {
  if (d == 0 || order_ % d != 0) throw std::invalid_argument("descent order must divide");
  if (d == order_) return *this;
  // Solve sum_j y_j * zeta_n^{j n/d} = x, unknowns y_j for j < phi(d).
  const CycTable& tn = cyc_table(order_);
  unsigned long phid = cyc_table(d).phi;
  std::vector<std::vector<Rational>> cols(phid);
  for (unsigned long j = 0; j < phid; ++j) {
    CycNum zj = zeta(order_, static_cast<long>(j * (order_ / d)));
    cols[j] = zj.coeffs();
  }
  // Linear system over Q with phi(n) equations.
  std::vector<std::vector<Rational>> a(tn.phi, std::vector<Rational>(phid + 1));
  for (unsigned long i = 0; i < tn.phi; ++i) {
    for (unsigned long j = 0; j < phid; ++j) a[i][j] = cols[j][i];
    a[i][phid] = c_[i];
  }
  // Gaussian elimination.
  std::vector<long> pivot_col(tn.phi, -1);
  unsigned long row = 0;
  for (unsigned long col = 0; col < phid && row < tn.phi; ++col) {
    unsigned long sel = row;
    while (sel < tn.phi && a[sel][col] == 0) ++sel;
    if (sel == tn.phi) continue;
    std::swap(a[sel], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (unsigned long r = 0; r < tn.phi; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (unsigned long k = col; k <= phid; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col[row] = static_cast<long>(col);
    ++row;
  }
  for (unsigned long r = row; r < tn.phi; ++r)
    if (a[r][phid] != 0) return std::nullopt;  // inconsistent: not in Q(zeta_d)
  std::vector<Rational> c(d);
  for (unsigned long r = 0; r < row; ++r) c[pivot_col[r]] = a[r][phid];
  return from_coeffs(d, std::move(c));
}

unsigned long CycNum::minimal_order() const {
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d <= order_; ++d)
    if (order_ % d == 0) divs.push_back(d);
  for (unsigned long d : divs)
    if (descended(d)) return d;
  return order_;
}

CycNum CycNum::minimized() const { return *descended(minimal_order()); }

CycNum CycNum::galois(long k) const {
  unsigned long km = mod_ul(k, order_);
  if (order_ == 1) return *this;
  if (gcd_ul(km, order_) != 1) throw std::invalid_argument("galois: exponent not coprime to order");
  std::vector<Rational> c(order_);
  for (unsigned long i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) c[(i * km) % order_] += c_[i];
  return from_coeffs(order_, std::move(c));
}

std::complex<double> CycNum::complex_value() const {
  std::complex<double> s = 0;
  for (unsigned long i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  unsigned long n = lcm_ul(a.order_, b.order_);
  CycNum ae = a.embedded(n), be = b.embedded(n);
  for (unsigned long i = 0; i < n; ++i) ae.c_[i] += be.c_[i];
  return ae;  // sum of canonical forms stays canonical
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  unsigned long n = lcm_ul(a.order_, b.order_);
  CycNum ae = a.embedded(n), be = b.embedded(n);
  std::vector<Rational> acc(n);
  for (unsigned long i = 0; i < n; ++i) {
    if (ae.c_[i] == 0) continue;
    for (unsigned long j = 0; j < n; ++j) {
      if (be.c_[j] == 0) continue;
      unsigned long k = i + j;
      if (k >= n) k -= n;
      acc[k] += ae.c_[i] * be.c_[j];
    }
  }
  return CycNum::from_coeffs(n, std::move(acc));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto q = as_rational()) return CycNum(Rational(1 / *q));
  if (auto m = as_monomial()) {
    auto [i, q] = *m;
    return CycNum(Rational(1 / q)) * zeta(order_, -static_cast<long>(i));
  }
  // Solve (this) * y = 1 as a linear system over Q in the power basis.
  const CycTable& t = cyc_table(order_);
  std::vector<std::vector<CycNum>> m(t.phi, std::vector<CycNum>(t.phi, CycNum(0)));
  for (unsigned long j = 0; j < t.phi; ++j) {
    CycNum col = *this * zeta(order_, static_cast<long>(j));
    for (unsigned long i = 0; i < t.phi; ++i) m[i][j] = CycNum(col.coeffs()[i]);
  }
  std::vector<CycNum> rhs(t.phi, CycNum(0));
  rhs[0] = CycNum(1);
  auto y = cyc_solve(std::move(m), std::move(rhs));
  std::vector<Rational> c(order_);
  for (unsigned long j = 0; j < t.phi; ++j) c[j] = *y[j].as_rational();
  return from_coeffs(order_, std::move(c));
}

CycNum CycNum::pow(long e) const {
  CycNum base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycNum r(1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  unsigned long n = lcm_ul(a.order_, b.order_);
  return a.embedded(n).c_ == b.embedded(n).c_;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  if (a.order_ != b.order_) {
    unsigned long n = lcm_ul(a.order_, b.order_);
    return compare(a.embedded(n), b.embedded(n));
  }
  for (unsigned long i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::optional<std::pair<unsigned long, Rational>> CycNum::as_monomial() const {
  long idx = -1;
  for (unsigned long i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (idx >= 0) return std::nullopt;
    idx = static_cast<long>(i);
  }
  if (idx < 0) return std::nullopt;  // zero is not a monomial
  return std::make_pair(static_cast<unsigned long>(idx), c_[idx]);
}

std::string CycNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned long i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact linear algebra over cyclotomic fields (small systems only)

CycNum cyc_matrix_det(std::vector<std::vector<CycNum>> m) {
  size_t n = m.size();
  CycNum det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return CycNum(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    CycNum inv = m[col][col].inverse();
    for (size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv;
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      CycNum f = m[r][col];
      for (size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  return det;
}

std::vector<CycNum> cyc_solve(std::vector<std::vector<CycNum>> m, std::vector<CycNum> rhs) {
  size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("cyc_solve: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    CycNum inv = m[col][col].inverse();
    for (size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv;
    rhs[col] = rhs[col] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      CycNum f = m[r][col];
      for (size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace arithk
