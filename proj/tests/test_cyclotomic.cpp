#include "arithk/cyclotomic.hpp"

#include <complex>
#include <random>

#include "arithk/nt.hpp"
#include "doctest.h"

using namespace arithk;

namespace {

// Independent oracle: multiply two coefficient vectors as plain polynomials,
// fold x^n = 1, then take the remainder mod Phi_n by schoolbook division.
std::vector<Rational> poly_mul_mod_phi(unsigned long n, std::vector<Rational> a,
                                       std::vector<Rational> b) {
  std::vector<Rational> acc(2 * n);
  for (unsigned long i = 0; i < a.size(); ++i)
    for (unsigned long j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
  for (unsigned long k = 2 * n - 1; k >= n; --k)
    if (acc[k] != 0) {
      acc[k - n] += acc[k];
      acc[k] = 0;
    }
  auto phi = cyclotomic_polynomial(n);
  unsigned long d = phi.size() - 1;
  for (unsigned long k = n; k-- > d;) {
    if (acc[k] == 0) continue;
    Rational f = acc[k];
    for (unsigned long j = 0; j < phi.size(); ++j) acc[k - d + j] -= f * Rational(phi[j]);
  }
  acc.resize(n);
  return acc;
}

CycNum random_cyc(std::mt19937& rng, unsigned long n) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rational> c(n);
  for (auto& q : c) {
    q = Rational(coeff(rng), den(rng));
    q.canonicalize();
  }
  return CycNum::from_coeffs(n, std::move(c));
}

}  // namespace

TEST_CASE("primitive cube roots sum to -1") {
  CHECK(CycNum::zeta(3, 1) + CycNum::zeta(3, 2) == CycNum(-1));
}

TEST_CASE("inverse of zeta5 is zeta5^4") {
  CHECK(CycNum::zeta(5).inverse() == CycNum::zeta(5, 4));
}

TEST_CASE("(1+zeta8)(1-zeta8) against polynomial oracle") {
  CycNum a = CycNum(1) + CycNum::zeta(8);
  CycNum b = CycNum(1) - CycNum::zeta(8);
  CycNum prod = a * b;
  CHECK(prod == CycNum(1) - CycNum::zeta(8, 2));
  auto expect = poly_mul_mod_phi(8, a.coeffs(), b.coeffs());
  CHECK(prod.coeffs() == expect);
}

TEST_CASE("inversion of zero is rejected") {
  CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("mixed-order arithmetic lands in the lcm order") {
  CycNum x = CycNum::zeta(3) + CycNum::zeta(4);
  CHECK(x.order() == 12);
  CHECK(x - CycNum::zeta(4) == CycNum::zeta(3));
}

TEST_CASE("galois action on the generator") {
  CHECK(CycNum::zeta(5).galois(2) == CycNum::zeta(5, 2));
  CHECK(CycNum(Rational(7, 3)).galois(5) == CycNum(Rational(7, 3)));
  // coefficient permutation oracle
  CycNum x = CycNum::zeta(3) + CycNum(2) * CycNum::zeta(3, 2);
  CHECK(x.galois(2) == CycNum::zeta(3, 2) + CycNum(2) * CycNum::zeta(3));
  CHECK_THROWS_AS(CycNum::zeta(6).galois(2), std::invalid_argument);
}

TEST_CASE("galois composition and field axioms on random samples") {
  std::mt19937 rng(42);
  for (unsigned long n : {5ul, 8ul, 9ul, 12ul}) {
    for (int t = 0; t < 8; ++t) {
      CycNum x = random_cyc(rng, n), y = random_cyc(rng, n);
      long k = 1 + static_cast<long>(rng() % n);
      while (gcd_ul(mod_ul(k, n), n) != 1) ++k;
      long j = 1 + static_cast<long>(rng() % n);
      while (gcd_ul(mod_ul(j, n), n) != 1) ++j;
      CHECK(x.galois(k).galois(j) == x.galois(static_cast<long>(mod_ul(k * j, n))));
      CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
      CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
      if (!x.is_zero()) CHECK(x * x.inverse() == CycNum(1));
      // mod-Phi relation
      CHECK(x * CycNum(1) == x);
    }
  }
}

TEST_CASE("minimal polynomial relation holds") {
  for (unsigned long n : {4ul, 5ul, 8ul, 9ul, 12ul, 15ul}) {
    auto phi = cyclotomic_polynomial(n);
    CycNum z = CycNum::zeta(n);
    CycNum acc(0);
    for (size_t i = 0; i < phi.size(); ++i)
      acc += CycNum(Rational(phi[i])) * z.pow(static_cast<long>(i));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("embedding round trip is the identity") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    CycNum x = random_cyc(rng, 9);
    CycNum up = x.embedded(36);
    auto back = up.descended(9);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  CHECK(!CycNum::zeta(8).descended(4).has_value());
}

TEST_CASE("complex evaluation") {
  auto i = CycNum::zeta(4).complex_value();
  CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(CycNum(-1).complex_value() - std::complex<double>(-1, 0)) < 1e-12);
  CycNum root2 = CycNum::zeta(8) + CycNum::zeta(8, -1);
  CHECK(std::abs(root2.complex_value() - std::complex<double>(std::sqrt(2.0), 0)) < 1e-9);
  CHECK(std::abs(std::abs(CycNum::zeta(35).complex_value()) - 1.0) < 1e-12);
}

TEST_CASE("complex evaluation is a ring homomorphism within 1e-9") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    CycNum x = random_cyc(rng, 12), y = random_cyc(rng, 12);
    CHECK(std::abs((x * y).complex_value() - x.complex_value() * y.complex_value()) < 1e-9);
    CHECK(std::abs((x + y).complex_value() - (x.complex_value() + y.complex_value())) < 1e-9);
  }
}

TEST_CASE("rationality detection") {
  CHECK(*(CycNum::zeta(6) + CycNum::zeta(6, 5)).as_rational() == 1);
  CHECK(!CycNum::zeta(5).as_rational().has_value());
  CycNum s(0);
  for (long k = 1; k <= 4; ++k) s += CycNum::zeta(5, k);  // geometric sum oracle
  CHECK(*s.as_rational() == -1);
}

TEST_CASE("fixed field of the full galois action is Q") {
  std::mt19937 rng(11);
  for (int t = 0; t < 12; ++t) {
    unsigned long n = 9;
    CycNum x = random_cyc(rng, n);
    bool fixed = true;
    for (unsigned long k = 2; k < n; ++k)
      if (gcd_ul(k, n) == 1 && x.galois(static_cast<long>(k)) != x) fixed = false;
    CHECK(fixed == x.is_rational());
  }
}

TEST_CASE("monomial detection and fast inverse") {
  CycNum m = CycNum(Rational(3, 2)) * CycNum::zeta(7, 4);
  auto mono = m.as_monomial();
  REQUIRE(mono.has_value());
  CHECK(mono->first == 4);
  CHECK(m * m.inverse() == CycNum(1));
  CHECK(!(CycNum::zeta(5) + CycNum(1)).as_monomial().has_value());
}

TEST_CASE("exact determinant and solve over a cyclotomic field") {
  std::vector<std::vector<CycNum>> m = {
      {CycNum::zeta(5), CycNum(1)},
      {CycNum(1), CycNum::zeta(5, 4)},
  };
  // det = 1 - 1 = 0 since zeta * zeta^4 = 1
  CHECK(cyc_matrix_det(m).is_zero());
  m[1][1] = CycNum::zeta(5, 2);
  CycNum det = cyc_matrix_det(m);
  CHECK(det == CycNum::zeta(5, 3) - CycNum(1));
  auto sol = cyc_solve(m, {CycNum(1), CycNum(0)});
  CHECK(m[0][0] * sol[0] + m[0][1] * sol[1] == CycNum(1));
  CHECK(m[1][0] * sol[0] + m[1][1] * sol[1] == CycNum(0));
}
