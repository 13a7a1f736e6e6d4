#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace arithk {

// Small utilities for machine-word modular arithmetic. Everything here is
// exact; moduli stay far below 2^32 so products fit in 64 bits.

inline unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

inline unsigned long lcm_ul(unsigned long a, unsigned long b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
  return a / std::gcd(a, b) * b;
}

inline unsigned long mod_ul(long long a, unsigned long m) {
  long long r = a % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<unsigned long>(r);
}

inline unsigned long mulmod_ul(unsigned long a, unsigned long b, unsigned long m) {
  return (a % m) * (b % m) % m;
}

inline unsigned long powmod_ul(unsigned long a, unsigned long e, unsigned long m) {
  unsigned long r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_ul(r, a, m);
    a = mulmod_ul(a, a, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a mod m, requires gcd(a, m) == 1.
inline unsigned long invmod_ul(unsigned long a, unsigned long m) {
  long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("invmod: not coprime");
  return mod_ul(t, m);
}

inline std::map<unsigned long, unsigned> factorize_ul(unsigned long n) {
  std::map<unsigned long, unsigned> f;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    while (n % p == 0) { ++f[p]; n /= p; }
  if (n > 1) ++f[n];
  return f;
}

inline bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline unsigned long euler_phi_ul(unsigned long n) {
  unsigned long r = n;
  for (auto& [p, e] : factorize_ul(n)) r = r / p * (p - 1);
  return r;
}

// Carmichael function: the exponent of (Z/n)^x.
inline unsigned long carmichael_ul(unsigned long n) {
  unsigned long r = 1;
  for (auto& [p, e] : factorize_ul(n)) {
    unsigned long lam;
    if (p == 2 && e >= 3)
      lam = 1ul << (e - 2);
    else {
      lam = (p - 1);
      for (unsigned i = 1; i < e; ++i) lam *= p;
    }
    r = lcm_ul(r, lam);
  }
  return n == 1 ? 1 : r;
}

// x with x = a mod m, x = b mod n for coprime m, n.
inline unsigned long crt_ul(unsigned long a, unsigned long m, unsigned long b, unsigned long n) {
  unsigned long minv = invmod_ul(m % n, n);
  unsigned long k = mulmod_ul(mod_ul(static_cast<long long>(b) - static_cast<long long>(a % n), n), minv, n);
  return a + m * k;
}

inline unsigned long smallest_primitive_root(unsigned long p) {
  if (!is_prime_ul(p)) throw std::invalid_argument("primitive root: modulus not prime");
  if (p == 2) return 1;
  auto fac = factorize_ul(p - 1);
  for (unsigned long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& [q, e] : fac)
      if (powmod_ul(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("primitive root search failed");
}

}  // namespace arithk
