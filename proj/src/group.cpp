#include "arithk/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arithk/nt.hpp"

namespace arithk {

void FiniteGroup::verify() const {
  unsigned n = n_;
  for (unsigned a = 0; a < n; ++a)
    if (mul_[a].size() != n) throw std::invalid_argument("group table not square");
  for (unsigned a = 0; a < n; ++a)
    if (mul_[0][a] != a || mul_[a][0] != a)
      throw std::invalid_argument("element 0 is not an identity");
  for (unsigned a = 0; a < n; ++a) {
    bool has_inv = false;
    for (unsigned b = 0; b < n; ++b)
      if (mul_[a][b] == 0 && mul_[b][a] == 0) has_inv = true;
    if (!has_inv) throw std::invalid_argument("missing inverse");
  }
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::invalid_argument("multiplication not associative");
}

void FiniteGroup::fill_derived() {
  inv_.assign(n_, 0);
  order_.assign(n_, 0);
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b)
      if (mul_[a][b] == 0) inv_[a] = b;
  for (unsigned a = 0; a < n_; ++a) {
    unsigned x = a, k = 1;
    while (x != 0) {
      x = mul_[x][a];
      ++k;
    }
    order_[a] = k;
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<unsigned>> table) {
  FiniteGroup g;
  g.n_ = static_cast<unsigned>(table.size());
  if (g.n_ == 0) throw std::invalid_argument("empty group");
  g.mul_ = std::move(table);
  g.verify();
  g.fill_derived();
  return g;
}

FiniteGroup FiniteGroup::cyclic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic(0)");
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  auto g = from_table(std::move(t));
  g.spec_ = "cyclic:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::product_of_cyclics(const std::vector<unsigned>& ns) {
  unsigned n = 1;
  for (unsigned k : ns) {
    if (k == 0) throw std::invalid_argument("cyclic factor of order 0");
    n *= k;
  }
  auto decode = [&](unsigned x) {
    std::vector<unsigned> v(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) {
      v[i] = x % ns[i];
      x /= ns[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<unsigned>& v) {
    unsigned x = 0;
    for (size_t i = ns.size(); i-- > 0;) x = x * ns[i] + v[i];
    return x;
  };
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      auto va = decode(a), vb = decode(b);
      for (size_t i = 0; i < ns.size(); ++i) va[i] = (va[i] + vb[i]) % ns[i];
      t[a][b] = encode(va);
    }
  auto g = from_table(std::move(t));
  std::ostringstream os;
  os << "product:";
  for (size_t i = 0; i < ns.size(); ++i) os << (i ? "," : "") << ns[i];
  g.spec_ = os.str();
  return g;
}

FiniteGroup FiniteGroup::heisenberg(unsigned p) {
  if (!is_prime_ul(p) || p == 2) throw std::invalid_argument("heisenberg needs an odd prime");
  unsigned n = p * p * p;
  auto enc = [&](unsigned x, unsigned y, unsigned z) { return (x * p + y) * p + z; };
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y)
      for (unsigned z = 0; z < p; ++z)
        for (unsigned x2 = 0; x2 < p; ++x2)
          for (unsigned y2 = 0; y2 < p; ++y2)
            for (unsigned z2 = 0; z2 < p; ++z2)
              t[enc(x, y, z)][enc(x2, y2, z2)] =
                  enc((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p);
  auto g = from_table(std::move(t));
  g.spec_ = "heisenberg:" + std::to_string(p);
  return g;
}

FiniteGroup FiniteGroup::modular(unsigned p) {
  if (!is_prime_ul(p) || p == 2) throw std::invalid_argument("modular needs an odd prime");
  unsigned p2 = p * p, n = p2 * p;
  auto enc = [&](unsigned i, unsigned j) { return i * p + j; };  // a^i b^j
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned i = 0; i < p2; ++i)
    for (unsigned j = 0; j < p; ++j)
      for (unsigned i2 = 0; i2 < p2; ++i2)
        for (unsigned j2 = 0; j2 < p; ++j2) {
          // b^j a^{i2} = a^{i2 (1+p)^j} b^j
          unsigned f = static_cast<unsigned>(powmod_ul(1 + p, j, p2));
          t[enc(i, j)][enc(i2, j2)] = enc((i + i2 * f) % p2, (j + j2) % p);
        }
  auto g = from_table(std::move(t));
  g.spec_ = "modular:" + std::to_string(p);
  return g;
}

FiniteGroup FiniteGroup::metacyclic(unsigned l, unsigned p, unsigned ea, unsigned eb) {
  if (!is_prime_ul(l) || !is_prime_ul(p)) throw std::invalid_argument("metacyclic needs primes");
  if ((p - 1) % l != 0) throw std::invalid_argument("metacyclic needs l | p-1");
  unsigned long g0 = smallest_primitive_root(p);
  unsigned long r = powmod_ul(g0, (p - 1) / l, p);  // fixed automorphism of order l
  unsigned long ra = powmod_ul(r, ea, p), rb = powmod_ul(r, eb, p);
  if (ra == 1 && rb == 1) throw std::invalid_argument("metacyclic action is trivial");
  unsigned n = l * l * p;
  auto enc = [&](unsigned i, unsigned j, unsigned k) { return (i * l + j) * l + k; };  // c^i a^j b^k
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < l; ++j)
      for (unsigned k = 0; k < l; ++k)
        for (unsigned i2 = 0; i2 < p; ++i2)
          for (unsigned j2 = 0; j2 < l; ++j2)
            for (unsigned k2 = 0; k2 < l; ++k2) {
              // a^j b^k c^{i2} = c^{i2 * ra^j rb^k} a^j b^k
              unsigned long f = mulmod_ul(powmod_ul(ra, j, p), powmod_ul(rb, k, p), p);
              t[enc(i, j, k)][enc(i2, j2, k2)] =
                  enc(static_cast<unsigned>((i + i2 * f) % p), (j + j2) % l, (k + k2) % l);
            }
  auto g = from_table(std::move(t));
  std::ostringstream os;
  os << "metacyclic:" << l << "," << p << "," << ea << "," << eb;
  g.spec_ = os.str();
  return g;
}

FiniteGroup FiniteGroup::parse_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string tag = spec.substr(0, colon);
  std::vector<unsigned> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
      args.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (tag == "cyclic" && args.size() == 1) return cyclic(args[0]);
  if (tag == "product" && !args.empty()) return product_of_cyclics(args);
  if (tag == "heisenberg" && args.size() == 1) return heisenberg(args[0]);
  if (tag == "modular" && args.size() == 1) return modular(args[0]);
  if (tag == "metacyclic" && args.size() == 2) return metacyclic(args[0], args[1]);
  if (tag == "metacyclic" && args.size() == 4) return metacyclic(args[0], args[1], args[2], args[3]);
  throw std::invalid_argument("unsupported group spec: " + spec);
}

unsigned FiniteGroup::pow(unsigned a, long e) const {
  unsigned long k = mod_ul(e, order_[a]);
  unsigned r = 0;
  while (k--) r = mul_[r][a];
  return r;
}

unsigned FiniteGroup::exponent() const {
  unsigned long e = 1;
  for (unsigned a = 0; a < n_; ++a) e = lcm_ul(e, order_[a]);
  return static_cast<unsigned>(e);
}

bool FiniteGroup::is_abelian() const {
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = a + 1; b < n_; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

const std::vector<std::vector<unsigned>>& FiniteGroup::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  std::vector<char> seen(n_, 0);
  std::vector<std::vector<unsigned>> cls;
  for (unsigned g = 0; g < n_; ++g) {
    if (seen[g]) continue;
    std::set<unsigned> orbit;
    for (unsigned x = 0; x < n_; ++x) orbit.insert(mul_[mul_[x][g]][inv_[x]]);
    std::vector<unsigned> v(orbit.begin(), orbit.end());
    for (unsigned e : v) seen[e] = 1;
    cls.push_back(std::move(v));
  }
  std::sort(cls.begin(), cls.end(), [&](const auto& a, const auto& b) {
    if (order_[a[0]] != order_[b[0]]) return order_[a[0]] < order_[b[0]];
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  classes_ = std::move(cls);
  class_of_.assign(n_, 0);
  for (unsigned i = 0; i < classes_.size(); ++i)
    for (unsigned e : classes_[i]) class_of_[e] = i;
  return classes_;
}

unsigned FiniteGroup::class_of(unsigned g) const {
  conjugacy_classes();
  return class_of_[g];
}

std::vector<unsigned> FiniteGroup::subgroup_closure(std::vector<unsigned> gens) const {
  std::set<unsigned> h{0};
  std::vector<unsigned> frontier{0};
  for (unsigned g : gens)
    if (!h.count(g)) {
      h.insert(g);
      frontier.push_back(g);
    }
  while (!frontier.empty()) {
    std::vector<unsigned> next;
    for (unsigned a : frontier)
      for (unsigned b : std::vector<unsigned>(h.begin(), h.end())) {
        for (unsigned c : {mul_[a][b], mul_[b][a]})
          if (!h.count(c)) {
            h.insert(c);
            next.push_back(c);
          }
      }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

std::vector<std::vector<unsigned>> FiniteGroup::subgroups() const {
  std::set<std::vector<unsigned>> found;
  found.insert({0});
  // Closure under adjoining one generator until stable.
  std::vector<std::vector<unsigned>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& h : frontier)
      for (unsigned g = 1; g < n_; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<unsigned> gens = h;
        gens.push_back(g);
        auto hh = subgroup_closure(std::move(gens));
        if (found.insert(hh).second) next.push_back(std::move(hh));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<unsigned>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<unsigned> FiniteGroup::commutator_subgroup() const {
  std::vector<unsigned> gens;
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b)
      gens.push_back(mul_[mul_[mul_[a][b]][inv_[a]]][inv_[b]]);
  return subgroup_closure(std::move(gens));
}

std::vector<unsigned> FiniteGroup::center() const {
  std::vector<unsigned> z;
  for (unsigned a = 0; a < n_; ++a) {
    bool central = true;
    for (unsigned b = 0; b < n_ && central; ++b) central = (mul_[a][b] == mul_[b][a]);
    if (central) z.push_back(a);
  }
  return z;
}

bool FiniteGroup::is_normal(const std::vector<unsigned>& h) const {
  for (unsigned x = 0; x < n_; ++x)
    for (unsigned e : h)
      if (!std::binary_search(h.begin(), h.end(), mul_[mul_[x][e]][inv_[x]])) return false;
  return true;
}

std::pair<FiniteGroup, std::vector<unsigned>> FiniteGroup::quotient(
    const std::vector<unsigned>& normal) const {
  if (!is_normal(normal)) throw std::invalid_argument("quotient by non-normal subgroup");
  // Cosets, with the identity coset first.
  std::vector<long> coset_of(n_, -1);
  std::vector<unsigned> reps;
  for (unsigned g = 0; g < n_; ++g) {
    if (coset_of[g] >= 0) continue;
    unsigned idx = static_cast<unsigned>(reps.size());
    reps.push_back(g);
    for (unsigned e : normal) coset_of[mul_[g][e]] = idx;
  }
  unsigned m = static_cast<unsigned>(reps.size());
  std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      t[i][j] = static_cast<unsigned>(coset_of[mul_[reps[i]][reps[j]]]);
  auto q = from_table(std::move(t));
  q.spec_ = spec_ + "/N" + std::to_string(normal.size());
  std::vector<unsigned> proj(n_);
  for (unsigned g = 0; g < n_; ++g) proj[g] = static_cast<unsigned>(coset_of[g]);
  return {std::move(q), std::move(proj)};
}

}  // namespace arithk
