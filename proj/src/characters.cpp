#include "arithk/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arithk/nt.hpp"

namespace arithk {

std::vector<std::vector<unsigned>> abelian_dual(const FiniteGroup& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian_dual on non-abelian group");
  unsigned n = g.size();
  unsigned e = g.exponent();
  // Greedy minimal generating set.
  std::vector<unsigned> gens;
  std::vector<unsigned> have = g.subgroup_closure({});
  while (have.size() < n) {
    unsigned best = 0, best_order = 0;
    for (unsigned x = 0; x < n; ++x) {
      if (std::binary_search(have.begin(), have.end(), x)) continue;
      if (g.order_of(x) > best_order) {
        best_order = g.order_of(x);
        best = x;
      }
    }
    gens.push_back(best);
    auto with = gens;
    have = g.subgroup_closure(with);
  }
  // Express every element as a word in the generators (BFS).
  std::vector<std::vector<unsigned>> word(n);  // exponent per generator
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  word[0].assign(gens.size(), 0);
  std::vector<unsigned> queue{0};
  while (!queue.empty()) {
    std::vector<unsigned> next;
    for (unsigned x : queue)
      for (size_t i = 0; i < gens.size(); ++i) {
        unsigned y = g.mul(x, gens[i]);
        if (seen[y]) continue;
        seen[y] = 1;
        word[y] = word[x];
        word[y][i] += 1;
        next.push_back(y);
      }
    queue = std::move(next);
  }
  // Characters: assignments of exponents to generators consistent with all
  // relations; checked against the full multiplication structure.
  std::vector<std::vector<unsigned>> result;
  std::vector<unsigned> assign(gens.size(), 0);
  auto consistent = [&](const std::vector<unsigned>& a) {
    // Candidate values chi(x) := zeta^{sum_i a_i word_x_i}; chi is a character
    // iff the value only depends on x (well-defined) and is multiplicative,
    // which holds iff chi(gen_i)^{ord(gen_i)} = 1 and products agree.
    std::vector<unsigned> val(n);
    for (unsigned x = 0; x < n; ++x) {
      unsigned long s = 0;
      for (size_t i = 0; i < gens.size(); ++i)
        s += static_cast<unsigned long>(a[i]) * word[x][i];
      val[x] = static_cast<unsigned>(s % e);
    }
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y)
        if ((val[x] + val[y]) % e != val[g.mul(x, y)]) return std::vector<unsigned>();
    return val;
  };
  std::vector<std::vector<unsigned>> out;
  while (true) {
    auto val = consistent(assign);
    if (!val.empty() || n == 1) out.push_back(n == 1 ? std::vector<unsigned>{0} : val);
    // increment multi-index; generator i ranges over multiples of e/ord(gen_i)
    size_t i = 0;
    for (; i < gens.size(); ++i) {
      unsigned step = e / g.order_of(gens[i]);
      assign[i] += step;
      if (assign[i] < e) break;
      assign[i] = 0;
    }
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != n) throw std::logic_error("abelian dual has wrong size");
  return out;
}

namespace {

// The value vector (per class) of the induction of `lambda` on H to G.
ClassFn induce_linear(const FiniteGroup& g, const std::vector<unsigned>& h,
                      const std::vector<CycNum>& lambda) {
  const auto& classes = g.conjugacy_classes();
  auto h_index = [&](unsigned x) -> long {
    auto it = std::lower_bound(h.begin(), h.end(), x);
    if (it == h.end() || *it != x) return -1;
    return it - h.begin();
  };
  ClassFn f;
  f.values.reserve(classes.size());
  for (const auto& cls : classes) {
    unsigned rep = cls[0];
    CycNum s(0);
    for (unsigned x = 0; x < g.size(); ++x) {
      unsigned conj = g.mul(g.mul(g.inv(x), rep), x);
      long idx = h_index(conj);
      if (idx >= 0) s += lambda[static_cast<size_t>(idx)];
    }
    Rational scale(1, static_cast<unsigned long>(h.size()));
    scale.canonicalize();
    f.values.push_back(CycNum(Rational(scale)) * s);
  }
  return f;
}

std::vector<unsigned> left_transversal(const FiniteGroup& g, const std::vector<unsigned>& h) {
  std::vector<char> covered(g.size(), 0);
  std::vector<unsigned> reps;
  for (unsigned x = 0; x < g.size(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (unsigned e : h) covered[g.mul(x, e)] = 1;
  }
  return reps;
}

}  // namespace

IrrTable IrrTable::build(FiniteGroup g, unsigned order_bound) {
  if (g.size() > order_bound)
    throw std::invalid_argument("group order exceeds configured bound");
  IrrTable t;
  t.g_ = std::move(g);
  const FiniteGroup& G = t.g_;
  const auto& classes = G.conjugacy_classes();
  unsigned target = G.size();

  struct Cand {
    ClassFn fn;
    MonomialRep rep;
    long deg;
  };
  std::vector<Cand> found;
  auto value_vec_known = [&](const ClassFn& f) {
    for (const auto& c : found)
      if (std::equal(c.fn.values.begin(), c.fn.values.end(), f.values.begin(),
                     [](const CycNum& a, const CycNum& b) { return a == b; }))
        return true;
    return false;
  };
  auto degree_sum = [&]() {
    unsigned long s = 0;
    for (const auto& c : found) s += static_cast<unsigned long>(c.deg) * c.deg;
    return s;
  };

  // Linear characters from the abelianization.
  {
    auto derived = G.commutator_subgroup();
    auto [q, proj] = G.quotient(derived);
    unsigned e = q.exponent() == 0 ? 1 : q.exponent();
    for (const auto& expo : abelian_dual(q)) {
      Cand c;
      c.deg = 1;
      c.fn.values.reserve(classes.size());
      for (const auto& cls : classes)
        c.fn.values.push_back(CycNum::zeta(std::max(1u, e), expo[proj[cls[0]]]));
      std::vector<unsigned> all(G.size());
      for (unsigned i = 0; i < G.size(); ++i) all[i] = i;
      c.rep.subgroup = all;
      c.rep.transversal = {0};
      c.rep.linear_values.reserve(G.size());
      for (unsigned x = 0; x < G.size(); ++x)
        c.rep.linear_values.push_back(CycNum::zeta(std::max(1u, e), expo[proj[x]]));
      found.push_back(std::move(c));
    }
  }

  if (degree_sum() < target) {
    // Monomial induction from proper subgroups, largest first.
    auto subs = G.subgroups();
    std::sort(subs.begin(), subs.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& h : subs) {
      if (degree_sum() == target) break;
      if (h.size() == G.size() || h.size() == 1) continue;
      // Subgroup as a group in its own right.
      std::vector<std::vector<unsigned>> tbl(h.size(), std::vector<unsigned>(h.size()));
      for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < h.size(); ++j) {
          unsigned prod = G.mul(h[i], h[j]);
          tbl[i][j] = static_cast<unsigned>(
              std::lower_bound(h.begin(), h.end(), prod) - h.begin());
        }
      FiniteGroup H = FiniteGroup::from_table(std::move(tbl));
      auto derived = H.commutator_subgroup();
      auto [q, proj] = H.quotient(derived);
      unsigned e = q.exponent();
      for (const auto& expo : abelian_dual(q)) {
        std::vector<CycNum> lambda;
        lambda.reserve(h.size());
        for (size_t i = 0; i < h.size(); ++i)
          lambda.push_back(CycNum::zeta(std::max(1u, e), expo[proj[i]]));
        ClassFn ind = induce_linear(G, h, lambda);
        Rational norm = t.inner_product_on(G, ind, ind);
        if (norm != 1) continue;
        if (value_vec_known(ind)) continue;
        Cand c;
        c.deg = static_cast<long>(G.size() / h.size());
        c.fn = std::move(ind);
        c.rep.subgroup = h;
        c.rep.linear_values = std::move(lambda);
        c.rep.transversal = left_transversal(G, h);
        found.push_back(std::move(c));
        if (degree_sum() == target) break;
      }
    }
  }

  if (degree_sum() != target)
    throw std::runtime_error("group not monomial within bound");

  // Canonical order: by degree, then lexicographically by values embedded at
  // a common order.
  unsigned e = G.exponent();
  for (auto& c : found)
    for (auto& v : c.fn.values) v = v.embedded(e);
  std::sort(found.begin(), found.end(), [&](const Cand& a, const Cand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    for (size_t i = 0; i < a.fn.values.size(); ++i) {
      int c = CycNum::compare(a.fn.values[i], b.fn.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  for (auto& c : found) {
    t.chars_.push_back(std::move(c.fn));
    t.monomial_.push_back(std::move(c.rep));
  }

  // Orthogonality is part of the construction contract.
  for (unsigned i = 0; i < t.num_chars(); ++i)
    for (unsigned j = i; j < t.num_chars(); ++j) {
      Rational ip = t.inner_product(t.chars_[i], t.chars_[j]);
      if (ip != Rational(i == j ? 1 : 0))
        throw std::logic_error("character table fails orthogonality");
    }
  return t;
}

Rational IrrTable::inner_product_on(const FiniteGroup& g, const ClassFn& a, const ClassFn& b) {
  const auto& classes = g.conjugacy_classes();
  CycNum s(0);
  for (unsigned c = 0; c < classes.size(); ++c) {
    unsigned rep = classes[c][0];
    unsigned inv_cls = g.class_of(g.inv(rep));
    s += CycNum(static_cast<long>(classes[c].size())) * a.values[c] * b.values[inv_cls];
  }
  auto q = s.as_rational();
  if (!q) throw std::logic_error("inner product not rational");
  Rational r = *q / Rational(g.size());
  r.canonicalize();
  return r;
}

Rational IrrTable::inner_product(const ClassFn& a, const ClassFn& b) const {
  return inner_product_on(g_, a, b);
}

long IrrTable::degree(unsigned i) const {
  auto q = chars_[i].values[g_.class_of(0)].as_rational();
  return static_cast<long>(q->get_num().get_si());
}

CycNum IrrTable::value_at_element(unsigned chi, unsigned g) const {
  return chars_[chi].values[g_.class_of(g)];
}

unsigned IrrTable::trivial_char() const {
  for (unsigned i = 0; i < num_chars(); ++i) {
    bool ok = true;
    for (const auto& v : chars_[i].values)
      if (v != CycNum(1)) { ok = false; break; }
    if (ok) return i;
  }
  throw std::logic_error("trivial character missing");
}

std::optional<VirtualChar> IrrTable::decompose(const ClassFn& f) const {
  VirtualChar v;
  v.coeffs.reserve(num_chars());
  for (unsigned i = 0; i < num_chars(); ++i) {
    Rational c = inner_product(f, chars_[i]);
    if (c.get_den() != 1) return std::nullopt;
    v.coeffs.push_back(static_cast<long>(c.get_num().get_si()));
  }
  return v;
}

ClassFn IrrTable::realize(const VirtualChar& v) const {
  ClassFn f;
  f.values.assign(num_classes(), CycNum(0));
  for (unsigned i = 0; i < num_chars(); ++i) {
    if (v.coeffs[i] == 0) continue;
    for (unsigned c = 0; c < num_classes(); ++c)
      f.values[c] += CycNum(v.coeffs[i]) * chars_[i].values[c];
  }
  return f;
}

VirtualChar IrrTable::adams_of_irreducible(unsigned chi, long k) const {
  ClassFn f;
  f.values.reserve(num_classes());
  for (unsigned c = 0; c < num_classes(); ++c) {
    unsigned rep = class_rep(c);
    f.values.push_back(value_at_element(chi, g_.pow(rep, k)));
  }
  auto v = decompose(f);
  if (!v) throw std::logic_error("Adams image failed to decompose integrally");
  return *v;
}

VirtualChar IrrTable::adams(const VirtualChar& v, long k) const {
  VirtualChar out;
  out.coeffs.assign(num_chars(), 0);
  for (unsigned i = 0; i < num_chars(); ++i) {
    if (v.coeffs[i] == 0) continue;
    VirtualChar w = adams_of_irreducible(i, k);
    for (unsigned j = 0; j < num_chars(); ++j) out.coeffs[j] += v.coeffs[i] * w.coeffs[j];
  }
  return out;
}

std::optional<unsigned> IrrTable::adams_image_index(unsigned chi, long k) const {
  VirtualChar w = adams_of_irreducible(chi, k);
  long pos = -1;
  for (unsigned j = 0; j < num_chars(); ++j) {
    if (w.coeffs[j] == 0) continue;
    if (w.coeffs[j] != 1 || pos >= 0) return std::nullopt;
    pos = j;
  }
  if (pos < 0) return std::nullopt;
  return static_cast<unsigned>(pos);
}

unsigned IrrTable::galois_twist(unsigned chi, long k) const {
  unsigned e = g_.exponent();
  if (gcd_ul(mod_ul(k, e), e) != 1)
    throw std::invalid_argument("galois_twist: k not coprime to the exponent");
  ClassFn f;
  f.values.reserve(num_classes());
  for (const auto& v : chars_[chi].values) f.values.push_back(v.galois(k));
  auto idx = find(f);
  if (!idx) throw std::logic_error("Galois twist left the character table");
  return *idx;
}

std::optional<unsigned> IrrTable::find(const ClassFn& f) const {
  for (unsigned i = 0; i < num_chars(); ++i) {
    bool eq = true;
    for (unsigned c = 0; c < num_classes() && eq; ++c) eq = (chars_[i].values[c] == f.values[c]);
    if (eq) return i;
  }
  return std::nullopt;
}

int IrrTable::fs_indicator(unsigned chi) const {
  CycNum s(0);
  for (unsigned g = 0; g < g_.size(); ++g) s += value_at_element(chi, g_.mul(g, g));
  auto q = s.as_rational();
  if (!q) throw std::logic_error("FS indicator not rational");
  Rational r = *q / Rational(g_.size());
  r.canonicalize();
  if (r != -1 && r != 0 && r != 1) throw std::logic_error("FS indicator out of range");
  return static_cast<int>(r.get_num().get_si());
}

bool IrrTable::has_symplectic_irreducible() const {
  for (unsigned i = 0; i < num_chars(); ++i)
    if (fs_indicator(i) == -1) return true;
  return false;
}

std::vector<std::vector<CycNum>> IrrTable::rep_matrix(unsigned chi, unsigned g) const {
  const MonomialRep& r = monomial_[chi];
  const auto& h = r.subgroup;
  const auto& tr = r.transversal;
  size_t d = tr.size();
  std::vector<std::vector<CycNum>> m(d, std::vector<CycNum>(d, CycNum(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      unsigned x = g_.mul(g_.mul(g_.inv(tr[i]), g), tr[j]);
      auto it = std::lower_bound(h.begin(), h.end(), x);
      if (it != h.end() && *it == x)
        m[i][j] = r.linear_values[static_cast<size_t>(it - h.begin())];
    }
  return m;
}

CycNum IrrTable::det_of(const std::map<unsigned, CycNum>& a, unsigned chi) const {
  if (degree(chi) == 1) {
    CycNum s(0);
    for (const auto& [g, c] : a) s += c * value_at_element(chi, g);
    return s;
  }
  size_t d = monomial_[chi].transversal.size();
  std::vector<std::vector<CycNum>> m(d, std::vector<CycNum>(d, CycNum(0)));
  for (const auto& [g, c] : a) {
    if (c.is_zero()) continue;
    auto t = rep_matrix(chi, g);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        if (!t[i][j].is_zero()) m[i][j] += c * t[i][j];
  }
  return cyc_matrix_det(std::move(m));
}

CycNum IrrTable::det_of_matrix(const std::vector<std::vector<std::map<unsigned, CycNum>>>& m,
                               unsigned chi) const {
  size_t k = m.size();
  size_t d = degree(chi) == 1 ? 1 : monomial_[chi].transversal.size();
  std::vector<std::vector<CycNum>> big(k * d, std::vector<CycNum>(k * d, CycNum(0)));
  for (size_t bi = 0; bi < k; ++bi)
    for (size_t bj = 0; bj < k; ++bj)
      for (const auto& [g, c] : m[bi][bj]) {
        if (c.is_zero()) continue;
        if (d == 1) {
          big[bi][bj] += c * value_at_element(chi, g);
        } else {
          auto t = rep_matrix(chi, g);
          for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
              if (!t[i][j].is_zero()) big[bi * d + i][bj * d + j] += c * t[i][j];
        }
      }
  return cyc_matrix_det(std::move(big));
}

CycNum IrrTable::det_char_value(unsigned chi, unsigned g) const {
  std::map<unsigned, CycNum> a;
  a[g] = CycNum(1);
  return det_of(a, chi);
}

ClassFn IrrTable::restrict_to(const ClassFn& f, const FiniteGroup& h,
                              const std::vector<unsigned>& embedding) const {
  ClassFn out;
  out.values.reserve(h.conjugacy_classes().size());
  for (const auto& cls : h.conjugacy_classes())
    out.values.push_back(f.values[g_.class_of(embedding[cls[0]])]);
  return out;
}

ClassFn IrrTable::inflate_from(const ClassFn& f_on_quotient, const IrrTable& quotient_table,
                               const std::vector<unsigned>& proj) const {
  const FiniteGroup& Q = quotient_table.group();
  ClassFn out;
  out.values.reserve(num_classes());
  for (unsigned c = 0; c < num_classes(); ++c)
    out.values.push_back(f_on_quotient.values[Q.class_of(proj[class_rep(c)])]);
  return out;
}

ClassFn IrrTable::induce_from(const ClassFn& f_on_sub, const FiniteGroup& h,
                              const std::vector<unsigned>& embedding) const {
  // ind(f)(g) = (1/|H|) sum_{x in G, x^{-1} g x in H} f(x^{-1} g x)
  std::vector<long> g_to_h(g_.size(), -1);
  for (unsigned i = 0; i < h.size(); ++i) g_to_h[embedding[i]] = i;
  ClassFn out;
  out.values.reserve(num_classes());
  for (unsigned c = 0; c < num_classes(); ++c) {
    unsigned rep = class_rep(c);
    CycNum s(0);
    for (unsigned x = 0; x < g_.size(); ++x) {
      unsigned conj = g_.mul(g_.mul(g_.inv(x), rep), x);
      if (g_to_h[conj] >= 0)
        s += f_on_sub.values[h.class_of(static_cast<unsigned>(g_to_h[conj]))];
    }
    Rational scale(1, h.size());
    scale.canonicalize();
    out.values.push_back(CycNum(scale) * s);
  }
  return out;
}

}  // namespace arithk
