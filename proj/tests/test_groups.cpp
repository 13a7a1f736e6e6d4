#include "arithk/group.hpp"

#include <random>

#include "arithk/characters.hpp"
#include "arithk/nt.hpp"
#include "doctest.h"

using namespace arithk;

TEST_CASE("group constructions") {
  auto h = FiniteGroup::heisenberg(3);
  CHECK(h.size() == 27);
  CHECK(h.exponent() == 3);
  CHECK(h.center().size() == 3);
  CHECK(!h.is_abelian());

  auto m = FiniteGroup::modular(3);
  CHECK(m.size() == 27);
  CHECK(m.exponent() == 9);
  CHECK(m.center().size() == 3);

  CHECK(FiniteGroup::cyclic(1).size() == 1);
  CHECK(FiniteGroup::parse_spec("product:3,3").is_abelian());
  CHECK_THROWS(FiniteGroup::parse_spec("dihedral:6"));

  auto g63 = FiniteGroup::metacyclic(3, 7);
  CHECK(g63.size() == 63);
  CHECK(!g63.is_abelian());
}

TEST_CASE("heisenberg(3) character degrees") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  REQUIRE(t.num_chars() == 11);
  int linear = 0, deg3 = 0;
  for (unsigned i = 0; i < t.num_chars(); ++i) {
    if (t.degree(i) == 1) ++linear;
    if (t.degree(i) == 3) ++deg3;
  }
  CHECK(linear == 9);
  CHECK(deg3 == 2);
}

TEST_CASE("modular(3) character degrees") {
  auto t = IrrTable::build(FiniteGroup::modular(3));
  int linear = 0, deg3 = 0;
  for (unsigned i = 0; i < t.num_chars(); ++i) {
    if (t.degree(i) == 1) ++linear;
    if (t.degree(i) == 3) ++deg3;
  }
  CHECK(linear == 9);
  CHECK(deg3 == 2);
}

TEST_CASE("cyclic(5) has 5 linear characters") {
  auto t = IrrTable::build(FiniteGroup::cyclic(5));
  REQUIRE(t.num_chars() == 5);
  for (unsigned i = 0; i < t.num_chars(); ++i) CHECK(t.degree(i) == 1);
}

TEST_CASE("order-63 degrees complete the square sum") {
  auto t = IrrTable::build(FiniteGroup::metacyclic(3, 7));
  long sum = 0;
  for (unsigned i = 0; i < t.num_chars(); ++i) sum += t.degree(i) * t.degree(i);
  CHECK(sum == 63);
  // column orthogonality at two distinct classes
  const auto& classes = t.group().conjugacy_classes();
  for (unsigned c1 = 0; c1 < classes.size(); ++c1)
    for (unsigned c2 = 0; c2 < classes.size(); ++c2) {
      CycNum s(0);
      for (unsigned i = 0; i < t.num_chars(); ++i) {
        unsigned inv_cls = t.group().class_of(t.group().inv(t.class_rep(c2)));
        s += t.value(i, c1) * t.character(i).values[inv_cls];
      }
      if (c1 == c2)
        CHECK(s == CycNum(static_cast<long>(t.group().size() / classes[c1].size())));
      else
        CHECK(s.is_zero());
    }
}

TEST_CASE("character values lie in the field of the element order") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  for (unsigned i = 0; i < t.num_chars(); ++i)
    for (unsigned c = 0; c < t.num_classes(); ++c) {
      unsigned ord = t.group().order_of(t.class_rep(c));
      CHECK(t.value(i, c).minimal_order() <= ord);
    }
}

TEST_CASE("adams operator on linear characters is the power map") {
  auto t = IrrTable::build(FiniteGroup::cyclic(9));
  for (unsigned i = 0; i < t.num_chars(); ++i) {
    for (long k : {2L, 4L, 5L}) {
      auto idx = t.adams_image_index(i, k);
      REQUIRE(idx.has_value());
      // chi^k evaluated directly
      for (unsigned c = 0; c < t.num_classes(); ++c)
        CHECK(t.value(*idx, c) == t.value(i, c).pow(k));
    }
  }
}

TEST_CASE("adams on a degree-3 character of heisenberg(3)") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  unsigned chi = 0;
  while (t.degree(chi) != 3) ++chi;
  auto idx = t.adams_image_index(chi, 2);
  REQUIRE(idx.has_value());
  CHECK(t.degree(*idx) == 3);
  // decomposition oracle: direct inner products of g -> chi(g^2)
  ClassFn f;
  for (unsigned c = 0; c < t.num_classes(); ++c)
    f.values.push_back(t.value_at_element(chi, t.group().pow(t.class_rep(c), 2)));
  auto v = t.decompose(f);
  REQUIRE(v.has_value());
  long nonzero = 0;
  for (long cf : v->coeffs) nonzero += (cf != 0);
  CHECK(nonzero == 1);
}

TEST_CASE("adams fixes the trivial character") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  unsigned triv = t.trivial_char();
  for (long k : {2L, 4L, 7L}) CHECK(*t.adams_image_index(triv, k) == triv);
}

TEST_CASE("adams composition psi_k psi_j = psi_kj") {
  auto t = IrrTable::build(FiniteGroup::modular(3));
  unsigned e = t.group().exponent();
  for (unsigned chi = 0; chi < t.num_chars(); ++chi) {
    unsigned a = *t.adams_image_index(chi, 2);
    unsigned b = *t.adams_image_index(a, 2);
    CHECK(b == *t.adams_image_index(chi, static_cast<long>(mod_ul(4, e))));
  }
}

TEST_CASE("det of adams image is the k-th power of det") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  for (unsigned chi = 0; chi < t.num_chars(); ++chi) {
    unsigned im = *t.adams_image_index(chi, 2);
    for (unsigned g = 0; g < t.group().size(); g += 5)
      CHECK(t.det_char_value(im, g) == t.det_char_value(chi, g).pow(2));
  }
}

TEST_CASE("galois twist") {
  auto t = IrrTable::build(FiniteGroup::cyclic(3));
  unsigned triv = t.trivial_char();
  CHECK(t.galois_twist(triv, 2) == triv);
  for (unsigned i = 0; i < t.num_chars(); ++i) {
    if (i == triv) continue;
    unsigned tw = t.galois_twist(i, 2);
    CHECK(tw != i);  // conjugate of an order-3 character
    for (unsigned c = 0; c < t.num_classes(); ++c)
      CHECK(t.value(tw, c) == t.value(i, c).conj());
  }
  auto h = IrrTable::build(FiniteGroup::heisenberg(3));
  unsigned chi = 0;
  while (h.degree(chi) != 3) ++chi;
  unsigned tw = h.galois_twist(chi, 2);
  CHECK(h.degree(tw) == 3);
  CHECK_THROWS_AS(h.galois_twist(chi, 3), std::invalid_argument);
}

TEST_CASE("galois orbits cover the table and stay irreducible") {
  for (auto spec : {"heisenberg:3", "metacyclic:3,7"}) {
    auto t = IrrTable::build(FiniteGroup::parse_spec(spec));
    unsigned e = t.group().exponent();
    std::vector<char> hit(t.num_chars(), 0);
    for (unsigned i = 0; i < t.num_chars(); ++i)
      for (unsigned k = 1; k < e; ++k)
        if (gcd_ul(k, e) == 1) hit[t.galois_twist(i, k)] = 1;
    for (char h : hit) CHECK(h == 1);
  }
}

TEST_CASE("induction restriction inflation") {
  auto G = FiniteGroup::heisenberg(3);
  auto t = IrrTable::build(G);
  auto subs = G.subgroups();
  // pick a subgroup of order 9
  std::vector<unsigned> h9;
  for (const auto& s : subs)
    if (s.size() == 9) { h9 = s; break; }
  REQUIRE(!h9.empty());
  std::vector<std::vector<unsigned>> tbl(9, std::vector<unsigned>(9));
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j)
      tbl[i][j] = static_cast<unsigned>(
          std::lower_bound(h9.begin(), h9.end(), G.mul(h9[i], h9[j])) - h9.begin());
  auto H = FiniteGroup::from_table(tbl);
  auto tH = IrrTable::build(H);

  // ind of the trivial character of H is the permutation character of G/H
  ClassFn trivH;
  trivH.values.assign(tH.num_classes(), CycNum(1));
  ClassFn perm = t.induce_from(trivH, H, h9);
  for (unsigned c = 0; c < t.num_classes(); ++c) {
    unsigned rep = t.class_rep(c);
    long fixed = 0;  // cosets xH with x^{-1} rep x ... counted directly
    for (unsigned x = 0; x < G.size(); ++x) {
      unsigned conj = G.mul(G.mul(G.inv(x), rep), x);
      if (std::binary_search(h9.begin(), h9.end(), conj)) ++fixed;
    }
    Rational expect(fixed, 9);
    expect.canonicalize();
    CHECK(perm.values[c] == CycNum(expect));
  }

  // Frobenius reciprocity on every irreducible pair
  for (unsigned i = 0; i < tH.num_chars(); ++i) {
    ClassFn ind = t.induce_from(tH.character(i), H, h9);
    for (unsigned j = 0; j < t.num_chars(); ++j) {
      ClassFn res = t.restrict_to(t.character(j), H, h9);
      CHECK(t.inner_product(ind, t.character(j)) == IrrTable::inner_product_on(H, tH.character(i), res));
    }
  }

  // induction commutes with psi_2 for odd order groups
  for (unsigned i = 0; i < tH.num_chars(); ++i) {
    ClassFn phi2;  // psi_2 of the subgroup character
    for (unsigned c = 0; c < tH.num_classes(); ++c)
      phi2.values.push_back(tH.value_at_element(i, H.pow(tH.class_rep(c), 2)));
    ClassFn lhs = t.induce_from(phi2, H, h9);
    ClassFn ind = t.induce_from(tH.character(i), H, h9);
    ClassFn rhs;
    for (unsigned c = 0; c < t.num_classes(); ++c) {
      unsigned rep = t.class_rep(c);
      rhs.values.push_back(CycNum(0));
      // evaluate ind at rep^2 by re-inducing pointwise
      unsigned sq = G.mul(rep, rep);
      rhs.values.back() = ind.values[G.class_of(sq)];
    }
    for (unsigned c = 0; c < t.num_classes(); ++c) CHECK(lhs.values[c] == rhs.values[c]);
  }

  // restriction of inflation: inflate characters of G/Z then restrict
  auto Z = G.center();
  auto [Q, proj] = G.quotient(Z);
  auto tQ = IrrTable::build(Q);
  for (unsigned i = 0; i < tQ.num_chars(); ++i) {
    ClassFn inf = t.inflate_from(tQ.character(i), tQ, proj);
    auto idx = t.decompose(inf);
    REQUIRE(idx.has_value());
    ClassFn back = t.realize(*idx);
    for (unsigned c = 0; c < t.num_classes(); ++c) CHECK(back.values[c] == inf.values[c]);
  }
}

TEST_CASE("det_of basics and multiplicativity") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  unsigned chi = 0;
  while (t.degree(chi) != 3) ++chi;
  std::map<unsigned, CycNum> one = {{0u, CycNum(1)}};
  CHECK(t.det_of(one, chi) == CycNum(1));

  // group element determinant equals det_chi(g)
  for (unsigned g = 0; g < 27; g += 4) {
    std::map<unsigned, CycNum> a = {{g, CycNum(1)}};
    CHECK(t.det_of(a, chi) == t.det_char_value(chi, g));
  }

  // sum of two elements against an explicit matrix determinant oracle
  std::map<unsigned, CycNum> s = {{1u, CycNum(1)}, {5u, CycNum(1)}};
  auto m1 = t.rep_matrix(chi, 1), m2 = t.rep_matrix(chi, 5);
  std::vector<std::vector<CycNum>> m(3, std::vector<CycNum>(3, CycNum(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = m1[i][j] + m2[i][j];
  CHECK(t.det_of(s, chi) == cyc_matrix_det(m));

  // multiplicativity on random group-ring products
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    std::map<unsigned, CycNum> a, b;
    for (int k = 0; k < 3; ++k) {
      a[rng() % 27] += CycNum(static_cast<long>(1 + rng() % 3));
      b[rng() % 27] += CycNum(static_cast<long>(1 + rng() % 3));
    }
    // group algebra product
    std::map<unsigned, CycNum> ab;
    for (const auto& [g, ca] : a)
      for (const auto& [h, cb] : b) ab[t.group().mul(g, h)] += ca * cb;
    for (unsigned i : {0u, chi})
      CHECK(t.det_of(ab, i) == t.det_of(a, i) * t.det_of(b, i));
  }
}

TEST_CASE("central idempotent determinant on an abelian group") {
  // (1 - e_H) + s^{-1} e_H on C9 with H of order 3 and s a generator:
  // value 1 at characters nontrivial on H, chi(s)^{-1} otherwise.
  auto G = FiniteGroup::cyclic(9);
  auto t = IrrTable::build(G);
  std::vector<unsigned> H = {0, 3, 6};
  unsigned s = 1;
  std::map<unsigned, CycNum> a;
  a[0] += CycNum(1);
  Rational third(1, 3);
  for (unsigned h : H) {
    a[h] += CycNum(-third);
    a[G.mul(G.inv(s), h)] += CycNum(third);
  }
  for (unsigned chi = 0; chi < t.num_chars(); ++chi) {
    bool trivial_on_h = true;
    for (unsigned h : H)
      if (t.value_at_element(chi, h) != CycNum(1)) trivial_on_h = false;
    CycNum expect = trivial_on_h ? t.value_at_element(chi, G.inv(s)) : CycNum(1);
    CHECK(t.det_of(a, chi) == expect);
  }
}

TEST_CASE("frobenius-schur indicators of odd order groups vanish") {
  for (auto spec : {"cyclic:7", "heisenberg:3", "metacyclic:3,7"}) {
    auto t = IrrTable::build(FiniteGroup::parse_spec(spec));
    for (unsigned i = 0; i < t.num_chars(); ++i) {
      int fs = t.fs_indicator(i);
      if (i == t.trivial_char())
        CHECK(fs == 1);
      else
        CHECK(fs == 0);
    }
    CHECK(!t.has_symplectic_irreducible());
  }
}

TEST_CASE("monomial matrices trace back to the character") {
  auto t = IrrTable::build(FiniteGroup::heisenberg(3));
  for (unsigned chi = 0; chi < t.num_chars(); ++chi) {
    if (t.degree(chi) != 3) continue;
    for (unsigned g = 0; g < 27; ++g) {
      auto m = t.rep_matrix(chi, g);
      CycNum tr(0);
      for (int i = 0; i < 3; ++i) tr += m[i][i];
      CHECK(tr == t.value_at_element(chi, g));
      // one nonzero entry per row and column
      for (int i = 0; i < 3; ++i) {
        int row_nnz = 0, col_nnz = 0;
        for (int j = 0; j < 3; ++j) {
          row_nnz += !m[i][j].is_zero();
          col_nnz += !m[j][i].is_zero();
        }
        CHECK(row_nnz == 1);
        CHECK(col_nnz == 1);
      }
    }
  }
}

TEST_CASE("table construction respects the order bound") {
  CHECK_THROWS_AS(IrrTable::build(FiniteGroup::cyclic(201)), std::invalid_argument);
}
