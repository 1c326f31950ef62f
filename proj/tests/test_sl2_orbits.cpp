#include <doctest.h>

#include <cmath>
#include <random>

#include "liesurf/projections.hpp"
#include "liesurf/sl2_orbits.hpp"
#include "oracles.hpp"

using namespace liesurf;

namespace {

QVector qv(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<int> diag_ints(const CMatrix& H) {
  std::vector<int> h;
  for (int i = 0; i < H.rows(); ++i) h.push_back(static_cast<int>(std::lround(H(i, i).real())));
  return h;
}

}  // namespace

TEST_CASE("partition symbols and enumeration") {
  CHECK(partition_symbol({3, 1, 1}) == "[3,1^2]");
  CHECK(partition_symbol({2, 2, 1}) == "[2^2,1]");
  CHECK(partition_symbol({5}) == "[5]");
  CHECK(partition_symbol({1, 1, 1, 1, 1}) == "[1^5]");
  auto p5 = partitions_of(5);
  CHECK(p5.size() == 7);
  CHECK(p5.front() == std::vector<int>{5});
  CHECK(p5.back() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(partitions_of(8).size() == 22);
  CHECK(parity_rule_even({3, 1, 1}));
  CHECK_FALSE(parity_rule_even({4, 1}));
}

TEST_CASE("partition triples") {
  Torus t = split_torus(make_sl(5));
  Sl2Triple p5 = sl2_from_partition(t, {5});
  REQUIRE(p5.dominant);
  CHECK(*p5.dominant == qv({4, 2, 0, -2, -4}));
  CHECK(*sl2_from_partition(t, {2, 2, 1}).dominant == qv({1, 1, 0, -1, -1}));
  Sl2Triple zero = sl2_from_partition(t, {1, 1, 1, 1, 1});
  CHECK(zero.H.norm() == 0.0);
  CHECK(zero.E.norm() == 0.0);
  CHECK_THROWS_AS(sl2_from_partition(t, {3, 1}), ParameterError);
  CHECK_THROWS_AS(sl2_from_partition(t, {3, 0, 2}), ParameterError);
  for (int n = 2; n <= 6; ++n) {
    Algebra alg = make_sl(n);
    for (const auto& parts : partitions_of(n)) {
      Sl2Triple tr = sl2_from_partition(alg, parts);
      CHECK(verify_sl2_triple(tr).ok);
    }
  }
}

TEST_CASE("rho1 and rho2") {
  Sl2Triple r1 = rho1_su(make_su(2, 1));
  CHECK(diag_ints(r1.H) == std::vector<int>{1, 0, -1});
  Sl2Triple r2 = rho2_su(make_su(3, 2));
  CHECK(diag_ints(r2.H) == std::vector<int>{4, 2, 0, -2, -4});
  Sl2Triple r21 = rho2_su(make_su(2, 1));
  // c_1 = i sqrt(1 * (2q + 1 - 1)) = i sqrt(2) sits on the first superdiagonal slot.
  CHECK(std::abs(r21.E(0, 1) - Complex(0, std::sqrt(2.0))) < 1e-14);
  CHECK_THROWS_AS(rho2_su(make_su(2, 2)), ParameterError);
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= p; ++q) {
      Algebra alg = make_su(p, q);
      Sl2Triple a = rho1_su(alg);
      CHECK(verify_sl2_triple(a).ok);
      CHECK((a.H.adjoint() * alg->form() + alg->form() * a.H).norm() < 1e-14);
      if (p > q) CHECK(verify_sl2_triple(rho2_su(alg)).ok);
    }
}

TEST_CASE("verify_sl2_triple detects broken relations") {
  Algebra sl2 = make_sl(2);
  Sl2Triple t = sl2_from_partition(sl2, {2});
  CHECK(verify_sl2_triple(t).ok);
  Sl2Triple bad = t;
  bad.E *= 2.0;
  TripleCheck c = verify_sl2_triple(bad);
  CHECK_FALSE(c.ok);
  CHECK(c.r_ef > 0.1);
}

TEST_CASE("evenness") {
  Torus t = split_torus(make_sl(5));
  CHECK(is_even(sl2_from_partition(t, {3, 1, 1})));
  CHECK_FALSE(is_even(sl2_from_partition(t, {4, 1})));
  for (int n = 2; n <= 7; ++n)
    for (const auto& parts : partitions_of(n))
      CHECK(is_even(sl2_from_partition(make_sl(n), parts)) == parity_rule_even(parts));
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= p; ++q) {
      Algebra alg = make_su(p, q);
      CHECK(is_even(rho1_su(alg)) == (p == q));
      if (p > q) CHECK(is_even(rho2_su(alg)));
    }
}

TEST_CASE("sigma") {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= p; ++q) {
      Algebra alg = make_su(p, q);
      CMatrix s1 = sigma(rho1_su(alg));
      CMatrix expected = CMatrix::Identity(p + q, p + q);
      for (int k = 0; k < q; ++k) expected(k, k) = expected(p + q - 1 - k, p + q - 1 - k) = -1.0;
      CHECK((s1 - expected).norm() == 0.0);
      if (p > q) CHECK((sigma(rho2_su(alg)) - CMatrix::Identity(p + q, p + q)).norm() == 0.0);
    }
  CHECK((sigma(sl2_from_partition(make_sl(4), {1, 1, 1, 1})) - CMatrix::Identity(4, 4)).norm() == 0.0);
  CMatrix s21 = sigma(rho1_su(make_su(2, 1)));
  CHECK(s21(0, 0) == Complex(-1.0));
  CHECK(s21(1, 1) == Complex(1.0));
  CHECK(s21(2, 2) == Complex(-1.0));
}

TEST_CASE("g_even dimensions") {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= p; ++q) {
      Algebra alg = make_su(p, q);
      Sl2Triple r1 = rho1_su(alg);
      // Independent count: even differences of the diagonal of H.
      int even = 0;
      for (auto [w, m] : oracle::diagonal_weights(diag_ints(r1.H)))
        if (w % 2 == 0) even += m;
      CHECK(g_even(r1).dim() == even);
      CHECK(g_even(r1).dim() == 4 * q * q + (p - q) * (p - q) - 1);
      CHECK(ad_sigma_fixed(r1).dim() == g_even(r1).dim());
    }
  for (const auto& parts : partitions_of(5)) {
    Sl2Triple t = sl2_from_partition(make_sl(5), parts);
    CHECK(is_even(t) == (g_even(t).dim() == 24));
  }
}

TEST_CASE("module multiplicities") {
  IsotypicData su11 = module_multiplicities(rho1_su(make_su(1, 1)));
  CHECK(su11.module_mult == std::map<int, int>{{3, 1}});
  IsotypicData sl3 = module_multiplicities(sl2_from_partition(make_sl(3), {3}));
  CHECK(sl3.module_mult == std::map<int, int>{{3, 1}, {5, 1}});
  IsotypicData triv = module_multiplicities(sl2_from_partition(make_sl(5), {1, 1, 1, 1, 1}));
  CHECK(triv.module_mult == std::map<int, int>{{1, 24}});
  for (int n = 2; n <= 6; ++n)
    for (const auto& parts : partitions_of(n)) {
      IsotypicData d = module_multiplicities(sl2_from_partition(make_sl(n), parts));
      CHECK(d.module_mult == oracle::partition_module_mult(parts));
    }
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= p; ++q) {
      Sl2Triple r = rho1_su(make_su(p, q));
      CHECK(module_multiplicities(r).module_mult ==
            oracle::modules_from_weights(oracle::diagonal_weights(diag_ints(r.H))));
    }
}

TEST_CASE("isotypic pieces are irreducible chains") {
  Sl2Triple t = sl2_from_partition(make_sl(4), {3, 1});
  IsotypicData d = module_multiplicities(t);
  int total = 0;
  for (const auto& pc : d.pieces) {
    CHECK(pc.chain.cols() == pc.dimension);
    total += pc.dimension;
    // Highest weight vector is killed by ad E.
    RMatrix adE = adjoint_operator(*t.alg, t.E);
    CHECK((adE * pc.chain.col(0)).norm() < 1e-9 * std::max(1.0, pc.chain.col(0).norm()));
    RMatrix adH = adjoint_operator(*t.alg, t.H);
    for (int k = 0; k < pc.dimension; ++k) {
      RVector v = pc.chain.col(k);
      CHECK((adH * v - (pc.dimension - 1 - 2 * k) * v).norm() < 1e-9 * std::max(1.0, v.norm()));
    }
  }
  CHECK(total == t.alg->dim());
  std::mt19937_64 rng(2);
  RVector x = t.alg->coordinates(random_algebra_element(*t.alg, rng));
  RVector sum = RVector::Zero(x.size());
  for (std::size_t i = 0; i < d.pieces.size(); ++i) sum += d.project(static_cast<int>(i), x);
  CHECK((sum - x).norm() < 1e-9);
}

TEST_CASE("genus bounds") {
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= p; ++q) {
      Algebra alg = make_su(p, q);
      Sl2Triple r1 = rho1_su(alg);
      CHECK(genus_bound(r1, whole_algebra(alg)) == 2 * q * q + (p - q) * (p - q) - 1);
      if (p > q) {
        Sl2Triple r2 = rho2_su(alg);
        CHECK(genus_bound(r2, whole_algebra(alg)) == (p - q) * (p - q) + 2 * q - 1);
      }
    }
  Algebra sl5 = make_sl(5);
  CHECK(genus_bound(sl2_from_partition(sl5, {1, 1, 1, 1, 1}), whole_algebra(sl5)) == 24);
  // Restricted to g_even for rho1 in su(3,2).
  Sl2Triple r = rho1_su(make_su(3, 2));
  IsotypicData ev = module_multiplicities(r, g_even(r));
  int odd = 0;
  for (auto [k, m] : ev.module_mult)
    if (k % 2 == 1) odd += m;
  CHECK(genus_bound(r, g_even(r)) == odd);
}

TEST_CASE("even basis of b") {
  auto b5 = even_sl2_basis_of_b(make_sl(5));
  REQUIRE(b5.size() == 2);
  CHECK(*b5[0].dominant == qv({4, 2, 0, -2, -4}));
  CHECK(*b5[1].dominant == qv({2, 0, 0, 0, -2}));
  auto b2 = even_sl2_basis_of_b(make_sl(2));
  REQUIRE(b2.size() == 1);
  CHECK(*b2[0].dominant == qv({1, -1}));
  auto b4 = even_sl2_basis_of_b(make_sl(4));
  REQUIRE(b4.size() == 2);
  std::vector<oracle::QVec> rows{*b4[0].dominant, *b4[1].dominant};
  CHECK(oracle::exact_rank(rows) == 2);
  for (const auto& t : b4) CHECK(is_even(t));
  CHECK_THROWS(even_sl2_basis_of_b(make_su(2, 1)));
}

TEST_CASE("property star basis") {
  Sl2Triple r = rho1_su(make_su(2, 1));
  SubspaceOfG z = triple_centralizer(r);
  REQUIRE(z.dim() == 1);
  auto star = property_star_basis(z);
  REQUIRE(star.size() == 1);
  CHECK(star[0].kind == ElementKind::elliptic);
  CHECK((star[0].X.exp() - CMatrix::Identity(3, 3)).norm() < 1e-9);
  // u(1) inside sl(2,R): the rotation generator.
  Algebra sl2 = make_sl(2);
  CMatrix J = CMatrix::Zero(2, 2);
  J(0, 1) = -1;
  J(1, 0) = 1;
  auto rot = property_star_basis(span_of(sl2, sl2->coordinates(J)));
  REQUIRE(rot.size() == 1);
  CHECK((rot[0].X.exp() - CMatrix::Identity(2, 2)).norm() < 1e-9);
  // Split abelian part: hyperbolic.
  Algebra sl3 = make_sl(3);
  CMatrix D = CMatrix::Zero(3, 3);
  D(0, 0) = 1;
  D(2, 2) = -1;
  auto hyp = property_star_basis(span_of(sl3, sl3->coordinates(D)));
  REQUIRE(hyp.size() == 1);
  CHECK(hyp[0].kind == ElementKind::hyperbolic);
  for (int p = 2; p <= 4; ++p)
    for (int q = 1; q < p; ++q) {
      Sl2Triple t = rho1_su(make_su(p, q));
      SubspaceOfG zt = triple_centralizer(t);
      auto s = property_star_basis(zt);
      CHECK(static_cast<int>(s.size()) == zt.dim());
      for (const auto& e : s)
        if (e.kind == ElementKind::elliptic) CHECK(e.period_residual <= 1e-9);
    }
}
