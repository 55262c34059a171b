#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles/clifford_basis.hpp"
#include "runiv/quadform.hpp"

using namespace runiv;

namespace {

DiagonalForm form(std::initializer_list<int> entries) {
  std::vector<Rational> v;
  for (int e : entries) v.emplace_back(e);
  return DiagonalForm(std::move(v));
}

SymMatrix matrix(std::vector<std::vector<int>> rows) {
  int n = static_cast<int>(rows.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rows[i][j];
  return SymMatrix(n, std::move(m));
}

bool same_invariants(const FormInvariants& a, const FormInvariants& b) {
  return a.dim == b.dim && a.det_mod_squares == b.det_mod_squares &&
         a.disc == b.disc && a.positive == b.positive &&
         a.negative == b.negative && a.hasse == b.hasse &&
         a.witt_class == b.witt_class && a.even.center == b.even.center &&
         a.even.q_class == b.even.q_class &&
         a.even.split_over_center == b.even.split_over_center;
}

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(form({1, 0, 2}), std::domain_error);
  CHECK_THROWS_AS(matrix({{1, 2}, {3, 4}}), std::domain_error);  // asymmetric
  CHECK_THROWS_AS(matrix({{1, 1}, {1, 1}}), std::domain_error);  // singular
}

TEST_CASE("diagonalize") {
  auto d1 = diagonalize(matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(d1 == form({1, 1, 1}));

  // hyperbolic plane: any congruent diagonalization has its invariants
  auto d2 = diagonalize(matrix({{0, 1}, {1, 0}}));
  CHECK(same_invariants(invariants(d2), invariants(form({2, -2}))));

  auto d3 = diagonalize(matrix({{1, 1}, {1, 2}}));
  CHECK(same_invariants(invariants(d3), invariants(form({1, 1}))));
}

TEST_CASE("invariants basics") {
  auto inv = invariants(form({1, 1, 1}));
  CHECK(inv.dim == 3);
  CHECK(inv.det_mod_squares == 1);
  CHECK(inv.positive == 3);
  CHECK(inv.negative == 0);
  CHECK(inv.hasse.empty());

  CHECK(invariants(form({-1, -1})).hasse.at(Place::infinite()) == -1);

  auto hyp = invariants(form({1, -1}));
  CHECK(hyp.det_mod_squares == -1);
  CHECK(hyp.disc == 1);
  CHECK(hyp.hasse.empty());
}

TEST_CASE("hasse product formula") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> e;
    for (int i = 0; i < 1 + trial % 5; ++i) {
      int x = 0;
      while (x == 0) x = pick(rng);
      e.emplace_back(x);
    }
    auto inv = invariants(DiagonalForm(e));
    int prod = 1;
    for (const auto& [v, s] : inv.hasse) prod *= s;
    CHECK(prod == 1);
  }
}

TEST_CASE("even clifford anchor values") {
  auto c3 = even_clifford_class(form({1, 1, 1}));
  CHECK(c3.center == EvenCenter::Q);
  CHECK(c3.q_class == quaternion_class(-1, -1));
  CHECK(!c3.split_over_center);

  auto c2 = even_clifford_class(form({1, 1}));
  CHECK(c2.center == EvenCenter::Quad);
  CHECK(c2.center_field->d() == -1);
  CHECK(c2.split_over_center);

  auto ch = even_clifford_class(form({1, -1}));
  CHECK(ch.center == EvenCenter::QplusQ);
  CHECK(ch.q_class.trivial());
  CHECK(ch.split_over_center);
}

TEST_CASE("ternary even clifford matches basis-level oracle") {
  std::vector<int> pool = {1, -1, 2, -2, 3, -3, 5, -5};
  for (int a : pool)
    for (int b : pool)
      for (int c : pool) {
        auto got = even_clifford_class(form({a, b, c})).q_class;
        auto want = testing::ternary_even_class(a, b, c);
        REQUIRE(got == want);
        CHECK(got == quaternion_class(Rational(-a) * b, Rational(-a) * c));
      }
}

TEST_CASE("real mod-8 rule") {
  CHECK(real_even_clifford_nonsplit(3, 0));
  CHECK(!real_even_clifford_nonsplit(7, 0));
  CHECK(!real_even_clifford_nonsplit(1, 1));
  CHECK(real_even_clifford_nonsplit(0, 3));  // 2p-k = -3 = 5 mod 8
}

TEST_CASE("real consistency for odd dimensions") {
  // infinite invariant of the even Clifford class agrees with the rule
  for (int dim = 1; dim <= 9; dim += 2)
    for (int p = 0; p <= dim; ++p) {
      std::vector<Rational> e(dim, Rational(-1));
      for (int i = 0; i < p; ++i) e[i] = 1;
      auto c = even_clifford_class(DiagonalForm(e));
      bool nonsplit_inf = c.q_class.at(Place::infinite()) == Rational(1, 2);
      CHECK(nonsplit_inf == real_even_clifford_nonsplit(p, dim - p));
    }
}

TEST_CASE("square scaling invariance") {
  std::vector<DiagonalForm> forms = {form({1, 2, -3}), form({-1, -1}),
                                     form({5, 7, -2, 3})};
  for (const auto& f : forms) {
    std::vector<Rational> scaled;
    for (const auto& a : f.entries()) scaled.push_back(a * 9);
    CHECK(same_invariants(invariants(f), invariants(DiagonalForm(scaled))));
  }
}

TEST_CASE("congruence invariance under random change of basis") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  int trials = 0;
  while (trials < 40) {
    int n = 1 + trials % 5;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
    std::optional<SymMatrix> M;
    try {
      M.emplace(n, m);
    } catch (const std::domain_error&) {
      continue;  // singular draw
    }
    auto base = invariants(diagonalize(*M));
    for (int rep = 0; rep < 3; ++rep) {
      // random upper unitriangular P: always invertible
      std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n, 0));
      for (int i = 0; i < n; ++i) {
        p[i][i] = 1;
        for (int j = i + 1; j < n; ++j) p[i][j] = entry(rng);
      }
      // P^T M P
      std::vector<std::vector<Rational>> mp(n, std::vector<Rational>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) mp[i][j] += M->at(i, k) * p[k][j];
      std::vector<std::vector<Rational>> ptmp(n, std::vector<Rational>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) ptmp[i][j] += p[k][i] * mp[k][j];
      auto conj = invariants(diagonalize(SymMatrix(n, ptmp)));
      CHECK(same_invariants(base, conj));
    }
    ++trials;
  }
}
