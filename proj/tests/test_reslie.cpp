#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rlie/catalog.hpp"
#include "rlie/lie_algebra.hpp"
#include "rlie/module.hpp"

using namespace rlie;

namespace {

Subspace line(unsigned p, std::size_t n, std::size_t i) { return Subspace::span(p, n, {unit_vec(n, i)}); }

Vec random_vec(unsigned p, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = Residue(rng() % p);
  return v;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(sl2(3)).ok());
  CHECK(validate(torus(5, 1)).ok());
  RestrictedLieAlgebra bad(3, {"x", "y"}, {{{0, 1}, Vec{0, 1}}}, {Vec{1, 0}, Vec{1, 0}}, "bad");
  auto r = validate(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.pmap_failures == std::vector<std::size_t>{1});
  CHECK(r.jacobi_failures.empty());

  // [x,y]=y, [x,z]=z, [y,z]=x violates Jacobi
  RestrictedLieAlgebra nonjacobi(3, {"x", "y", "z"},
                                 {{{0, 1}, Vec{0, 1, 0}}, {{0, 2}, Vec{0, 0, 1}}, {{1, 2}, Vec{1, 0, 0}}},
                                 {Vec{1, 0, 0}, Vec{0, 0, 0}, Vec{0, 0, 0}});
  CHECK_FALSE(validate(nonjacobi).jacobi_failures.empty());
}

TEST_CASE("every catalog entry and family member validates") {
  for (const auto& l : builtin_catalog(true)) CHECK_MESSAGE(validate(l).ok(), l.name());
}

TEST_CASE("bracket examples") {
  auto s = sl2(3);
  CHECK(s.bracket(unit_vec(3, 0), unit_vec(3, 2)) == unit_vec(3, 1));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Vec v = random_vec(3, 3, rng), w = random_vec(3, 3, rng);
    CHECK(vec_is_zero(s.bracket(v, v)));
    CHECK(s.bracket(v, w) == oracle::bracket(s, v, w));
    CHECK(vec_is_zero(torus(3, 2).bracket(Vec{v[0], v[1]}, Vec{w[0], w[1]})));
  }
}

TEST_CASE("pmap examples") {
  auto h = heisenberg(3);
  CHECK(h.pmap(unit_vec(3, 1)) == h.basis_pmap(1));
  CHECK(vec_is_zero(h.pmap(Vec{1, 1, 0})));
  CHECK(ab2(3).pmap(Vec{1, 1}) == Vec{0, 1});
}

TEST_CASE("pmap agrees with x^p in the enveloping algebra") {
  std::mt19937_64 rng(2);
  for (const auto& l : builtin_catalog(true)) {
    if (l.dim() > 6) continue;
    oracle::WordAlgebra words(l);
    for (int i = 0; i < 15; ++i) {
      Vec v = random_vec(l.p(), l.dim(), rng);
      CHECK_MESSAGE(l.pmap(v) == words.p_power(v), l.name());
      // ad(x^{[p]}) = ad(x)^p
      CHECK(l.ad(l.pmap(v)) == l.ad(v).pow(l.p()));
    }
  }
}

TEST_CASE("derived series and solvability") {
  CHECK(is_solvable(torus(3, 2)));
  CHECK(derived_series(torus(3, 2)).size() == 2);
  auto a = aff2(3);
  auto ds = derived_series(a);
  REQUIRE(ds.size() == 3);
  CHECK(ds[1] == line(3, 2, 1));
  CHECK(ds[2].is_zero());
  CHECK(is_solvable(a));
  CHECK(derived_algebra(sl2(3)).is_full());
  CHECK_FALSE(is_solvable(sl2(3)));
}

TEST_CASE("p-power span") {
  CHECK(p_power_span(torus(3, 1)).is_full());
  CHECK(p_power_span(heisenberg(3)).is_zero());
  CHECK(p_power_span(ab2(3)) == line(3, 2, 1));
  // oracle: enumerate the 9 elements
  std::vector<Vec> images;
  oracle::WordAlgebra words(ab2(3));
  oracle::for_each_vector(3, 2, [&](const Vec& v) { images.push_back(words.p_power(v)); });
  CHECK(oracle::span_dim(3, 2, images) == 1);
}

TEST_CASE("p-perfect and strongly abelian") {
  CHECK(is_p_perfect(sl2(3)));
  CHECK_FALSE(is_strongly_abelian(sl2(3)));
  CHECK(is_strongly_abelian(abelian_null(3)));
  CHECK_FALSE(is_p_perfect(abelian_null(3)));
  CHECK(is_p_perfect(torus(3, 1)));
  CHECK_FALSE(is_strongly_abelian(torus(3, 1)));
  CHECK(is_abelian(ab2(3)));
  CHECK_FALSE(is_strongly_abelian(ab2(3)));
}

TEST_CASE("p-closure") {
  auto h = heisenberg(3);
  CHECK(p_closure(h, Subspace(3, 3)).is_zero());
  CHECK(p_closure(h, line(3, 3, 2)) == line(3, 3, 2));
  CHECK(p_closure(ab2(3), line(3, 2, 0)).is_full());
  CHECK(ideal_closure(ab2(3), line(3, 2, 0)) == line(3, 2, 0));
  CHECK(is_ideal(ab2(3), line(3, 2, 0)));
  CHECK_FALSE(is_p_ideal(ab2(3), line(3, 2, 0)));
  CHECK(p_closure(sl2(3), line(3, 3, 1)).is_full());
}

TEST_CASE("quotients") {
  auto h = heisenberg(3);
  auto q0 = quotient(h, Subspace(3, 3));
  CHECK(q0.algebra.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(q0.algebra.basis_pmap(i) == h.basis_pmap(i));
    for (std::size_t j = 0; j < 3; ++j) CHECK(q0.algebra.basis_bracket(i, j) == h.basis_bracket(i, j));
  }

  auto qa = quotient(aff2(3), line(3, 2, 1));
  CHECK(qa.algebra.dim() == 1);
  CHECK(qa.algebra.basis_pmap(0) == Vec{1});

  auto qh = quotient(h, line(3, 3, 2));
  CHECK(qh.algebra.dim() == 2);
  CHECK(is_strongly_abelian(qh.algebra));
  CHECK((qh.projection * qh.lift) == Matrix::identity(3, 2));

  CHECK_THROWS_AS(quotient(ab2(3), line(3, 2, 0)), PreconditionError);
}

TEST_CASE("semidirect products") {
  auto k = torus(3, 1);
  auto e0 = semidirect_product(abelian_null(3), trivial_module(abelian_null(3)));
  CHECK(e0.dim() == 2);
  CHECK(is_strongly_abelian(e0));

  // F_1 ⋊ torus1 has [x, m] = m and x^{[p]} = x: aff2 with the basis order swapped.
  auto e = semidirect_product(k, scalar_module(k, {1}));
  REQUIRE(validate(e).ok());
  auto a = aff2(3);
  CHECK(e.basis_bracket(1, 0) == Vec{1, 0});
  CHECK(a.basis_bracket(0, 1) == Vec{0, 1});
  CHECK(e.basis_pmap(1) == Vec{0, 1});
  CHECK(vec_is_zero(e.basis_pmap(0)));

  auto only_m = semidirect_product(RestrictedLieAlgebra(3, {}, {}, {}), [] {
    RestrictedModule m;
    m.p = 3;
    m.dim = 2;
    return m;
  }());
  CHECK(only_m.dim() == 2);
  CHECK(is_strongly_abelian(only_m));
}

TEST_CASE("annihilators") {
  auto a = aff2(3);
  CHECK(annihilator(a, trivial_module(a)).is_full());
  CHECK(annihilator(a, scalar_module(a, {1, 0})) == line(3, 2, 1));
  RestrictedModule nat;
  nat.p = 3;
  nat.dim = 2;
  nat.action = {Matrix::from_ints(3, {{0, 1}, {0, 0}}), Matrix::from_ints(3, {{1, 0}, {0, -1}}),
                Matrix::from_ints(3, {{0, 0}, {1, 0}})};
  // e = E12, h = diag(1,-1), f = E21 has [e,h] = -2e, [e,f] = h, [h,f] = -2f
  REQUIRE(validate_module(sl2(3), nat).ok());
  CHECK(annihilator(sl2(3), nat).is_zero());
}

TEST_CASE("module validation") {
  for (const auto& l : builtin_catalog()) {
    CHECK(validate_module(l, trivial_module(l)).ok());
    CHECK(validate_module(l, adjoint_module(l)).ok());
  }
  auto t = torus(3, 1);
  RestrictedModule nil;
  nil.p = 3;
  nil.dim = 2;
  nil.action = {Matrix::from_ints(3, {{0, 1}, {0, 0}})};
  auto r = validate_module(t, nil);
  CHECK_FALSE(r.ok());
  CHECK(r.pmap_failures == std::vector<std::size_t>{0});
}

TEST_CASE("spin and subquotients") {
  auto a = aff2(3);
  auto ad = adjoint_module(a);
  auto y = spin(ad, {unit_vec(2, 1)});
  CHECK(y == line(3, 2, 1));
  CHECK(spin(ad, {unit_vec(2, 0)}).is_full());
  auto sub = submodule(ad, y);
  CHECK(sub.dim == 1);
  CHECK(sub.action[0] == Matrix::from_ints(3, {{1}}));
  auto quo = quotient_module(ad, y);
  CHECK(quo.dim == 1);
  CHECK(is_trivial_action(quo));
  CHECK(validate_module(a, hom_space_module(ad, ad)).ok());
}
