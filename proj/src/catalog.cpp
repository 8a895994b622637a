#include "rlie/catalog.hpp"

#include <algorithm>

#include "rlie/module.hpp"

namespace rlie {

namespace {

Vec coeffs(unsigned p, std::initializer_list<long long> values) {
  const auto& f = PrimeField::of(p);
  Vec v;
  for (auto x : values) v.push_back(f.reduce(x));
  return v;
}

std::string suffix(unsigned p) { return "_F" + std::to_string(p); }

}  // namespace

RestrictedLieAlgebra abelian_null(unsigned p) {
  return RestrictedLieAlgebra(p, {"x"}, {}, {coeffs(p, {0})}, "ab1_null" + suffix(p));
}

RestrictedLieAlgebra torus(unsigned p, std::size_t dim) {
  std::vector<std::string> names;
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < dim; ++i) {
    names.push_back(dim == 1 ? "x" : std::string(1, char('x' + i)));
    pmap.push_back(unit_vec(dim, i));
  }
  return RestrictedLieAlgebra(p, names, {}, pmap, "torus" + std::to_string(dim) + suffix(p));
}

RestrictedLieAlgebra ab2(unsigned p) {
  return RestrictedLieAlgebra(p, {"x", "y"}, {}, {coeffs(p, {0, 1}), coeffs(p, {0, 0})}, "ab2" + suffix(p));
}

RestrictedLieAlgebra aff2(unsigned p) {
  return RestrictedLieAlgebra(p, {"x", "y"}, {{{0, 1}, coeffs(p, {0, 1})}}, {coeffs(p, {1, 0}), coeffs(p, {0, 0})},
                              "aff2" + suffix(p));
}

RestrictedLieAlgebra heisenberg(unsigned p) {
  return RestrictedLieAlgebra(p, {"x", "y", "z"}, {{{0, 1}, coeffs(p, {0, 0, 1})}},
                              {coeffs(p, {0, 0, 0}), coeffs(p, {0, 0, 0}), coeffs(p, {0, 0, 0})}, "heis3" + suffix(p));
}

RestrictedLieAlgebra twisted_torus2(unsigned p) {
  return RestrictedLieAlgebra(p, {"x", "y"}, {}, {coeffs(p, {0, 1}), coeffs(p, {1, 0})}, "torus2tw" + suffix(p));
}

RestrictedLieAlgebra sl2(unsigned p) {
  if (p < 3) throw PreconditionError("sl2 requires p > 2");
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h on the basis e, h, f
  RestrictedLieAlgebra::BracketTable t{
      {{0, 1}, coeffs(p, {-2, 0, 0})},
      {{0, 2}, coeffs(p, {0, 1, 0})},
      {{1, 2}, coeffs(p, {0, 0, -2})},
  };
  return RestrictedLieAlgebra(p, {"e", "h", "f"}, t, {coeffs(p, {0, 0, 0}), coeffs(p, {0, 1, 0}), coeffs(p, {0, 0, 0})},
                              "sl2_" + std::to_string(p));
}

std::vector<RestrictedLieAlgebra> builtin_catalog(bool include_large) {
  std::vector<RestrictedLieAlgebra> out;
  for (unsigned p : {2u, 3u}) out.push_back(abelian_null(p));
  for (unsigned p : {2u, 3u, 5u}) out.push_back(torus(p, 1));
  for (unsigned p : {2u, 3u}) out.push_back(ab2(p));
  for (unsigned p : {2u, 3u, 5u}) out.push_back(aff2(p));
  for (unsigned p : {2u, 3u}) out.push_back(heisenberg(p));
  out.push_back(torus(3, 2));
  out.push_back(twisted_torus2(3));
  out.push_back(sl2(3));
  out.push_back(direct_sum(heisenberg(3), torus(3, 1), "heis3_F3+torus1_F3"));
  out.push_back(direct_sum(sl2(3), abelian_null(3), "sl2_3+ab1_null_F3"));
  out.push_back(direct_sum(aff2(2), aff2(2), "aff2_F2+aff2_F2"));
  {
    // 2-dimensional irreducible of the twisted torus: x acts with minimal polynomial t^2 + 1.
    RestrictedLieAlgebra k = twisted_torus2(3);
    RestrictedModule s;
    s.p = 3;
    s.dim = 2;
    s.action = {Matrix::from_ints(3, {{0, -1}, {1, 0}}), Matrix::from_ints(3, {{0, 1}, {-1, 0}})};
    s.label = "S2";
    out.push_back(semidirect_product(k, s, "torus2tw_F3_semi_S2"));
  }
  if (include_large) out.push_back(sl2(5));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name() < b.name(); });
  return out;
}

std::optional<RestrictedLieAlgebra> catalog_lookup(const std::string& name) {
  for (auto& l : builtin_catalog(true))
    if (l.name() == name) return l;
  return std::nullopt;
}

std::vector<RestrictedLieAlgebra> exhaustive_family(unsigned p, std::size_t dim) {
  if (dim != 1 && dim != 2) throw PreconditionError("exhaustive_family supports dimensions 1 and 2");
  std::vector<RestrictedLieAlgebra> out;
  auto digits = [](const Vec& v) {
    std::string s;
    for (auto c : v) s += std::to_string(unsigned(c));
    return s;
  };
  const std::string prefix = "fam" + suffix(p) + "_d" + std::to_string(dim) + "_";
  if (dim == 1) {
    for (unsigned a = 0; a < p; ++a) {
      RestrictedLieAlgebra l(p, {"x"}, {}, {Vec{Residue(a)}}, prefix + "x" + std::to_string(a));
      if (validate(l).ok()) out.push_back(std::move(l));
    }
    return out;
  }
  std::vector<Vec> vectors;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b) vectors.push_back(Vec{Residue(a), Residue(b)});
  for (const auto& br : vectors)
    for (const auto& px : vectors)
      for (const auto& py : vectors) {
        RestrictedLieAlgebra::BracketTable t;
        if (!vec_is_zero(br)) t[{0, 1}] = br;
        RestrictedLieAlgebra l(p, {"x", "y"}, t, {px, py}, prefix + "b" + digits(br) + "_x" + digits(px) + "_y" + digits(py));
        if (validate(l).ok()) out.push_back(std::move(l));
      }
  return out;
}

}  // namespace rlie
