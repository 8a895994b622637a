#include "rlie/cohomology.hpp"

namespace rlie {

Matrix cochain_matrix(unsigned p, const Vec& flat, std::size_t module_dim, std::size_t algebra_dim) {
  if (flat.size() != module_dim * algebra_dim) throw DimensionError("cochain has wrong length");
  Matrix d(p, module_dim, algebra_dim);
  for (std::size_t j = 0; j < algebra_dim; ++j)
    for (std::size_t r = 0; r < module_dim; ++r) d.set(r, j, flat[j * module_dim + r]);
  return d;
}

namespace {

void check_pair(const RestrictedLieAlgebra& l, const RestrictedModule& m) {
  if (m.p != l.p() || m.action.size() != l.dim()) throw PreconditionError("module does not belong to the algebra");
}

Subspace derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m, bool restricted) {
  check_pair(l, m);
  const unsigned p = l.p();
  const auto& f = PrimeField::of(p);
  const std::size_t n = l.dim(), d = m.dim;
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t eqs = pairs * d + (restricted ? n * d : 0);
  Matrix sys(p, eqs, n * d);
  std::size_t row = 0;
  // D([e_i,e_j]) - rho(e_i) D(e_j) + rho(e_j) D(e_i) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& c = l.basis_bracket(i, j);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < n; ++k)
          if (c[k]) sys.set(row + r, k * d + r, f.add(sys(row + r, k * d + r), c[k]));
        for (std::size_t s = 0; s < d; ++s) {
          sys.set(row + r, j * d + s, f.sub(sys(row + r, j * d + s), m.action[i](r, s)));
          sys.set(row + r, i * d + s, f.add(sys(row + r, i * d + s), m.action[j](r, s)));
        }
      }
      row += d;
    }
  if (restricted) {
    // D(e_i^{[p]}) - rho(e_i)^{p-1} D(e_i) = 0
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& c = l.basis_pmap(i);
      Matrix power = m.action[i].pow(p - 1);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < n; ++k)
          if (c[k]) sys.set(row + r, k * d + r, f.add(sys(row + r, k * d + r), c[k]));
        for (std::size_t s = 0; s < d; ++s)
          sys.set(row + r, i * d + s, f.sub(sys(row + r, i * d + s), power(r, s)));
      }
      row += d;
    }
  }
  return Subspace::span(kernel_basis(sys));
}

CohomologySpace h1(const RestrictedLieAlgebra& l, const RestrictedModule& m, Coefficients kind, bool restricted) {
  Subspace der = derivations(l, m, restricted);
  Subspace inner = inner_derivations(l, m);
  if (!der.contains(inner)) throw CertificationError("inner derivations are not cocycles");
  CohomologySpace h;
  for (std::size_t i = 0; i < der.dim(); ++i)
    h.cocycle_basis.push_back(cochain_matrix(l.p(), der.basis_vector(i), m.dim, l.dim()));
  for (std::size_t i = 0; i < inner.dim(); ++i)
    h.coboundary_basis.push_back(cochain_matrix(l.p(), inner.basis_vector(i), m.dim, l.dim()));
  h.dim_F = der.dim() - inner.dim();
  if (kind == Coefficients::irreducible) {
    h.d_S = end_dim(m);
    if (h.d_S == 0 || h.dim_F % h.d_S != 0)
      throw CertificationError("dim_F H^1 = " + std::to_string(h.dim_F) + " is not divisible by dim End = " +
                               std::to_string(h.d_S));
    h.dim_over_D = h.dim_F / h.d_S;
  }
  return h;
}

}  // namespace

Subspace restricted_derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m) {
  return derivations(l, m, true);
}

Subspace ordinary_derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m) {
  return derivations(l, m, false);
}

Subspace inner_derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m) {
  check_pair(l, m);
  const std::size_t n = l.dim(), d = m.dim;
  std::vector<Vec> maps;
  for (std::size_t s = 0; s < d; ++s) {
    Vec flat(n * d);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < d; ++r) flat[j * d + r] = m.action[j](r, s);
    maps.push_back(std::move(flat));
  }
  return Subspace::span(l.p(), n * d, maps);
}

CohomologySpace h1_restricted(const RestrictedLieAlgebra& l, const RestrictedModule& m, Coefficients kind) {
  return h1(l, m, kind, true);
}

CohomologySpace h1_ordinary(const RestrictedLieAlgebra& l, const RestrictedModule& m, Coefficients kind) {
  return h1(l, m, kind, false);
}

Subspace hom_modules(const RestrictedModule& a, const RestrictedModule& b) {
  if (a.p != b.p || a.action.size() != b.action.size()) throw PreconditionError("hom_modules: modules do not match");
  const unsigned p = a.p;
  const auto& f = PrimeField::of(p);
  const std::size_t da = a.dim, db = b.dim, g = a.action.size();
  // rho_B(x) X - X rho_A(x) = 0, unknown X(r, c) at r * da + c.
  Matrix sys(p, g * db * da, db * da);
  for (std::size_t x = 0; x < g; ++x) {
    const Matrix& ra = a.action[x];
    const Matrix& rb = b.action[x];
    const std::size_t base = x * db * da;
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c) {
        const std::size_t eq = base + r * da + c;
        for (std::size_t k = 0; k < db; ++k)
          if (rb(r, k)) sys.set(eq, k * da + c, f.add(sys(eq, k * da + c), rb(r, k)));
        for (std::size_t k = 0; k < da; ++k)
          if (ra(k, c)) sys.set(eq, r * da + k, f.sub(sys(eq, r * da + k), ra(k, c)));
      }
  }
  return Subspace::span(kernel_basis(sys));
}

Matrix hom_matrix(const Vec& flat, const RestrictedModule& a, const RestrictedModule& b) {
  if (flat.size() != a.dim * b.dim) throw DimensionError("hom_matrix: wrong length");
  Matrix x(a.p, b.dim, a.dim);
  for (std::size_t r = 0; r < b.dim; ++r)
    for (std::size_t c = 0; c < a.dim; ++c) x.set(r, c, flat[r * a.dim + c]);
  return x;
}

std::size_t end_dim(const RestrictedModule& s) { return hom_modules(s, s).dim(); }

RestrictedModule module_over_quotient(const RestrictedLieAlgebra& l, const RestrictedModule& s, const Subspace& ideal,
                                      const Quotient& q) {
  check_pair(l, s);
  for (std::size_t i = 0; i < ideal.dim(); ++i)
    if (!action_of(s, ideal.basis_vector(i)).is_zero())
      throw PreconditionError("module_over_quotient: ideal does not annihilate the module");
  return transport(s, q.lift);
}

MainFormulaTerms main_formula_terms(const RestrictedLieAlgebra& l, const RestrictedModule& s) {
  MainFormulaTerms t;
  Subspace ann = annihilator(l, s);
  Quotient q = quotient(l, ann);
  RestrictedModule sq = module_over_quotient(l, s, ann, q);
  CohomologySpace full = h1_restricted(l, s, Coefficients::irreducible);
  CohomologySpace inflated = h1_restricted(q.algebra, sq, Coefficients::irreducible);
  t.h1_over_D = *full.dim_over_D;
  t.h1_quotient_over_D = *inflated.dim_over_D;
  t.d_S = full.d_S;
  t.annihilator_dim = ann.dim();
  if (t.h1_quotient_over_D > t.h1_over_D)
    throw CertificationError("inflation H^1(L/ann, S) -> H^1(L, S) cannot be injective: dimensions " +
                             std::to_string(t.h1_quotient_over_D) + " > " + std::to_string(t.h1_over_D));
  return t;
}

std::size_t rhs_main_formula(const RestrictedLieAlgebra& l, const RestrictedModule& s) {
  return main_formula_terms(l, s).value();
}

FiveTermReport five_term_bounds(const RestrictedLieAlgebra& l, const Subspace& ideal, const RestrictedModule& s) {
  if (!is_p_ideal(l, ideal)) throw PreconditionError("five_term_bounds: not a p-ideal");
  Quotient q = quotient(l, ideal);
  RestrictedModule sq = module_over_quotient(l, s, ideal, q);
  FiveTermReport rep;
  rep.h1_quotient = h1_restricted(q.algebra, sq).dim_F;
  rep.h1 = h1_restricted(l, s).dim_F;
  Subspace lower = p_derived_subspace(l, ideal);
  RestrictedModule abelianized = subquotient(adjoint_module(l), ideal, lower);
  rep.hom = hom_modules(abelianized, s).dim();
  return rep;
}

}  // namespace rlie
