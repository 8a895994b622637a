#pragma once

#include <optional>
#include <vector>

#include "rlie/lie_algebra.hpp"
#include "rlie/module.hpp"

namespace rlie {

enum class Coefficients { general, irreducible };

/// First cohomology realized as derivations modulo inner derivations.
///
/// A 1-cochain D: L -> M is stored as the dim M x dim L matrix whose column j is D(e_j);
/// flattened cochains use index j * dim M + r.
struct CohomologySpace {
  std::vector<Matrix> cocycle_basis;
  std::vector<Matrix> coboundary_basis;
  std::size_t dim_F = 0;
  // Both set only for irreducible coefficients.
  std::size_t d_S = 0;  // dim End_L(M)
  std::optional<std::size_t> dim_over_D;
};

Matrix cochain_matrix(unsigned p, const Vec& flat, std::size_t module_dim, std::size_t algebra_dim);

/// Linear maps D with D[x,y] = x·D(y) - y·D(x) and D(x^{[p]}) = x^{p-1}·D(x).
Subspace restricted_derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m);
/// The same without the p-condition.
Subspace ordinary_derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m);
/// Maps x ↦ x·m.
Subspace inner_derivations(const RestrictedLieAlgebra& l, const RestrictedModule& m);

CohomologySpace h1_restricted(const RestrictedLieAlgebra& l, const RestrictedModule& m,
                              Coefficients kind = Coefficients::general);
CohomologySpace h1_ordinary(const RestrictedLieAlgebra& l, const RestrictedModule& m,
                            Coefficients kind = Coefficients::general);

/// Module homomorphisms A -> B as a subspace of flattened dim B x dim A matrices (row-major).
Subspace hom_modules(const RestrictedModule& a, const RestrictedModule& b);
Matrix hom_matrix(const Vec& flat, const RestrictedModule& a, const RestrictedModule& b);
/// dim_F End_L(S).
std::size_t end_dim(const RestrictedModule& s);

/// S viewed as a module over L/I, where I annihilates S.
RestrictedModule module_over_quotient(const RestrictedLieAlgebra& l, const RestrictedModule& s, const Subspace& ideal,
                                      const Quotient& q);

struct MainFormulaTerms {
  std::size_t h1_over_D = 0;           // dim_D H^1_*(L, S)
  std::size_t h1_quotient_over_D = 0;  // dim_D H^1_*(L/ann_L(S), S)
  std::size_t d_S = 0;
  std::size_t annihilator_dim = 0;
  std::size_t value() const noexcept { return h1_over_D - h1_quotient_over_D; }
};

/// dim_D H^1_*(L,S) - dim_D H^1_*(L/ann_L(S), S) for irreducible S.
/// Throws CertificationError if the difference would be negative.
MainFormulaTerms main_formula_terms(const RestrictedLieAlgebra& l, const RestrictedModule& s);
std::size_t rhs_main_formula(const RestrictedLieAlgebra& l, const RestrictedModule& s);

struct FiveTermReport {
  std::size_t h1_quotient = 0;  // dim_F H^1_*(L/I, S)
  std::size_t h1 = 0;           // dim_F H^1_*(L, S)
  std::size_t hom = 0;          // dim_F Hom_L(I/([I,I]+<I^[p]>), S)
  bool lower_ok() const noexcept { return h1_quotient <= h1; }
  bool upper_ok() const noexcept { return h1 <= h1_quotient + hom; }
  bool ok() const noexcept { return lower_ok() && upper_ok(); }
};

/// Dimension inequalities from the inflation-restriction sequence for a p-ideal I ⊆ ann_L(S).
/// Throws PreconditionError if I is not a p-ideal inside the annihilator.
FiveTermReport five_term_bounds(const RestrictedLieAlgebra& l, const Subspace& ideal, const RestrictedModule& s);

}  // namespace rlie
