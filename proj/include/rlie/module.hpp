#pragma once

#include <string>
#include <vector>

#include "rlie/ffla.hpp"
#include "rlie/lie_algebra.hpp"

namespace rlie {

enum class Provenance { given, trivial, adjoint, regular, irreducible, layer, projective, derived };

/// A finite-dimensional L-module given by the action matrices of the Lie basis.
/// The same data describes a u(L)-module when the action is restricted.
struct RestrictedModule {
  unsigned p = 2;
  std::size_t dim = 0;
  std::vector<Matrix> action;  // one dim x dim matrix per basis element of L
  std::string label;
  Provenance provenance = Provenance::given;
};

using AModule = RestrictedModule;

struct ModuleReport {
  std::vector<std::pair<std::size_t, std::size_t>> bracket_failures;  // pairs i < j
  std::vector<std::size_t> pmap_failures;
  bool shape_ok = true;

  bool ok() const noexcept { return shape_ok && bracket_failures.empty() && pmap_failures.empty(); }
  std::string summary() const;
};

/// Checks ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)] and ρ(e_i^{[p]}) = ρ(e_i)^p on the basis.
ModuleReport validate_module(const RestrictedLieAlgebra& l, const RestrictedModule& m);

RestrictedModule trivial_module(const RestrictedLieAlgebra& l);
RestrictedModule adjoint_module(const RestrictedLieAlgebra& l);
/// One-dimensional module on which e_i acts by scalars[i].
RestrictedModule scalar_module(const RestrictedLieAlgebra& l, const std::vector<long long>& scalars,
                               std::string label = {});

/// ρ(x) for an element x of L given in basis coordinates.
Matrix action_of(const RestrictedModule& m, const Vec& x);
bool is_trivial_action(const RestrictedModule& m);

/// The module on which generator j acts as sum_k images(k, j) ρ(e_k). Used to move a
/// module along a linear map between algebras (a quotient's lift, a projection, ...).
RestrictedModule transport(const RestrictedModule& m, const Matrix& images);

/// Smallest subspace containing the seeds and stable under every matrix in ops.
Subspace spin(const std::vector<Matrix>& ops, const std::vector<Vec>& seeds, std::size_t ambient_dim,
              unsigned p);
Subspace spin(const RestrictedModule& m, const std::vector<Vec>& seeds);

/// upper/lower for invariant subspaces lower ⊆ upper.
RestrictedModule subquotient(const RestrictedModule& m, const Subspace& upper, const Subspace& lower);
RestrictedModule submodule(const RestrictedModule& m, const Subspace& u);
RestrictedModule quotient_module(const RestrictedModule& m, const Subspace& u);

/// Hom_F(S, T) with (x·f)(s) = x·f(s) - f(x·s). A map f is stored as the
/// dim T x dim S matrix flattened row-major.
RestrictedModule hom_space_module(const RestrictedModule& s, const RestrictedModule& t);

}  // namespace rlie
