#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlie/lie_algebra.hpp"

namespace rlie {

/// Built-in algebras, sorted by name. Every entry passes validate().
/// include_large adds sl2_5 (u(L) of dimension 125).
std::vector<RestrictedLieAlgebra> builtin_catalog(bool include_large = false);
std::optional<RestrictedLieAlgebra> catalog_lookup(const std::string& name);

RestrictedLieAlgebra abelian_null(unsigned p);     // x^{[p]} = 0
RestrictedLieAlgebra torus(unsigned p, std::size_t dim);  // abelian, e_i^{[p]} = e_i
RestrictedLieAlgebra ab2(unsigned p);              // abelian, x^{[p]} = y, y^{[p]} = 0
RestrictedLieAlgebra aff2(unsigned p);             // [x,y] = y, x^{[p]} = x
RestrictedLieAlgebra heisenberg(unsigned p);       // [x,y] = z, all p-powers zero
RestrictedLieAlgebra twisted_torus2(unsigned p);   // abelian, x^{[p]} = y, y^{[p]} = x
RestrictedLieAlgebra sl2(unsigned p);              // basis e, h, f; h^{[p]} = h

/// Every restricted structure on F_p^n (n = 1, 2) with basis labels x, y that passes validate().
std::vector<RestrictedLieAlgebra> exhaustive_family(unsigned p, std::size_t dim);

}  // namespace rlie
