#include "rlie/module.hpp"

#include <sstream>

namespace rlie {

std::string ModuleReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  if (!shape_ok) os << "action matrices have the wrong shape; ";
  for (auto [i, j] : bracket_failures) os << "bracket compatibility fails on (" << i << ", " << j << "); ";
  for (auto i : pmap_failures) os << "rho(e_" << i << "^[p]) != rho(e_" << i << ")^p; ";
  std::string s = os.str();
  return s.substr(0, s.size() - 2);
}

ModuleReport validate_module(const RestrictedLieAlgebra& l, const RestrictedModule& m) {
  ModuleReport rep;
  if (m.p != l.p() || m.action.size() != l.dim()) {
    rep.shape_ok = false;
    return rep;
  }
  for (const auto& a : m.action)
    if (a.p() != m.p || a.rows() != m.dim || a.cols() != m.dim) {
      rep.shape_ok = false;
      return rep;
    }
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Matrix lhs = action_of(m, l.basis_bracket(i, j));
      Matrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
      if (!(lhs == rhs)) rep.bracket_failures.emplace_back(i, j);
    }
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!(action_of(m, l.basis_pmap(i)) == m.action[i].pow(l.p()))) rep.pmap_failures.push_back(i);
  return rep;
}

RestrictedModule trivial_module(const RestrictedLieAlgebra& l) {
  RestrictedModule m;
  m.p = l.p();
  m.dim = 1;
  m.action.assign(l.dim(), Matrix(l.p(), 1, 1));
  m.label = "F";
  m.provenance = Provenance::trivial;
  return m;
}

RestrictedModule adjoint_module(const RestrictedLieAlgebra& l) {
  RestrictedModule m;
  m.p = l.p();
  m.dim = l.dim();
  for (std::size_t i = 0; i < l.dim(); ++i) m.action.push_back(l.ad_basis(i));
  m.label = "ad";
  m.provenance = Provenance::adjoint;
  return m;
}

RestrictedModule scalar_module(const RestrictedLieAlgebra& l, const std::vector<long long>& scalars, std::string label) {
  if (scalars.size() != l.dim()) throw DimensionError("scalar_module: one scalar per basis element required");
  RestrictedModule m;
  m.p = l.p();
  m.dim = 1;
  for (auto s : scalars) m.action.push_back(Matrix::from_ints(l.p(), {{s}}));
  m.label = std::move(label);
  return m;
}

Matrix action_of(const RestrictedModule& m, const Vec& x) {
  if (x.size() != m.action.size()) throw DimensionError("action_of: element has wrong length");
  Matrix out(m.p, m.dim, m.dim);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k]) out = out + m.action[k].scaled(x[k]);
  return out;
}

bool is_trivial_action(const RestrictedModule& m) {
  for (const auto& a : m.action)
    if (!a.is_zero()) return false;
  return true;
}

RestrictedModule transport(const RestrictedModule& m, const Matrix& images) {
  if (images.rows() != m.action.size()) throw DimensionError("transport: image matrix does not match the module");
  RestrictedModule out;
  out.p = m.p;
  out.dim = m.dim;
  out.label = m.label;
  out.provenance = m.provenance;
  for (std::size_t j = 0; j < images.cols(); ++j) out.action.push_back(action_of(m, images.column(j)));
  return out;
}

Subspace spin(const std::vector<Matrix>& ops, const std::vector<Vec>& seeds, std::size_t ambient_dim, unsigned p) {
  IncrementalBasis basis(p, ambient_dim);
  std::vector<Vec> queue;
  for (const auto& s : seeds)
    if (basis.add(s)) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size() && basis.size() < ambient_dim; ++head) {
    for (const auto& op : ops) {
      Vec img = op.apply(queue[head]);
      if (basis.add(img)) queue.push_back(std::move(img));
    }
  }
  return basis.subspace();
}

Subspace spin(const RestrictedModule& m, const std::vector<Vec>& seeds) { return spin(m.action, seeds, m.dim, m.p); }

RestrictedModule subquotient(const RestrictedModule& m, const Subspace& upper, const Subspace& lower) {
  if (upper.ambient_dim() != m.dim || lower.ambient_dim() != m.dim) throw DimensionError("subquotient: ambient mismatch");
  Subspace comp = complement_within(lower, upper);
  Frame frame(vstack(lower.basis(), comp.basis()));
  const std::size_t k = comp.dim();
  RestrictedModule out;
  out.p = m.p;
  out.dim = k;
  out.label = m.label;
  out.provenance = Provenance::derived;
  for (const auto& a : m.action) {
    Matrix sub(m.p, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec c;
      try {
        c = frame.coordinates(a.apply(comp.basis_vector(j)));
      } catch (const PreconditionError&) {
        throw PreconditionError("subquotient: subspace is not invariant");
      }
      for (std::size_t r = 0; r < k; ++r) sub.set(r, j, c[lower.dim() + r]);
    }
    out.action.push_back(std::move(sub));
  }
  // The lower subspace itself must be invariant too.
  for (const auto& a : m.action)
    for (std::size_t j = 0; j < lower.dim(); ++j)
      if (!lower.contains(a.apply(lower.basis_vector(j)))) throw PreconditionError("subquotient: subspace is not invariant");
  return out;
}

RestrictedModule submodule(const RestrictedModule& m, const Subspace& u) {
  return subquotient(m, u, Subspace(m.p, m.dim));
}

RestrictedModule quotient_module(const RestrictedModule& m, const Subspace& u) {
  return subquotient(m, Subspace::full(m.p, m.dim), u);
}

RestrictedModule hom_space_module(const RestrictedModule& s, const RestrictedModule& t) {
  if (s.p != t.p || s.action.size() != t.action.size()) throw PreconditionError("hom_space_module: modules do not match");
  const auto& f = PrimeField::of(s.p);
  const std::size_t ds = s.dim, dt = t.dim, d = ds * dt;
  RestrictedModule out;
  out.p = s.p;
  out.dim = d;
  out.label = "Hom(" + s.label + "," + t.label + ")";
  out.provenance = Provenance::derived;
  for (std::size_t g = 0; g < s.action.size(); ++g) {
    const Matrix& rs = s.action[g];
    const Matrix& rt = t.action[g];
    Matrix a(s.p, d, d);
    // Image of the elementary map E_{rc}: rho_T E_rc - E_rc rho_S.
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c) {
        const std::size_t col = r * ds + c;
        for (std::size_t i = 0; i < dt; ++i) a.set(i * ds + c, col, f.add(a(i * ds + c, col), rt(i, r)));
        for (std::size_t j = 0; j < ds; ++j) a.set(r * ds + j, col, f.sub(a(r * ds + j, col), rs(c, j)));
      }
    out.action.push_back(std::move(a));
  }
  return out;
}

}  // namespace rlie
