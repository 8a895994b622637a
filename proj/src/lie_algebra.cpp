#include "rlie/lie_algebra.hpp"

#include <set>
#include <sstream>

#include "rlie/module.hpp"

namespace rlie {

namespace {

void check_vec(const Vec& v, std::size_t n, unsigned p, const char* what) {
  if (v.size() != n) throw DimensionError(std::string(what) + ": coefficient vector has wrong length");
  for (auto x : v)
    if (x >= p) throw PreconditionError(std::string(what) + ": coefficient is not a canonical residue");
}

}  // namespace

RestrictedLieAlgebra::RestrictedLieAlgebra(unsigned p, std::vector<std::string> basis_names,
                                           const BracketTable& brackets, std::vector<Vec> pmap, std::string name)
    : p_(p), name_(std::move(name)), names_(std::move(basis_names)), pmap_(std::move(pmap)) {
  const auto& f = PrimeField::of(p);
  const std::size_t n = names_.size();
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != n) throw PreconditionError("basis labels must be unique");
  if (pmap_.size() != n) throw DimensionError("p-map must give one image per basis element");
  for (const auto& v : pmap_) check_vec(v, n, p, "p-map");

  brackets_.assign(n * n, zero_vec(n));
  for (const auto& [key, v] : brackets) {
    auto [i, j] = key;
    if (i >= j || j >= n) throw PreconditionError("bracket keys must be basis index pairs i < j");
    check_vec(v, n, p, "bracket");
    brackets_[i * n + j] = v;
    Vec neg(n);
    for (std::size_t k = 0; k < n; ++k) neg[k] = f.neg(v[k]);
    brackets_[j * n + i] = std::move(neg);
  }

  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(p, n, n);
    for (std::size_t k = 0; k < n; ++k) m.set_column(k, brackets_[i * n + k]);
    ad_.push_back(std::move(m));
  }
}

Vec RestrictedLieAlgebra::bracket(const Vec& u, const Vec& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw DimensionError("bracket arguments have wrong length");
  const auto& f = PrimeField::of(p_);
  Vec out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[j] || i == j) continue;
      vec_axpy(p_, out, f.mul(u[i], v[j]), brackets_[i * n + j]);
    }
  }
  return out;
}

Matrix RestrictedLieAlgebra::ad(const Vec& v) const {
  if (v.size() != dim()) throw DimensionError("ad argument has wrong length");
  Matrix m(p_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (v[i]) m = m + ad_[i].scaled(v[i]);
  return m;
}

Vec jacobson_correction(const RestrictedLieAlgebra& l, const Vec& a, const Vec& b) {
  const unsigned p = l.p();
  const auto& f = PrimeField::of(p);
  const Matrix ad_a = l.ad(a);
  const Matrix ad_b = l.ad(b);
  // coeffs[k] is the t^k coefficient of ad(t a + b)^j (a), built up for j = 0..p-1.
  std::vector<Vec> coeffs{a};
  for (unsigned step = 0; step + 1 < p; ++step) {
    std::vector<Vec> next(coeffs.size() + 1, l.zero());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k] = vec_add(p, next[k], ad_b.apply(coeffs[k]));
      next[k + 1] = vec_add(p, next[k + 1], ad_a.apply(coeffs[k]));
    }
    coeffs = std::move(next);
  }
  Vec total = l.zero();
  for (unsigned i = 1; i < p; ++i) vec_axpy(p, total, f.inv(Residue(i)), coeffs[i - 1]);
  return total;
}

Vec RestrictedLieAlgebra::pmap(const Vec& v) const {
  if (v.size() != dim()) throw DimensionError("p-map argument has wrong length");
  Vec acc = zero();
  Vec acc_p = zero();
  for (std::size_t k = 0; k < dim(); ++k) {
    if (!v[k]) continue;
    Vec term = vec_scale(p_, v[k], basis_element(k));
    // Over F_p, (λ e)^{[p]} = λ^p e^{[p]} = λ e^{[p]}.
    Vec term_p = vec_scale(p_, v[k], pmap_[k]);
    Vec corr = jacobson_correction(*this, acc, term);
    acc_p = vec_add(p_, vec_add(p_, acc_p, term_p), corr);
    acc = vec_add(p_, acc, term);
  }
  return acc_p;
}

std::string ValidationReport::summary(const RestrictedLieAlgebra& l) const {
  if (ok()) return "valid";
  std::ostringstream os;
  const auto& nm = l.basis_names();
  for (const auto& t : jacobi_failures)
    os << "Jacobi identity fails on (" << nm[t[0]] << ", " << nm[t[1]] << ", " << nm[t[2]] << "); ";
  for (auto i : pmap_failures) os << "ad(" << nm[i] << ")^p != ad(" << nm[i] << "^[p]); ";
  std::string s = os.str();
  return s.substr(0, s.size() - 2);
}

ValidationReport validate(const RestrictedLieAlgebra& l) {
  ValidationReport rep;
  const std::size_t n = l.dim();
  const unsigned p = l.p();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = l.basis_element(i), ej = l.basis_element(j), ek = l.basis_element(k);
        Vec s = l.bracket(ei, l.basis_bracket(j, k));
        s = vec_add(p, s, l.bracket(ej, l.basis_bracket(k, i)));
        s = vec_add(p, s, l.bracket(ek, l.basis_bracket(i, j)));
        if (!vec_is_zero(s)) rep.jacobi_failures.push_back({i, j, k});
      }
  for (std::size_t i = 0; i < n; ++i)
    if (!(l.ad_basis(i).pow(p) == l.ad(l.basis_pmap(i)))) rep.pmap_failures.push_back(i);
  return rep;
}

Subspace image(const Matrix& f, const Subspace& s) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(f.apply(s.basis_vector(i)));
  return Subspace::span(f.p(), f.rows(), out);
}

Subspace bracket_span(const RestrictedLieAlgebra& l, const Subspace& u, const Subspace& v) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out.push_back(l.bracket(u.basis_vector(i), v.basis_vector(j)));
  return Subspace::span(l.p(), l.dim(), out);
}

Subspace derived_algebra(const RestrictedLieAlgebra& l) {
  Subspace full = Subspace::full(l.p(), l.dim());
  return bracket_span(l, full, full);
}

std::vector<Subspace> derived_series(const RestrictedLieAlgebra& l) {
  std::vector<Subspace> series{Subspace::full(l.p(), l.dim())};
  while (true) {
    Subspace next = bracket_span(l, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const RestrictedLieAlgebra& l) { return derived_series(l).back().is_zero(); }

Subspace p_power_span(const RestrictedLieAlgebra& l) {
  const std::size_t n = l.dim();
  const unsigned p = l.p();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= p;
    if (count > kPPowerEnumerationLimit)
      throw ThresholdError("p_power_span: p^n exceeds the enumeration limit of " +
                           std::to_string(kPPowerEnumerationLimit));
  }
  std::vector<Vec> images;
  Subspace acc(p, n);
  Vec v = l.zero();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec img = l.pmap(v);
    if (!acc.contains(img)) acc = sum(acc, Subspace::span(p, n, {img}));
    for (std::size_t k = 0; k < n; ++k) {  // next vector in base-p counting order
      if (++v[k] < p) break;
      v[k] = 0;
    }
  }
  return acc;
}

Subspace p_derived_subspace(const RestrictedLieAlgebra& l, const Subspace& ideal) {
  std::vector<Vec> pimg;
  for (std::size_t i = 0; i < ideal.dim(); ++i) pimg.push_back(l.pmap(ideal.basis_vector(i)));
  return sum(bracket_span(l, ideal, ideal), Subspace::span(l.p(), l.dim(), pimg));
}

bool is_p_perfect(const RestrictedLieAlgebra& l) { return sum(derived_algebra(l), p_power_span(l)).is_full(); }

bool is_abelian(const RestrictedLieAlgebra& l) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!l.ad_basis(i).is_zero()) return false;
  return true;
}

bool is_strongly_abelian(const RestrictedLieAlgebra& l) {
  if (!is_abelian(l)) return false;
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!vec_is_zero(l.basis_pmap(i))) return false;
  return true;
}

bool is_ideal(const RestrictedLieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw DimensionError("subspace does not live in the algebra");
  return s.contains(bracket_span(l, Subspace::full(l.p(), l.dim()), s));
}

bool is_p_ideal(const RestrictedLieAlgebra& l, const Subspace& s) {
  if (!is_ideal(l, s)) return false;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!s.contains(l.pmap(s.basis_vector(i)))) return false;
  return true;
}

Subspace ideal_closure(const RestrictedLieAlgebra& l, const Subspace& seed) {
  Subspace full = Subspace::full(l.p(), l.dim());
  Subspace v = seed;
  while (true) {
    Subspace next = sum(v, bracket_span(l, full, v));
    if (next == v) return v;
    v = std::move(next);
  }
}

Subspace p_closure(const RestrictedLieAlgebra& l, const Subspace& seed) {
  Subspace v = seed;
  while (true) {
    v = ideal_closure(l, v);
    // v is an ideal now, so the Jacobson terms of sums stay inside it and basis
    // p-images are enough.
    std::vector<Vec> pimg;
    for (std::size_t i = 0; i < v.dim(); ++i) pimg.push_back(l.pmap(v.basis_vector(i)));
    Subspace next = sum(v, Subspace::span(l.p(), l.dim(), pimg));
    if (next == v) return v;
    v = std::move(next);
  }
}

namespace {

Quotient build_quotient(const RestrictedLieAlgebra& l, const Subspace& ideal, bool keep_pmap) {
  const unsigned p = l.p();
  const std::size_t n = l.dim();
  Subspace comp = extend_to_complement(ideal);
  const std::size_t k = comp.dim();
  Frame frame(vstack(ideal.basis(), comp.basis()));

  Quotient q;
  q.projection = Matrix(p, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = frame.coordinates(l.basis_element(j));
    for (std::size_t a = 0; a < k; ++a) q.projection.set(a, j, c[ideal.dim() + a]);
  }
  q.lift = comp.basis().transpose();

  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) {
    // comp is spanned by unit vectors, so each basis vector names an original basis element.
    std::size_t col = comp.pivots()[a];
    names.push_back(l.basis_names()[col]);
  }
  RestrictedLieAlgebra::BracketTable br;
  std::vector<Vec> pm;
  for (std::size_t a = 0; a < k; ++a) {
    Vec ca = comp.basis_vector(a);
    for (std::size_t b = a + 1; b < k; ++b) {
      Vec img = q.projection.apply(l.bracket(ca, comp.basis_vector(b)));
      if (!vec_is_zero(img)) br[{a, b}] = std::move(img);
    }
    pm.push_back(keep_pmap ? q.projection.apply(l.pmap(ca)) : zero_vec(k));
  }
  std::string name = l.name().empty() ? std::string() : l.name() + "/I";
  q.algebra = RestrictedLieAlgebra(p, std::move(names), br, std::move(pm), std::move(name));
  return q;
}

}  // namespace

Quotient quotient(const RestrictedLieAlgebra& l, const Subspace& ideal) {
  if (!is_p_ideal(l, ideal)) throw PreconditionError("quotient: subspace is not a p-ideal");
  return build_quotient(l, ideal, true);
}

Quotient quotient_ordinary(const RestrictedLieAlgebra& l, const Subspace& ideal) {
  if (!is_ideal(l, ideal)) throw PreconditionError("quotient: subspace is not an ideal");
  return build_quotient(l, ideal, false);
}

RestrictedLieAlgebra semidirect_product(const RestrictedLieAlgebra& k, const RestrictedModule& m, std::string name) {
  if (m.p != k.p() || m.action.size() != k.dim()) throw PreconditionError("semidirect_product: module does not match algebra");
  if (!validate_module(k, m).ok()) throw PreconditionError("semidirect_product: invalid module");
  const unsigned p = k.p();
  const auto& f = PrimeField::of(p);
  const std::size_t d = m.dim, n = k.dim(), total = d + n;

  std::vector<std::string> names;
  for (std::size_t a = 0; a < d; ++a) names.push_back("m" + std::to_string(a + 1));
  for (const auto& s : k.basis_names()) names.push_back(s);

  RestrictedLieAlgebra::BracketTable br;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      // [m_a, x_i] = -x_i · m_a
      Vec v = zero_vec(total);
      for (std::size_t r = 0; r < d; ++r) v[r] = f.neg(m.action[i](r, a));
      if (!vec_is_zero(v)) br[{a, d + i}] = std::move(v);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(total);
      const Vec& b = k.basis_bracket(i, j);
      std::copy(b.begin(), b.end(), v.begin() + d);
      if (!vec_is_zero(v)) br[{d + i, d + j}] = std::move(v);
    }
  std::vector<Vec> pm(total, zero_vec(total));
  for (std::size_t i = 0; i < n; ++i) std::copy(k.basis_pmap(i).begin(), k.basis_pmap(i).end(), pm[d + i].begin() + d);
  return RestrictedLieAlgebra(p, std::move(names), br, std::move(pm), std::move(name));
}

RestrictedLieAlgebra direct_sum(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b, std::string name) {
  if (a.p() != b.p()) throw PreconditionError("direct_sum: characteristics differ");
  const std::size_t na = a.dim(), nb = b.dim(), total = na + nb;
  std::vector<std::string> names = a.basis_names();
  std::set<std::string> used(names.begin(), names.end());
  for (auto s : b.basis_names()) {
    while (used.count(s)) s += "'";
    used.insert(s);
    names.push_back(s);
  }
  RestrictedLieAlgebra::BracketTable br;
  auto embed = [&](const Vec& v, std::size_t offset) {
    Vec out = zero_vec(total);
    std::copy(v.begin(), v.end(), out.begin() + offset);
    return out;
  };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      if (!vec_is_zero(a.basis_bracket(i, j))) br[{i, j}] = embed(a.basis_bracket(i, j), 0);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      if (!vec_is_zero(b.basis_bracket(i, j))) br[{na + i, na + j}] = embed(b.basis_bracket(i, j), na);
  std::vector<Vec> pm;
  for (std::size_t i = 0; i < na; ++i) pm.push_back(embed(a.basis_pmap(i), 0));
  for (std::size_t i = 0; i < nb; ++i) pm.push_back(embed(b.basis_pmap(i), na));
  return RestrictedLieAlgebra(a.p(), std::move(names), br, std::move(pm), std::move(name));
}

Subspace annihilator(const RestrictedLieAlgebra& l, const RestrictedModule& m) {
  if (m.action.size() != l.dim()) throw DimensionError("annihilator: module does not match algebra");
  const std::size_t d = m.dim;
  Matrix sys(l.p(), d * d, l.dim());
  for (std::size_t k = 0; k < l.dim(); ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) sys.set(r * d + c, k, m.action[k](r, c));
  Subspace ann = Subspace::span(kernel_basis(sys));
  if (!is_p_ideal(l, ann)) throw CertificationError("annihilator is not a p-ideal");
  return ann;
}

}  // namespace rlie
