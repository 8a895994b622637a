#include "rlie/ffla.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <sstream>

namespace rlie {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p), mul_(std::size_t(p) * p), inv_(p, 0) {
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b) mul_[a * p + b] = Residue((a * b) % p);
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if ((a * b) % p == 1) inv_[a] = Residue(b);
}

const PrimeField& PrimeField::of(unsigned p) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<PrimeField>, 256> fields;
  if (p >= 256 || !is_prime(p))
    throw PreconditionError("characteristic must be a prime below 256, got " + std::to_string(p));
  std::lock_guard<std::mutex> lock(mutex);
  if (!fields[p]) fields[p].reset(new PrimeField(p));
  return *fields[p];
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
  return inv_[a];
}

Residue PrimeField::pow(Residue a, unsigned long long e) const noexcept {
  Residue result = Residue(1 % p_);
  Residue base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::reduce(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Residue(r);
}

// ---------------------------------------------------------------------------

Matrix::Matrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), field_(&PrimeField::of(p)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(unsigned p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(unsigned p, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set_int(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(unsigned p, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(unsigned p, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

void Matrix::check_same_shape(const Matrix& o, const char* op) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError(std::string("shape mismatch in matrix ") + op);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (p_ != o.p_ || cols_ != o.rows_) throw DimensionError("shape mismatch in matrix product");
  Matrix out(p_, rows_, o.cols_);
  std::vector<std::uint32_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < cols_; ++k) {
      const unsigned a = (*this)(r, k);
      if (!a) continue;
      const Residue* orow = o.data_.data() + k * o.cols_;
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] += a * orow[c];
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out.data_[r * o.cols_ + c] = Residue(acc[c] % p_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(o, "sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(o, "difference");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_->mul(s, x);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("shape mismatch in matrix-vector product");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint32_t acc = 0;
    const Residue* mrow = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += unsigned(mrow[c]) * v[c];
    out[r] = Residue(acc % p_);
  }
  return out;
}

Vec Matrix::apply_left(const Vec& v) const {
  if (v.size() != rows_) throw DimensionError("shape mismatch in vector-matrix product");
  std::vector<std::uint32_t> acc(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!v[r]) continue;
    const Residue* mrow = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc[c] += unsigned(v[r]) * mrow[c];
  }
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = Residue(acc[c] % p_);
  return out;
}

Matrix Matrix::pow(unsigned long long e) const {
  if (rows_ != cols_) throw DimensionError("power of a non-square matrix");
  Matrix result = identity(p_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << unsigned((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.p() != bottom.p() || top.cols() != bottom.cols()) throw DimensionError("vstack mismatch");
  Matrix m(top.p(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::copy(top.row(r).begin(), top.row(r).end(), m.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), m.row(top.rows() + r).begin());
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.p() != right.p() || left.rows() != right.rows()) throw DimensionError("hstack mismatch");
  Matrix m(left.p(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::copy(left.row(r).begin(), left.row(r).end(), m.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), m.row(r).begin() + left.cols());
  }
  return m;
}

// ---------------------------------------------------------------------------

Vec zero_vec(std::size_t n) { return Vec(n, 0); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Vec vec_add(unsigned p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  const auto& f = PrimeField::of(p);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(unsigned p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  const auto& f = PrimeField::of(p);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(unsigned p, Residue s, const Vec& a) {
  const auto& f = PrimeField::of(p);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

void vec_axpy(unsigned p, Vec& a, Residue s, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  if (!s) return;
  const auto& f = PrimeField::of(p);
  const Residue* row = f.mul_row(s);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], row[b[i]]);
}

bool vec_is_zero(const Vec& a) noexcept {
  return std::all_of(a.begin(), a.end(), [](Residue x) { return x == 0; });
}

Residue vec_dot(unsigned p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += unsigned(a[i]) * b[i];
  return Residue(acc % p);
}

// ---------------------------------------------------------------------------

namespace {

// Gauss-Jordan elimination in place. When `companion` is non-null the same row
// operations are applied to it (it must have as many rows as m).
RrefResult eliminate(Matrix m, Matrix* companion) {
  const auto& f = m.field();
  const unsigned p = m.p();
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
      if (companion) std::swap_ranges(companion->row(sel).begin(), companion->row(sel).end(), companion->row(r).begin());
    }
    const Residue inv = f.inv(m(r, c));
    if (inv != 1) {
      const Residue* irow = f.mul_row(inv);
      for (std::size_t k = c; k < m.cols(); ++k) m.row(r)[k] = irow[m(r, k)];
      if (companion)
        for (auto& x : companion->row(r)) x = irow[x];
    }
    auto prow = m.row(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Residue factor = m(i, c);
      if (!factor) continue;
      const Residue* nrow = f.mul_row(Residue(p - factor));
      auto irow = m.row(i);
      for (std::size_t k = c; k < m.cols(); ++k) {
        unsigned s = unsigned(irow[k]) + nrow[prow[k]];
        irow[k] = Residue(s >= p ? s - p : s);
      }
      if (companion) {
        auto crow = companion->row(i);
        auto cprow = companion->row(r);
        for (std::size_t k = 0; k < crow.size(); ++k) {
          unsigned s = unsigned(crow[k]) + nrow[cprow[k]];
          crow[k] = Residue(s >= p ? s - p : s);
        }
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

Matrix first_rows(const Matrix& m, std::size_t k) {
  Matrix out(m.p(), k, m.cols());
  for (std::size_t r = 0; r < k; ++r) std::copy(m.row(r).begin(), m.row(r).end(), out.row(r).begin());
  return out;
}

}  // namespace

RrefResult rref(const Matrix& m) { return eliminate(m, nullptr); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const auto& f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Matrix k(m.p(), m.cols() - rr.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k.set(out, free, 1);
    for (std::size_t i = 0; i < rr.rank; ++i) k.set(out, rr.pivots[i], f.neg(rr.reduced(i, free)));
    ++out;
  }
  // Free-variable construction already yields a basis; put it in canonical form.
  return first_rows(rref(k).reduced, k.rows());
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match row count");
  Matrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug.set(r, a.cols(), b[r]);
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular = zero_vec(a.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) sol.particular[rr.pivots[i]] = rr.reduced(i, a.cols());
  sol.null_basis = kernel_basis(a);
  return sol;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(unsigned p, std::size_t ambient_dim) : basis_(p, 0, ambient_dim) {}

Subspace Subspace::span(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Subspace s(rows.p(), rows.cols());
  s.basis_ = first_rows(rr.reduced, rr.rank);
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span(unsigned p, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return span(Matrix::from_rows(p, ambient_dim, vectors));
}

Subspace Subspace::full(unsigned p, std::size_t ambient_dim) { return span(Matrix::identity(p, ambient_dim)); }

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector does not live in the ambient space");
  Vec r = v;
  const unsigned p = this->p();
  for (std::size_t i = 0; i < dim(); ++i) {
    Residue c = r[pivots_[i]];
    if (!c) continue;
    Vec row = basis_vector(i);
    vec_axpy(p, r, PrimeField::of(p).neg(c), row);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw PreconditionError("vector is not in the subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p()) throw DimensionError("ambient dimension mismatch in sum");
  return Subspace::span(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
    throw DimensionError("ambient dimension mismatch in intersection");
  const std::size_t n = u.ambient_dim();
  const unsigned p = u.p();
  // Zassenhaus: rows (u|u) and (v|0); rows of the echelon form with zero left
  // half span the intersection in their right half.
  Matrix z(p, u.dim() + v.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c) {
      z.set(i, c, u.basis()(i, c));
      z.set(i, n + c, u.basis()(i, c));
    }
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c) z.set(u.dim() + i, c, v.basis()(i, c));
  RrefResult rr = rref(z);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] < n) continue;
    Vec right(n);
    for (std::size_t c = 0; c < n; ++c) right[c] = rr.reduced(i, n + c);
    rows.push_back(std::move(right));
  }
  return Subspace::span(p, n, rows);
}

Subspace extend_to_complement(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient_dim(), false);
  for (auto c : u.pivots()) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < u.ambient_dim(); ++c)
    if (!is_pivot[c]) rows.push_back(unit_vec(u.ambient_dim(), c));
  return Subspace::span(u.p(), u.ambient_dim(), rows);
}

Subspace complement_within(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner)) throw PreconditionError("complement_within: inner is not contained in outer");
  Subspace acc = inner;
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < outer.dim() && acc.dim() < outer.dim(); ++i) {
    Vec w = outer.basis_vector(i);
    if (acc.contains(w)) continue;
    chosen.push_back(w);
    acc = sum(acc, Subspace::span(outer.p(), outer.ambient_dim(), {w}));
  }
  return Subspace::span(outer.p(), outer.ambient_dim(), chosen);
}

// ---------------------------------------------------------------------------

Vec IncrementalBasis::reduce(const Vec& v) const {
  if (v.size() != n_) throw DimensionError("vector does not live in the ambient space");
  const auto& f = PrimeField::of(p_);
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = r[pivots_[i]];
    if (c) vec_axpy(p_, r, f.neg(c), rows_[i]);
  }
  return r;
}

bool IncrementalBasis::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  r = vec_scale(p_, PrimeField::of(p_).inv(r[piv]), r);
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

Subspace IncrementalBasis::subspace() const { return Subspace::span(p_, n_, rows_); }

// ---------------------------------------------------------------------------

Frame::Frame(Matrix vectors) : vectors_(std::move(vectors)) {
  Matrix companion = Matrix::identity(vectors_.p(), vectors_.rows());
  RrefResult rr = eliminate(vectors_, &companion);
  if (rr.rank != vectors_.rows()) throw PreconditionError("frame vectors are linearly dependent");
  echelon_ = std::move(rr.reduced);
  transform_ = std::move(companion);
  pivots_ = std::move(rr.pivots);
}

Vec Frame::coordinates(const Vec& v) const {
  if (v.size() != vectors_.cols()) throw DimensionError("vector does not live in the frame's ambient space");
  Vec echelon_coords(size());
  for (std::size_t i = 0; i < size(); ++i) echelon_coords[i] = v[pivots_[i]];
  if (echelon_.apply_left(echelon_coords) != v) throw PreconditionError("vector is not in the span of the frame");
  return transform_.apply_left(echelon_coords);
}

}  // namespace rlie
