#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bracelab/fp.hpp"

namespace bracelab {

/// Coordinate vector over F_p. All coordinates share the modulus.
struct FpVector {
  int p = 2;
  std::vector<int> coords;

  static FpVector make(int p, std::vector<int> cs) {
    PrimeField field(p);
    for (int& c : cs) c = field.canon(c);
    return FpVector{p, std::move(cs)};
  }

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const FpVector& o) const {
    return p == o.p && coords == o.coords;
  }
};

/// Decodes index into the vector with that rank in lexicographic order,
/// first coordinate most significant. index ranges over [0, p^dim).
inline FpVector vector_at(int p, int dim, long long index) {
  std::vector<int> cs(dim, 0);
  for (int i = dim - 1; i >= 0; --i) {
    cs[i] = static_cast<int>(index % p);
    index /= p;
  }
  return FpVector{p, std::move(cs)};
}

inline long long vector_count(int p, int dim) {
  long long n = 1;
  for (int i = 0; i < dim; ++i) n *= p;
  return n;
}

/// Row-reduces `rows` over F_p and drops zero rows. Pivot columns ascend,
/// pivot entries are 1 and are the only nonzero entries in their column,
/// so the result is a canonical basis of the row space.
inline std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows,
                                          int p, int cols) {
  PrimeField field(p);
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    int s = field.inv(rows[r][c]);
    for (int j = 0; j < cols; ++j) rows[r][j] = field.mul(rows[r][j], s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      int f = rows[i][c];
      for (int j = 0; j < cols; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Subspace of F_p^d held as a reduced row echelon basis, so equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  static Subspace zero(int p, int ambient) { return Subspace(p, ambient, {}); }

  static Subspace full(int p, int ambient) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < ambient; ++i) {
      std::vector<int> e(ambient, 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return Subspace(p, ambient, std::move(rows));
  }

  static Subspace span(int p, int ambient,
                       std::vector<std::vector<int>> generators) {
    for (const auto& g : generators)
      if (static_cast<int>(g.size()) != ambient)
        throw std::invalid_argument("generator dimension mismatch");
    return Subspace(p, ambient, rref(std::move(generators), p, ambient));
  }

  int p() const { return p_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

  bool contains(const std::vector<int>& v) const {
    PrimeField field(p_);
    std::vector<int> r = v;
    for (const auto& row : basis_) {
      int piv = pivot_of(row);
      if (r[piv] != 0) {
        int f = r[piv];
        for (int j = 0; j < ambient_; ++j)
          r[j] = field.sub(r[j], field.mul(f, row[j]));
      }
    }
    for (int x : r)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  /// Lexicographically least nonzero vector (first coordinate most
  /// significant): the normalized last echelon row, whose pivot is
  /// rightmost. Requires dim() > 0.
  FpVector least_nonzero() const {
    if (basis_.empty()) throw std::logic_error("least_nonzero of zero space");
    return FpVector{p_, basis_.back()};
  }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    std::vector<std::vector<int>> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return Subspace(a.p_, a.ambient_, rref(std::move(rows), a.p_, a.ambient_));
  }

  /// Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry the
  /// intersection in their right half.
  static Subspace intersection(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    int d = a.ambient_;
    std::vector<std::vector<int>> block;
    for (const auto& r : a.basis_) {
      std::vector<int> row(2 * d, 0);
      for (int j = 0; j < d; ++j) row[j] = row[d + j] = r[j];
      block.push_back(std::move(row));
    }
    for (const auto& r : b.basis_) {
      std::vector<int> row(2 * d, 0);
      for (int j = 0; j < d; ++j) row[j] = r[j];
      block.push_back(std::move(row));
    }
    block = rref(std::move(block), a.p_, 2 * d);
    std::vector<std::vector<int>> inter;
    for (const auto& row : block) {
      bool left_zero = true;
      for (int j = 0; j < d; ++j)
        if (row[j] != 0) {
          left_zero = false;
          break;
        }
      if (left_zero) inter.emplace_back(row.begin() + d, row.end());
    }
    return Subspace(a.p_, d, rref(std::move(inter), a.p_, d));
  }

 private:
  Subspace(int p, int ambient, std::vector<std::vector<int>> basis)
      : p_(p), ambient_(ambient), basis_(std::move(basis)) {}

  static int pivot_of(const std::vector<int>& row) {
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
      if (row[j] != 0) return j;
    return -1;
  }

  static void check_compatible(const Subspace& a, const Subspace& b) {
    if (a.p_ != b.p_ || a.ambient_ != b.ambient_)
      throw std::invalid_argument("subspace field or dimension mismatch");
  }

  int p_;
  int ambient_;
  std::vector<std::vector<int>> basis_;
};

/// Null space of the linear constraints `rows` (each row is one constraint
/// row . x = 0) inside F_p^d.
inline Subspace null_space(std::vector<std::vector<int>> rows, int p, int d) {
  PrimeField field(p);
  rows = rref(std::move(rows), p, d);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(d, false);
  for (const auto& row : rows)
    for (int j = 0; j < d; ++j)
      if (row[j] != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  std::vector<std::vector<int>> basis;
  for (int f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> v(d, 0);
    v[f] = 1;
    for (size_t i = 0; i < rows.size(); ++i)
      v[pivot_col[i]] = field.neg(rows[i][f]);
    basis.push_back(std::move(v));
  }
  return Subspace::span(p, d, std::move(basis));
}

/// Bilinear form on F_p^d represented by its Gram matrix:
/// entry (i, j) is the value on the i-th and j-th standard basis vectors.
class BilinearForm {
 public:
  BilinearForm(int p, std::vector<std::vector<int>> matrix)
      : field_(p), matrix_(std::move(matrix)) {
    dim_ = static_cast<int>(matrix_.size());
    for (auto& row : matrix_) {
      if (static_cast<int>(row.size()) != dim_)
        throw std::invalid_argument("form matrix is not square");
      for (int& e : row) e = field_.canon(e);
    }
  }

  int p() const { return field_.p(); }
  int dim() const { return dim_; }
  int at(int i, int j) const { return matrix_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }

  /// x^T M y. Additive in each argument by construction.
  int eval(const FpVector& x, const FpVector& y) const {
    if (x.p != p() || y.p != p())
      throw std::invalid_argument("form evaluation: modulus mismatch");
    if (x.dim() != dim_ || y.dim() != dim_)
      throw std::invalid_argument("form evaluation: dimension mismatch");
    int acc = 0;
    for (int i = 0; i < dim_; ++i) {
      if (x.coords[i] == 0) continue;
      int row = 0;
      for (int j = 0; j < dim_; ++j)
        row = field_.add(row, field_.mul(matrix_[i][j], y.coords[j]));
      acc = field_.add(acc, field_.mul(x.coords[i], row));
    }
    return acc;
  }

 private:
  PrimeField field_;
  int dim_;
  std::vector<std::vector<int>> matrix_;
};

inline int form_eval(const BilinearForm& phi, const FpVector& x,
                     const FpVector& y) {
  return phi.eval(x, y);
}

enum class OrthogonalSide { left, right };

/// Left side: { x : phi(x, u) = 0 for all u in U }.
/// Right side: { x : phi(u, x) = 0 for all u in U }.
inline Subspace orthogonal(const BilinearForm& phi, const Subspace& u,
                           OrthogonalSide side) {
  if (u.ambient_dim() != phi.dim() || u.p() != phi.p())
    throw std::invalid_argument("orthogonal complement: space mismatch");
  PrimeField field(phi.p());
  int d = phi.dim();
  std::vector<std::vector<int>> constraints;
  for (const auto& b : u.basis()) {
    std::vector<int> row(d, 0);
    for (int i = 0; i < d; ++i) {
      int acc = 0;
      for (int j = 0; j < d; ++j) {
        int m = side == OrthogonalSide::left ? phi.at(i, j) : phi.at(j, i);
        acc = field.add(acc, field.mul(m, b[j]));
      }
      row[i] = acc;
    }
    constraints.push_back(std::move(row));
  }
  return null_space(std::move(constraints), phi.p(), d);
}

/// Gram matrix of the restriction of phi to the echelon basis of U.
inline std::vector<std::vector<int>> restriction_matrix(const BilinearForm& phi,
                                                        const Subspace& u) {
  int k = u.dim();
  std::vector<std::vector<int>> r(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      r[i][j] = phi.eval(FpVector{phi.p(), u.basis()[i]},
                         FpVector{phi.p(), u.basis()[j]});
  return r;
}

/// The restriction of phi to U is non-degenerate: its Gram matrix has full
/// rank (zero left radical, equivalently zero right radical).
inline bool is_nondegenerate(const BilinearForm& phi, const Subspace& u) {
  if (u.ambient_dim() != phi.dim() || u.p() != phi.p())
    throw std::invalid_argument("non-degeneracy test: space mismatch");
  auto r = restriction_matrix(phi, u);
  return static_cast<int>(rref(std::move(r), phi.p(), u.dim()).size()) ==
         u.dim();
}

/// First nonzero x (lexicographic, first coordinate most significant) with
/// phi(x, x) = 0, if any.
inline std::optional<FpVector> find_isotropic(const BilinearForm& phi) {
  long long total = vector_count(phi.p(), phi.dim());
  for (long long idx = 1; idx < total; ++idx) {
    FpVector v = vector_at(phi.p(), phi.dim(), idx);
    if (phi.eval(v, v) == 0) return v;
  }
  return std::nullopt;
}

/// Equivalent to "the restriction to every nonzero subspace is
/// non-degenerate": no nonzero vector is isotropic. The equivalence with the
/// subspace-quantified definition is exercised by tests, not assumed here.
inline bool is_strong_nondegenerate(const BilinearForm& phi) {
  return !find_isotropic(phi).has_value();
}

/// Basis b_1..b_d with phi(b_i, b_j) = 0 for all i > j, built by repeatedly
/// splitting off the lexicographically least pivot and recursing on its left
/// orthogonal complement. Fails when the chosen pivot is isotropic.
inline std::optional<std::vector<FpVector>> triangularize(
    const BilinearForm& phi) {
  std::vector<FpVector> out;
  Subspace w = Subspace::full(phi.p(), phi.dim());
  while (w.dim() > 0) {
    FpVector u = w.least_nonzero();
    if (phi.eval(u, u) == 0) return std::nullopt;
    out.push_back(u);
    Subspace line = Subspace::span(phi.p(), phi.dim(), {u.coords});
    Subspace perp = orthogonal(phi, line, OrthogonalSide::left);
    Subspace next = Subspace::intersection(w, perp);
    if (next.dim() != w.dim() - 1)
      throw internal_error("triangularize: complement dimension did not drop by one");
    w = next;
  }
  return out;
}

}  // namespace bracelab
