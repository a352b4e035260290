#include "primesub/matrix.hpp"

#include <optional>
#include <utility>

namespace primesub {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElem(1);
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AlgebraError(ErrorKind::ShapeMismatch, "fromRows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw AlgebraError(ErrorKind::ShapeMismatch, "fromColumns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw AlgebraError(ErrorKind::ShapeMismatch, "Matrix::apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].isZero()) acc += (*this)(r, c).value() * x[c].value();
    }
    y[r] = RingElem::fromQ(acc);
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError(ErrorKind::ShapeMismatch, "Matrix product: dimension mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k).value() * b(k, j).value();
      m(i, j) = RingElem::fromQ(acc);
    }
  return m;
}

Vector scaled(const Vector& v, const RingElem& c) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

void axpy(Vector& y, const RingElem& a, const Vector& x) {
  if (a.isZero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].isZero()) y[i] += a * x[i];
  }
}

bool isZeroVector(const Vector& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

namespace {

std::optional<std::size_t> pivotColumn(const Vector& v) {
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].isZero()) return c;
  return std::nullopt;
}

// q with x - q*p = residue(x, p).
RingElem floorQuotient(const RingElem& x, const Integer& p) {
  const Integer res = residue(x, p);
  return RingElem::fromQ(mpq_class((x - RingElem(res)).value() / mpq_class(p)));
}

}  // namespace

std::vector<Vector> hermiteRows(std::vector<Vector> rows, std::size_t n, const RingCtx& ctx) {
  for (const auto& r : rows)
    if (r.size() != n) throw AlgebraError(ErrorKind::ShapeMismatch, "hermiteRows: row length mismatch");
  std::size_t t = 0;
  for (std::size_t c = 0; c < n && t < rows.size(); ++c) {
    std::optional<std::size_t> first;
    for (std::size_t i = t; i < rows.size(); ++i) {
      if (!rows[i][c].isZero()) {
        first = i;
        break;
      }
    }
    if (!first) continue;
    std::swap(rows[t], rows[*first]);
    for (std::size_t i = t + 1; i < rows.size(); ++i) {
      if (rows[i][c].isZero()) continue;
      const RingElem a = rows[t][c];
      const RingElem b = rows[i][c];
      const Bezout bz = bezout(a, b, ctx);
      const RingElem g(bz.g);
      const RingElem bg = RingElem::fromQ(b.value() / g.value());
      const RingElem ag = RingElem::fromQ(a.value() / g.value());
      Vector newT(n), newI(n);
      for (std::size_t k = 0; k < n; ++k) {
        newT[k] = bz.s * rows[t][k] + bz.t * rows[i][k];
        newI[k] = bg * rows[t][k] - ag * rows[i][k];
      }
      rows[t] = std::move(newT);
      rows[i] = std::move(newI);
    }
    const auto [p, unit] = normalizeAssociate(rows[t][c], ctx);
    rows[t] = scaled(rows[t], unit);
    for (std::size_t i = 0; i < t; ++i) {
      if (rows[i][c].isZero()) continue;
      const RingElem q = (p == 1) ? rows[i][c] : floorQuotient(rows[i][c], p);
      axpy(rows[i], -q, rows[t]);
    }
    ++t;
  }
  rows.resize(t);
  return rows;
}

Vector reduceAgainst(const std::vector<Vector>& hermite, Vector v, std::vector<RingElem>* coeffs) {
  if (coeffs) coeffs->assign(hermite.size(), RingElem(0));
  for (std::size_t i = 0; i < hermite.size(); ++i) {
    const auto c = pivotColumn(hermite[i]);
    if (!c) continue;
    if (v[*c].isZero()) continue;
    const Integer p = hermite[i][*c].num();  // canonical pivot, integral
    RingElem q;
    if (dividesElem(p, v[*c])) {
      q = RingElem::fromQ(v[*c].value() / mpq_class(p));
    } else {
      q = floorQuotient(v[*c], p);
    }
    axpy(v, -q, hermite[i]);
    if (coeffs) (*coeffs)[i] = q;
  }
  return v;
}

SmithForm smithNormalForm(const Matrix& rel, const RingCtx& ctx) {
  const std::size_t m = rel.rows();
  const std::size_t n = rel.cols();
  Matrix A = rel;
  Matrix U = Matrix::identity(m);
  Matrix Ui = Matrix::identity(m);
  Matrix V = Matrix::identity(n);

  // Elementary operations, mirrored on the transforms.
  auto rowAxpy = [&](std::size_t dst, const RingElem& q, std::size_t src) {  // row_dst += q row_src
    if (q.isZero()) return;
    for (std::size_t k = 0; k < n; ++k) A(dst, k) += q * A(src, k);
    for (std::size_t k = 0; k < m; ++k) U(dst, k) += q * U(src, k);
    for (std::size_t k = 0; k < m; ++k) Ui(k, src) -= q * Ui(k, dst);
  };
  auto colAxpy = [&](std::size_t dst, const RingElem& q, std::size_t src) {  // col_dst += q col_src
    if (q.isZero()) return;
    for (std::size_t k = 0; k < m; ++k) A(k, dst) += q * A(k, src);
    for (std::size_t k = 0; k < n; ++k) V(k, dst) += q * V(k, src);
  };
  auto rowSwap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(A(a, k), A(b, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(U(a, k), U(b, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(Ui(k, a), Ui(k, b));
  };
  auto colSwap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(A(k, a), A(k, b));
    for (std::size_t k = 0; k < n; ++k) std::swap(V(k, a), V(k, b));
  };
  auto rowScale = [&](std::size_t r, const RingElem& c, const RingElem& cinv) {
    for (std::size_t k = 0; k < n; ++k) A(r, k) *= c;
    for (std::size_t k = 0; k < m; ++k) U(r, k) *= c;
    for (std::size_t k = 0; k < m; ++k) Ui(k, r) *= cinv;
  };

  SmithForm out;
  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    bool found = false;
    while (true) {
      // Smallest canonical magnitude; ties broken by lowest row, then column.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer bestGen;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (A(i, j).isZero()) continue;
          const Integer g = ctx.strip(A(i, j).num());
          if (!best || g < bestGen) {
            best = {i, j};
            bestGen = g;
          }
        }
      if (!best) break;
      found = true;
      rowSwap(t, best->first);
      colSwap(t, best->second);
      const auto [p, unit] = normalizeAssociate(A(t, t), ctx);
      rowScale(t, unit, unit.unitInverse(ctx));

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t).isZero()) continue;
        const RingElem q = (p == 1) ? A(i, t) : floorQuotient(A(i, t), p);
        rowAxpy(i, -q, t);
        if (!A(i, t).isZero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j).isZero()) continue;
        const RingElem q = (p == 1) ? A(t, j) : floorQuotient(A(t, j), p);
        colAxpy(j, -q, t);
        if (!A(t, j).isZero()) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!dividesElem(p, A(i, j))) {
            offender = i;
            break;
          }
        }
      if (!offender) break;
      rowAxpy(t, RingElem(1), *offender);
    }
    if (!found) break;
    out.diagonal.push_back(A(t, t).num());
  }
  out.rank = out.diagonal.size();
  for (const auto& d : out.diagonal)
    if (d != 1) out.invariants.push_back(d);
  out.freeRank = m - out.rank;
  out.left = std::move(U);
  out.leftInverse = std::move(Ui);
  out.right = std::move(V);
  return out;
}

}  // namespace primesub
