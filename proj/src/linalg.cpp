#include "polaris/linalg.hpp"

#include <utility>

#include "polaris/errors.hpp"

namespace polaris {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ShapeError("ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(int size) {
  RationalMatrix m(size, size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

namespace {

// In-place row reduction; returns rank and accumulates the determinant
// sign/scale when `det` is given.
int eliminate(RationalMatrix& m, Rational* det, RationalMatrix* companion) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
      if (companion) {
        for (int j = 0; j < companion->cols(); ++j) {
          std::swap((*companion)(pivot, j), (*companion)(r, j));
        }
      }
      if (det) *det = -*det;
    }
    Rational p = m(r, c);
    if (det) *det *= p;
    for (int j = 0; j < m.cols(); ++j) m(r, j) /= p;
    if (companion) {
      for (int j = 0; j < companion->cols(); ++j) (*companion)(r, j) /= p;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      if (companion) {
        for (int j = 0; j < companion->cols(); ++j) {
          (*companion)(i, j) -= f * (*companion)(r, j);
        }
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(RationalMatrix m) { return eliminate(m, nullptr, nullptr); }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  Rational det = 1;
  if (eliminate(m, &det, nullptr) < m.rows()) return 0;
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(m.rows());
  if (eliminate(work, nullptr, &inv) < m.rows()) return std::nullopt;
  return inv;
}

std::optional<Solution> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw ShapeError("solve: size mismatch");
  RationalMatrix work(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) work(i, j) = a(i, j);
    work(i, a.cols()) = b[i];
  }
  const int r = eliminate(work, nullptr, nullptr);
  Solution out{std::vector<Rational>(a.cols(), Rational(0)), false};
  int unknowns_pinned = 0;
  for (int i = 0; i < r; ++i) {
    int lead = 0;
    while (work(i, lead) == 0) ++lead;
    if (lead == a.cols()) return std::nullopt;
    out.x[lead] = work(i, a.cols());
    ++unknowns_pinned;
  }
  out.unique = unknowns_pinned == a.cols();
  return out;
}

}  // namespace polaris
