// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "munnlab/error.hpp"

namespace munnlab {

  using gf::Elem;
  using gf::Field;

  Matrix Matrix::identity(Field const& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = field.one();
    }
    return m;
  }

  Matrix Matrix::from_ints(Field const&                                  field,
                           std::vector<std::vector<std::int64_t>> const& rows) {
    std::size_t const r = rows.size();
    std::size_t const c = r == 0 ? 0 : rows[0].size();
    Matrix            m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        fail(ErrorKind::ShapeMismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = field.from_int(rows[i][j]);
      }
    }
    return m;
  }

  Matrix Matrix::from_rows(Field const&                          field,
                           std::vector<std::vector<Elem>> const& rows) {
    std::size_t const r = rows.size();
    std::size_t const c = r == 0 ? 0 : rows[0].size();
    Matrix            m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        fail(ErrorKind::ShapeMismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  bool Matrix::is_zero() const noexcept {
    return std::all_of(
        _data.begin(), _data.end(), [](Elem e) { return e.rep == 0; });
  }

  Matrix Matrix::operator*(Matrix const& that) const {
    if (_cols != that._rows) {
      fail(ErrorKind::ShapeMismatch,
           "cannot multiply " + std::to_string(_rows) + "x"
               + std::to_string(_cols) + " by " + std::to_string(that._rows)
               + "x" + std::to_string(that._cols));
    }
    Matrix out(_field, _rows, that._cols);
    if (_field.is_prime_field()) {
      // Accumulate in 64 bits and reduce periodically.
      std::uint64_t const p     = _field.characteristic();
      std::uint64_t const limit = ~std::uint64_t(0) - (p - 1) * (p - 1);
      std::vector<std::uint64_t> acc(that._cols);
      for (std::size_t i = 0; i < _rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < _cols; ++k) {
          std::uint64_t a = (*this)(i, k).rep;
          if (a == 0) {
            continue;
          }
          for (std::size_t j = 0; j < that._cols; ++j) {
            acc[j] += a * that(k, j).rep;
            if (acc[j] >= limit) {
              acc[j] %= p;
            }
          }
        }
        for (std::size_t j = 0; j < that._cols; ++j) {
          out(i, j) = Elem{acc[j] % p};
        }
      }
      return out;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Elem a = (*this)(i, k);
        if (_field.is_zero(a)) {
          continue;
        }
        for (std::size_t j = 0; j < that._cols; ++j) {
          out(i, j) = _field.add(out(i, j), _field.mul(a, that(k, j)));
        }
      }
    }
    return out;
  }

  Matrix Matrix::operator+(Matrix const& that) const {
    if (_rows != that._rows || _cols != that._cols) {
      fail(ErrorKind::ShapeMismatch, "matrix sum of different shapes");
    }
    Matrix out(_field, _rows, _cols);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] = _field.add(_data[i], that._data[i]);
    }
    return out;
  }

  Matrix Matrix::operator-(Matrix const& that) const {
    if (_rows != that._rows || _cols != that._cols) {
      fail(ErrorKind::ShapeMismatch, "matrix difference of different shapes");
    }
    Matrix out(_field, _rows, _cols);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] = _field.sub(_data[i], that._data[i]);
    }
    return out;
  }

  Matrix Matrix::scaled(Elem c) const {
    Matrix out(_field, _rows, _cols);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] = _field.mul(_data[i], c);
    }
    return out;
  }

  Matrix Matrix::transpose() const {
    Matrix out(_field, _cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out(j, i) = (*this)(i, j);
      }
    }
    return out;
  }

  Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    MUNNLAB_ASSERT(first + count <= _rows, "row block out of range");
    Matrix out(_field, count, _cols);
    std::copy(_data.begin() + first * _cols,
              _data.begin() + (first + count) * _cols,
              out._data.begin());
    return out;
  }

  Matrix Matrix::col_block(std::size_t first, std::size_t count) const {
    MUNNLAB_ASSERT(first + count <= _cols, "column block out of range");
    Matrix out(_field, _rows, count);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        out(i, j) = (*this)(i, first + j);
      }
    }
    return out;
  }

  void Matrix::paste(Matrix const& block, std::size_t r, std::size_t c) {
    MUNNLAB_ASSERT(r + block._rows <= _rows && c + block._cols <= _cols,
                   "paste out of range");
    for (std::size_t i = 0; i < block._rows; ++i) {
      for (std::size_t j = 0; j < block._cols; ++j) {
        (*this)(r + i, c + j) = block(i, j);
      }
    }
  }

  std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < _rows; ++i) {
      out << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < _cols; ++j) {
        out << (j == 0 ? "" : ", ") << _field.to_string((*this)(i, j));
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }

  Matrix hconcat(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows()) {
      fail(ErrorKind::ShapeMismatch, "hconcat of different heights");
    }
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    out.paste(a, 0, 0);
    out.paste(b, 0, a.cols());
    return out;
  }

  Matrix vconcat(Matrix const& a, Matrix const& b) {
    if (a.cols() != b.cols()) {
      fail(ErrorKind::ShapeMismatch, "vconcat of different widths");
    }
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    out.paste(a, 0, 0);
    out.paste(b, a.rows(), 0);
    return out;
  }

  namespace {

    // In-place Gauss-Jordan on the first `ncols` columns of m, applying the
    // same row operations to every column. Returns pivot columns.
    std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t ncols) {
      Field const&             F = m.field();
      std::vector<std::size_t> pivots;
      std::size_t              row = 0;
      for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && F.is_zero(m(piv, col))) {
          ++piv;
        }
        if (piv == m.rows()) {
          continue;
        }
        if (piv != row) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(piv, j), m(row, j));
          }
        }
        Elem inv = F.inv(m(row, col));
        if (inv != F.one()) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            m(row, j) = F.mul(m(row, j), inv);
          }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (i == row) {
            continue;
          }
          Elem factor = m(i, col);
          if (F.is_zero(factor)) {
            continue;
          }
          for (std::size_t j = col; j < m.cols(); ++j) {
            if (!F.is_zero(m(row, j))) {
              m(i, j) = F.sub(m(i, j), F.mul(factor, m(row, j)));
            }
          }
        }
        pivots.push_back(col);
        ++row;
      }
      return pivots;
    }

  }  // namespace

  RowEchelon row_echelon(Matrix const& a) {
    Matrix aug    = hconcat(a, Matrix::identity(a.field(), a.rows()));
    auto   pivots = gauss_jordan(aug, a.cols());
    return {aug.col_block(0, a.cols()),
            std::move(pivots),
            aug.col_block(a.cols(), a.rows())};
  }

  std::size_t rank(Matrix const& a) {
    Matrix m = a;
    return gauss_jordan(m, m.cols()).size();
  }

  Matrix kernel(Matrix const& a) {
    Field const& F      = a.field();
    Matrix       m      = a;
    auto         pivots = gauss_jordan(m, m.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::size_t const nfree = a.cols() - pivots.size();
    Matrix            out(F, a.cols(), nfree);
    std::size_t       k = 0;
    for (std::size_t col = 0; col < a.cols(); ++col) {
      if (is_pivot[col]) {
        continue;
      }
      out(col, k) = F.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        out(pivots[r], k) = F.neg(m(r, col));
      }
      ++k;
    }
    return out;
  }

  std::optional<Matrix> inverse(Matrix const& a) {
    if (!a.is_square()) {
      return std::nullopt;
    }
    auto ech = row_echelon(a);
    if (ech.pivots.size() != a.rows()) {
      return std::nullopt;
    }
    return ech.transform;
  }

  std::optional<Matrix> solve(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows()) {
      fail(ErrorKind::ShapeMismatch, "solve: right-hand side height");
    }
    Field const& F      = a.field();
    Matrix       aug    = hconcat(a, b);
    auto         pivots = gauss_jordan(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
      for (std::size_t j = a.cols(); j < aug.cols(); ++j) {
        if (!F.is_zero(aug(r, j))) {
          return std::nullopt;
        }
      }
    }
    Matrix x(F, a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        x(pivots[r], j) = aug(r, a.cols() + j);
      }
    }
    return x;
  }

  Matrix column_space(Matrix const& a) {
    Matrix t      = a.transpose();
    auto   pivots = gauss_jordan(t, t.cols());
    return t.row_block(0, pivots.size()).transpose();
  }

  Polynomial sequence_min_poly(
      Field const&                                                  F,
      std::vector<Elem>                                             start,
      std::function<std::vector<Elem>(std::vector<Elem> const&)> const& step,
      std::size_t max_degree) {
    std::size_t const N = start.size();
    // Echelonized sequence vectors, each tagged with its expression in
    // terms of v_0..v_k.
    struct Row {
      std::vector<Elem> v;
      std::vector<Elem> combo;
      std::size_t       pivot;
    };
    std::vector<Row>  basis;
    std::vector<Elem> current = std::move(start);
    for (std::size_t k = 0; k <= max_degree; ++k) {
      std::vector<Elem> v = current;
      std::vector<Elem> combo(k + 1, F.zero());
      combo[k] = F.one();
      for (auto const& row : basis) {
        Elem c = v[row.pivot];
        if (F.is_zero(c)) {
          continue;
        }
        for (std::size_t j = 0; j < N; ++j) {
          v[j] = F.sub(v[j], F.mul(c, row.v[j]));
        }
        for (std::size_t j = 0; j < row.combo.size(); ++j) {
          combo[j] = F.sub(combo[j], F.mul(c, row.combo[j]));
        }
      }
      auto it = std::find_if(
          v.begin(), v.end(), [](Elem e) { return e.rep != 0; });
      if (it == v.end()) {
        return Polynomial(F, std::move(combo)).monic();
      }
      std::size_t pivot = static_cast<std::size_t>(it - v.begin());
      Elem        inv   = F.inv(v[pivot]);
      for (auto& e : v) {
        e = F.mul(e, inv);
      }
      for (auto& e : combo) {
        e = F.mul(e, inv);
      }
      // keep earlier rows reduced at the new pivot
      for (auto& row : basis) {
        Elem c = row.v[pivot];
        if (F.is_zero(c)) {
          continue;
        }
        for (std::size_t j = 0; j < N; ++j) {
          row.v[j] = F.sub(row.v[j], F.mul(c, v[j]));
        }
        row.combo.resize(k + 1, F.zero());
        for (std::size_t j = 0; j <= k; ++j) {
          row.combo[j] = F.sub(row.combo[j], F.mul(c, combo[j]));
        }
      }
      basis.push_back({std::move(v), std::move(combo), pivot});
      current = step(current);
    }
    fail(ErrorKind::InternalInvariantViolation,
         "sequence has no linear relation within the degree bound");
  }

  Polynomial min_poly(Matrix const& a) {
    if (!a.is_square()) {
      fail(ErrorKind::InvalidInput, "min_poly of a non-square matrix");
    }
    std::size_t const n    = a.rows();
    auto              step = [&](std::vector<Elem> const& flat) {
      Matrix power(a.field(), n, n);
      for (std::size_t i = 0; i < n * n; ++i) {
        power(i / n, i % n) = flat[i];
      }
      return (power * a).data();
    };
    return sequence_min_poly(
        a.field(), Matrix::identity(a.field(), n).data(), step, n);
  }

  Matrix evaluate(Polynomial const& f, Matrix const& a) {
    Field const& F = a.field();
    Matrix       r(F, a.rows(), a.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
      r = r * a + Matrix::identity(F, a.rows()).scaled(f.coeffs()[i]);
    }
    return r;
  }

  RankNormalForm rank_normal_form(Matrix const& a) {
    Field const&      F   = a.field();
    auto              ech = row_echelon(a);
    std::size_t const r   = ech.pivots.size();
    std::size_t const n   = a.cols();
    // Column permutation putting pivot columns first.
    std::vector<std::size_t> order = ech.pivots;
    std::vector<bool>        used(n, false);
    for (auto p : order) {
      used[p] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!used[c]) {
        order.push_back(c);
      }
    }
    Matrix perm(F, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      perm(order[j], j) = F.one();
    }
    Matrix permuted = ech.reduced * perm;  // [[I, N], [0, 0]]
    Matrix clear    = Matrix::identity(F, n);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = r; j < n; ++j) {
        clear(i, j) = F.neg(permuted(i, j));
      }
    }
    return {r, ech.transform, perm * clear};
  }

  Matrix block_identity(Field const& field,
                        std::size_t  rows,
                        std::size_t  cols,
                        std::size_t  r) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < r && i < rows && i < cols; ++i) {
      m(i, i) = field.one();
    }
    return m;
  }

}  // namespace munnlab
