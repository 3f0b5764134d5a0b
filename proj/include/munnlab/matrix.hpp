// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Dense row-major matrices over a finite field with exact elimination.

#ifndef MUNNLAB_MATRIX_HPP_
#define MUNNLAB_MATRIX_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "munnlab/field.hpp"
#include "munnlab/polynomial.hpp"

namespace munnlab {

  class Matrix {
   public:
    Matrix(gf::Field field, std::size_t rows, std::size_t cols)
        : _field(std::move(field)),
          _rows(rows),
          _cols(cols),
          _data(rows * cols, gf::Elem{0}) {}

    static Matrix identity(gf::Field const& field, std::size_t n);
    //! Entries given as integers, reduced into the prime subfield.
    static Matrix from_ints(gf::Field const&                              field,
                            std::vector<std::vector<std::int64_t>> const& rows);
    static Matrix from_rows(gf::Field const&                          field,
                            std::vector<std::vector<gf::Elem>> const& rows);

    gf::Field const& field() const noexcept {
      return _field;
    }
    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }

    gf::Elem& operator()(std::size_t r, std::size_t c) noexcept {
      return _data[r * _cols + c];
    }
    gf::Elem operator()(std::size_t r, std::size_t c) const noexcept {
      return _data[r * _cols + c];
    }

    std::vector<gf::Elem> const& data() const noexcept {
      return _data;
    }

    bool is_zero() const noexcept;

    Matrix operator*(Matrix const& that) const;
    Matrix operator+(Matrix const& that) const;
    Matrix operator-(Matrix const& that) const;
    Matrix scaled(gf::Elem c) const;
    Matrix transpose() const;

    Matrix row_block(std::size_t first, std::size_t count) const;
    Matrix col_block(std::size_t first, std::size_t count) const;
    Matrix column(std::size_t c) const {
      return col_block(c, 1);
    }
    //! Copy `block` into this matrix with its top-left corner at (r, c).
    void paste(Matrix const& block, std::size_t r, std::size_t c);

    bool operator==(Matrix const& that) const {
      return _field == that._field && _rows == that._rows
             && _cols == that._cols && _data == that._data;
    }

    std::string to_string() const;

   private:
    gf::Field             _field;
    std::size_t           _rows, _cols;
    std::vector<gf::Elem> _data;
  };

  //! [A | B] and [A ; B].
  Matrix hconcat(Matrix const& a, Matrix const& b);
  Matrix vconcat(Matrix const& a, Matrix const& b);

  struct RowEchelon {
    Matrix                   reduced;  // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    Matrix                   transform;  // invertible, transform * A = reduced
  };

  RowEchelon row_echelon(Matrix const& a);

  std::size_t rank(Matrix const& a);

  //! Columns form a basis of {x : A x = 0}.
  Matrix kernel(Matrix const& a);

  std::optional<Matrix> inverse(Matrix const& a);

  //! Some X with A X = B, if one exists.
  std::optional<Matrix> solve(Matrix const& a, Matrix const& b);

  //! Columns form a basis of the column space (pivot columns of A after
  //! row reduction of A^T, so the basis is in reduced echelon form).
  Matrix column_space(Matrix const& a);

  //! Monic generator of {f : f(A) = 0}. Throws InvalidInput if A is not
  //! square.
  Polynomial min_poly(Matrix const& a);

  //! Monic f of least degree with sum_i f_i v_i = 0, where v_0 = start and
  //! v_{i+1} = step(v_i). Raises InternalInvariantViolation if no relation
  //! of degree <= max_degree exists.
  Polynomial sequence_min_poly(
      gf::Field const&                                                      F,
      std::vector<gf::Elem>                                                 start,
      std::function<std::vector<gf::Elem>(std::vector<gf::Elem> const&)> const& step,
      std::size_t max_degree);

  //! f(A) for square A.
  Matrix evaluate(Polynomial const& f, Matrix const& a);

  //! Rank normal form: invertible row and column transforms with
  //! row_transform * A * col_transform = [[I_r, 0], [0, 0]].
  struct RankNormalForm {
    std::size_t rank;
    Matrix      row_transform;
    Matrix      col_transform;
  };

  RankNormalForm rank_normal_form(Matrix const& a);

  //! The rows x cols matrix with I_r in the top-left corner.
  Matrix block_identity(gf::Field const& field,
                        std::size_t      rows,
                        std::size_t      cols,
                        std::size_t      r);

}  // namespace munnlab

#endif  // MUNNLAB_MATRIX_HPP_
