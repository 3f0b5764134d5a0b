// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// The group algebra kG over a prime field of characteristic not dividing
// |G|: regular representation, central primitive idempotents, the
// invariants (d_k, c_k, u_k) of each simple component Mat(c_k, F_k), and
// ranks r_k of sandwich matrices projected onto a component.

#ifndef MUNNLAB_GROUP_ALGEBRA_HPP_
#define MUNNLAB_GROUP_ALGEBRA_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "munnlab/field.hpp"
#include "munnlab/group.hpp"
#include "munnlab/matrix.hpp"
#include "munnlab/polynomial.hpp"

namespace munnlab {

  class GroupAlgebra;

  //! An element sum_g x_g g of kG, coefficients indexed by group elements.
  class AlgebraElement {
   public:
    AlgebraElement(std::shared_ptr<GroupAlgebra const> algebra,
                   std::vector<gf::Elem>               coeffs);

    GroupAlgebra const& algebra() const noexcept {
      return *_algebra;
    }
    std::shared_ptr<GroupAlgebra const> const& algebra_ptr() const noexcept {
      return _algebra;
    }
    std::vector<gf::Elem> const& coeffs() const noexcept {
      return _coeffs;
    }
    gf::Elem coeff(std::size_t g) const noexcept {
      return _coeffs[g];
    }
    bool is_zero() const noexcept;

    AlgebraElement operator+(AlgebraElement const& that) const;
    AlgebraElement operator-(AlgebraElement const& that) const;
    AlgebraElement operator*(AlgebraElement const& that) const;
    AlgebraElement scaled(gf::Elem c) const;

    bool operator==(AlgebraElement const& that) const {
      return _coeffs == that._coeffs;
    }

   private:
    std::shared_ptr<GroupAlgebra const> _algebra;
    std::vector<gf::Elem>               _coeffs;
  };

  class GroupAlgebra : public std::enable_shared_from_this<GroupAlgebra> {
   public:
    //! `field` must be a prime field.
    static std::shared_ptr<GroupAlgebra const> make(FiniteGroup group,
                                                    gf::Field   field);

    FiniteGroup const& group() const noexcept {
      return _group;
    }
    gf::Field const& field() const noexcept {
      return _field;
    }
    std::size_t dimension() const noexcept {
      return _group.order();
    }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis(std::size_t g) const;
    AlgebraElement element(std::vector<gf::Elem> coeffs) const;
    //! Sum of the elements of a conjugacy class.
    AlgebraElement class_sum(std::vector<std::size_t> const& cls) const;

    //! Matrix of left multiplication by x in the group-element basis.
    Matrix regular_matrix(AlgebraElement const& x) const;

   private:
    GroupAlgebra(FiniteGroup group, gf::Field field)
        : _group(std::move(group)), _field(std::move(field)) {}

    FiniteGroup _group;
    gf::Field   _field;
  };

  //! Free function form of GroupAlgebra::regular_matrix.
  Matrix regular_matrix(AlgebraElement const& x);

  struct WedderburnComponent {
    AlgebraElement idempotent;  // central primitive idempotent e_k
    std::size_t    d;           // dimension of the component's center F_k
    std::size_t    c;           // component is Mat(c, F_k)
    std::size_t    u;           // c * d, dimension of the simple module
    //! A generator z of e_k Z(kG) and its minimal polynomial (degree d);
    //! F_k is realized as F_p[x]/(center_min_poly) with x -> z.
    AlgebraElement center_generator;
    Polynomial     center_min_poly;
    //! F_k itself (the prime field when d = 1); absent when char^d does not
    //! fit the packed field representation.
    std::optional<gf::Field> center_field;
  };

  struct WedderburnData {
    std::shared_ptr<GroupAlgebra const> algebra;
    std::vector<WedderburnComponent>    components;
    std::size_t                         class_count;
  };

  //! Complete set of central primitive idempotents of kG with their
  //! invariants, sorted by (d, c) and then by idempotent coefficients.
  //! Throws ModularCase when char k divides |G| and InvalidInput when the
  //! field is not prime.
  WedderburnData wedderburn(FiniteGroup const& group,
                            gf::Field const&   field,
                            std::uint64_t      seed = 0);

  //! Smallest prime not dividing |G|.
  std::uint64_t auto_characteristic(FiniteGroup const& group);
  //! Smallest prime congruent to 1 modulo the exponent of G; every
  //! component of kG then has d = 1.
  std::uint64_t split_characteristic(FiniteGroup const& group);

  //! Sandwich matrix with entries in kG, stored row-major.
  struct AlgebraMatrix {
    std::size_t                 rows, cols;
    std::vector<AlgebraElement> entries;

    AlgebraElement const& operator()(std::size_t i, std::size_t j) const {
      return entries[i * cols + j];
    }
  };

  //! Left multiplication by e_k g restricted to e_k kG, for every g, in a
  //! fixed basis of e_k kG. Building it once makes rank queries on many
  //! sandwiches cheap.
  class IsotypicAction {
   public:
    IsotypicAction(WedderburnData const& data, std::size_t component);

    std::size_t dimension() const noexcept {
      return _basis.cols();
    }
    //! Action of a group element on e_k kG.
    Matrix const& action(std::size_t g) const {
      return _actions[g];
    }
    //! Action of an arbitrary algebra element.
    Matrix action(AlgebraElement const& x) const;

    //! Prime-field rank of the isotypic block of a sandwich whose entries
    //! are group elements or zero (row-major, P x Q).
    std::size_t block_rank(std::vector<std::optional<std::size_t>> const& mu,
                           std::size_t                                    P,
                           std::size_t Q) const;
    std::size_t block_rank(AlgebraMatrix const& mu) const;

   private:
    gf::Field           _field;
    Matrix              _basis;
    std::vector<Matrix> _actions;
  };

  //! r_k for a sandwich over kG: the F_k-rank of its projection onto
  //! Mat(P c_k x Q c_k, F_k). Computed as (prime-field rank of the isotypic
  //! block) / u_k; non-divisibility raises InternalInvariantViolation.
  std::size_t component_rank(AlgebraMatrix const&  mu,
                             WedderburnData const& data,
                             std::size_t           component);

  //! Prime-field rank of the full (P|G|) x (Q|G|) block matrix whose (i, j)
  //! block is regular_matrix(mu_ij).
  std::size_t regular_block_rank(AlgebraMatrix const& mu);

  //! An explicit isomorphism e_k kG -> Mat(c_k, F_k), obtained from a simple
  //! left ideal U of e_k kG with an F_k-basis.
  class ComponentRealization {
   public:
    ComponentRealization(WedderburnData const& data,
                         std::size_t           component,
                         std::uint64_t         seed = 0);

    gf::Field const& field() const noexcept {
      return _field;
    }
    std::size_t degree() const noexcept {
      return _c;
    }
    //! Prime-field basis of U (|G| x c d), ordered u_1, z u_1, ..., z^{d-1}
    //! u_1, u_2, ...
    Matrix const& module_basis() const noexcept {
      return _basis;
    }
    //! The c x c matrix over F_k by which x acts on U.
    Matrix represent(AlgebraElement const& x) const;
    //! Block matrix (P c) x (Q c) over F_k of a sandwich.
    Matrix represent(AlgebraMatrix const& mu) const;

   private:
    std::shared_ptr<GroupAlgebra const> _algebra;
    gf::Field                           _field;
    std::size_t                         _c, _d;
    Matrix                              _basis;
  };

}  // namespace munnlab

#endif  // MUNNLAB_GROUP_ALGEBRA_HPP_
