// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Rees matrix semigroups M(G, P, Q, mu), their Munn algebra presentations
// over kG, and the triple set {(d_k, m_k, n_k)} that controls the
// representation type.

#ifndef MUNNLAB_MUNN_HPP_
#define MUNNLAB_MUNN_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "munnlab/field.hpp"
#include "munnlab/group.hpp"
#include "munnlab/group_algebra.hpp"
#include "munnlab/matrix.hpp"

namespace munnlab {

  class ReesSemigroup {
   public:
    //! An entry of the sandwich matrix: a group element, or 0 of G^0.
    using entry_type = std::optional<std::size_t>;

    //! Validates dimensions and entries. An identically zero sandwich raises
    //! InvalidInput (the semigroup would have zero multiplication).
    ReesSemigroup(FiniteGroup group,
                  std::size_t P,
                  std::size_t Q,
                  std::vector<entry_type> sandwich);

    FiniteGroup const& group() const noexcept {
      return _group;
    }
    std::size_t P() const noexcept {
      return _P;
    }
    std::size_t Q() const noexcept {
      return _Q;
    }
    //! Entry mu[i][j] with 0 <= i < P, 0 <= j < Q.
    entry_type entry(std::size_t i, std::size_t j) const {
      return _sandwich.at(i * _Q + j);
    }
    std::vector<entry_type> const& sandwich() const noexcept {
      return _sandwich;
    }

    //! Number of elements, zero included: P Q |G| + 1.
    std::size_t size() const noexcept {
      return _P * _Q * _group.order() + 1;
    }

    //! Every row and every column of the sandwich has a nonzero entry.
    bool is_zero_simple() const;

   private:
    FiniteGroup             _group;
    std::size_t             _P, _Q;
    std::vector<entry_type> _sandwich;
  };

  //! Same as the ReesSemigroup constructor.
  ReesSemigroup rees_make(FiniteGroup                                 group,
                          std::size_t                                 P,
                          std::size_t                                 Q,
                          std::vector<ReesSemigroup::entry_type> sandwich);

  //! A Q x P matrix over G^0 with at most one nonzero entry g at (row, col).
  struct ReesElement {
    bool        zero = true;
    std::size_t row  = 0;  // 0 <= row < Q
    std::size_t col  = 0;  // 0 <= col < P
    std::size_t g    = 0;

    static ReesElement make(std::size_t row, std::size_t col, std::size_t g) {
      return ReesElement{false, row, col, g};
    }
    bool operator==(ReesElement const&) const = default;
  };

  //! a . b = a mu b.
  ReesElement rees_mul(ReesSemigroup const& S,
                       ReesElement const&   a,
                       ReesElement const&   b);

  //! All elements, zero first, then (row, col, g) in lexicographic order.
  std::vector<ReesElement> rees_elements(ReesSemigroup const& S);

  struct Triple {
    std::size_t d, m, n;

    auto operator<=>(Triple const&) const = default;
    std::string to_string() const;
  };

  //! Multiset of triples with (m, n) != (0, 0) and d >= 1. Equality is
  //! multiset equality; provenance records the Wedderburn component each
  //! triple came from, when known.
  class TripleSet {
   public:
    TripleSet() = default;
    //! Raw construction for Munn algebras given only by component data;
    //! validates d >= 1 and (m, n) != (0, 0).
    explicit TripleSet(std::vector<Triple>                     triples,
                       std::vector<std::optional<std::size_t>> provenance = {});

    std::vector<Triple> const& triples() const noexcept {
      return _triples;
    }
    std::vector<std::optional<std::size_t>> const& provenance() const noexcept {
      return _provenance;
    }
    std::size_t size() const noexcept {
      return _triples.size();
    }
    bool empty() const noexcept {
      return _triples.empty();
    }
    Triple const& operator[](std::size_t i) const {
      return _triples.at(i);
    }

    void push_back(Triple t, std::optional<std::size_t> source = std::nullopt);
    //! Multiset union.
    void append(TripleSet const& that);

    //! Triples in sorted order (the canonical multiset representative).
    std::vector<Triple> sorted() const;

    bool operator==(TripleSet const& that) const {
      return sorted() == that.sorted();
    }

    //! "{(1,1,1),(2,1,0)}" in sorted order.
    std::string to_string() const;

   private:
    std::vector<Triple>                     _triples;
    std::vector<std::optional<std::size_t>> _provenance;
  };

  //! Per-component data behind a TripleSet: d_k, c_k, u_k, r_k and
  //! m_k = P c_k - r_k, n_k = Q c_k - r_k.
  struct ComponentInvariants {
    std::size_t d, c, u, r, m, n;
  };

  //! The sandwich as a P x Q matrix over kG (0 maps to the zero element).
  AlgebraMatrix sandwich_matrix(ReesSemigroup const&                       S,
                                std::shared_ptr<GroupAlgebra const> const& A);

  //! Computes component ranks for many sandwiches over one group and field,
  //! reusing the isotypic actions.
  class TripleExtractor {
   public:
    explicit TripleExtractor(WedderburnData data);

    WedderburnData const& wedderburn_data() const noexcept {
      return _data;
    }
    std::vector<ComponentInvariants> invariants(ReesSemigroup const& S) const;
    TripleSet                        triples(ReesSemigroup const& S) const;

   private:
    WedderburnData              _data;
    std::vector<IsotypicAction> _actions;
  };

  std::vector<ComponentInvariants> component_invariants(ReesSemigroup const&  S,
                                                        WedderburnData const& W);
  TripleSet triples(ReesSemigroup const& S, WedderburnData const& W);
  //! Decomposes kG first; propagates ModularCase.
  TripleSet triples(ReesSemigroup const& S,
                    gf::Field const&     field,
                    std::uint64_t        seed = 0);

  //! Rank normal form of mu_k over F_k: row_transform * mu_k * col_transform
  //! is the block identity with r ones.
  struct NormalForm {
    std::size_t component;
    std::size_t r;
    Matrix      mu_k;
    Matrix      row_transform;
    Matrix      col_transform;

    //! theta with mu_k theta mu_k = mu_k, built from the transforms.
    Matrix theta() const;
  };

  NormalForm normal_form(Matrix const& mu_k, std::size_t component = 0);
  NormalForm normal_form(ReesSemigroup const&  S,
                         WedderburnData const& W,
                         std::size_t           component,
                         std::uint64_t         seed = 0);

  //! The Munn algebra has a unit iff no component contributes a triple.
  bool has_unit(TripleSet const& T);

  struct UnionPart {
    ReesSemigroup semigroup;
    TripleSet     triples;
    std::size_t   group_order;
    int           sign;  // sign of m_i - n_i, equal to sign(P - Q)
  };

  struct UnionData {
    std::vector<UnionPart> parts;
    std::size_t            T_gt = 0;
    std::size_t            T_lt = 0;
    TripleSet              T0;  // parts with m_i != n_i
    TripleSet              T1;  // parts with m_i == n_i
  };

  //! Data of a union of pairwise annihilating Rees matrix semigroups with a
  //! common zero. Raises EmptyUnion for no parts and propagates
  //! ModularCase.
  UnionData union_data(std::vector<std::pair<ReesSemigroup, gf::Field>> const& parts,
                       std::uint64_t seed = 0);
  //! Same, with the triple set of every part already extracted.
  UnionData union_data(std::vector<std::pair<ReesSemigroup, TripleSet>> parts);

}  // namespace munnlab

#endif  // MUNNLAB_MUNN_HPP_
