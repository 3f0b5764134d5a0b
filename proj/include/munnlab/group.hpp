// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Finite groups stored extensionally as validated Cayley tables.

#ifndef MUNNLAB_GROUP_HPP_
#define MUNNLAB_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace munnlab {

  class FiniteGroup {
   public:
    using element_index = std::size_t;

    static constexpr std::size_t default_max_order = 64;

    //! Validates the table: square, entries in range, rows and columns are
    //! permutations, an identity exists, associativity holds. Failures raise
    //! InvalidGroup with a witness.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                  std::vector<std::string> labels = {},
                                  std::size_t max_order = default_max_order);

    //! cyclic(n), dihedral(n) (order 2n), symmetric(n) for n <= 5, and
    //! direct_product(A, B). The spec string is parsed by `builtin_from_string`.
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup dihedral(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

    std::size_t order() const noexcept {
      return _table.size();
    }
    element_index identity() const noexcept {
      return _identity;
    }
    element_index mul(element_index a, element_index b) const noexcept {
      return _table[a][b];
    }
    element_index inverse(element_index a) const noexcept {
      return _inverse[a];
    }
    std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _table;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(element_index a) const {
      return _labels.at(a);
    }
    std::optional<element_index> find_label(std::string const& label) const;

    std::string const& name() const noexcept {
      return _name;
    }

    //! Order of an element.
    std::size_t element_order(element_index a) const;
    //! Least common multiple of element orders.
    std::size_t exponent() const;
    //! Conjugacy classes, each sorted, ordered by smallest member.
    std::vector<std::vector<element_index>> conjugacy_classes() const;
    bool is_abelian() const;

   private:
    FiniteGroup() = default;

    std::vector<std::vector<std::size_t>> _table;
    std::vector<std::size_t>              _inverse;
    std::vector<std::string>              _labels;
    element_index                         _identity = 0;
    std::string                           _name;
  };

  //! Parses "cyclic(3)", "dihedral(4)", "symmetric(3)",
  //! "direct_product(cyclic(2),cyclic(2))" (whitespace ignored). Throws
  //! InvalidInput on anything else.
  FiniteGroup group_builtin(std::string const& spec);

  //! Built-in group specs of order <= max_order: cyclic(n), dihedral(n) for
  //! n >= 2, symmetric(n) for n >= 3, direct_product(cyclic(a), cyclic(b))
  //! for 2 <= a <= b and direct_product(cyclic(2), dihedral(n)). Some entries
  //! are isomorphic to each other.
  std::vector<std::string> builtin_catalog(std::size_t max_order);

}  // namespace munnlab

#endif  // MUNNLAB_GROUP_HPP_
