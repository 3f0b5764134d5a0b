// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Finite fields F_q, q = p^n. Elements are packed as base-p integers
// c_0 + c_1 p + ... + c_{n-1} p^{n-1} of their coefficient vectors modulo
// the defining polynomial, so an element is a single machine word and q must
// fit in 63 bits.

#ifndef MUNNLAB_FIELD_HPP_
#define MUNNLAB_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace munnlab::gf {

  //! An element of some Field. Meaningless without its owning Field.
  struct Elem {
    std::uint64_t rep = 0;

    friend constexpr bool operator==(Elem, Elem) noexcept = default;
    friend constexpr auto operator<=>(Elem, Elem) noexcept  = default;
  };

  bool is_prime(std::uint64_t n) noexcept;

  class Field {
   public:
    //! The field of order char^degree. Degree 1 gives the prime field with
    //! modulus x. For degree > 1 the modulus is the first irreducible monic
    //! polynomial in the scan order (tail coefficients read as a base-char
    //! number, constant term least significant); a seeded random search
    //! takes over after a fixed number of candidates.
    static Field make(std::uint64_t characteristic,
                      unsigned      degree,
                      std::uint64_t seed = 0);

    static Field prime(std::uint64_t characteristic) {
      return make(characteristic, 1);
    }

    //! Field F_p[x]/(modulus). `modulus` lists coefficients from the constant
    //! term up and must be monic and irreducible.
    static Field with_modulus(std::uint64_t                characteristic,
                              std::vector<std::uint64_t> modulus);

    Field() = delete;

    std::uint64_t characteristic() const noexcept {
      return _impl->p;
    }
    unsigned degree() const noexcept {
      return _impl->n;
    }
    std::uint64_t size() const noexcept {
      return _impl->q;
    }
    bool is_prime_field() const noexcept {
      return _impl->n == 1;
    }
    std::vector<std::uint64_t> const& modulus() const noexcept {
      return _impl->modulus;
    }

    Elem zero() const noexcept {
      return Elem{0};
    }
    Elem one() const noexcept {
      return Elem{1};
    }
    //! The class of x modulo the defining polynomial (0 for prime fields).
    Elem generator() const noexcept;
    Elem from_int(std::int64_t value) const noexcept;
    Elem from_coeffs(std::span<std::uint64_t const> coeffs) const;
    std::vector<std::uint64_t> coeffs(Elem a) const;
    //! The element whose packed representation is `index` (0 <= index < q).
    Elem element(std::uint64_t index) const;

    bool is_zero(Elem a) const noexcept {
      return a.rep == 0;
    }

    Elem add(Elem a, Elem b) const noexcept {
      if (_impl->n == 1) {
        std::uint64_t r = a.rep + b.rep;
        return Elem{r >= _impl->p ? r - _impl->p : r};
      }
      return add_ext(a, b);
    }

    Elem neg(Elem a) const noexcept {
      if (_impl->n == 1) {
        return Elem{a.rep == 0 ? 0 : _impl->p - a.rep};
      }
      return neg_ext(a);
    }

    Elem sub(Elem a, Elem b) const noexcept {
      return add(a, neg(b));
    }

    Elem mul(Elem a, Elem b) const noexcept {
      if (_impl->n == 1) {
        return Elem{(a.rep * b.rep) % _impl->p};
      }
      return mul_ext(a, b);
    }

    Elem pow(Elem a, std::uint64_t e) const noexcept;
    //! Multiplicative inverse; throws InvalidInput on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const {
      return mul(a, inv(b));
    }

    std::string to_string(Elem a) const;

    friend bool operator==(Field const& x, Field const& y) noexcept {
      return x._impl == y._impl
             || (x._impl->p == y._impl->p
                 && x._impl->modulus == y._impl->modulus);
    }

   private:
    struct Impl {
      std::uint64_t              p;
      unsigned                   n;
      std::uint64_t              q;
      std::vector<std::uint64_t> modulus;  // monic, length n + 1
      std::vector<std::uint64_t> powers;   // p^i, i < n
    };

    explicit Field(std::shared_ptr<Impl const> impl) : _impl(std::move(impl)) {}

    Elem add_ext(Elem a, Elem b) const noexcept;
    Elem neg_ext(Elem a) const noexcept;
    Elem mul_ext(Elem a, Elem b) const noexcept;

    std::shared_ptr<Impl const> _impl;
  };

  //! Rabin's irreducibility test for a monic polynomial over F_p given by its
  //! coefficients (constant term first).
  bool is_irreducible_over_prime(std::uint64_t                     p,
                                 std::vector<std::uint64_t> const& f);

}  // namespace munnlab::gf

template <>
struct std::hash<munnlab::gf::Elem> {
  std::size_t operator()(munnlab::gf::Elem e) const noexcept {
    return std::hash<std::uint64_t>{}(e.rep);
  }
};

#endif  // MUNNLAB_FIELD_HPP_
