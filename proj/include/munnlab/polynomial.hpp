// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Univariate polynomials over a finite field and their factorization into
// monic irreducibles (squarefree, distinct-degree, then equal-degree
// splitting driven by a seeded generator).

#ifndef MUNNLAB_POLYNOMIAL_HPP_
#define MUNNLAB_POLYNOMIAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "munnlab/field.hpp"

namespace munnlab {

  class Polynomial {
   public:
    explicit Polynomial(gf::Field field) : _field(std::move(field)) {}
    Polynomial(gf::Field field, std::vector<gf::Elem> coeffs);

    static Polynomial x(gf::Field const& field);
    static Polynomial constant(gf::Field const& field, gf::Elem c);
    //! Polynomial from integer coefficients, constant term first.
    static Polynomial from_ints(gf::Field const&                 field,
                                std::vector<std::int64_t> const& coeffs);

    gf::Field const& field() const noexcept {
      return _field;
    }
    //! Coefficients, constant term first; empty for the zero polynomial.
    std::vector<gf::Elem> const& coeffs() const noexcept {
      return _coeffs;
    }
    //! -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    gf::Elem coeff(std::size_t i) const noexcept {
      return i < _coeffs.size() ? _coeffs[i] : gf::Elem{0};
    }
    gf::Elem leading() const noexcept {
      return _coeffs.empty() ? gf::Elem{0} : _coeffs.back();
    }
    bool is_monic() const noexcept {
      return !_coeffs.empty() && _coeffs.back() == _field.one();
    }

    Polynomial monic() const;
    Polynomial derivative() const;
    gf::Elem   evaluate(gf::Elem x) const;

    Polynomial operator+(Polynomial const& that) const;
    Polynomial operator-(Polynomial const& that) const;
    Polynomial operator*(Polynomial const& that) const;
    Polynomial scaled(gf::Elem c) const;

    //! Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(Polynomial const& divisor) const;
    Polynomial operator/(Polynomial const& d) const {
      return divmod(d).first;
    }
    Polynomial operator%(Polynomial const& d) const {
      return divmod(d).second;
    }

    bool operator==(Polynomial const& that) const {
      return _field == that._field && _coeffs == that._coeffs;
    }

    std::string to_string() const;

   private:
    void trim();

    gf::Field             _field;
    std::vector<gf::Elem> _coeffs;
  };

  //! Monic gcd (zero if both are zero).
  Polynomial gcd(Polynomial a, Polynomial b);
  //! (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
  struct Bezout {
    Polynomial g, s, t;
  };
  Bezout extended_gcd(Polynomial const& a, Polynomial const& b);

  Polynomial mulmod(Polynomial const& a,
                    Polynomial const& b,
                    Polynomial const& m);
  Polynomial powmod(Polynomial base, std::uint64_t e, Polynomial const& m);

  struct Factor {
    Polynomial factor;
    unsigned   multiplicity;
  };

  //! Factorization into monic irreducible factors with multiplicities, sorted
  //! by (degree, coefficients). The leading coefficient of f is dropped.
  //! Throws InvalidInput on the zero polynomial.
  std::vector<Factor> factor(Polynomial const& f, std::uint64_t seed = 0);

  bool is_irreducible(Polynomial const& f);

  //! Product of factor^multiplicity.
  Polynomial expand(std::vector<Factor> const& factors, gf::Field const& field);

}  // namespace munnlab

#endif  // MUNNLAB_POLYNOMIAL_HPP_
