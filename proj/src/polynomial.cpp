// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "munnlab/error.hpp"

namespace munnlab {

  using gf::Elem;
  using gf::Field;

  Polynomial::Polynomial(Field field, std::vector<Elem> coeffs)
      : _field(std::move(field)), _coeffs(std::move(coeffs)) {
    trim();
  }

  Polynomial Polynomial::x(Field const& field) {
    return Polynomial(field, {field.zero(), field.one()});
  }

  Polynomial Polynomial::constant(Field const& field, Elem c) {
    return Polynomial(field, {c});
  }

  Polynomial Polynomial::from_ints(Field const&                     field,
                                   std::vector<std::int64_t> const& coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) {
      c.push_back(field.from_int(v));
    }
    return Polynomial(field, std::move(c));
  }

  void Polynomial::trim() {
    while (!_coeffs.empty() && _field.is_zero(_coeffs.back())) {
      _coeffs.pop_back();
    }
  }

  Polynomial Polynomial::monic() const {
    if (is_zero()) {
      return *this;
    }
    return scaled(_field.inv(leading()));
  }

  Polynomial Polynomial::scaled(Elem c) const {
    std::vector<Elem> out(_coeffs.size());
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      out[i] = _field.mul(_coeffs[i], c);
    }
    return Polynomial(_field, std::move(out));
  }

  Polynomial Polynomial::derivative() const {
    if (_coeffs.size() <= 1) {
      return Polynomial(_field);
    }
    std::vector<Elem> out(_coeffs.size() - 1);
    for (std::size_t i = 1; i < _coeffs.size(); ++i) {
      out[i - 1] = _field.mul(_coeffs[i], _field.from_int(static_cast<std::int64_t>(
                                             i % _field.characteristic())));
    }
    return Polynomial(_field, std::move(out));
  }

  Elem Polynomial::evaluate(Elem x) const {
    Elem r = _field.zero();
    for (std::size_t i = _coeffs.size(); i-- > 0;) {
      r = _field.add(_field.mul(r, x), _coeffs[i]);
    }
    return r;
  }

  Polynomial Polynomial::operator+(Polynomial const& that) const {
    std::vector<Elem> out(std::max(_coeffs.size(), that._coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = _field.add(coeff(i), that.coeff(i));
    }
    return Polynomial(_field, std::move(out));
  }

  Polynomial Polynomial::operator-(Polynomial const& that) const {
    std::vector<Elem> out(std::max(_coeffs.size(), that._coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = _field.sub(coeff(i), that.coeff(i));
    }
    return Polynomial(_field, std::move(out));
  }

  Polynomial Polynomial::operator*(Polynomial const& that) const {
    if (is_zero() || that.is_zero()) {
      return Polynomial(_field);
    }
    std::vector<Elem> out(_coeffs.size() + that._coeffs.size() - 1,
                          _field.zero());
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      if (_field.is_zero(_coeffs[i])) {
        continue;
      }
      for (std::size_t j = 0; j < that._coeffs.size(); ++j) {
        out[i + j]
            = _field.add(out[i + j], _field.mul(_coeffs[i], that._coeffs[j]));
      }
    }
    return Polynomial(_field, std::move(out));
  }

  std::pair<Polynomial, Polynomial>
  Polynomial::divmod(Polynomial const& divisor) const {
    if (divisor.is_zero()) {
      fail(ErrorKind::InvalidInput, "polynomial division by zero");
    }
    std::vector<Elem> rem = _coeffs;
    int const         dd  = divisor.degree();
    if (degree() < dd) {
      return {Polynomial(_field), *this};
    }
    std::vector<Elem> quot(rem.size() - dd, _field.zero());
    Elem const        lcinv = _field.inv(divisor.leading());
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
      Elem c = _field.mul(rem[k], lcinv);
      if (_field.is_zero(c)) {
        continue;
      }
      quot[k - dd] = c;
      for (int i = 0; i <= dd; ++i) {
        rem[k - dd + i]
            = _field.sub(rem[k - dd + i], _field.mul(c, divisor._coeffs[i]));
      }
    }
    rem.resize(dd);
    return {Polynomial(_field, std::move(quot)),
            Polynomial(_field, std::move(rem))};
  }

  std::string Polynomial::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = _coeffs.size(); i-- > 0;) {
      Elem c = _coeffs[i];
      if (_field.is_zero(c)) {
        continue;
      }
      if (!first) {
        out << " + ";
      }
      first = false;
      bool const unit = c == _field.one();
      if (!unit || i == 0) {
        bool paren = !_field.is_prime_field();
        out << (paren ? "(" : "") << _field.to_string(c) << (paren ? ")" : "");
      }
      if (i > 0) {
        out << "x";
        if (i > 1) {
          out << "^" << i;
        }
      }
    }
    return out.str();
  }

  Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a % b;
      a            = std::move(b);
      b            = std::move(r);
    }
    return a.monic();
  }

  Bezout extended_gcd(Polynomial const& a, Polynomial const& b) {
    Field const& F = a.field();
    Polynomial   r0 = a, r1 = b;
    Polynomial   s0 = Polynomial::constant(F, F.one()), s1(F);
    Polynomial   t0(F), t1 = Polynomial::constant(F, F.one());
    while (!r1.is_zero()) {
      auto [q, r] = r0.divmod(r1);
      r0          = std::move(r1);
      r1          = std::move(r);
      Polynomial s2 = s0 - q * s1;
      Polynomial t2 = t0 - q * t1;
      s0            = std::move(s1);
      s1            = std::move(s2);
      t0            = std::move(t1);
      t1            = std::move(t2);
    }
    if (r0.is_zero()) {
      return {r0, s0, t0};
    }
    Elem lcinv = F.inv(r0.leading());
    return {r0.scaled(lcinv), s0.scaled(lcinv), t0.scaled(lcinv)};
  }

  Polynomial mulmod(Polynomial const& a,
                    Polynomial const& b,
                    Polynomial const& m) {
    return (a * b) % m;
  }

  Polynomial powmod(Polynomial base, std::uint64_t e, Polynomial const& m) {
    Polynomial r = Polynomial::constant(m.field(), m.field().one()) % m;
    base         = base % m;
    while (e > 0) {
      if (e & 1) {
        r = mulmod(r, base, m);
      }
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  namespace {

    Polynomial one_poly(Field const& F) {
      return Polynomial::constant(F, F.one());
    }

    // g with g^p = f, for f' = 0.
    Polynomial pth_root(Polynomial const& f) {
      Field const&  F = f.field();
      std::uint64_t p = F.characteristic();
      std::uint64_t e = F.size() / p;  // a^(q/p) is the p-th root of a
      std::vector<Elem> out(f.degree() / p + 1, F.zero());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = F.pow(f.coeff(i * p), e);
      }
      return Polynomial(F, std::move(out));
    }

    void squarefree(Polynomial const& f, unsigned mult, std::vector<Factor>& out) {
      Field const& F = f.field();
      if (f.degree() < 1) {
        return;
      }
      Polynomial c = gcd(f, f.derivative());
      Polynomial w = f / c;
      unsigned   i = 1;
      while (w.degree() > 0) {
        Polynomial y   = gcd(w, c);
        Polynomial fac = w / y;
        if (fac.degree() > 0) {
          out.push_back({fac.monic(), i * mult});
        }
        w = y;
        c = c / y;
        ++i;
      }
      if (c.degree() > 0) {
        squarefree(pth_root(c.monic()),
                   mult * static_cast<unsigned>(F.characteristic()),
                   out);
      }
    }

    Polynomial random_below(Polynomial const& f, std::mt19937_64& rng) {
      Field const&                                 F = f.field();
      std::uniform_int_distribution<std::uint64_t> pick(0, F.size() - 1);
      std::vector<Elem>                            c(f.degree());
      for (auto& e : c) {
        e = F.element(pick(rng));
      }
      return Polynomial(F, std::move(c));
    }

    void equal_degree(Polynomial const&        f,
                      unsigned                 d,
                      std::mt19937_64&         rng,
                      std::vector<Polynomial>& out) {
      if (f.degree() <= static_cast<int>(d)) {
        out.push_back(f);
        return;
      }
      Field const&        F = f.field();
      std::uint64_t const q = F.size();
      while (true) {
        Polynomial a = random_below(f, rng);
        if (a.degree() < 1) {
          continue;
        }
        Polynomial b(F);
        if (F.characteristic() == 2) {
          // Trace from F_{q^d} to F_2.
          unsigned const steps = F.degree() * d;
          Polynomial     t     = a % f;
          b                    = t;
          for (unsigned i = 1; i < steps; ++i) {
            t = mulmod(t, t, f);
            b = b + t;
          }
        } else {
          // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
          Polynomial t = a % f;
          Polynomial s = t;
          for (unsigned i = 1; i < d; ++i) {
            t = powmod(t, q, f);
            s = mulmod(s, t, f);
          }
          b = powmod(s, (q - 1) / 2, f) - one_poly(F);
        }
        Polynomial g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
          equal_degree(g, d, rng, out);
          equal_degree((f / g).monic(), d, rng, out);
          return;
        }
      }
    }

    bool factor_less(Factor const& a, Factor const& b) {
      if (a.factor.degree() != b.factor.degree()) {
        return a.factor.degree() < b.factor.degree();
      }
      auto const& x = a.factor.coeffs();
      auto const& y = b.factor.coeffs();
      if (x != y) {
        return std::lexicographical_compare(
            x.rbegin(), x.rend(), y.rbegin(), y.rend());
      }
      return a.multiplicity < b.multiplicity;
    }

  }  // namespace

  std::vector<Factor> factor(Polynomial const& f, std::uint64_t seed) {
    if (f.is_zero()) {
      fail(ErrorKind::InvalidInput, "cannot factor the zero polynomial");
    }
    Field const&        F = f.field();
    std::vector<Factor> sqfree;
    squarefree(f.monic(), 1, sqfree);
    std::mt19937_64     rng(seed);
    std::vector<Factor> out;
    for (auto const& [g0, mult] : sqfree) {
      // distinct-degree split
      Polynomial g = g0;
      Polynomial h = Polynomial::x(F) % g;
      Polynomial x = Polynomial::x(F);
      for (unsigned i = 1; g.degree() >= 2 * static_cast<int>(i); ++i) {
        h              = powmod(h, F.size(), g);
        Polynomial dd  = gcd(g, h - x);
        if (dd.degree() > 0) {
          std::vector<Polynomial> parts;
          equal_degree(dd, i, rng, parts);
          for (auto& p : parts) {
            out.push_back({p.monic(), mult});
          }
          g = (g / dd).monic();
          h = h % g;
        }
      }
      if (g.degree() > 0) {
        out.push_back({g.monic(), mult});
      }
    }
    // merge identical factors coming from different squarefree layers
    std::sort(out.begin(), out.end(), factor_less);
    std::vector<Factor> merged;
    for (auto& fac : out) {
      if (!merged.empty() && merged.back().factor == fac.factor) {
        merged.back().multiplicity += fac.multiplicity;
      } else {
        merged.push_back(std::move(fac));
      }
    }
    return merged;
  }

  bool is_irreducible(Polynomial const& f) {
    if (f.degree() < 1) {
      return false;
    }
    auto facs = factor(f);
    return facs.size() == 1 && facs[0].multiplicity == 1;
  }

  Polynomial expand(std::vector<Factor> const& factors, Field const& field) {
    Polynomial r = one_poly(field);
    for (auto const& [g, m] : factors) {
      for (unsigned i = 0; i < m; ++i) {
        r = r * g;
      }
    }
    return r;
  }

}  // namespace munnlab
