// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/field.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "munnlab/error.hpp"

namespace munnlab {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InvalidInput:
        return "InvalidInput";
      case ErrorKind::InvalidGroup:
        return "InvalidGroup";
      case ErrorKind::ModularCase:
        return "ModularCase";
      case ErrorKind::InternalInvariantViolation:
        return "InternalInvariantViolation";
      case ErrorKind::SymmetryViolation:
        return "SymmetryViolation";
      case ErrorKind::RelationViolation:
        return "RelationViolation";
      case ErrorKind::ShapeMismatch:
        return "ShapeMismatch";
      case ErrorKind::NotInModPlus:
        return "NotInModPlus";
      case ErrorKind::BudgetExceeded:
        return "BudgetExceeded";
      case ErrorKind::EmptyUnion:
        return "EmptyUnion";
    }
    return "Unknown";
  }

}  // namespace munnlab

namespace munnlab::gf {

  namespace {

    constexpr std::uint64_t max_characteristic = std::uint64_t(1) << 32;
    constexpr std::uint64_t max_order          = std::uint64_t(1) << 62;
    constexpr std::size_t   scan_budget        = 4096;

    // Dense polynomials over F_p, constant term first, trimmed.
    using PrimePoly = std::vector<std::uint64_t>;

    void trim(PrimePoly& f) {
      while (!f.empty() && f.back() == 0) {
        f.pop_back();
      }
    }

    std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
      std::uint64_t r = 1 % p;
      a %= p;
      while (e > 0) {
        if (e & 1) {
          r = (r * a) % p;
        }
        a = (a * a) % p;
        e >>= 1;
      }
      return r;
    }

    std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
      return pow_mod(a, p - 2, p);
    }

    PrimePoly poly_mod(PrimePoly a, PrimePoly const& m, std::uint64_t p) {
      trim(a);
      std::size_t const dm    = m.size() - 1;
      std::uint64_t     lcinv = inv_mod(m.back(), p);
      while (a.size() > dm) {
        std::uint64_t c     = (a.back() * lcinv) % p;
        std::size_t   shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
          a[shift + i] = (a[shift + i] + p - (c * m[i]) % p) % p;
        }
        trim(a);
      }
      return a;
    }

    PrimePoly poly_mulmod(PrimePoly const& a,
                          PrimePoly const& b,
                          PrimePoly const& m,
                          std::uint64_t    p) {
      if (a.empty() || b.empty()) {
        return {};
      }
      PrimePoly r(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
      }
      return poly_mod(std::move(r), m, p);
    }

    PrimePoly poly_powmod(PrimePoly        base,
                          std::uint64_t    e,
                          PrimePoly const& m,
                          std::uint64_t    p) {
      PrimePoly r{1};
      base = poly_mod(std::move(base), m, p);
      while (e > 0) {
        if (e & 1) {
          r = poly_mulmod(r, base, m, p);
        }
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
      }
      return r;
    }

    PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
      trim(a);
      trim(b);
      while (!b.empty()) {
        PrimePoly r = poly_mod(a, b, p);
        a           = std::move(b);
        b           = std::move(r);
      }
      return a;
    }

    // x^(p^k) mod f by k successive p-th powers.
    PrimePoly frobenius_power(PrimePoly const& f, unsigned k, std::uint64_t p) {
      PrimePoly h{0, 1};
      h = poly_mod(h, f, p);
      for (unsigned i = 0; i < k; ++i) {
        h = poly_powmod(h, p, f, p);
      }
      return h;
    }

    std::vector<unsigned> prime_divisors(unsigned n) {
      std::vector<unsigned> out;
      for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          out.push_back(d);
          while (n % d == 0) {
            n /= d;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }

    PrimePoly sub_x(PrimePoly h, std::uint64_t p) {
      if (h.size() < 2) {
        h.resize(2, 0);
      }
      h[1] = (h[1] + p - 1) % p;
      trim(h);
      return h;
    }

  }  // namespace

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  bool is_irreducible_over_prime(std::uint64_t                     p,
                                 std::vector<std::uint64_t> const& f_in) {
    PrimePoly f = f_in;
    trim(f);
    if (f.size() < 2) {
      return false;
    }
    unsigned const n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) {
      return true;
    }
    if (sub_x(frobenius_power(f, n, p), p) != PrimePoly{}) {
      return false;
    }
    for (unsigned r : prime_divisors(n)) {
      PrimePoly g = poly_gcd(f, sub_x(frobenius_power(f, n / r, p), p), p);
      if (g.size() != 1) {
        return false;
      }
    }
    return true;
  }

  Field Field::make(std::uint64_t characteristic,
                    unsigned      degree,
                    std::uint64_t seed) {
    if (!is_prime(characteristic) || characteristic >= max_characteristic) {
      fail(ErrorKind::InvalidInput,
           "field characteristic " + std::to_string(characteristic)
               + " is not a prime below 2^32");
    }
    if (degree == 0) {
      fail(ErrorKind::InvalidInput, "field degree must be positive");
    }
    std::uint64_t const p = characteristic;
    std::uint64_t       q = 1;
    for (unsigned i = 0; i < degree; ++i) {
      if (q > max_order / p) {
        fail(ErrorKind::InvalidInput, "field order does not fit in 62 bits");
      }
      q *= p;
    }
    if (degree == 1) {
      return with_modulus(p, {0, 1});
    }
    // Tail coefficients c_0..c_{n-1} as a base-p counter.
    std::vector<std::uint64_t> f(degree + 1, 0);
    f[degree] = 1;
    for (std::uint64_t counter = 0; counter < std::min<std::uint64_t>(q, scan_budget);
         ++counter) {
      std::uint64_t c = counter;
      for (unsigned i = 0; i < degree; ++i) {
        f[i] = c % p;
        c /= p;
      }
      if (f[0] != 0 && is_irreducible_over_prime(p, f)) {
        return with_modulus(p, f);
      }
    }
    std::mt19937_64                              rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    while (true) {
      for (unsigned i = 0; i < degree; ++i) {
        f[i] = coeff(rng);
      }
      if (f[0] != 0 && is_irreducible_over_prime(p, f)) {
        return with_modulus(p, f);
      }
    }
  }

  Field Field::with_modulus(std::uint64_t              characteristic,
                            std::vector<std::uint64_t> modulus) {
    if (!is_prime(characteristic) || characteristic >= max_characteristic) {
      fail(ErrorKind::InvalidInput,
           "field characteristic " + std::to_string(characteristic)
               + " is not a prime below 2^32");
    }
    for (auto& c : modulus) {
      c %= characteristic;
    }
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) {
      fail(ErrorKind::InvalidInput, "modulus must be monic of positive degree");
    }
    if (!is_irreducible_over_prime(characteristic, modulus)) {
      fail(ErrorKind::InvalidInput, "modulus is reducible");
    }
    auto impl     = std::make_shared<Impl>();
    impl->p       = characteristic;
    impl->n       = static_cast<unsigned>(modulus.size() - 1);
    impl->modulus = std::move(modulus);
    impl->q       = 1;
    for (unsigned i = 0; i < impl->n; ++i) {
      if (impl->q > max_order / impl->p) {
        fail(ErrorKind::InvalidInput, "field order does not fit in 62 bits");
      }
      impl->powers.push_back(impl->q);
      impl->q *= impl->p;
    }
    return Field(std::move(impl));
  }

  Elem Field::generator() const noexcept {
    if (_impl->n == 1) {
      // x mod x
      return Elem{0};
    }
    return Elem{_impl->p};
  }

  Elem Field::from_int(std::int64_t value) const noexcept {
    auto const    p = static_cast<std::int64_t>(_impl->p);
    std::int64_t  r = value % p;
    if (r < 0) {
      r += p;
    }
    return Elem{static_cast<std::uint64_t>(r)};
  }

  Elem Field::from_coeffs(std::span<std::uint64_t const> coeffs) const {
    // Reduce modulo the defining polynomial first.
    PrimePoly f(coeffs.begin(), coeffs.end());
    for (auto& c : f) {
      c %= _impl->p;
    }
    f = poly_mod(std::move(f), _impl->modulus, _impl->p);
    std::uint64_t rep = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      rep += f[i] * _impl->powers[i];
    }
    return Elem{rep};
  }

  std::vector<std::uint64_t> Field::coeffs(Elem a) const {
    std::vector<std::uint64_t> out(_impl->n, 0);
    std::uint64_t              r = a.rep;
    for (unsigned i = 0; i < _impl->n; ++i) {
      out[i] = r % _impl->p;
      r /= _impl->p;
    }
    return out;
  }

  Elem Field::element(std::uint64_t index) const {
    if (index >= _impl->q) {
      fail(ErrorKind::InvalidInput, "element index out of range");
    }
    return Elem{index};
  }

  Elem Field::add_ext(Elem a, Elem b) const noexcept {
    std::uint64_t const p = _impl->p;
    std::uint64_t       x = a.rep, y = b.rep, rep = 0;
    for (unsigned i = 0; i < _impl->n; ++i) {
      std::uint64_t s = x % p + y % p;
      rep += (s >= p ? s - p : s) * _impl->powers[i];
      x /= p;
      y /= p;
    }
    return Elem{rep};
  }

  Elem Field::neg_ext(Elem a) const noexcept {
    std::uint64_t const p = _impl->p;
    std::uint64_t       x = a.rep, rep = 0;
    for (unsigned i = 0; i < _impl->n; ++i) {
      std::uint64_t c = x % p;
      rep += (c == 0 ? 0 : p - c) * _impl->powers[i];
      x /= p;
    }
    return Elem{rep};
  }

  Elem Field::mul_ext(Elem a, Elem b) const noexcept {
    std::uint64_t const p = _impl->p;
    unsigned const      n = _impl->n;
    // q < 2^62 bounds the degree by 62.
    std::array<std::uint64_t, 62>  x{}, y{};
    std::array<std::uint64_t, 124> prod{};
    std::uint64_t              ra = a.rep, rb = b.rep;
    for (unsigned i = 0; i < n; ++i) {
      x[i] = ra % p;
      y[i] = rb % p;
      ra /= p;
      rb /= p;
    }
    for (unsigned i = 0; i < n; ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (unsigned j = 0; j < n; ++j) {
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
      }
    }
    auto const& m = _impl->modulus;
    for (unsigned k = 2 * n - 2; k >= n; --k) {
      std::uint64_t c = prod[k];
      if (c != 0) {
        for (unsigned i = 0; i < n; ++i) {
          prod[k - n + i] = (prod[k - n + i] + p - (c * m[i]) % p) % p;
        }
        prod[k] = 0;
      }
    }
    std::uint64_t rep = 0;
    for (unsigned i = 0; i < n; ++i) {
      rep += prod[i] * _impl->powers[i];
    }
    return Elem{rep};
  }

  Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e > 0) {
      if (e & 1) {
        r = mul(r, a);
      }
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem Field::inv(Elem a) const {
    if (a.rep == 0) {
      fail(ErrorKind::InvalidInput, "division by zero in finite field");
    }
    if (_impl->n == 1) {
      return Elem{inv_mod(a.rep, _impl->p)};
    }
    return pow(a, _impl->q - 2);
  }

  std::string Field::to_string(Elem a) const {
    if (_impl->n == 1) {
      return std::to_string(a.rep);
    }
    auto               c = coeffs(a);
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) {
        continue;
      }
      if (!first) {
        out << "+";
      }
      first = false;
      if (i == 0 || c[i] != 1) {
        out << c[i];
      }
      if (i >= 1) {
        out << "w";
        if (i > 1) {
          out << "^" << i;
        }
      }
    }
    if (first) {
      out << "0";
    }
    return out.str();
  }

}  // namespace munnlab::gf
