// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/group_algebra.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "munnlab/error.hpp"

namespace munnlab {

  using gf::Elem;
  using gf::Field;

  namespace {
    void check_same_algebra(AlgebraElement const& a, AlgebraElement const& b) {
      if (&a.algebra() != &b.algebra()) {
        fail(ErrorKind::ShapeMismatch,
             "algebra elements belong to different group algebras");
      }
    }

    // f(z) in the algebra, with z^0 read as `unit`.
    AlgebraElement evaluate_at(Polynomial const&     f,
                               AlgebraElement const& z,
                               AlgebraElement const& unit) {
      AlgebraElement acc = unit.algebra().zero();
      for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * z + unit.scaled(*it);
      }
      return acc;
    }

    // Dimension of e Z(kG), spanned by the projected class sums.
    std::size_t center_dimension(AlgebraElement const&              e,
                                 std::vector<AlgebraElement> const& sums) {
      Matrix m(e.algebra().field(), sums.size(), e.algebra().dimension());
      for (std::size_t i = 0; i < sums.size(); ++i) {
        auto v = (e * sums[i]).coeffs();
        for (std::size_t j = 0; j < v.size(); ++j) {
          m(i, j) = v[j];
        }
      }
      return rank(m);
    }

    Polynomial element_min_poly(AlgebraElement const& z,
                                AlgebraElement const& unit,
                                std::size_t           bound) {
      auto const& A    = z.algebra();
      auto        step = [&](std::vector<Elem> const& v) {
        return (A.element(v) * z).coeffs();
      };
      return sequence_min_poly(A.field(), unit.coeffs(), step, bound);
    }

    // Row index of the leading entry of each column of a basis returned by
    // column_space; coordinates of a vector in that basis are its entries
    // at these rows.
    std::vector<std::size_t> leading_rows(Matrix const& basis) {
      std::vector<std::size_t> rows;
      for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::size_t i = 0;
        while (basis(i, j).rep == 0) {
          ++i;
        }
        rows.push_back(i);
      }
      return rows;
    }

    bool fits_packed(std::uint64_t p, std::size_t d) {
      long double size = 1;
      for (std::size_t i = 0; i < d; ++i) {
        size *= static_cast<long double>(p);
      }
      return size < 4611686018427387904.0L;  // 2^62
    }

    std::size_t exact_sqrt(std::size_t n) {
      std::size_t r = 0;
      while ((r + 1) * (r + 1) <= n) {
        ++r;
      }
      return r * r == n ? r : 0;
    }
    Field center_field_of(WedderburnData const& data, std::size_t k) {
      auto const& F = data.components.at(k).center_field;
      if (!F) {
        fail(ErrorKind::InvalidInput,
             "the center of component " + std::to_string(k)
                 + " is too large to realize explicitly");
      }
      return *F;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement::AlgebraElement(std::shared_ptr<GroupAlgebra const> algebra,
                                 std::vector<Elem>                   coeffs)
      : _algebra(std::move(algebra)), _coeffs(std::move(coeffs)) {
    if (_coeffs.size() != _algebra->dimension()) {
      fail(ErrorKind::ShapeMismatch,
           "coefficient vector has length " + std::to_string(_coeffs.size())
               + ", expected " + std::to_string(_algebra->dimension()));
    }
  }

  bool AlgebraElement::is_zero() const noexcept {
    return std::all_of(
        _coeffs.begin(), _coeffs.end(), [](Elem e) { return e.rep == 0; });
  }

  AlgebraElement AlgebraElement::operator+(AlgebraElement const& that) const {
    check_same_algebra(*this, that);
    Field const& F = _algebra->field();
    auto         c = _coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = F.add(c[i], that._coeffs[i]);
    }
    return AlgebraElement(_algebra, std::move(c));
  }

  AlgebraElement AlgebraElement::operator-(AlgebraElement const& that) const {
    check_same_algebra(*this, that);
    Field const& F = _algebra->field();
    auto         c = _coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = F.sub(c[i], that._coeffs[i]);
    }
    return AlgebraElement(_algebra, std::move(c));
  }

  AlgebraElement AlgebraElement::operator*(AlgebraElement const& that) const {
    check_same_algebra(*this, that);
    Field const&       F = _algebra->field();
    FiniteGroup const& G = _algebra->group();
    std::size_t const  n = G.order();
    std::vector<Elem>  c(n, F.zero());
    for (std::size_t a = 0; a < n; ++a) {
      if (_coeffs[a].rep == 0) {
        continue;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (that._coeffs[b].rep == 0) {
          continue;
        }
        std::size_t ab = G.mul(a, b);
        c[ab]          = F.add(c[ab], F.mul(_coeffs[a], that._coeffs[b]));
      }
    }
    return AlgebraElement(_algebra, std::move(c));
  }

  AlgebraElement AlgebraElement::scaled(Elem s) const {
    Field const& F = _algebra->field();
    auto         c = _coeffs;
    for (auto& x : c) {
      x = F.mul(x, s);
    }
    return AlgebraElement(_algebra, std::move(c));
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupAlgebra
  ////////////////////////////////////////////////////////////////////////

  std::shared_ptr<GroupAlgebra const> GroupAlgebra::make(FiniteGroup group,
                                                         Field       field) {
    if (!field.is_prime_field()) {
      fail(ErrorKind::InvalidInput,
           "group algebras are built over a prime field");
    }
    return std::shared_ptr<GroupAlgebra const>(
        new GroupAlgebra(std::move(group), std::move(field)));
  }

  AlgebraElement GroupAlgebra::zero() const {
    return AlgebraElement(shared_from_this(),
                          std::vector<Elem>(dimension(), _field.zero()));
  }

  AlgebraElement GroupAlgebra::one() const {
    return basis(_group.identity());
  }

  AlgebraElement GroupAlgebra::basis(std::size_t g) const {
    std::vector<Elem> c(dimension(), _field.zero());
    c.at(g) = _field.one();
    return AlgebraElement(shared_from_this(), std::move(c));
  }

  AlgebraElement GroupAlgebra::element(std::vector<Elem> coeffs) const {
    return AlgebraElement(shared_from_this(), std::move(coeffs));
  }

  AlgebraElement
  GroupAlgebra::class_sum(std::vector<std::size_t> const& cls) const {
    std::vector<Elem> c(dimension(), _field.zero());
    for (auto g : cls) {
      c.at(g) = _field.add(c[g], _field.one());
    }
    return AlgebraElement(shared_from_this(), std::move(c));
  }

  Matrix GroupAlgebra::regular_matrix(AlgebraElement const& x) const {
    std::size_t const n = dimension();
    Matrix            m(_field, n, n);
    for (std::size_t g = 0; g < n; ++g) {
      Elem c = x.coeff(g);
      if (c.rep == 0) {
        continue;
      }
      for (std::size_t h = 0; h < n; ++h) {
        std::size_t gh = _group.mul(g, h);
        m(gh, h)       = _field.add(m(gh, h), c);
      }
    }
    return m;
  }

  Matrix regular_matrix(AlgebraElement const& x) {
    return x.algebra().regular_matrix(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // wedderburn
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t auto_characteristic(FiniteGroup const& group) {
    std::uint64_t p = 2;
    while (!gf::is_prime(p) || group.order() % p == 0) {
      ++p;
    }
    return p;
  }

  std::uint64_t split_characteristic(FiniteGroup const& group) {
    std::uint64_t p = 2;
    while (!gf::is_prime(p) || (p - 1) % group.exponent() != 0) {
      ++p;
    }
    return p;
  }

  WedderburnData wedderburn(FiniteGroup const& group,
                            Field const&       field,
                            std::uint64_t      seed) {
    if (!field.is_prime_field()) {
      fail(ErrorKind::InvalidInput,
           "the ground field of the group algebra must be a prime field");
    }
    std::uint64_t const p = field.characteristic();
    if (group.order() % p == 0) {
      fail(ErrorKind::ModularCase,
           "char " + std::to_string(p) + " divides #(G) = "
               + std::to_string(group.order())
               + "; the group algebra is not semisimple");
    }
    auto        algebra = GroupAlgebra::make(group, field);
    auto        classes = group.conjugacy_classes();

    std::vector<AlgebraElement> sums;
    for (auto const& cls : classes) {
      sums.push_back(algebra->class_sum(cls));
    }

    struct Primitive {
      AlgebraElement e, z;
      Polynomial     mu;
      std::size_t    d;
    };
    std::vector<Primitive>      primitive;
    std::vector<AlgebraElement> pending{algebra->one()};
    std::mt19937_64             rng(seed);

    while (!pending.empty()) {
      AlgebraElement e = pending.back();
      pending.pop_back();
      std::size_t const dimZ = center_dimension(e, sums);
      MUNNLAB_ASSERT(dimZ >= 1, "zero idempotent in the splitting queue");
      if (dimZ == 1) {
        primitive.push_back(
            {e, e, Polynomial::from_ints(field, {-1, 1}), std::size_t(1)});
        continue;
      }
      bool        done     = false;
      std::size_t attempts = 0;
      while (!done) {
        MUNNLAB_ASSERT(++attempts < 10000,
                       "no splitting element found for a central idempotent");
        // class sums first, then seeded random central elements
        AlgebraElement z = algebra->zero();
        if (attempts <= sums.size()) {
          z = e * sums[attempts - 1];
        } else {
          std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
          for (auto const& s : sums) {
            z = z + s.scaled(Elem{coin(rng)});
          }
          z = e * z;
        }
        Polynomial mu = element_min_poly(z, e, dimZ);
        if (static_cast<std::size_t>(mu.degree()) == dimZ
            && is_irreducible(mu)) {
          primitive.push_back({e, z, mu, dimZ});
          done = true;
          continue;
        }
        auto factors = factor(mu, seed);
        if (factors.size() < 2) {
          continue;
        }
        for (auto const& f : factors) {
          MUNNLAB_ASSERT(f.multiplicity == 1,
                         "central element with a repeated eigenvalue");
          Polynomial g   = mu / f.factor;
          Bezout     bez = extended_gcd(g % f.factor, f.factor);
          Polynomial E   = (g * bez.s) % mu;
          pending.push_back(evaluate_at(E, z, e));
        }
        done = true;
      }
    }

    WedderburnData data{algebra, {}, classes.size()};
    for (auto& prim : primitive) {
      std::size_t dimR = rank(algebra->regular_matrix(prim.e));
      MUNNLAB_ASSERT(dimR % prim.d == 0,
                     "component dimension not divisible by its center");
      std::size_t c = exact_sqrt(dimR / prim.d);
      MUNNLAB_ASSERT(c != 0, "component dimension is not d * c^2");
      std::optional<Field> Fk = field;
      if (prim.d > 1) {
        Fk.reset();
      }
      if (prim.d > 1 && fits_packed(p, prim.d)) {
        std::vector<std::uint64_t> mod;
        for (auto x : prim.mu.coeffs()) {
          mod.push_back(x.rep);
        }
        Fk = Field::with_modulus(p, mod);
      }
      data.components.push_back(WedderburnComponent{
          prim.e, prim.d, c, c * prim.d, prim.z, prim.mu, Fk});
    }
    std::sort(data.components.begin(),
              data.components.end(),
              [](WedderburnComponent const& a, WedderburnComponent const& b) {
                if (a.d != b.d) {
                  return a.d < b.d;
                }
                if (a.c != b.c) {
                  return a.c < b.c;
                }
                return std::lexicographical_compare(
                    a.idempotent.coeffs().begin(),
                    a.idempotent.coeffs().end(),
                    b.idempotent.coeffs().begin(),
                    b.idempotent.coeffs().end());
              });
    return data;
  }

  ////////////////////////////////////////////////////////////////////////
  // IsotypicAction and ranks
  ////////////////////////////////////////////////////////////////////////

  IsotypicAction::IsotypicAction(WedderburnData const& data,
                                 std::size_t           component)
      : _field(data.algebra->field()),
        _basis(column_space(data.algebra->regular_matrix(
            data.components.at(component).idempotent))) {
    FiniteGroup const& G    = data.algebra->group();
    std::size_t const  D    = _basis.cols();
    auto const         rows = leading_rows(_basis);
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::size_t const ginv = G.inverse(g);
      Matrix            a(_field, D, D);
      for (std::size_t i = 0; i < D; ++i) {
        std::size_t const src = G.mul(ginv, rows[i]);
        for (std::size_t j = 0; j < D; ++j) {
          a(i, j) = _basis(src, j);
        }
      }
      _actions.push_back(std::move(a));
    }
  }

  Matrix IsotypicAction::action(AlgebraElement const& x) const {
    std::size_t const D = dimension();
    Matrix            a(_field, D, D);
    for (std::size_t g = 0; g < _actions.size(); ++g) {
      if (x.coeff(g).rep != 0) {
        a = a + _actions[g].scaled(x.coeff(g));
      }
    }
    return a;
  }

  std::size_t IsotypicAction::block_rank(
      std::vector<std::optional<std::size_t>> const& mu,
      std::size_t                                    P,
      std::size_t                                    Q) const {
    std::size_t const D = dimension();
    Matrix            big(_field, P * D, Q * D);
    for (std::size_t i = 0; i < P; ++i) {
      for (std::size_t j = 0; j < Q; ++j) {
        if (auto const& g = mu.at(i * Q + j)) {
          big.paste(_actions.at(*g), i * D, j * D);
        }
      }
    }
    return rank(big);
  }

  std::size_t IsotypicAction::block_rank(AlgebraMatrix const& mu) const {
    std::size_t const D = dimension();
    Matrix            big(_field, mu.rows * D, mu.cols * D);
    for (std::size_t i = 0; i < mu.rows; ++i) {
      for (std::size_t j = 0; j < mu.cols; ++j) {
        big.paste(action(mu(i, j)), i * D, j * D);
      }
    }
    return rank(big);
  }

  std::size_t component_rank(AlgebraMatrix const&  mu,
                             WedderburnData const& data,
                             std::size_t           component) {
    IsotypicAction    act(data, component);
    std::size_t const u     = data.components.at(component).u;
    std::size_t const total = act.block_rank(mu);
    MUNNLAB_ASSERT(total % u == 0,
                   "isotypic rank " + std::to_string(total)
                       + " is not a multiple of u = " + std::to_string(u));
    return total / u;
  }

  std::size_t regular_block_rank(AlgebraMatrix const& mu) {
    if (mu.entries.empty()) {
      return 0;
    }
    GroupAlgebra const& A = mu.entries.front().algebra();
    std::size_t const   n = A.dimension();
    Matrix              big(A.field(), mu.rows * n, mu.cols * n);
    for (std::size_t i = 0; i < mu.rows; ++i) {
      for (std::size_t j = 0; j < mu.cols; ++j) {
        big.paste(A.regular_matrix(mu(i, j)), i * n, j * n);
      }
    }
    return rank(big);
  }

  ////////////////////////////////////////////////////////////////////////
  // ComponentRealization
  ////////////////////////////////////////////////////////////////////////

  ComponentRealization::ComponentRealization(WedderburnData const& data,
                                             std::size_t           component,
                                             std::uint64_t         seed)
      : _algebra(data.algebra),
        _field(center_field_of(data, component)),
        _c(data.components.at(component).c),
        _d(data.components.at(component).d),
        _basis(data.algebra->field(), 0, 0) {
    auto const&        comp = data.components[component];
    GroupAlgebra const& A   = *_algebra;
    Field const&        F   = A.field();
    std::size_t const   n   = A.dimension();
    std::size_t const   u   = comp.u;

    // Spin random vectors inside e_k kG until a left ideal of dimension u
    // remains; that ideal is simple.
    Matrix          M = column_space(A.regular_matrix(comp.idempotent));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coin(
        0, F.characteristic() - 1);
    auto random_combination = [&](Matrix const& cols) {
      Matrix v(F, cols.cols(), 1);
      for (std::size_t i = 0; i < cols.cols(); ++i) {
        v(i, 0) = Elem{coin(rng)};
      }
      return cols * v;
    };
    auto spin = [&](Matrix const& w) {
      FiniteGroup const& G = A.group();
      Matrix             span(F, n, n);
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
          std::size_t gh = G.mul(g, h);
          span(gh, g)    = F.add(span(gh, g), w(h, 0));
        }
      }
      return column_space(span);
    };
    std::size_t attempts = 0;
    while (M.cols() > u) {
      MUNNLAB_ASSERT(++attempts < 1000, "failed to isolate a simple module");
      std::vector<Elem> coeffs(n);
      for (auto& x : coeffs) {
        x = Elem{coin(rng)};
      }
      AlgebraElement x  = comp.idempotent * A.element(coeffs);
      auto           X  = solve(M, A.regular_matrix(x) * M);
      MUNNLAB_ASSERT(X.has_value(), "left ideal not stable");
      auto factors = factor(min_poly(*X), seed + attempts);
      for (auto const& f : factors) {
        Matrix N = kernel(evaluate(f.factor, *X));
        if (N.cols() == 0 || N.cols() == M.cols()) {
          continue;
        }
        Matrix w = M * random_combination(N);
        if (w.is_zero()) {
          continue;
        }
        Matrix W = spin(w);
        if (W.cols() < M.cols()) {
          MUNNLAB_ASSERT(W.cols() % u == 0,
                         "submodule dimension not a multiple of u");
          M = W;
          break;
        }
      }
    }

    // F_k-basis: u_1, z u_1, ..., z^{d-1} u_1, u_2, ...
    Matrix const Z = A.regular_matrix(comp.center_generator);
    Matrix       B(F, n, 0);
    for (std::size_t j = 0; j < M.cols() && B.cols() < u; ++j) {
      Matrix v = M.column(j);
      if (rank(hconcat(B, v)) == B.cols()) {
        continue;
      }
      for (std::size_t a = 0; a < _d; ++a) {
        B = hconcat(B, v);
        v = Z * v;
      }
    }
    MUNNLAB_ASSERT(B.cols() == u && rank(B) == u,
                   "F_k-basis of the simple module is degenerate");
    _basis = B;
  }

  Matrix ComponentRealization::represent(AlgebraElement const& x) const {
    GroupAlgebra const& A = *_algebra;
    Field const&        F = A.field();
    Matrix              heads(F, A.dimension(), _c);
    for (std::size_t j = 0; j < _c; ++j) {
      heads.paste(_basis.column(j * _d), 0, j);
    }
    auto coords = solve(_basis, A.regular_matrix(x) * heads);
    MUNNLAB_ASSERT(coords.has_value(), "simple module not stable");
    Matrix                     rho(_field, _c, _c);
    std::vector<std::uint64_t> poly(_d);
    for (std::size_t i = 0; i < _c; ++i) {
      for (std::size_t j = 0; j < _c; ++j) {
        for (std::size_t a = 0; a < _d; ++a) {
          poly[a] = (*coords)(i * _d + a, j).rep;
        }
        rho(i, j) = _field.from_coeffs(poly);
      }
    }
    return rho;
  }

  Matrix ComponentRealization::represent(AlgebraMatrix const& mu) const {
    Matrix out(_field, mu.rows * _c, mu.cols * _c);
    for (std::size_t i = 0; i < mu.rows; ++i) {
      for (std::size_t j = 0; j < mu.cols; ++j) {
        out.paste(represent(mu(i, j)), i * _c, j * _c);
      }
    }
    return out;
  }

}  // namespace munnlab
