// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/module_cat.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <string>

#include "munnlab/error.hpp"

namespace munnlab {

  using gf::Elem;
  using gf::Field;

  namespace {

    std::string shape(Matrix const& a) {
      return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
    }

    void expect_shape(Matrix const&      a,
                      std::size_t        rows,
                      std::size_t        cols,
                      std::string const& what) {
      if (a.rows() != rows || a.cols() != cols) {
        fail(ErrorKind::ShapeMismatch,
             what + " is " + shape(a) + ", expected " + std::to_string(rows)
                 + "x" + std::to_string(cols));
      }
    }

    std::vector<Field> component_fields_of(std::uint64_t    p,
                                           TripleSet const& T) {
      std::vector<Field> out;
      for (auto const& t : T.triples()) {
        out.push_back(Field::make(p, static_cast<unsigned>(t.d)));
      }
      return out;
    }

    Matrix hstack(Field const& F, std::size_t rows, std::vector<Matrix> const& ms) {
      Matrix out(F, rows, 0);
      for (auto const& m : ms) {
        out = hconcat(out, m);
      }
      return out;
    }

    Matrix vstack(Field const& F, std::size_t cols, std::vector<Matrix> const& ms) {
      Matrix out(F, 0, cols);
      for (auto const& m : ms) {
        out = vconcat(out, m);
      }
      return out;
    }

    std::vector<Matrix> flatten(std::vector<std::vector<Matrix>> const& maps) {
      std::vector<Matrix> out;
      for (auto const& per_k : maps) {
        out.insert(out.end(), per_k.begin(), per_k.end());
      }
      return out;
    }

    // The splitting V_0 = V_+ (+) C used by Phi: `plus` in reduced echelon
    // form, C spanned by standard vectors at the non-pivot rows, `coords`
    // the inverse of [plus | C].
    struct Splitting {
      Matrix plus;
      Matrix complement;
      Matrix coords;
    };

    Splitting splitting(MunnModule const& V) {
      Field const& F    = V.field;
      std::size_t  n    = V.v0_dim;
      Matrix       plus = plus_subspace(V);
      std::vector<bool> pivot(n, false);
      for (std::size_t c = 0; c < plus.cols(); ++c) {
        for (std::size_t r = 0; r < n; ++r) {
          if (!F.is_zero(plus(r, c))) {
            pivot[r] = true;
            break;
          }
        }
      }
      Matrix      complement(F, n, n - plus.cols());
      std::size_t c = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (!pivot[r]) {
          complement(r, c++) = F.one();
        }
      }
      auto coords = inverse(hconcat(plus, complement));
      MUNNLAB_ASSERT(coords.has_value(), "V_+ and its complement span V_0");
      return {std::move(plus), std::move(complement), std::move(*coords)};
    }

    bool same_context(MunnModule const& V, MunnModule const& W) {
      return V.field == W.field && V.triples.triples() == W.triples.triples();
    }

    // Entries of the commutation residuals of phi as one column vector;
    // phi is a morphism exactly when this vanishes.
    std::vector<Elem> residual(HomTuple const&   phi,
                               MunnModule const& V,
                               MunnModule const& W) {
      std::vector<Elem> out;
      auto              push = [&](Matrix const& m) {
        out.insert(out.end(), m.data().begin(), m.data().end());
      };
      for (std::size_t k = 0; k < V.triples.size(); ++k) {
        for (std::size_t i = 0; i < V.alphas[k].size(); ++i) {
          push(phi.phis[k] * V.alphas[k][i] - W.alphas[k][i] * phi.phi0);
        }
        for (std::size_t j = 0; j < V.betas[k].size(); ++j) {
          push(phi.phi0 * V.betas[k][j] - W.betas[k][j] * phi.phis[k]);
        }
        push(phi.phis[k] * V.actions[k] - W.actions[k] * phi.phis[k]);
      }
      return out;
    }

    // Unknown layout: phi_0 row-major, then each phi_k row-major.
    std::size_t unknown_count(MunnModule const& V, MunnModule const& W) {
      std::size_t n = W.v0_dim * V.v0_dim;
      for (std::size_t k = 0; k < V.triples.size(); ++k) {
        n += W.space_dim(k) * V.space_dim(k);
      }
      return n;
    }

    HomTuple unpack(std::vector<Elem> const& x,
                    MunnModule const&        V,
                    MunnModule const&        W) {
      Field const& F   = V.field;
      std::size_t  pos = 0;
      auto         take = [&](std::size_t rows, std::size_t cols) {
        Matrix m(F, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = x[pos++];
          }
        }
        return m;
      };
      HomTuple phi{take(W.v0_dim, V.v0_dim), {}};
      for (std::size_t k = 0; k < V.triples.size(); ++k) {
        phi.phis.push_back(take(W.space_dim(k), V.space_dim(k)));
      }
      return phi;
    }

    bool invertible(HomTuple const& phi) {
      if (!phi.phi0.is_square() || rank(phi.phi0) != phi.phi0.rows()) {
        return false;
      }
      return std::all_of(phi.phis.begin(), phi.phis.end(), [](auto const& m) {
        return m.is_square() && rank(m) == m.rows();
      });
    }

    // phi^N for N = dim V, so V = Ker phi^N (+) Im phi^N (Fitting).
    HomTuple stable_power(HomTuple phi, std::size_t n) {
      for (std::size_t e = 1; e < n; e *= 2) {
        phi = compose(phi, phi);
      }
      return phi;
    }

    // True when the Fitting decomposition of phi is nontrivial.
    bool splits(HomTuple const& phi, std::size_t n) {
      HomTuple power = stable_power(phi, n);
      return !power.is_zero() && !invertible(power);
    }

    constexpr std::uint64_t exhaustive_limit = std::uint64_t{1} << 16;

    // p^e, saturating at exhaustive_limit + 1.
    std::uint64_t capped_power(std::uint64_t p, std::size_t e) {
      std::uint64_t out = 1;
      for (std::size_t i = 0; i < e; ++i) {
        out *= p;
        if (out > exhaustive_limit) {
          return exhaustive_limit + 1;
        }
      }
      return out;
    }

    // Digits of `index` in base p, as field elements.
    std::vector<Elem> digits(Field const& F, std::uint64_t index, std::size_t n) {
      std::vector<Elem> out(n);
      for (auto& e : out) {
        e = F.from_int(static_cast<std::int64_t>(index % F.characteristic()));
        index /= F.characteristic();
      }
      return out;
    }

    // Multiplication by c in F_k on F_k itself, over the prime field.
    Matrix multiplication_matrix(Field const& Fk, Field const& k, Elem c) {
      std::size_t d = Fk.degree();
      Matrix      out(k, d, d);
      auto        basis = Fk.one();
      for (std::size_t j = 0; j < d; ++j) {
        auto coeffs = Fk.coeffs(Fk.mul(c, basis));
        coeffs.resize(d, 0);
        for (std::size_t r = 0; r < d; ++r) {
          out(r, j) = k.from_int(static_cast<std::int64_t>(coeffs[r]));
        }
        basis = Fk.mul(basis, Fk.generator());
      }
      return out;
    }

    Matrix random_matrix(Field const&     F,
                         std::size_t      rows,
                         std::size_t      cols,
                         std::mt19937_64& rng) {
      std::uniform_int_distribution<std::uint64_t> pick(0, F.characteristic() - 1);
      Matrix                                       m(F, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          m(r, c) = F.from_int(static_cast<std::int64_t>(pick(rng)));
        }
      }
      return m;
    }

    // A random invertible F_k-linear map of F_k^t, over the prime field.
    Matrix random_semilinear_unit(Field const&     Fk,
                                  Field const&     k,
                                  std::size_t      t,
                                  std::mt19937_64& rng) {
      std::size_t                                  d = Fk.degree();
      std::uniform_int_distribution<std::uint64_t> pick(0, Fk.size() - 1);
      while (true) {
        Matrix m(k, t * d, t * d);
        for (std::size_t r = 0; r < t; ++r) {
          for (std::size_t c = 0; c < t; ++c) {
            m.paste(multiplication_matrix(Fk, k, Fk.element(pick(rng))),
                    r * d,
                    c * d);
          }
        }
        if (rank(m) == t * d) {
          return m;
        }
      }
    }

    Matrix random_unit(Field const& F, std::size_t n, std::mt19937_64& rng) {
      while (true) {
        Matrix m = random_matrix(F, n, n, rng);
        if (rank(m) == n) {
          return m;
        }
      }
    }

    // Isomorphism invariants used to bucket candidates before the explicit
    // search: dimensions plus ranks of all maps and of their stacks.
    std::vector<std::size_t> invariants(MunnModule const& V) {
      std::vector<std::size_t> out{V.v0_dim};
      out.insert(out.end(), V.vk_dim.begin(), V.vk_dim.end());
      for (auto const& a : flatten(V.alphas)) {
        out.push_back(rank(a));
      }
      for (auto const& b : flatten(V.betas)) {
        out.push_back(rank(b));
      }
      out.push_back(plus_subspace(V).cols());
      out.push_back(alpha_kernel(V).cols());
      return out;
    }

    // Every valid module with the given dimensions, one per map tuple.
    std::vector<MunnModule> indecomposables_with_dims(
        TripleSet const&                T,
        Field const&                    F,
        std::vector<Field> const&       fields,
        std::size_t                     v0,
        std::vector<std::size_t> const& vk) {
      std::size_t const   s = T.size();
      std::vector<Matrix> actions;
      std::size_t         entries = 0;
      for (std::size_t k = 0; k < s; ++k) {
        actions.push_back(canonical_action(fields[k], vk[k]));
        entries += (T[k].m + T[k].n) * v0 * vk[k] * T[k].d;
      }
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < entries; ++i) {
        total *= F.characteristic();
      }

      std::map<std::vector<std::size_t>, std::vector<MunnModule>> buckets;
      std::vector<MunnModule>                                     out;
      for (std::uint64_t index = 0; index < total; ++index) {
        auto        x   = digits(F, index, entries);
        std::size_t pos = 0;
        auto        take = [&](std::size_t rows, std::size_t cols) {
          Matrix m(F, rows, cols);
          for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
              m(r, c) = x[pos++];
            }
          }
          return m;
        };
        MunnModule V{F, T, fields, v0, vk, actions, {}, {}};
        for (std::size_t k = 0; k < s; ++k) {
          std::size_t dk = vk[k] * T[k].d;
          V.alphas.emplace_back();
          V.betas.emplace_back();
          for (std::size_t i = 0; i < T[k].n; ++i) {
            V.alphas[k].push_back(take(dk, v0));
          }
          for (std::size_t j = 0; j < T[k].m; ++j) {
            V.betas[k].push_back(take(v0, dk));
          }
        }
        if (!(vstack(F, v0, flatten(V.alphas))
              * hstack(F, v0, flatten(V.betas)))
                 .is_zero()) {
          continue;
        }
        auto key    = invariants(V);
        auto bucket = buckets.find(key);
        if (bucket != buckets.end()) {
          bool known = std::any_of(
              bucket->second.begin(), bucket->second.end(), [&](auto const& W) {
                return find_isomorphism(V, W).has_value();
              });
          if (known) {
            continue;
          }
        }
        auto verdict = is_indecomposable(V);
        if (verdict == Indecomposability::Inconclusive) {
          fail(ErrorKind::BudgetExceeded,
               "endomorphism algebra too large for exhaustive search");
        }
        if (verdict == Indecomposability::Indecomposable) {
          buckets[key].push_back(V);
          out.push_back(std::move(V));
        }
      }
      return out;
    }

    std::vector<std::vector<std::size_t>> dimension_grid(std::size_t s,
                                                         DimCaps     caps) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              current(s + 1, 0);
      while (true) {
        out.push_back(current);
        std::size_t i = 0;
        while (i <= s) {
          std::size_t cap = i == 0 ? caps.v0 : caps.vk;
          if (current[i] < cap) {
            ++current[i];
            break;
          }
          current[i] = 0;
          ++i;
        }
        if (i > s) {
          return out;
        }
      }
    }
  }  // namespace

  std::size_t MunnModule::total_dim() const {
    std::size_t n = v0_dim;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      n += space_dim(k);
    }
    return n;
  }

  Matrix canonical_action(Field const& F, std::size_t t) {
    Field       k = Field::prime(F.characteristic());
    std::size_t d = F.degree();
    Matrix      block = multiplication_matrix(F, k, F.generator());
    Matrix      out(k, t * d, t * d);
    for (std::size_t b = 0; b < t; ++b) {
      out.paste(block, b * d, b * d);
    }
    return out;
  }

  MunnModule module_make(ModuleData data) {
    if (!gf::is_prime(data.characteristic)) {
      fail(ErrorKind::InvalidInput,
           "characteristic " + std::to_string(data.characteristic)
               + " is not prime");
    }
    TripleSet const&  T = data.triples;
    std::size_t const s = T.size();
    Field             F = Field::prime(data.characteristic);
    if (data.vk_dim.size() != s || data.alphas.size() != s
        || data.betas.size() != s) {
      fail(ErrorKind::ShapeMismatch,
           "expected data for " + std::to_string(s) + " components");
    }
    auto fields = component_fields_of(data.characteristic, T);
    if (data.actions.empty()) {
      for (std::size_t k = 0; k < s; ++k) {
        data.actions.push_back(canonical_action(fields[k], data.vk_dim[k]));
      }
    } else if (data.actions.size() != s) {
      fail(ErrorKind::ShapeMismatch, "one action matrix per component");
    }

    for (std::size_t k = 0; k < s; ++k) {
      std::string const tag = "component " + std::to_string(k + 1);
      std::size_t const dk  = data.vk_dim[k] * T[k].d;
      expect_shape(data.actions[k], dk, dk, tag + " action");
      std::vector<std::int64_t> modulus;
      for (auto c : fields[k].modulus()) {
        modulus.push_back(static_cast<std::int64_t>(c));
      }
      if (!evaluate(Polynomial::from_ints(F, modulus), data.actions[k])
               .is_zero()) {
        fail(ErrorKind::InvalidInput,
             tag + " action does not satisfy the modulus of F_k");
      }
      if (data.alphas[k].size() != T[k].n || data.betas[k].size() != T[k].m) {
        fail(ErrorKind::ShapeMismatch,
             tag + " needs " + std::to_string(T[k].n) + " alpha and "
                 + std::to_string(T[k].m) + " beta maps");
      }
      for (auto& a : data.alphas[k]) {
        expect_shape(a, dk, data.v0_dim, tag + " alpha");
      }
      for (auto& b : data.betas[k]) {
        expect_shape(b, data.v0_dim, dk, tag + " beta");
      }
    }
    for (std::size_t k = 0; k < s; ++k) {
      for (std::size_t i = 0; i < data.alphas[k].size(); ++i) {
        for (std::size_t l = 0; l < s; ++l) {
          for (std::size_t j = 0; j < data.betas[l].size(); ++j) {
            if (!(data.alphas[k][i] * data.betas[l][j]).is_zero()) {
              fail(ErrorKind::RelationViolation,
                   "alpha_{" + std::to_string(k + 1) + "," + std::to_string(i + 1)
                       + "} beta_{" + std::to_string(l + 1) + ","
                       + std::to_string(j + 1) + "} != 0");
            }
          }
        }
      }
    }
    return MunnModule{F,
                      T,
                      std::move(fields),
                      data.v0_dim,
                      std::move(data.vk_dim),
                      std::move(data.actions),
                      std::move(data.alphas),
                      std::move(data.betas)};
  }

  Matrix plus_subspace(MunnModule const& V) {
    return column_space(hstack(V.field, V.v0_dim, flatten(V.betas)));
  }

  Matrix alpha_kernel(MunnModule const& V) {
    return kernel(vstack(V.field, V.v0_dim, flatten(V.alphas)));
  }

  bool is_in_mod_plus(MunnModule const& V) {
    // Im beta lies in every Ker alpha, so equal dimensions suffice.
    return plus_subspace(V).cols() == alpha_kernel(V).cols();
  }

  bool GraphRep::operator==(GraphRep const& that) const {
    return field == that.field && triples.triples() == that.triples.triples()
           && plus_dim == that.plus_dim && minus_dim == that.minus_dim
           && vk_dim == that.vk_dim && actions == that.actions
           && alphas == that.alphas && betas == that.betas;
  }

  bool is_in_rep_plus(GraphRep const& W) {
    Field const& F = W.field;
    return rank(hstack(F, W.plus_dim, flatten(W.betas))) == W.plus_dim
           && kernel(vstack(F, W.minus_dim, flatten(W.alphas))).cols() == 0;
  }

  GraphRep to_graph_rep(MunnModule const& V, bool strict) {
    bool const in_mod_plus = is_in_mod_plus(V);
    if (strict && !in_mod_plus) {
      fail(ErrorKind::NotInModPlus,
           "sum of Im beta differs from the intersection of Ker alpha");
    }
    auto [plus, complement, coords] = splitting(V);
    std::size_t const a             = plus.cols();
    GraphRep          W{V.field,
               V.triples,
               V.component_fields,
               a,
               V.v0_dim - a,
               V.vk_dim,
               V.actions,
               {},
               {},
               in_mod_plus};
    for (std::size_t k = 0; k < V.triples.size(); ++k) {
      W.alphas.emplace_back();
      W.betas.emplace_back();
      for (auto const& alpha : V.alphas[k]) {
        W.alphas[k].push_back(alpha * complement);
      }
      for (auto const& beta : V.betas[k]) {
        W.betas[k].push_back((coords * beta).row_block(0, a));
      }
    }
    return W;
  }

  MunnModule from_graph_rep(GraphRep const& W) {
    Field const&      F  = W.field;
    std::size_t const a  = W.plus_dim;
    std::size_t const n0 = W.plus_dim + W.minus_dim;
    MunnModule        V{F,
                 W.triples,
                 W.component_fields,
                 n0,
                 W.vk_dim,
                 W.actions,
                 {},
                 {}};
    for (std::size_t k = 0; k < W.triples.size(); ++k) {
      std::size_t dk = V.space_dim(k);
      V.alphas.emplace_back();
      V.betas.emplace_back();
      for (auto const& alpha : W.alphas[k]) {
        Matrix m(F, dk, n0);
        m.paste(alpha, 0, a);
        V.alphas[k].push_back(std::move(m));
      }
      for (auto const& beta : W.betas[k]) {
        Matrix m(F, n0, dk);
        m.paste(beta, 0, 0);
        V.betas[k].push_back(std::move(m));
      }
    }
    return V;
  }

  bool HomTuple::is_zero() const {
    return phi0.is_zero()
           && std::all_of(phis.begin(), phis.end(), [](auto const& m) {
                return m.is_zero();
              });
  }

  bool GraphHom::is_zero() const {
    return phi_plus.is_zero() && phi_minus.is_zero()
           && std::all_of(phis.begin(), phis.end(), [](auto const& m) {
                return m.is_zero();
              });
  }

  HomTuple zero_hom(MunnModule const& V, MunnModule const& W) {
    return unpack(std::vector<Elem>(unknown_count(V, W), V.field.zero()), V, W);
  }

  HomTuple identity_hom(MunnModule const& V) {
    HomTuple phi{Matrix::identity(V.field, V.v0_dim), {}};
    for (std::size_t k = 0; k < V.triples.size(); ++k) {
      phi.phis.push_back(Matrix::identity(V.field, V.space_dim(k)));
    }
    return phi;
  }

  HomTuple compose(HomTuple const& psi, HomTuple const& phi) {
    HomTuple out{psi.phi0 * phi.phi0, {}};
    for (std::size_t k = 0; k < phi.phis.size(); ++k) {
      out.phis.push_back(psi.phis[k] * phi.phis[k]);
    }
    return out;
  }

  bool is_hom(HomTuple const& phi, MunnModule const& V, MunnModule const& W) {
    auto r = residual(phi, V, W);
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e.rep == 0; });
  }

  HomBasis hom_space(MunnModule const& V, MunnModule const& W) {
    if (!same_context(V, W)) {
      fail(ErrorKind::ShapeMismatch,
           "Hom between modules over different Munn algebras");
    }
    Field const&      F = V.field;
    std::size_t const N = unknown_count(V, W);
    std::vector<Elem> x(N, F.zero());
    // The residual is linear in phi: column u of the system is the residual
    // of the u-th unit tuple.
    std::size_t const R = residual(unpack(x, V, W), V, W).size();
    Matrix            system(F, R, N);
    for (std::size_t u = 0; u < N; ++u) {
      x[u]     = F.one();
      auto col = residual(unpack(x, V, W), V, W);
      x[u]     = F.zero();
      for (std::size_t r = 0; r < R; ++r) {
        system(r, u) = col[r];
      }
    }
    Matrix   ker = kernel(system);
    HomBasis basis;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      std::vector<Elem> v(N);
      for (std::size_t r = 0; r < N; ++r) {
        v[r] = ker(r, c);
      }
      basis.push_back(unpack(v, V, W));
    }
    return basis;
  }

  HomTuple combination(HomBasis const&              basis,
                       std::vector<Elem> const&     coeffs,
                       MunnModule const&            V,
                       MunnModule const&            W) {
    MUNNLAB_ASSERT(coeffs.size() == basis.size(), "one coefficient per vector");
    HomTuple out = zero_hom(V, W);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b].rep == 0) {
        continue;
      }
      out.phi0 = out.phi0 + basis[b].phi0.scaled(coeffs[b]);
      for (std::size_t k = 0; k < out.phis.size(); ++k) {
        out.phis[k] = out.phis[k] + basis[b].phis[k].scaled(coeffs[b]);
      }
    }
    return out;
  }

  bool in_ideal_J(HomTuple const& phi, MunnModule const& V, MunnModule const& W) {
    for (auto const& m : phi.phis) {
      if (!m.is_zero()) {
        return false;
      }
    }
    if (!(phi.phi0 * plus_subspace(V)).is_zero()) {
      return false;
    }
    Matrix target = plus_subspace(W);
    return rank(hconcat(target, phi.phi0)) == target.cols();
  }

  GraphHom to_graph_hom(HomTuple const&   phi,
                        MunnModule const& V,
                        MunnModule const& W) {
    auto const        sv = splitting(V);
    auto const        sw = splitting(W);
    std::size_t const a  = sw.plus.cols();
    Matrix            on_plus  = sw.coords * phi.phi0 * sv.plus;
    Matrix            on_minus = sw.coords * phi.phi0 * sv.complement;
    return GraphHom{on_plus.row_block(0, a),
                    on_minus.row_block(a, W.v0_dim - a),
                    phi.phis};
  }

  Indecomposability is_indecomposable(MunnModule const& V) {
    if (V.is_zero()) {
      return Indecomposability::Decomposable;
    }
    Field const&  F     = V.field;
    auto          basis = hom_space(V, V);
    std::uint64_t count = capped_power(F.characteristic(), basis.size());
    std::size_t const n = V.total_dim();
    for (auto const& phi : basis) {
      if (splits(phi, n)) {
        return Indecomposability::Decomposable;
      }
    }
    if (count > exhaustive_limit) {
      std::mt19937_64                              rng(0);
      std::uniform_int_distribution<std::uint64_t> pick(0, F.characteristic() - 1);
      for (std::size_t attempt = 0; attempt < 256; ++attempt) {
        std::vector<Elem> c(basis.size());
        for (auto& e : c) {
          e = F.from_int(static_cast<std::int64_t>(pick(rng)));
        }
        if (splits(combination(basis, c, V, V), n)) {
          return Indecomposability::Decomposable;
        }
      }
      return Indecomposability::Inconclusive;
    }
    HomTuple const one = identity_hom(V);
    for (std::uint64_t index = 1; index < count; ++index) {
      HomTuple e = combination(basis, digits(F, index, basis.size()), V, V);
      if (e != one && compose(e, e) == e) {
        return Indecomposability::Decomposable;
      }
    }
    return Indecomposability::Indecomposable;
  }

  std::optional<HomTuple> find_isomorphism(MunnModule const& V,
                                           MunnModule const& W,
                                           std::uint64_t     seed) {
    if (!same_context(V, W) || V.v0_dim != W.v0_dim || V.vk_dim != W.vk_dim) {
      return std::nullopt;
    }
    Field const&  F     = V.field;
    auto          basis = hom_space(V, W);
    std::uint64_t count = capped_power(F.characteristic(), basis.size());
    if (count <= exhaustive_limit) {
      for (std::uint64_t index = 0; index < count; ++index) {
        HomTuple phi = combination(basis, digits(F, index, basis.size()), V, W);
        if (invertible(phi)) {
          return phi;
        }
      }
      return std::nullopt;
    }
    std::mt19937_64                              rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, F.characteristic() - 1);
    for (std::size_t attempt = 0; attempt < exhaustive_limit; ++attempt) {
      std::vector<Elem> c(basis.size());
      for (auto& e : c) {
        e = F.from_int(static_cast<std::int64_t>(pick(rng)));
      }
      HomTuple phi = combination(basis, c, V, W);
      if (invertible(phi)) {
        return phi;
      }
    }
    return std::nullopt;
  }

  std::uint64_t census_cost(TripleSet const& T,
                            DimCaps          caps,
                            std::uint64_t    characteristic) {
    constexpr std::uint64_t saturated = ~std::uint64_t{0};
    std::uint64_t           total     = 0;
    for (auto const& dims : dimension_grid(T.size(), caps)) {
      std::size_t entries = 0;
      for (std::size_t k = 0; k < T.size(); ++k) {
        entries += (T[k].m + T[k].n) * dims[0] * dims[k + 1] * T[k].d;
      }
      std::uint64_t tuples = 1;
      for (std::size_t i = 0; i < entries; ++i) {
        if (tuples > saturated / characteristic) {
          return saturated;
        }
        tuples *= characteristic;
      }
      if (total > saturated - tuples) {
        return saturated;
      }
      total += tuples;
    }
    return total;
  }

  std::vector<MunnModule> enumerate_indecomposables(TripleSet const& T,
                                                    DimCaps          caps,
                                                    std::uint64_t characteristic,
                                                    std::uint64_t budget) {
    if (characteristic != 2 && characteristic != 3) {
      fail(ErrorKind::InvalidInput, "census runs over F_2 or F_3 only");
    }
    std::uint64_t cost = census_cost(T, caps, characteristic);
    if (cost > budget) {
      fail(ErrorKind::BudgetExceeded,
           "census would visit " + std::to_string(cost)
               + " map tuples, budget " + std::to_string(budget));
    }
    Field F      = Field::prime(characteristic);
    auto  fields = component_fields_of(characteristic, T);
    // Isomorphic modules share a dimension vector, so each grid point is
    // an independent job.
    std::vector<std::future<std::vector<MunnModule>>> jobs;
    for (auto const& dims : dimension_grid(T.size(), caps)) {
      std::vector<std::size_t> vk(dims.begin() + 1, dims.end());
      jobs.push_back(std::async(std::launch::async,
                                indecomposables_with_dims,
                                std::cref(T),
                                std::cref(F),
                                std::cref(fields),
                                dims[0],
                                vk));
    }
    std::vector<MunnModule> out;
    for (auto& job : jobs) {
      auto found = job.get();
      std::move(found.begin(), found.end(), std::back_inserter(out));
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.total_dim() < y.total_dim();
    });
    return out;
  }

  MunnModule random_mod_plus(TripleSet const& T,
                             DimCaps          caps,
                             std::uint64_t    characteristic,
                             std::mt19937_64& rng) {
    Field             F      = Field::prime(characteristic);
    auto              fields = component_fields_of(characteristic, T);
    std::size_t const s      = T.size();
    std::uniform_int_distribution<std::size_t> pick_v0(0, caps.v0);
    std::uniform_int_distribution<std::size_t> pick_vk(0, caps.vk);
    while (true) {
      ModuleData data{characteristic, T, pick_v0(rng), {}, {}, {}, {}};
      for (std::size_t k = 0; k < s; ++k) {
        data.vk_dim.push_back(pick_vk(rng));
      }
      std::size_t const n0 = data.v0_dim;
      // Betas first, with images inside a random subspace of V_0 so that
      // V_+ is not almost always all of V_0; the alphas then factor
      // through V_0 / V_+.
      std::size_t const target = std::uniform_int_distribution<std::size_t>(0, n0)(rng);
      Matrix const      span   = random_matrix(F, n0, target, rng);
      data.betas.resize(s);
      for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t j = 0; j < T[k].m; ++j) {
          data.betas[k].push_back(
              span * random_matrix(F, target, data.vk_dim[k] * T[k].d, rng));
        }
      }
      MunnModule probe{F, T, fields, n0, data.vk_dim, {}, {}, data.betas};
      auto [plus, complement, coords] = splitting(probe);
      Matrix project = coords.row_block(plus.cols(), n0 - plus.cols());
      data.alphas.resize(s);
      for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t i = 0; i < T[k].n; ++i) {
          data.alphas[k].push_back(
              random_matrix(F, data.vk_dim[k] * T[k].d, project.rows(), rng)
              * project);
        }
      }
      MunnModule V = module_make(data);
      if (!is_in_mod_plus(V)) {
        continue;
      }
      // Move to a random basis on V_0 and random F_k-bases on the V_k.
      Matrix g     = random_unit(F, n0, rng);
      Matrix g_inv = *inverse(g);
      for (std::size_t k = 0; k < s; ++k) {
        Matrix h = random_semilinear_unit(fields[k], F, V.vk_dim[k], rng);
        Matrix h_inv = *inverse(h);
        for (auto& a : V.alphas[k]) {
          a = h * a * g_inv;
        }
        for (auto& b : V.betas[k]) {
          b = g * b * h_inv;
        }
      }
      return V;
    }
  }

}  // namespace munnlab
