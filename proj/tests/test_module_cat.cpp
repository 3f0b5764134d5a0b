// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include <random>
#include <vector>

#include "catch_amalgamated.hpp"

#include "munnlab/error.hpp"
#include "munnlab/module_cat.hpp"
#include "munnlab/valued_graph.hpp"

namespace munnlab {

  namespace {
    gf::Field const F2 = gf::Field::prime(2);

    Matrix ints(std::vector<std::vector<std::int64_t>> const& rows,
                gf::Field const&                              F = F2) {
      return Matrix::from_ints(F, rows);
    }

    // V_0 = k^2, V_1 = k, beta = (1,0)^T, alpha = (0,1) over {(1,1,1)}.
    MunnModule small_module() {
      return module_make({2,
                          TripleSet({{1, 1, 1}}),
                          2,
                          {1},
                          {{ints({{0, 1}})}},
                          {{ints({{1}, {0}})}},
                          {}});
    }

    MunnModule simple(TripleSet const& T, std::size_t which) {
      ModuleData data{2, T, which == 0 ? 1u : 0u, {}, {}, {}, {}};
      for (std::size_t k = 0; k < T.size(); ++k) {
        std::size_t t = which == k + 1 ? 1 : 0;
        data.vk_dim.push_back(t);
        data.alphas.emplace_back(T[k].n, Matrix(F2, t * T[k].d, data.v0_dim));
        data.betas.emplace_back(T[k].m, Matrix(F2, data.v0_dim, t * T[k].d));
      }
      return module_make(data);
    }

    MunnModule direct_sum(MunnModule const& V, MunnModule const& W) {
      ModuleData data{V.field.characteristic(),
                      V.triples,
                      V.v0_dim + W.v0_dim,
                      {},
                      {},
                      {},
                      {}};
      auto block = [](Matrix const& a, Matrix const& b) {
        Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
        m.paste(a, 0, 0);
        m.paste(b, a.rows(), a.cols());
        return m;
      };
      for (std::size_t k = 0; k < V.triples.size(); ++k) {
        data.vk_dim.push_back(V.vk_dim[k] + W.vk_dim[k]);
        data.alphas.emplace_back();
        data.betas.emplace_back();
        for (std::size_t i = 0; i < V.alphas[k].size(); ++i) {
          data.alphas[k].push_back(block(V.alphas[k][i], W.alphas[k][i]));
        }
        for (std::size_t j = 0; j < V.betas[k].size(); ++j) {
          data.betas[k].push_back(block(V.betas[k][j], W.betas[k][j]));
        }
        data.actions.push_back(block(V.actions[k], W.actions[k]));
      }
      return module_make(data);
    }

    // Oracle: count every tuple of matrices satisfying the commutation
    // conditions directly.
    std::uint64_t brute_force_hom_count(MunnModule const& V,
                                        MunnModule const& W) {
      std::vector<std::pair<std::size_t, std::size_t>> shapes{
          {W.v0_dim, V.v0_dim}};
      std::size_t entries = W.v0_dim * V.v0_dim;
      for (std::size_t k = 0; k < V.triples.size(); ++k) {
        shapes.push_back({W.space_dim(k), V.space_dim(k)});
        entries += W.space_dim(k) * V.space_dim(k);
      }
      REQUIRE(entries <= 20);
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << entries); ++x) {
        std::uint64_t       bits = x;
        std::vector<Matrix> ms;
        for (auto [r, c] : shapes) {
          Matrix m(V.field, r, c);
          for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
              m(i, j) = V.field.from_int(bits & 1);
              bits >>= 1;
            }
          }
          ms.push_back(m);
        }
        HomTuple phi{ms[0], std::vector<Matrix>(ms.begin() + 1, ms.end())};
        count += is_hom(phi, V, W);
      }
      return count;
    }

    std::vector<HomTuple> all_homs(MunnModule const& V, MunnModule const& W) {
      auto                  basis = hom_space(V, W);
      std::vector<HomTuple> out;
      REQUIRE(basis.size() <= 12);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << basis.size()); ++x) {
        std::vector<gf::Elem> c(basis.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
          c[i] = V.field.from_int((x >> i) & 1);
        }
        out.push_back(combination(basis, c, V, W));
      }
      return out;
    }

    // Oracle for indecomposability: End is local exactly when every
    // endomorphism is nilpotent or invertible.
    bool end_is_local(MunnModule const& V) {
      for (auto const& phi : all_homs(V, V)) {
        HomTuple power = phi;
        for (std::size_t i = 0; i < V.total_dim(); ++i) {
          power = compose(power, phi);
        }
        bool invertible = rank(phi.phi0) == V.v0_dim;
        for (std::size_t k = 0; k < phi.phis.size(); ++k) {
          invertible = invertible && rank(phi.phis[k]) == V.space_dim(k);
        }
        if (!power.is_zero() && !invertible) {
          return false;
        }
      }
      return true;
    }

    std::size_t expected_census(TripleSet const& T) {
      auto roots = positive_real_roots(graph_from_triples(T));
      REQUIRE_FALSE(roots.truncated);
      return roots.roots.size() - 2 + 1;
    }

    std::vector<TripleSet> sample_sets() {
      return {TripleSet({{1, 1, 1}}),
              TripleSet({{1, 1, 0}}),
              TripleSet({{1, 0, 1}, {1, 1, 0}}),
              TripleSet({{2, 1, 1}}),
              TripleSet({{1, 2, 1}})};
    }
  }  // namespace

  TEST_CASE("module_make examples", "[module_cat]") {
    auto V = small_module();
    CHECK(V.v0_dim == 2);
    CHECK(V.total_dim() == 3);

    CHECK_THROWS_MATCHES(
        module_make({2,
                     TripleSet({{1, 1, 1}}),
                     2,
                     {1},
                     {{ints({{1, 0}})}},
                     {{ints({{1}, {0}})}},
                     {}}),
        Error,
        Catch::Matchers::Predicate<Error>([](Error const& e) {
          return e.kind() == ErrorKind::RelationViolation;
        }));
    CHECK_THROWS_AS(module_make({2,
                                 TripleSet({{1, 1, 1}}),
                                 2,
                                 {1},
                                 {{ints({{1, 0, 0}})}},
                                 {{ints({{1}, {0}})}},
                                 {}}),
                    Error);
    try {
      module_make({2, TripleSet({{1, 1, 1}}), 2, {1}, {{}}, {{ints({{1}, {0}})}}, {}});
      FAIL("missing alpha accepted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::ShapeMismatch);
    }

    auto zero = module_make({2,
                             TripleSet({{1, 1, 1}}),
                             0,
                             {0},
                             {{Matrix(F2, 0, 0)}},
                             {{Matrix(F2, 0, 0)}},
                             {}});
    CHECK(zero.is_zero());
  }

  TEST_CASE("F_k-structure on V_k", "[module_cat]") {
    gf::Field F4     = gf::Field::make(2, 2);
    Matrix    action = canonical_action(F4, 2);
    CHECK(action.rows() == 4);
    // x^2 + x + 1 annihilates multiplication by x.
    CHECK((action * action + action + Matrix::identity(F2, 4)).is_zero());

    TripleSet T({{2, 1, 0}});
    Matrix    bad = Matrix::identity(F2, 2);
    try {
      module_make({2, T, 1, {1}, {{}}, {{Matrix(F2, 1, 2)}}, {bad}});
      FAIL("identity accepted as an F_4-action");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }

  TEST_CASE("Mod+ membership", "[module_cat]") {
    CHECK(is_in_mod_plus(small_module()));
    TripleSet T({{1, 1, 1}});
    CHECK_FALSE(is_in_mod_plus(simple(T, 0)));
    CHECK(is_in_mod_plus(simple(T, 1)));
    CHECK(is_in_mod_plus(module_make({2, T, 0, {0}, {{Matrix(F2, 0, 0)}}, {{Matrix(F2, 0, 0)}}, {}})));
  }

  TEST_CASE("Phi and Psi examples", "[module_cat]") {
    auto W = to_graph_rep(small_module(), true);
    CHECK(W.plus_dim == 1);
    CHECK(W.minus_dim == 1);
    CHECK(W.vk_dim == std::vector<std::size_t>{1});
    CHECK(W.alphas[0][0] == ints({{1}}));
    CHECK(W.betas[0][0] == ints({{1}}));
    CHECK(W.source_in_mod_plus);
    CHECK(is_in_rep_plus(W));

    auto V = from_graph_rep(W);
    CHECK(V.v0_dim == 2);
    CHECK(V.alphas[0][0] == ints({{0, 1}}));
    CHECK(V.betas[0][0] == ints({{1}, {0}}));

    TripleSet T({{1, 1, 0}});
    auto      injective = module_make(
        {2, T, 1, {1}, {{}}, {{Matrix(F2, 1, 1)}}, {}});
    auto Winj = to_graph_rep(injective);
    CHECK(Winj.plus_dim == 0);
    CHECK(Winj.minus_dim == 1);

    auto S0 = simple(TripleSet({{1, 1, 1}}), 0);
    CHECK_THROWS_AS(to_graph_rep(S0, true), Error);
    auto W0 = to_graph_rep(S0);
    CHECK_FALSE(W0.source_in_mod_plus);
    CHECK(W0.minus_dim == 1);

    // The two trivial representations at + and - both come back as the
    // one-dimensional module with zero multiplication.
    GraphRep plus_only  = W;
    plus_only.plus_dim  = 1;
    plus_only.minus_dim = 0;
    plus_only.vk_dim    = {0};
    plus_only.actions   = {Matrix(F2, 0, 0)};
    plus_only.alphas    = {{Matrix(F2, 0, 0)}};
    plus_only.betas     = {{Matrix(F2, 1, 0)}};
    CHECK_FALSE(is_in_rep_plus(plus_only));
    auto from_plus = from_graph_rep(plus_only);
    CHECK(from_plus.v0_dim == 1);
    CHECK(from_plus.betas[0][0].cols() == 0);
    CHECK(find_isomorphism(from_plus, S0).has_value());

    GraphRep minus_only  = plus_only;
    minus_only.plus_dim  = 0;
    minus_only.minus_dim = 1;
    minus_only.alphas    = {{Matrix(F2, 0, 1)}};
    minus_only.betas     = {{Matrix(F2, 0, 0)}};
    CHECK_FALSE(is_in_rep_plus(minus_only));
    CHECK(find_isomorphism(from_graph_rep(minus_only), S0).has_value());
  }

  TEST_CASE("Hom space examples", "[module_cat]") {
    auto V   = small_module();
    auto End = hom_space(V, V);
    CHECK(End.size() == 2);
    CHECK(brute_force_hom_count(V, V) == 4);

    TripleSet T({{1, 1, 1}});
    CHECK(hom_space(simple(T, 0), simple(T, 1)).empty());
    CHECK(hom_space(simple(T, 1), simple(T, 0)).empty());

    bool identity_in_span = false;
    for (auto const& phi : all_homs(V, V)) {
      identity_in_span |= phi == identity_hom(V);
    }
    CHECK(identity_in_span);

    auto other = module_make({2, TripleSet({{1, 1, 0}}), 0, {0}, {{}}, {{Matrix(F2, 0, 0)}}, {}});
    CHECK_THROWS_AS(hom_space(V, other), Error);
  }

  TEST_CASE("ideal J examples", "[module_cat]") {
    auto V = small_module();
    CHECK_FALSE(in_ideal_J(identity_hom(V), V, V));
    CHECK(in_ideal_J(zero_hom(V, V), V, V));
    // phi_1 = 0 and phi_0 sends e_2 to e_1: V_0 -> V_0/V_+ -> V_+.
    HomTuple through{ints({{0, 1}, {0, 0}}), {Matrix(F2, 1, 1)}};
    CHECK(is_hom(through, V, V));
    CHECK(in_ideal_J(through, V, V));
    CHECK(to_graph_hom(through, V, V).is_zero());
  }

  TEST_CASE("indecomposability examples", "[module_cat]") {
    TripleSet T({{1, 1, 1}});
    CHECK(is_indecomposable(simple(T, 1)) == Indecomposability::Indecomposable);
    CHECK(is_indecomposable(simple(T, 0)) == Indecomposability::Indecomposable);
    CHECK(is_indecomposable(direct_sum(simple(T, 0), simple(T, 1)))
          == Indecomposability::Decomposable);
    CHECK(is_indecomposable(small_module()) == Indecomposability::Indecomposable);
    CHECK(all_homs(small_module(), small_module()).size() == 4);
  }

  TEST_CASE("census examples", "[module_cat]") {
    TripleSet A3({{1, 1, 1}});
    auto      census = enumerate_indecomposables(A3, {3, 2}, 2);
    CHECK(census.size() == 5);
    CHECK(census.size() == expected_census(A3));

    TripleSet A2A1({{1, 1, 0}});
    CHECK(enumerate_indecomposables(A2A1, {2, 2}, 2).size() == 3);
    CHECK(expected_census(A2A1) == 3);

    CHECK(enumerate_indecomposables(A3, {0, 0}, 2).empty());

    try {
      enumerate_indecomposables(TripleSet({{2, 1, 1}}), {3, 3}, 2);
      FAIL("budget not enforced");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_THROWS_AS(enumerate_indecomposables(A3, {1, 1}, 5), Error);
  }

  TEST_CASE("census agrees with positive real roots", "[module_cat][property]") {
    struct Case {
      TripleSet     T;
      DimCaps       caps;
      std::uint64_t p;
    };
    std::vector<Case> cases{{TripleSet({{1, 1, 1}}), {3, 2}, 3},
                            {TripleSet({{2, 1, 0}}), {2, 2}, 2},
                            {TripleSet({{1, 0, 1}}), {2, 2}, 3},
                            {TripleSet({{1, 1, 0}, {1, 0, 1}}), {3, 2}, 2},
                            {TripleSet({{1, 1, 0}, {1, 1, 0}}), {2, 1}, 2}};
    for (auto const& c : cases) {
      INFO(c.T.to_string());
      auto census = enumerate_indecomposables(c.T, c.caps, c.p);
      CHECK(census.size() == expected_census(c.T));
      for (auto const& V : census) {
        if (c.p == 2) {
          CHECK(end_is_local(V));
        }
      }
      for (std::size_t i = 0; i < census.size(); ++i) {
        for (std::size_t j = i + 1; j < census.size(); ++j) {
          CHECK_FALSE(find_isomorphism(census[i], census[j]).has_value());
        }
      }
    }
  }

  TEST_CASE("Hom spaces match brute force", "[module_cat][property]") {
    std::mt19937_64 rng(11);
    for (auto const& T : sample_sets()) {
      for (int trial = 0; trial < 6; ++trial) {
        auto V = random_mod_plus(T, {2, 1}, 2, rng);
        auto W = random_mod_plus(T, {2, 1}, 2, rng);
        if (V.total_dim() * W.total_dim() > 20) {
          continue;
        }
        INFO(T.to_string());
        CHECK(brute_force_hom_count(V, W)
              == (std::uint64_t{1} << hom_space(V, W).size()));
      }
    }
  }

  TEST_CASE("idempotent search matches the local-ring oracle",
            "[module_cat][property]") {
    std::mt19937_64 rng(12);
    for (auto const& T : sample_sets()) {
      for (int trial = 0; trial < 15; ++trial) {
        auto V = random_mod_plus(T, {2, 2}, 2, rng);
        if (V.is_zero() || hom_space(V, V).size() > 12) {
          continue;
        }
        INFO(T.to_string());
        CHECK((is_indecomposable(V) == Indecomposability::Indecomposable)
              == end_is_local(V));
      }
    }
  }

  TEST_CASE("functor round trips", "[module_cat][property]") {
    std::mt19937_64 rng(13);
    for (auto const& T : sample_sets()) {
      for (int trial = 0; trial < 20; ++trial) {
        auto V = random_mod_plus(T, {3, 2}, trial % 2 == 0 ? 2 : 3, rng);
        INFO(T.to_string());
        REQUIRE(is_in_mod_plus(V));
        auto W = to_graph_rep(V, true);
        CHECK(is_in_rep_plus(W));
        auto back = from_graph_rep(W);
        CHECK(is_in_mod_plus(back));
        CHECK(find_isomorphism(V, back).has_value());
        CHECK(to_graph_rep(back) == W);
      }
    }
  }

  TEST_CASE("J squares to zero and is the kernel of Phi",
            "[module_cat][property]") {
    std::mt19937_64 rng(14);
    for (auto const& T : sample_sets()) {
      for (int trial = 0; trial < 8; ++trial) {
        auto U = random_mod_plus(T, {2, 1}, 2, rng);
        auto V = random_mod_plus(T, {2, 1}, 2, rng);
        auto W = random_mod_plus(T, {2, 1}, 2, rng);
        if (hom_space(U, V).size() > 10 || hom_space(V, W).size() > 10) {
          continue;
        }
        INFO(T.to_string());
        std::vector<HomTuple> J_UV, J_VW;
        for (auto const& phi : all_homs(U, V)) {
          bool in_J = in_ideal_J(phi, U, V);
          CHECK(in_J == to_graph_hom(phi, U, V).is_zero());
          if (in_J) {
            J_UV.push_back(phi);
          }
        }
        for (auto const& psi : all_homs(V, W)) {
          if (in_ideal_J(psi, V, W)) {
            J_VW.push_back(psi);
          }
        }
        for (auto const& phi : J_UV) {
          for (auto const& psi : J_VW) {
            CHECK(compose(psi, phi).is_zero());
          }
        }
      }
    }
  }

  TEST_CASE("Phi is a functor on morphisms", "[module_cat][property]") {
    std::mt19937_64 rng(15);
    for (auto const& T : sample_sets()) {
      auto U = random_mod_plus(T, {2, 1}, 2, rng);
      auto V = random_mod_plus(T, {2, 1}, 2, rng);
      auto W = random_mod_plus(T, {2, 1}, 2, rng);
      if (hom_space(U, V).size() > 8 || hom_space(V, W).size() > 8) {
        continue;
      }
      for (auto const& phi : all_homs(U, V)) {
        for (auto const& psi : all_homs(V, W)) {
          auto lhs = to_graph_hom(compose(psi, phi), U, W);
          auto a   = to_graph_hom(phi, U, V);
          auto b   = to_graph_hom(psi, V, W);
          CHECK(lhs.phi_plus == b.phi_plus * a.phi_plus);
          CHECK(lhs.phi_minus == b.phi_minus * a.phi_minus);
        }
      }
    }
  }

}  // namespace munnlab
