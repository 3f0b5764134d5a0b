// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"

#include "munnlab/error.hpp"
#include "munnlab/valued_graph.hpp"

namespace munnlab {

  namespace {
    using Vec = std::vector<std::int64_t>;

    TripleSet random_triples(std::mt19937_64& rng, std::size_t max_count) {
      std::vector<Triple> ts;
      std::size_t         count = rng() % (max_count + 1);
      while (ts.size() < count) {
        Triple t{1 + rng() % 3, rng() % 3, rng() % 3};
        if (t.m + t.n > 0) {
          ts.push_back(t);
        }
      }
      return TripleSet(ts);
    }

    // Kind and vertex sets of the components, vertices mapped through perm.
    std::vector<std::pair<std::vector<std::size_t>, GraphKind>>
    signature(std::vector<ComponentClass> const& cs,
              std::vector<std::size_t> const&    perm) {
      std::vector<std::pair<std::vector<std::size_t>, GraphKind>> out;
      for (auto const& c : cs) {
        std::vector<std::size_t> v;
        for (auto x : c.vertices) {
          v.push_back(perm[x]);
        }
        std::sort(v.begin(), v.end());
        out.push_back({v, c.kind});
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Oracle for non-definiteness of a connected component: a nonnegative
    // integer vector with q(x) < 0 in a small box.
    bool has_negative_vector(TitsForm const&                 B,
                             std::vector<std::size_t> const& vertices,
                             std::size_t                     n,
                             std::int64_t                    box) {
      Vec         x(n, 0);
      std::size_t m = vertices.size();
      Vec         digits(m, 0);
      while (true) {
        std::size_t i = 0;
        while (i < m && digits[i] == box) {
          digits[i] = 0;
          ++i;
        }
        if (i == m) {
          return false;
        }
        ++digits[i];
        for (std::size_t j = 0; j < m; ++j) {
          x[vertices[j]] = digits[j];
        }
        if (B.value(x) < 0) {
          return true;
        }
      }
    }
  }  // namespace

  TEST_CASE("graph_from_triples: examples", "[quick][valued_graph]") {
    auto g = graph_from_triples(TripleSet({{1, 1, 1}}));
    REQUIRE(g.labels() == std::vector<std::string>{"+", "-", "k1"});
    REQUIRE(g.valuation(2, 0) == 1);
    REQUIRE(g.valuation(0, 2) == 1);
    REQUIRE(g.valuation(1, 2) == 1);
    REQUIRE(g.valuation(0, 1) == 0);

    auto h = graph_from_triples(TripleSet({{2, 1, 1}}));
    REQUIRE(h.weights() == std::vector<std::uint64_t>{1, 1, 2});
    REQUIRE(h.valuation(2, 0) == 1);
    REQUIRE(h.valuation(0, 2) == 2);
    REQUIRE(h.valuation(1, 2) == 2);
    REQUIRE(h.valuation(2, 1) == 1);

    auto e = graph_from_triples(TripleSet());
    REQUIRE(e.size() == 2);
    REQUIRE(e.edges().empty());
  }

  TEST_CASE("cartan_matrix: examples", "[quick][valued_graph]") {
    auto C = cartan_matrix(graph_from_triples(TripleSet({{1, 1, 1}})));
    // order (+, -, k1)
    REQUIRE(C.entries
            == std::vector<Vec>{{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}});
    auto g = graph_from_triples(TripleSet({{2, 1, 1}})).relabeled({0, 2, 1});
    REQUIRE(g.labels() == std::vector<std::string>{"+", "k1", "-"});
    REQUIRE(cartan_matrix(g).entries
            == std::vector<Vec>{{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}});
    REQUIRE(cartan_matrix(graph_from_triples(TripleSet())).entries
            == std::vector<Vec>{{2, 0}, {0, 2}});
    ValuedGraph bad({"a", "b"}, {1, 1}, {{0, 1, 1, 2}});
    try {
      cartan_matrix(bad);
      FAIL("expected SymmetryViolation");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::SymmetryViolation);
    }
  }

  TEST_CASE("tits_form: examples", "[quick][valued_graph]") {
    auto B = tits_form(graph_from_triples(TripleSet({{1, 1, 1}})));
    REQUIRE(B.value({1, 1, 1}) == 1);
    auto B2 = tits_form(graph_from_triples(TripleSet({{2, 1, 1}})));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      std::int64_t p = rng() % 11 - 5, m = rng() % 11 - 5, k = rng() % 11 - 5;
      REQUIRE(B2.value({p, m, k}) == (p - k) * (p - k) + (m - k) * (m - k));
    }
    REQUIRE(B2.entries()[0][2] == "-1");
    REQUIRE(tits_form(graph_from_triples(TripleSet())).value({1, 0}) == 1);
    auto B3 = tits_form(graph_from_triples(TripleSet({{1, 1, 0}})));
    REQUIRE(B3.entries()[0][2] == "-1/2");
  }

  TEST_CASE("classify_components: examples", "[quick][valued_graph]") {
    auto a3 = classify_components(graph_from_triples(TripleSet({{1, 1, 1}})));
    REQUIRE(a3.size() == 1);
    REQUIRE(a3[0].kind == GraphKind::Dynkin);
    REQUIRE(a3[0].name == "A3");

    auto b2 = classify_components(graph_from_triples(TripleSet({{2, 1, 1}})));
    REQUIRE(b2.size() == 1);
    REQUIRE(b2[0].kind == GraphKind::Euclidean);
    REQUIRE(b2[0].corank == 1);
    REQUIRE(b2[0].null_root == Vec{1, 1, 1});
    REQUIRE(b2[0].name == "B~2");

    auto wild = classify_components(graph_from_triples(TripleSet({{1, 2, 2}})));
    REQUIRE(wild.size() == 1);
    REQUIRE(wild[0].kind == GraphKind::Indefinite);
    REQUIRE(tits_form(graph_from_triples(TripleSet({{1, 2, 2}}))).value({1, 1, 1})
            == -1);

    auto empty = classify_components(graph_from_triples(TripleSet()));
    REQUIRE(empty.size() == 2);
    REQUIRE(empty[0].name == "A1");
    REQUIRE(empty[1].kind == GraphKind::Dynkin);
  }

  TEST_CASE("dynkin_name: examples", "[quick][valued_graph]") {
    auto name = [](std::vector<Triple> ts) {
      auto cs = classify_components(graph_from_triples(TripleSet(ts)));
      std::vector<std::string> out;
      for (auto const& c : cs) {
        out.push_back(c.name);
      }
      return out;
    };
    REQUIRE(name({{1, 1, 0}}) == std::vector<std::string>{"A2", "A1"});
    REQUIRE(name({{2, 1, 0}}) == std::vector<std::string>{"B2", "A1"});
    REQUIRE(name({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}})
            == std::vector<std::string>{"D4", "A1"});
    REQUIRE(name({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}, {1, 1, 0}})
            == std::vector<std::string>{"D~4", "A1"});
    REQUIRE(name({{1, 2, 0}}) == std::vector<std::string>{"A~12", "A1"});
    REQUIRE(name({{4, 1, 0}}) == std::vector<std::string>{"A~11", "A1"});
    REQUIRE(name({{1, 1, 0}, {1, 1, 0}, {2, 1, 0}})
            == std::vector<std::string>{"BD~3", "A1"});
    REQUIRE(name({{1, 1, 0}, {3, 1, 0}}) == std::vector<std::string>{"G~2", "A1"});
    REQUIRE(name({{2, 1, 0}, {1, 1, 1}, {2, 0, 1}})
            == std::vector<std::string>{"B~4"});
    REQUIRE(name({{1, 1, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}, {1, 0, 1}})
            == std::vector<std::string>{"D~6"});
    REQUIRE(name({{1, 1, 1}, {1, 1, 1}}) == std::vector<std::string>{"A~3"});
    REQUIRE(name({{3, 1, 0}}) == std::vector<std::string>{"G2", "A1"});
    REQUIRE(name({{2, 1, 0}, {2, 1, 0}}) == std::vector<std::string>{"B~2", "A1"});
  }

  TEST_CASE("positive_real_roots: examples", "[quick][valued_graph]") {
    auto a3 = positive_real_roots(graph_from_triples(TripleSet({{1, 1, 1}})));
    REQUIRE_FALSE(a3.truncated);
    // order (+, -, k1)
    REQUIRE(a3.roots
            == std::vector<Vec>{
                {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}});
    auto b2 = positive_real_roots(graph_from_triples(TripleSet({{2, 1, 0}})));
    REQUIRE_FALSE(b2.truncated);
    REQUIRE(b2.roots.size() == 5);
    auto a2 = positive_real_roots(graph_from_triples(TripleSet({{1, 1, 0}})));
    REQUIRE(a2.roots.size() == 4);
    auto euc = positive_real_roots(graph_from_triples(TripleSet({{2, 1, 1}})), 10);
    REQUIRE(euc.truncated);
  }

  TEST_CASE("to_dot: examples", "[quick][valued_graph]") {
    auto dot = to_dot(graph_from_triples(TripleSet({{2, 1, 1}})));
    REQUIRE(dot
            == "digraph munn {\n"
               "  \"+\" [label=\"+\", weight_f=1];\n"
               "  \"-\" [label=\"-\", weight_f=1];\n"
               "  \"k1\" [label=\"k1\", weight_f=2];\n"
               "  \"k1\" -> \"+\" [label=\"(1,2)\"];\n"
               "  \"-\" -> \"k1\" [label=\"(2,1)\"];\n"
               "}\n");
    auto empty = to_dot(graph_from_triples(TripleSet()));
    REQUIRE(empty.find("->") == std::string::npos);
  }

  TEST_CASE("valued graphs are symmetrizable", "[quick][valued_graph][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      auto g = graph_from_triples(random_triples(rng, 5));
      for (auto const& e : g.edges()) {
        REQUIRE(e.d_from_to * g.weights()[e.from]
                == e.d_to_from * g.weights()[e.to]);
      }
      auto B = tits_form(g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        Vec x(g.size(), 0);
        x[i] = 1;
        REQUIRE(B.value(x) == static_cast<std::int64_t>(g.weights()[i]));
        for (std::size_t j = 0; j < g.size(); ++j) {
          REQUIRE(B.twice[i][j] == B.twice[j][i]);
        }
      }
    }
  }

  TEST_CASE("classification is invariant under relabeling and reversal",
            "[quick][valued_graph][property]") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      auto g = graph_from_triples(random_triples(rng, 5));
      std::vector<std::size_t> id(g.size()), perm(g.size());
      std::iota(id.begin(), id.end(), 0);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto base = signature(classify_components(g), perm);
      REQUIRE(signature(classify_components(g.relabeled(perm)), id) == base);
      REQUIRE(signature(classify_components(g.reversed()), perm) == base);
    }
  }

  TEST_CASE("classification agrees with roots and form values",
            "[quick][valued_graph][property]") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      auto g  = graph_from_triples(random_triples(rng, 4));
      auto B  = tits_form(g);
      auto cs = classify_components(g);
      bool all_dynkin = std::all_of(cs.begin(), cs.end(), [](auto const& c) {
        return c.kind == GraphKind::Dynkin;
      });
      // a root system is finite exactly for Dynkin graphs
      auto roots = positive_real_roots(g, 40);
      REQUIRE(roots.truncated == !all_dynkin);
      if (all_dynkin) {
        auto max_f = *std::max_element(g.weights().begin(), g.weights().end());
        for (auto const& x : roots.roots) {
          REQUIRE(B.value(x) > 0);
          REQUIRE(B.value(x) <= static_cast<std::int64_t>(max_f));
        }
      }
      for (auto const& c : cs) {
        if (c.kind == GraphKind::Euclidean) {
          Vec delta(g.size(), 0);
          for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            delta[c.vertices[i]] = (*c.null_root)[i];
          }
          REQUIRE(B.value(delta) == 0);
          for (int s = 0; s < 5; ++s) {
            Vec x(g.size(), 0);
            for (auto v : c.vertices) {
              x[v] = static_cast<std::int64_t>(rng() % 7) - 3;
            }
            for (std::int64_t t : {1, 2}) {
              Vec y = x;
              for (std::size_t i = 0; i < y.size(); ++i) {
                y[i] += t * delta[i];
              }
              REQUIRE(B.value(y) == B.value(x));
            }
          }
        } else if (c.kind == GraphKind::Indefinite) {
          REQUIRE(has_negative_vector(B, c.vertices, g.size(), 3));
        }
      }
    }
  }

}  // namespace munnlab
