// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include <numeric>
#include <vector>

#include "catch_amalgamated.hpp"

#include "munnlab/error.hpp"
#include "munnlab/group.hpp"

namespace munnlab {

  namespace {
    ErrorKind kind_of(auto&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      FAIL("no error raised");
      return ErrorKind::InternalInvariantViolation;
    }
  }  // namespace

  TEST_CASE("group_from_table: valid and invalid tables", "[quick][group]") {
    auto triv = FiniteGroup::from_table({{0}});
    REQUIRE(triv.order() == 1);
    auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
    REQUIRE(c2.order() == 2);
    REQUIRE(c2.inverse(1) == 1);
    REQUIRE(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); })
            == ErrorKind::InvalidGroup);
    // a Latin square without associativity: x*y = -x-y mod 3
    REQUIRE(kind_of([] {
              FiniteGroup::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
            })
            == ErrorKind::InvalidGroup);
    REQUIRE(kind_of([] { FiniteGroup::from_table({{0, 1}, {1}}); })
            == ErrorKind::InvalidGroup);
  }

  TEST_CASE("group_builtin: orders", "[quick][group]") {
    REQUIRE(group_builtin("cyclic(3)").order() == 3);
    REQUIRE(group_builtin("symmetric(3)").order() == 6);
    REQUIRE(group_builtin("direct_product(cyclic(2), cyclic(2))").order() == 4);
    REQUIRE(group_builtin("dihedral(4)").order() == 8);
    REQUIRE(group_builtin("symmetric(5)").order() == 120);
    REQUIRE(kind_of([] { group_builtin("symmetric(6)"); })
            == ErrorKind::InvalidInput);
    REQUIRE(kind_of([] { group_builtin("quaternion(8)"); })
            == ErrorKind::InvalidInput);
  }

  TEST_CASE("exponent: examples", "[quick][group]") {
    REQUIRE(group_builtin("cyclic(3)").exponent() == 3);
    REQUIRE(group_builtin("symmetric(3)").exponent() == 6);
    REQUIRE(group_builtin("direct_product(cyclic(2),cyclic(2))").exponent()
            == 2);
  }

  TEST_CASE("built-in groups are associative and well formed",
            "[quick][group][property]") {
    for (auto const& spec : builtin_catalog(24)) {
      auto G = group_builtin(spec);
      auto n = G.order();
      for (std::size_t a = 0; a < n; ++a) {
        REQUIRE(G.mul(a, G.inverse(a)) == G.identity());
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
          }
        }
      }
      REQUIRE(n % G.exponent() == 0);
      std::size_t total = 0;
      for (auto const& cls : G.conjugacy_classes()) {
        total += cls.size();
        REQUIRE(n % cls.size() == 0);
      }
      REQUIRE(total == n);
    }
  }

  TEST_CASE("cyclic(n) has one element of each order dividing n",
            "[quick][group][property]") {
    for (std::size_t n = 1; n <= 24; ++n) {
      auto G = FiniteGroup::cyclic(n);
      for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) {
          continue;
        }
        std::size_t count = 0, cyclic_subgroup_generators = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (G.element_order(a) == d) {
            ++count;
          }
        }
        for (std::size_t k = 1; k <= d; ++k) {
          if (std::gcd(k, d) == 1) {
            ++cyclic_subgroup_generators;
          }
        }
        // the elements of order d generate the unique subgroup of order d
        REQUIRE(count == cyclic_subgroup_generators);
      }
    }
  }

  TEST_CASE("conjugacy class counts", "[quick][group]") {
    REQUIRE(FiniteGroup::symmetric(3).conjugacy_classes().size() == 3);
    REQUIRE(FiniteGroup::symmetric(4).conjugacy_classes().size() == 5);
    REQUIRE(FiniteGroup::dihedral(4).conjugacy_classes().size() == 5);
    REQUIRE(FiniteGroup::dihedral(5).conjugacy_classes().size() == 4);
    REQUIRE(FiniteGroup::cyclic(6).conjugacy_classes().size() == 6);
    REQUIRE_FALSE(FiniteGroup::symmetric(3).is_abelian());
  }

  TEST_CASE("labels", "[quick][group]") {
    auto G = FiniteGroup::cyclic(3);
    REQUIRE(G.label(0) == "e");
    REQUIRE(G.find_label("g") == std::size_t(1));
    REQUIRE(G.find_label("g^2") == std::size_t(2));
    REQUIRE_FALSE(G.find_label("h").has_value());
  }

}  // namespace munnlab
