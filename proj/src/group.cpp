// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "munnlab/error.hpp"

namespace munnlab {

  namespace {

    constexpr std::size_t builtin_max_order = 128;

    std::string power_label(std::string const& base, std::size_t k) {
      if (k == 0) {
        return "e";
      }
      if (k == 1) {
        return base;
      }
      return base + "^" + std::to_string(k);
    }

    std::string cycle_label(std::vector<std::size_t> const& perm) {
      std::string       out;
      std::vector<bool> seen(perm.size(), false);
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) {
          continue;
        }
        out += "(";
        std::size_t j     = i;
        bool        first = true;
        while (!seen[j]) {
          seen[j] = true;
          out += (first ? "" : " ") + std::to_string(j + 1);
          first = false;
          j     = perm[j];
        }
        out += ")";
      }
      return out.empty() ? "e" : out;
    }

    std::string witness(std::size_t a, std::size_t b, std::size_t c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", "
             + std::to_string(c) + ")";
    }

  }  // namespace

  FiniteGroup
  FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table,
                          std::vector<std::string>              labels,
                          std::size_t                           max_order) {
    std::size_t const n = table.size();
    if (n == 0) {
      fail(ErrorKind::InvalidGroup, "empty Cayley table");
    }
    if (n > max_order) {
      fail(ErrorKind::InvalidGroup,
           "group order " + std::to_string(n) + " exceeds the cap "
               + std::to_string(max_order));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        fail(ErrorKind::InvalidGroup,
             "row " + std::to_string(i) + " has length "
                 + std::to_string(table[i].size()));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row_seen(n, false), col_seen(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t r = table[i][j], c = table[j][i];
        if (r >= n || c >= n) {
          fail(ErrorKind::InvalidGroup,
               "entry out of range near " + witness(i, j, std::max(r, c)));
        }
        if (row_seen[r]) {
          fail(ErrorKind::InvalidGroup,
               "row " + std::to_string(i) + " is not a permutation");
        }
        if (col_seen[c]) {
          fail(ErrorKind::InvalidGroup,
               "column " + std::to_string(i) + " is not a permutation");
        }
        row_seen[r] = col_seen[c] = true;
      }
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = table[e][x] == x && table[x][e] == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      fail(ErrorKind::InvalidGroup, "no identity element");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            fail(ErrorKind::InvalidGroup,
                 "not associative at " + witness(a, b, c));
          }
        }
      }
    }
    FiniteGroup g;
    g._identity = *identity;
    g._inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      auto it = std::find(table[a].begin(), table[a].end(), *identity);
      g._inverse[a] = static_cast<std::size_t>(it - table[a].begin());
      if (table[g._inverse[a]][a] != *identity) {
        fail(ErrorKind::InvalidGroup,
             "element " + std::to_string(a) + " has no two-sided inverse");
      }
    }
    if (labels.empty()) {
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == *identity ? "e" : std::to_string(a));
      }
    }
    if (labels.size() != n) {
      fail(ErrorKind::InvalidGroup, "label count differs from group order");
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
      fail(ErrorKind::InvalidGroup, "duplicate element labels");
    }
    for (auto const& l : labels) {
      if (l == "0") {
        fail(ErrorKind::InvalidGroup, "label \"0\" is reserved for zero");
      }
    }
    g._table  = std::move(table);
    g._labels = std::move(labels);
    g._name   = "table(" + std::to_string(n) + ")";
    return g;
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0 || n > builtin_max_order) {
      fail(ErrorKind::InvalidInput, "cyclic(n) needs 1 <= n <= 128");
    }
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string>              labels;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
      labels.push_back(power_label("g", a));
    }
    auto g  = from_table(std::move(t), std::move(labels), builtin_max_order);
    g._name = "cyclic(" + std::to_string(n) + ")";
    return g;
  }

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0 || 2 * n > builtin_max_order) {
      fail(ErrorKind::InvalidInput, "dihedral(n) needs 1 <= n <= 64");
    }
    // index k + n*x stands for r^k s^x
    std::size_t const                     N = 2 * n;
    std::vector<std::vector<std::size_t>> t(N, std::vector<std::size_t>(N));
    std::vector<std::string>              labels(N);
    for (std::size_t a = 0; a < N; ++a) {
      std::size_t ka = a % n, xa = a / n;
      for (std::size_t b = 0; b < N; ++b) {
        std::size_t kb = b % n, xb = b / n;
        std::size_t k  = xa == 0 ? (ka + kb) % n : (ka + n - kb) % n;
        t[a][b]        = k + n * ((xa + xb) % 2);
      }
      std::string r = ka == 0 ? "" : power_label("r", ka);
      labels[a]     = xa == 0 ? (ka == 0 ? "e" : r) : r + "s";
    }
    auto g  = from_table(std::move(t), std::move(labels), builtin_max_order);
    g._name = "dihedral(" + std::to_string(n) + ")";
    return g;
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 5) {
      fail(ErrorKind::InvalidInput, "symmetric(n) needs 1 <= n <= 5");
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t const                     N = perms.size();
    std::vector<std::vector<std::size_t>> t(N, std::vector<std::size_t>(N));
    std::vector<std::string>              labels;
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[a][perms[b][i]];  // apply b first
        }
        t[a][b] = static_cast<std::size_t>(
            std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
      }
      labels.push_back(cycle_label(perms[a]));
    }
    auto g  = from_table(std::move(t), std::move(labels), builtin_max_order);
    g._name = "symmetric(" + std::to_string(n) + ")";
    return g;
  }

  FiniteGroup FiniteGroup::direct_product(FiniteGroup const& a,
                                          FiniteGroup const& b) {
    std::size_t const na = a.order(), nb = b.order(), N = na * nb;
    if (N > builtin_max_order) {
      fail(ErrorKind::InvalidInput, "direct product larger than 128");
    }
    std::vector<std::vector<std::size_t>> t(N, std::vector<std::size_t>(N));
    std::vector<std::string>              labels(N);
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
      }
      bool const id = x / nb == a.identity() && x % nb == b.identity();
      labels[x]     = id ? "e"
                         : "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    }
    auto g  = from_table(std::move(t), std::move(labels), builtin_max_order);
    g._name = "direct_product(" + a.name() + "," + b.name() + ")";
    return g;
  }

  std::optional<FiniteGroup::element_index>
  FiniteGroup::find_label(std::string const& label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<element_index>(it - _labels.begin());
  }

  std::size_t FiniteGroup::element_order(element_index a) const {
    std::size_t   k = 1;
    element_index x = a;
    while (x != _identity) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::size_t FiniteGroup::exponent() const {
    std::size_t e = 1;
    for (std::size_t a = 0; a < order(); ++a) {
      e = std::lcm(e, element_order(a));
    }
    return e;
  }

  std::vector<std::vector<FiniteGroup::element_index>>
  FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<element_index>> out;
    std::vector<bool>                       seen(order(), false);
    for (element_index a = 0; a < order(); ++a) {
      if (seen[a]) {
        continue;
      }
      std::set<element_index> cls;
      for (element_index g = 0; g < order(); ++g) {
        cls.insert(mul(mul(g, a), inverse(g)));
      }
      for (auto x : cls) {
        seen[x] = true;
      }
      out.emplace_back(cls.begin(), cls.end());
    }
    return out;
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    struct SpecParser {
      std::string s;
      std::size_t pos = 0;

      [[noreturn]] void error(std::string const& why) const {
        fail(ErrorKind::InvalidInput,
             "bad group spec \"" + s + "\": " + why);
      }

      std::string word() {
        std::size_t start = pos;
        while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
          ++pos;
        }
        return s.substr(start, pos - start);
      }

      void expect(char c) {
        if (pos >= s.size() || s[pos] != c) {
          error(std::string("expected '") + c + "'");
        }
        ++pos;
      }

      std::size_t number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          ++pos;
        }
        if (start == pos || pos - start > 6) {
          error("expected a small integer");
        }
        return std::stoul(s.substr(start, pos - start));
      }

      FiniteGroup group() {
        std::string name = word();
        expect('(');
        if (name == "direct_product") {
          FiniteGroup a = group();
          expect(',');
          FiniteGroup b = group();
          expect(')');
          return FiniteGroup::direct_product(a, b);
        }
        std::size_t n = number();
        expect(')');
        if (name == "cyclic") {
          return FiniteGroup::cyclic(n);
        } else if (name == "dihedral") {
          return FiniteGroup::dihedral(n);
        } else if (name == "symmetric") {
          return FiniteGroup::symmetric(n);
        }
        error("unknown constructor \"" + name + "\"");
      }
    };

  }  // namespace

  FiniteGroup group_builtin(std::string const& spec) {
    SpecParser parser;
    for (char c : spec) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        parser.s.push_back(c);
      }
    }
    FiniteGroup g = parser.group();
    if (parser.pos != parser.s.size()) {
      parser.error("trailing characters");
    }
    return g;
  }

  std::vector<std::string> builtin_catalog(std::size_t max_order) {
    std::vector<std::string> out;
    auto c = [](std::size_t n) { return "cyclic(" + std::to_string(n) + ")"; };
    for (std::size_t n = 1; n <= max_order; ++n) {
      out.push_back(c(n));
    }
    for (std::size_t n = 2; 2 * n <= max_order; ++n) {
      out.push_back("dihedral(" + std::to_string(n) + ")");
    }
    std::size_t fact = 6;
    for (std::size_t n = 3; n <= 5 && fact <= max_order; fact *= ++n) {
      out.push_back("symmetric(" + std::to_string(n) + ")");
    }
    for (std::size_t a = 2; a * a <= max_order; ++a) {
      for (std::size_t b = a; a * b <= max_order; ++b) {
        out.push_back("direct_product(" + c(a) + "," + c(b) + ")");
      }
    }
    for (std::size_t n = 2; 4 * n <= max_order; ++n) {
      out.push_back("direct_product(" + c(2) + ",dihedral(" + std::to_string(n)
                    + "))");
    }
    return out;
  }

}  // namespace munnlab
