// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/valued_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "munnlab/error.hpp"

namespace munnlab {

  using rational = boost::multiprecision::cpp_rational;

  namespace {
    using IntMatrix = std::vector<std::vector<std::int64_t>>;
    using RatMatrix = std::vector<std::vector<rational>>;

    RatMatrix restrict(IntMatrix const& m, std::vector<std::size_t> const& v) {
      RatMatrix out(v.size(), std::vector<rational>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          out[i][j] = m[v[i]][v[j]];
        }
      }
      return out;
    }

    using wide = __int128;

    std::vector<std::vector<wide>> widen(IntMatrix const&                m,
                                         std::vector<std::size_t> const& v) {
      std::vector<std::vector<wide>> out(v.size(), std::vector<wide>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          out[i][j] = m[v[i]][v[j]];
        }
      }
      return out;
    }

    wide bareiss_step(wide a, wide b, wide c, wide d, wide prev) {
      wide const x = a * b - c * d;
      MUNNLAB_ASSERT(x < (wide(1) << 120) && x > -(wide(1) << 120),
                     "integer elimination overflow");
      MUNNLAB_ASSERT(x % prev == 0, "inexact integer elimination");
      return x / prev;
    }

    // Sylvester: positive definite iff all leading principal minors are
    // positive. Without pivoting, the k-th Bareiss pivot is the k-th minor.
    bool positive_definite(IntMatrix const&                m,
                           std::vector<std::size_t> const& v) {
      auto        a    = widen(m, v);
      std::size_t n    = a.size();
      wide        prev = 1;
      for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) {
          return false;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
          for (std::size_t j = k + 1; j < n; ++j) {
            a[i][j] = bareiss_step(a[i][j], a[k][k], a[i][k], a[k][j], prev);
          }
        }
        prev = a[k][k];
      }
      return true;
    }

    // Rank by fraction-free elimination with row pivoting.
    std::size_t integer_rank(IntMatrix const&                m,
                             std::vector<std::size_t> const& v) {
      auto        a    = widen(m, v);
      std::size_t n    = a.size();
      std::size_t r    = 0;
      wide        prev = 1;
      for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) {
          ++p;
        }
        if (p == n) {
          continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < n; ++i) {
          for (std::size_t j = c + 1; j < n; ++j) {
            a[i][j] = bareiss_step(a[i][j], a[r][c], a[i][c], a[r][j], prev);
          }
          a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
      }
      return r;
    }

    // Rank and a kernel basis over Q.
    std::pair<std::size_t, std::vector<std::vector<rational>>>
    rational_kernel(RatMatrix a) {
      std::size_t const        rows = a.size();
      std::size_t const        cols = rows == 0 ? 0 : a[0].size();
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
          ++p;
        }
        if (p == rows) {
          continue;
        }
        std::swap(a[p], a[r]);
        rational inv = 1 / a[r][c];
        for (auto& x : a[r]) {
          x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
          if (i != r && a[i][c] != 0) {
            rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
              a[i][j] -= f * a[r][j];
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      std::vector<std::vector<rational>> basis;
      for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) {
          continue;
        }
        std::vector<rational> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          v[pivots[i]] = -a[i][free];
        }
        basis.push_back(std::move(v));
      }
      return {r, basis};
    }

    // Scales a rational vector with entries of one sign to coprime positive
    // integers.
    std::optional<std::vector<std::int64_t>>
    positive_integer_vector(std::vector<rational> const& v) {
      bool all_pos = std::all_of(
          v.begin(), v.end(), [](rational const& x) { return x > 0; });
      bool all_neg = std::all_of(
          v.begin(), v.end(), [](rational const& x) { return x < 0; });
      if (!all_pos && !all_neg) {
        return std::nullopt;
      }
      using boost::multiprecision::cpp_int;
      cpp_int lcm = 1;
      for (auto const& x : v) {
        cpp_int den = boost::multiprecision::denominator(x);
        lcm         = lcm / boost::multiprecision::gcd(lcm, den) * den;
      }
      std::vector<cpp_int> ints;
      cpp_int              g = 0;
      for (auto const& x : v) {
        cpp_int i = boost::multiprecision::numerator(x) * lcm
                    / boost::multiprecision::denominator(x);
        if (i < 0) {
          i = -i;
        }
        g = boost::multiprecision::gcd(g, i);
        ints.push_back(i);
      }
      std::vector<std::int64_t> out;
      for (auto const& i : ints) {
        out.push_back(static_cast<std::int64_t>(i / g));
      }
      return out;
    }

    // Shape data used for naming.
    struct Shape {
      std::size_t                           n = 0;
      std::vector<std::vector<std::size_t>> adj;       // local indices
      std::vector<std::uint64_t>            weight;    // f of each vertex
      std::vector<std::vector<std::uint64_t>> product;  // d_ij d_ji
      std::size_t                           edges = 0;
    };

    Shape shape_of(ValuedGraph const& g, std::vector<std::size_t> const& v) {
      Shape s;
      s.n = v.size();
      s.adj.resize(s.n);
      s.product.assign(s.n, std::vector<std::uint64_t>(s.n, 0));
      for (std::size_t i = 0; i < s.n; ++i) {
        s.weight.push_back(g.weights()[v[i]]);
        for (std::size_t j = 0; j < s.n; ++j) {
          auto p = g.valuation(v[i], v[j]) * g.valuation(v[j], v[i]);
          if (p != 0 && i != j) {
            s.adj[i].push_back(j);
            s.product[i][j] = p;
            if (i < j) {
              ++s.edges;
            }
          }
        }
      }
      return s;
    }

    // Lengths of the arms hanging off vertex c in a tree, sorted.
    std::vector<std::size_t> arm_lengths(Shape const& s, std::size_t c) {
      std::vector<std::size_t> arms;
      for (auto start : s.adj[c]) {
        std::size_t len = 1, prev = c, cur = start;
        while (s.adj[cur].size() == 2) {
          std::size_t next = s.adj[cur][0] == prev ? s.adj[cur][1] : s.adj[cur][0];
          prev             = cur;
          cur              = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      return arms;
    }

    std::string n_name(char const* prefix, std::size_t n) {
      return std::string(prefix) + std::to_string(n);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ValuedGraph
  ////////////////////////////////////////////////////////////////////////

  ValuedGraph::ValuedGraph(std::vector<std::string>   labels,
                           std::vector<std::uint64_t> weights,
                           std::vector<ValuedEdge>    edges)
      : _labels(std::move(labels)),
        _weights(std::move(weights)),
        _edges(std::move(edges)) {
    if (_labels.size() != _weights.size()) {
      fail(ErrorKind::ShapeMismatch, "one weight per vertex is required");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto const& e : _edges) {
      if (e.from >= size() || e.to >= size() || e.from == e.to) {
        fail(ErrorKind::InvalidInput, "edge endpoints out of range or a loop");
      }
      auto key = std::minmax(e.from, e.to);
      if (!seen.insert(key).second) {
        fail(ErrorKind::InvalidInput, "more than one edge between two vertices");
      }
    }
  }

  std::uint64_t ValuedGraph::valuation(std::size_t i, std::size_t j) const {
    for (auto const& e : _edges) {
      if (e.from == i && e.to == j) {
        return e.d_from_to;
      }
      if (e.from == j && e.to == i) {
        return e.d_to_from;
      }
    }
    return 0;
  }

  ValuedGraph ValuedGraph::relabeled(std::vector<std::size_t> const& perm) const {
    std::vector<std::string>   labels(size());
    std::vector<std::uint64_t> weights(size());
    for (std::size_t v = 0; v < size(); ++v) {
      labels.at(perm.at(v))  = _labels[v];
      weights.at(perm.at(v)) = _weights[v];
    }
    std::vector<ValuedEdge> edges;
    for (auto const& e : _edges) {
      edges.push_back({perm[e.from], perm[e.to], e.d_from_to, e.d_to_from});
    }
    return ValuedGraph(labels, weights, edges);
  }

  ValuedGraph ValuedGraph::reversed() const {
    std::vector<ValuedEdge> edges;
    for (auto const& e : _edges) {
      edges.push_back({e.to, e.from, e.d_to_from, e.d_from_to});
    }
    return ValuedGraph(_labels, _weights, edges);
  }

  ValuedGraph graph_from_triples(TripleSet const& T) {
    std::vector<std::string>   labels{"+", "-"};
    std::vector<std::uint64_t> weights{1, 1};
    std::vector<ValuedEdge>    edges;
    for (std::size_t k = 0; k < T.size(); ++k) {
      auto const&       t = T[k];
      std::size_t const v = labels.size();
      labels.push_back("k" + std::to_string(k + 1));
      weights.push_back(t.d);
      if (t.m > 0) {
        // k -> + with d_{k+} = m, d_{+k} = m d
        edges.push_back({v, ValuedGraph::plus, t.m, t.m * t.d});
      }
      if (t.n > 0) {
        // - -> k with d_{-k} = n d, d_{k-} = n
        edges.push_back({ValuedGraph::minus, v, t.n * t.d, t.n});
      }
    }
    return ValuedGraph(labels, weights, edges);
  }

  CartanMatrix cartan_matrix(ValuedGraph const& g) {
    std::size_t const n = g.size();
    CartanMatrix      C{g.labels(), IntMatrix(n, std::vector<std::int64_t>(n, 0))};
    for (std::size_t i = 0; i < n; ++i) {
      C.entries[i][i] = 2;
    }
    for (auto const& e : g.edges()) {
      if (e.d_from_to * g.weights()[e.from] != e.d_to_from * g.weights()[e.to]) {
        fail(ErrorKind::SymmetryViolation,
             "edge " + g.labels()[e.from] + " -- " + g.labels()[e.to]
                 + " violates d_ij f_i = d_ji f_j");
      }
      C.entries[e.from][e.to] = -static_cast<std::int64_t>(e.d_from_to);
      C.entries[e.to][e.from] = -static_cast<std::int64_t>(e.d_to_from);
    }
    return C;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tits form
  ////////////////////////////////////////////////////////////////////////

  TitsForm tits_form(ValuedGraph const& g) {
    auto      C = cartan_matrix(g).entries;
    TitsForm  B{C};
    for (std::size_t i = 0; i < C.size(); ++i) {
      for (std::size_t j = 0; j < C.size(); ++j) {
        B.twice[i][j] = static_cast<std::int64_t>(g.weights()[i]) * C[i][j];
      }
    }
    return B;
  }

  std::int64_t TitsForm::value(std::vector<std::int64_t> const& x) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < twice.size(); ++i) {
      for (std::size_t j = 0; j < twice.size(); ++j) {
        s += x.at(i) * twice[i][j] * x.at(j);
      }
    }
    MUNNLAB_ASSERT(s % 2 == 0, "Tits form took a half-integer value");
    return s / 2;
  }

  std::vector<std::vector<std::string>> TitsForm::entries() const {
    std::vector<std::vector<std::string>> out;
    for (auto const& row : twice) {
      out.emplace_back();
      for (auto x : row) {
        out.back().push_back(x % 2 == 0 ? std::to_string(x / 2)
                                        : std::to_string(x) + "/2");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(GraphKind kind) {
    switch (kind) {
      case GraphKind::Dynkin:
        return "Dynkin";
      case GraphKind::Euclidean:
        return "Euclidean";
      case GraphKind::Indefinite:
        return "Indefinite";
    }
    return "?";
  }

  std::vector<ComponentClass> classify_components(ValuedGraph const& g) {
    std::size_t const        n = g.size();
    IntMatrix const          S = tits_form(g).twice;
    std::vector<bool>        seen(n, false);
    std::vector<ComponentClass> out;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) {
        continue;
      }
      std::vector<std::size_t> comp;
      std::queue<std::size_t>  todo;
      todo.push(start);
      seen[start] = true;
      while (!todo.empty()) {
        std::size_t v = todo.front();
        todo.pop();
        comp.push_back(v);
        for (std::size_t w = 0; w < n; ++w) {
          if (!seen[w] && S[v][w] != 0) {
            seen[w] = true;
            todo.push(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());

      std::size_t const rk = integer_rank(S, comp);
      ComponentClass    cls{comp, GraphKind::Indefinite, "", comp.size() - rk, {}};
      if (positive_definite(S, comp)) {
        cls.kind = GraphKind::Dynkin;
      } else if (cls.corank == 1) {
        auto ker  = rational_kernel(restrict(S, comp)).second;
        auto root = positive_integer_vector(ker.at(0));
        bool deletions_definite = root.has_value();
        for (std::size_t drop = 0; drop < comp.size() && deletions_definite;
             ++drop) {
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i != drop) {
              rest.push_back(comp[i]);
            }
          }
          deletions_definite = positive_definite(S, rest);
        }
        if (deletions_definite) {
          cls.kind      = GraphKind::Euclidean;
          cls.null_root = root;
        }
      }
      cls.name = cls.kind == GraphKind::Indefinite
                     ? "unnamed"
                     : dynkin_name(g, comp, cls.kind);
      out.push_back(std::move(cls));
    }
    return out;
  }

  std::string dynkin_name(ValuedGraph const& g, ComponentClass const& c) {
    return dynkin_name(g, c.vertices, c.kind);
  }

  std::string dynkin_name(ValuedGraph const&              g,
                          std::vector<std::size_t> const& vertices,
                          GraphKind                       kind) {
    if (kind == GraphKind::Indefinite) {
      return "unnamed";
    }
    Shape const s = shape_of(g, vertices);
    std::size_t const n = s.n;
    if (n == 1) {
      return "A1";
    }
    // heavy edges: product d_ij d_ji > 1
    std::vector<std::pair<std::size_t, std::size_t>> heavy;
    std::uint64_t                                    max_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s.product[i][j] > 1) {
          heavy.push_back({i, j});
          max_product = std::max(max_product, s.product[i][j]);
        }
      }
    }
    std::size_t max_degree = 0, branch_points = 0;
    for (auto const& a : s.adj) {
      max_degree = std::max(max_degree, a.size());
      branch_points += a.size() >= 3 ? 1 : 0;
    }
    bool const is_tree = s.edges + 1 == n;
    bool const is_path = is_tree && max_degree <= 2;
    auto is_leaf = [&](std::size_t v) { return s.adj[v].size() == 1; };

    if (kind == GraphKind::Dynkin) {
      if (heavy.empty()) {
        if (is_path) {
          return n_name("A", n);
        }
        if (is_tree && branch_points == 1 && max_degree == 3) {
          std::size_t c = 0;
          while (s.adj[c].size() != 3) {
            ++c;
          }
          auto arms = arm_lengths(s, c);
          if (arms[0] == 1 && arms[1] == 1) {
            return n_name("D", n);
          }
          if (arms == std::vector<std::size_t>{1, 2, 2}) {
            return "E6";
          }
          if (arms == std::vector<std::size_t>{1, 2, 3}) {
            return "E7";
          }
          if (arms == std::vector<std::size_t>{1, 2, 4}) {
            return "E8";
          }
        }
        return "unnamed";
      }
      if (heavy.size() == 1 && is_path) {
        auto [a, b] = heavy[0];
        if (max_product == 3 && n == 2) {
          return "G2";
        }
        if (max_product == 2) {
          if (n == 2) {
            return "B2";
          }
          if (is_leaf(a) || is_leaf(b)) {
            std::size_t leaf  = is_leaf(a) ? a : b;
            std::size_t inner = leaf == a ? b : a;
            return n_name(s.weight[leaf] > s.weight[inner] ? "B" : "C", n);
          }
          if (n == 4) {
            return "F4";
          }
        }
      }
      return "unnamed";
    }

    // Euclidean
    if (n == 2) {
      auto d01 = g.valuation(vertices[0], vertices[1]);
      auto d10 = g.valuation(vertices[1], vertices[0]);
      return d01 == d10 ? "A~12" : "A~11";
    }
    if (heavy.empty()) {
      if (s.edges == n && max_degree == 2) {
        return n_name("A~", n - 1);
      }
      if (is_tree && max_degree == 4 && n == 5) {
        return "D~4";
      }
      if (is_tree && branch_points == 2 && max_degree == 3) {
        return n_name("D~", n - 1);
      }
      if (is_tree && branch_points == 1 && max_degree == 3) {
        std::size_t c = 0;
        while (s.adj[c].size() != 3) {
          ++c;
        }
        auto arms = arm_lengths(s, c);
        if (arms == std::vector<std::size_t>{2, 2, 2}) {
          return "E~6";
        }
        if (arms == std::vector<std::size_t>{1, 3, 3}) {
          return "E~7";
        }
        if (arms == std::vector<std::size_t>{1, 2, 5}) {
          return "E~8";
        }
      }
      return "unnamed";
    }
    if (is_path && heavy.size() == 1 && max_product == 3 && n == 3) {
      return "G~2";
    }
    if (max_product == 2 && is_tree) {
      auto at_end = [&](std::pair<std::size_t, std::size_t> e) {
        return is_leaf(e.first) || is_leaf(e.second);
      };
      if (is_path && heavy.size() == 2 && at_end(heavy[0])
          && at_end(heavy[1])) {
        return n_name("B~", n - 1);
      }
      if (heavy.size() == 1 && at_end(heavy[0])) {
        if (branch_points == 1 && max_degree == 3) {
          return n_name("BD~", n - 1);
        }
      }
      if (is_path && heavy.size() == 1 && n == 5) {
        return "F~4";
      }
    }
    return "unnamed";
  }

  ////////////////////////////////////////////////////////////////////////
  // Roots
  ////////////////////////////////////////////////////////////////////////

  RootSet positive_real_roots(ValuedGraph const& g, std::size_t cap) {
    constexpr std::size_t max_roots = 200000;
    auto const            C         = cartan_matrix(g).entries;
    std::size_t const     n         = g.size();
    std::set<std::vector<std::int64_t>>   found;
    std::queue<std::vector<std::int64_t>> todo;
    RootSet                               out;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(n, 0);
      e[i] = 1;
      found.insert(e);
      todo.push(e);
    }
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop();
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
          c += C[i][j] * x[j];
        }
        if (c == 0) {
          continue;
        }
        auto y = x;
        y[i] -= c;
        if (y[i] < 0) {
          continue;
        }
        auto sum = std::accumulate(y.begin(), y.end(), std::int64_t(0));
        if (sum > static_cast<std::int64_t>(cap)) {
          out.truncated = true;
          continue;
        }
        if (found.size() >= max_roots) {
          out.truncated = true;
          break;
        }
        if (found.insert(y).second) {
          todo.push(std::move(y));
        }
      }
    }
    out.roots.assign(found.begin(), found.end());
    return out;
  }

  std::string to_dot(ValuedGraph const& g) {
    std::ostringstream os;
    os << "digraph munn {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
      os << "  \"" << g.labels()[v] << "\" [label=\"" << g.labels()[v]
         << "\", weight_f=" << g.weights()[v] << "];\n";
    }
    for (auto const& e : g.edges()) {
      os << "  \"" << g.labels()[e.from] << "\" -> \"" << g.labels()[e.to]
         << "\" [label=\"(" << e.d_from_to << "," << e.d_to_from << ")\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace munnlab
