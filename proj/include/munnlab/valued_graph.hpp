// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// The valued graph of a triple set, its Cartan matrix and Tits form, the
// Dynkin / Euclidean / indefinite classification of connected components,
// and positive real roots by reflection closure.

#ifndef MUNNLAB_VALUED_GRAPH_HPP_
#define MUNNLAB_VALUED_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "munnlab/munn.hpp"

namespace munnlab {

  //! An oriented edge from -> to with valuation (d_{from,to}, d_{to,from}).
  struct ValuedEdge {
    std::size_t   from, to;
    std::uint64_t d_from_to, d_to_from;

    bool operator==(ValuedEdge const&) const = default;
  };

  //! Vertices are ordered +, -, k1, ..., ks (one k per triple, in the order
  //! of the triple set). Weights are f_+ = f_- = 1 and f_k = d_k.
  class ValuedGraph {
   public:
    static constexpr std::size_t plus  = 0;
    static constexpr std::size_t minus = 1;

    ValuedGraph(std::vector<std::string>   labels,
                std::vector<std::uint64_t> weights,
                std::vector<ValuedEdge>    edges);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<std::uint64_t> const& weights() const noexcept {
      return _weights;
    }
    std::vector<ValuedEdge> const& edges() const noexcept {
      return _edges;
    }
    //! d_ij, 0 when i and j are not adjacent.
    std::uint64_t valuation(std::size_t i, std::size_t j) const;

    //! Same graph with vertex v renamed to perm[v].
    ValuedGraph relabeled(std::vector<std::size_t> const& perm) const;
    //! Same graph with every edge reversed.
    ValuedGraph reversed() const;

   private:
    std::vector<std::string>   _labels;
    std::vector<std::uint64_t> _weights;
    std::vector<ValuedEdge>    _edges;
  };

  ValuedGraph graph_from_triples(TripleSet const& T);

  //! Integer matrix indexed by vertices: 2 on the diagonal, -d_ij off it.
  struct CartanMatrix {
    std::vector<std::string>               labels;
    std::vector<std::vector<std::int64_t>> entries;
  };

  //! Raises SymmetryViolation when d_ij f_i != d_ji f_j on some edge.
  CartanMatrix cartan_matrix(ValuedGraph const& g);

  //! The Tits form, stored as the integer matrix 2B = diag(f) C so that
  //! q(x) = x^T B x = (x^T (2B) x) / 2.
  struct TitsForm {
    std::vector<std::vector<std::int64_t>> twice;

    std::int64_t value(std::vector<std::int64_t> const& x) const;
    //! B itself, entries as "a" or "a/2".
    std::vector<std::vector<std::string>> entries() const;
  };

  TitsForm tits_form(ValuedGraph const& g);

  enum class GraphKind { Dynkin, Euclidean, Indefinite };

  std::string to_string(GraphKind kind);

  struct ComponentClass {
    std::vector<std::size_t>                 vertices;  // sorted
    GraphKind                                kind;
    std::string                              name;  // "unnamed" when unknown
    std::size_t                              corank;
    //! Euclidean only: positive coprime kernel vector over `vertices`.
    std::optional<std::vector<std::int64_t>> null_root;
  };

  //! Connected components ordered by smallest vertex.
  std::vector<ComponentClass> classify_components(ValuedGraph const& g);

  //! Best-effort label ("A3", "B4", "D~4", "BD~5", ...) for a component of
  //! `g` with the given vertices and kind; "unnamed" when no rule applies.
  std::string dynkin_name(ValuedGraph const&              g,
                          std::vector<std::size_t> const& vertices,
                          GraphKind                       kind);
  std::string dynkin_name(ValuedGraph const& g, ComponentClass const& c);

  struct RootSet {
    std::vector<std::vector<std::int64_t>> roots;  // sorted
    bool                                   truncated = false;
  };

  //! Positive vectors in the closure of the simple roots under the simple
  //! reflections s_i(x) = x - (sum_j C_ij x_j) e_i, limited to coordinate
  //! sum <= cap. `truncated` is set when the cap cut the closure short.
  RootSet positive_real_roots(ValuedGraph const& g, std::size_t cap = 64);

  //! Graphviz text: vertices "+", "-", "k1", ...; directed edges in the
  //! orientation k -> + and - -> k labeled "(d_ij,d_ji)". Byte-stable.
  std::string to_dot(ValuedGraph const& g);

}  // namespace munnlab

#endif  // MUNNLAB_VALUED_GRAPH_HPP_
