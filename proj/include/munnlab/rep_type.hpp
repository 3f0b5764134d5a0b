// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// The finite / tame / wild case analyses for Munn algebras (by triple set),
// single Rees matrix semigroups and unions of pairwise annihilating ones,
// next to the classifier that reads the verdict off the valued graph.

#ifndef MUNNLAB_REP_TYPE_HPP_
#define MUNNLAB_REP_TYPE_HPP_

#include <string>
#include <vector>

#include "munnlab/munn.hpp"
#include "munnlab/valued_graph.hpp"

namespace munnlab {

  enum class RepType { Finite, Tame, Wild };

  std::string to_string(RepType kind);

  struct RepTypeVerdict {
    RepType kind;
    //! Case identifier such as "2.3(1b)" or "3.4(2c)", "graph" for the
    //! graph classifier, "semisimple" for an empty triple set of a Rees
    //! semigroup. A trailing '*' marks the one-sided Euclidean clause
    //! described in `notes`, which the printed case lists do not contain.
    std::string                 evidence;
    std::vector<ComponentClass> components;
    std::string                 notes;
  };

  //! Which case analysis to run: the clauses as printed, or the printed
  //! clauses plus the one-sided Euclidean clause (the default).
  enum class Reading { Literal, Extended };

  //! T0 holds the triples of shape (d,1,0) or (d,0,1), T1 the rest.
  struct TriplePartition {
    TripleSet T0;
    TripleSet T1;
  };

  TriplePartition partition_triples(TripleSet const& T);

  //! S_minus sums d over (d,1,0) triples, S_plus over (d,0,1) triples.
  struct SplitSums {
    std::size_t S_minus = 0;
    std::size_t S_plus  = 0;
    std::size_t S       = 0;
  };

  SplitSums split_sums(TripleSet const& T0);

  RepTypeVerdict classify_munn(TripleSet const& T,
                               Reading          reading = Reading::Extended);
  RepTypeVerdict classify_rees(TripleSet const& T, std::size_t group_order);
  RepTypeVerdict classify_union(UnionData const& U,
                                Reading          reading = Reading::Extended);
  RepTypeVerdict classify_by_graph(TripleSet const& T);

  //! Every triple multiset with sum of d (m + n) at most `max_weight` and
  //! d <= max_d, the empty set included, each once in sorted form.
  std::vector<TripleSet> enumerate_triple_sets(std::size_t max_weight,
                                               std::size_t max_d);

}  // namespace munnlab

#endif  // MUNNLAB_REP_TYPE_HPP_
