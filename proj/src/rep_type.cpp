// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/rep_type.hpp"

#include <algorithm>
#include <functional>

namespace munnlab {

  namespace {
    bool is_plus_leaf(Triple const& t) {
      return t.m == 1 && t.n == 0;
    }
    bool is_minus_leaf(Triple const& t) {
      return t.m == 0 && t.n == 1;
    }

    bool equals(TripleSet const& T, std::vector<Triple> ts) {
      std::sort(ts.begin(), ts.end());
      return T.sorted() == ts;
    }

    bool only_leaves(TripleSet const& T) {
      return std::all_of(T.triples().begin(), T.triples().end(), [](auto& t) {
        return is_plus_leaf(t) || is_minus_leaf(t);
      });
    }

    std::size_t count(TripleSet const& T, Triple t) {
      return std::count(T.triples().begin(), T.triples().end(), t);
    }

    RepTypeVerdict verdict(RepType kind, std::string evidence) {
      return RepTypeVerdict{kind, std::move(evidence), {}, ""};
    }

    // When no triple touches both + and -, the graph splits into the part
    // around + and the part around -. A (1,2,0) triple is then a Euclidean
    // component {+, k} on its own, and the printed case lists miss the
    // configurations where the other side is still Dynkin or Euclidean:
    // T1 consists of (1,2,0) and/or (1,0,2), once each; a side holding one
    // of them holds nothing else; the other side has leaf sum at most 4.
    bool one_sided_euclidean(TripleSet const& T) {
      auto [T0, T1] = partition_triples(T);
      if (T1.empty()) {
        return false;
      }
      std::size_t plus_double  = count(T1, {1, 2, 0});
      std::size_t minus_double = count(T1, {1, 0, 2});
      if (plus_double > 1 || minus_double > 1
          || plus_double + minus_double != T1.size()) {
        return false;
      }
      auto s = split_sums(T0);
      bool plus_ok  = plus_double == 1 ? s.S_minus == 0 : s.S_minus <= 4;
      bool minus_ok = minus_double == 1 ? s.S_plus == 0 : s.S_plus <= 4;
      return plus_ok && minus_ok;
    }

    constexpr char const* one_sided_note
        = "Euclidean component {+,k} or {-,k} from a (1,2,0) or (1,0,2) "
          "triple next to a Dynkin or Euclidean component on the other "
          "side; not among the printed tame cases";
  }  // namespace

  std::string to_string(RepType kind) {
    switch (kind) {
      case RepType::Finite:
        return "Finite";
      case RepType::Tame:
        return "Tame";
      case RepType::Wild:
        return "Wild";
    }
    return "?";
  }

  TriplePartition partition_triples(TripleSet const& T) {
    TriplePartition out;
    for (std::size_t i = 0; i < T.size(); ++i) {
      auto const& t = T[i];
      (is_plus_leaf(t) || is_minus_leaf(t) ? out.T0 : out.T1)
          .push_back(t, T.provenance()[i]);
    }
    return out;
  }

  SplitSums split_sums(TripleSet const& T0) {
    SplitSums s;
    for (auto const& t : T0.triples()) {
      if (is_plus_leaf(t)) {
        s.S_minus += t.d;
      } else if (is_minus_leaf(t)) {
        s.S_plus += t.d;
      }
    }
    s.S = s.S_minus + s.S_plus;
    return s;
  }

  RepTypeVerdict classify_munn(TripleSet const& T, Reading reading) {
    auto [T0, T1]  = partition_triples(T);
    auto const  s  = split_sums(T0);
    std::size_t mx = std::max(s.S_minus, s.S_plus);
    bool const  t1_single = equals(T1, {{1, 1, 1}});

    if (T1.empty() && mx <= 3) {
      return verdict(RepType::Finite, "2.3(1a)");
    }
    if (t1_single && s.S <= 3 && mx <= 2) {
      return verdict(RepType::Finite, "2.3(1b)");
    }
    if (T0.empty()
        && (equals(T, {{1, 1, 1}, {1, 1, 1}}) || equals(T, {{2, 1, 1}})
            || equals(T, {{1, 2, 0}}) || equals(T, {{1, 0, 2}}))) {
      return verdict(RepType::Tame, "2.3(2a)");
    }
    if (T1.empty() && mx == 4) {
      return verdict(RepType::Tame, "2.3(2b)");
    }
    if (t1_single && s.S_minus == 2 && s.S_plus == 2) {
      return verdict(RepType::Tame, "2.3(2c)");
    }
    if (reading == Reading::Extended && one_sided_euclidean(T)) {
      auto v  = verdict(RepType::Tame, "2.3(2a*)");
      v.notes = one_sided_note;
      return v;
    }
    return verdict(RepType::Wild, "2.3(3)");
  }

  RepTypeVerdict classify_rees(TripleSet const& T, std::size_t group_order) {
    if (T.empty()) {
      // The vacuous reading of "only triples (d,1,0)" would make this
      // depend on the group order; an empty triple set is a semisimple
      // algebra.
      auto v  = verdict(RepType::Finite, "semisimple");
      v.notes = "empty triple set: the algebra is semisimple";
      return v;
    }
    bool const one_sided
        = std::all_of(T.triples().begin(), T.triples().end(), is_plus_leaf)
          || std::all_of(T.triples().begin(), T.triples().end(), is_minus_leaf);
    if (equals(T, {{1, 1, 1}})) {
      return verdict(RepType::Finite, "3.3(1a)");
    }
    if (group_order <= 3 && one_sided) {
      return verdict(RepType::Finite, "3.3(1b)");
    }
    if (equals(T, {{1, 1, 1}, {1, 1, 1}}) || equals(T, {{2, 1, 1}})) {
      return verdict(RepType::Tame, "3.3(2a)");
    }
    if (group_order == 4 && one_sided) {
      return verdict(RepType::Tame, "3.3(2b)");
    }
    if (group_order == 1 && (equals(T, {{1, 2, 0}}) || equals(T, {{1, 0, 2}}))) {
      return verdict(RepType::Tame, "3.3(2c)");
    }
    return verdict(RepType::Wild, "3.3(3)");
  }

  RepTypeVerdict classify_union(UnionData const& U, Reading reading) {
    std::size_t const mx     = std::max(U.T_gt, U.T_lt);
    bool const        leaves = only_leaves(U.T0);
    bool const        t1_single = equals(U.T1, {{1, 1, 1}});

    if (U.T1.empty() && mx <= 3 && leaves) {
      return verdict(RepType::Finite, "3.4(1a)");
    }
    if (t1_single && U.T_gt + U.T_lt <= 3 && mx <= 2 && leaves) {
      return verdict(RepType::Finite, "3.4(1b)");
    }
    if (U.T1.empty() && mx == 4 && leaves) {
      return verdict(RepType::Tame, "3.4(2a)");
    }
    if (t1_single && U.T_gt == 2 && U.T_lt == 2 && leaves) {
      return verdict(RepType::Tame, "3.4(2b)");
    }
    if (U.T0.empty()
        && (equals(U.T1, {{1, 1, 1}, {1, 1, 1}}) || equals(U.T1, {{2, 1, 1}}))) {
      return verdict(RepType::Tame, "3.4(2c)");
    }
    if (U.T1.empty()
        && (equals(U.T0, {{1, 2, 0}}) || equals(U.T0, {{1, 0, 2}}))) {
      return verdict(RepType::Tame, "3.4(2d)");
    }
    if (reading == Reading::Extended && U.T1.empty()
        && one_sided_euclidean(U.T0)) {
      auto v  = verdict(RepType::Tame, "3.4(2d*)");
      v.notes = one_sided_note;
      return v;
    }
    return verdict(RepType::Wild, "3.4(3)");
  }

  RepTypeVerdict classify_by_graph(TripleSet const& T) {
    auto components = classify_components(graph_from_triples(T));
    bool any_indefinite = false, any_euclidean = false;
    for (auto const& c : components) {
      any_indefinite |= c.kind == GraphKind::Indefinite;
      any_euclidean |= c.kind == GraphKind::Euclidean;
    }
    RepType kind = any_indefinite  ? RepType::Wild
                   : any_euclidean ? RepType::Tame
                                   : RepType::Finite;
    return RepTypeVerdict{kind, "graph", std::move(components), ""};
  }

  std::vector<TripleSet> enumerate_triple_sets(std::size_t max_weight,
                                               std::size_t max_d) {
    std::vector<Triple> atoms;
    for (std::size_t d = 1; d <= max_d; ++d) {
      for (std::size_t m = 0; d * m <= max_weight; ++m) {
        for (std::size_t n = 0; d * (m + n) <= max_weight; ++n) {
          if (m + n > 0) {
            atoms.push_back({d, m, n});
          }
        }
      }
    }
    std::sort(atoms.begin(), atoms.end());
    std::vector<TripleSet>                        out;
    std::vector<Triple>                           current;
    std::function<void(std::size_t, std::size_t)> extend
        = [&](std::size_t first, std::size_t budget) {
            out.emplace_back(current);
            for (std::size_t i = first; i < atoms.size(); ++i) {
              auto const& t = atoms[i];
              std::size_t w = t.d * (t.m + t.n);
              if (w <= budget) {
                current.push_back(t);
                extend(i, budget - w);
                current.pop_back();
              }
            }
          };
    extend(0, max_weight);
    return out;
  }

}  // namespace munnlab
