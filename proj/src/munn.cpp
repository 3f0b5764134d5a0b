// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "munnlab/munn.hpp"

#include <algorithm>
#include <sstream>

#include "munnlab/error.hpp"

namespace munnlab {

  ////////////////////////////////////////////////////////////////////////
  // ReesSemigroup
  ////////////////////////////////////////////////////////////////////////

  ReesSemigroup::ReesSemigroup(FiniteGroup             group,
                               std::size_t             P,
                               std::size_t             Q,
                               std::vector<entry_type> sandwich)
      : _group(std::move(group)), _P(P), _Q(Q), _sandwich(std::move(sandwich)) {
    if (_P == 0 || _Q == 0) {
      fail(ErrorKind::InvalidInput, "sandwich dimensions must be positive");
    }
    if (_sandwich.size() != _P * _Q) {
      fail(ErrorKind::InvalidInput,
           "sandwich has " + std::to_string(_sandwich.size())
               + " entries, expected " + std::to_string(_P * _Q));
    }
    bool nonzero = false;
    for (auto const& e : _sandwich) {
      if (e) {
        if (*e >= _group.order()) {
          fail(ErrorKind::InvalidInput,
               "sandwich entry " + std::to_string(*e)
                   + " is not an element of G");
        }
        nonzero = true;
      }
    }
    if (!nonzero) {
      fail(ErrorKind::InvalidInput,
           "the sandwich matrix is zero; the semigroup would have zero "
           "multiplication");
    }
  }

  bool ReesSemigroup::is_zero_simple() const {
    for (std::size_t i = 0; i < _P; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < _Q && !found; ++j) {
        found = entry(i, j).has_value();
      }
      if (!found) {
        return false;
      }
    }
    for (std::size_t j = 0; j < _Q; ++j) {
      bool found = false;
      for (std::size_t i = 0; i < _P && !found; ++i) {
        found = entry(i, j).has_value();
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ReesSemigroup rees_make(FiniteGroup                            group,
                          std::size_t                            P,
                          std::size_t                            Q,
                          std::vector<ReesSemigroup::entry_type> sandwich) {
    return ReesSemigroup(std::move(group), P, Q, std::move(sandwich));
  }

  ReesElement rees_mul(ReesSemigroup const& S,
                       ReesElement const&   a,
                       ReesElement const&   b) {
    if (a.zero || b.zero) {
      return ReesElement{};
    }
    // (a mu b)[a.row][b.col] = a.g * mu[a.col][b.row] * b.g
    auto const mid = S.entry(a.col, b.row);
    if (!mid) {
      return ReesElement{};
    }
    FiniteGroup const& G = S.group();
    return ReesElement::make(a.row, b.col, G.mul(G.mul(a.g, *mid), b.g));
  }

  std::vector<ReesElement> rees_elements(ReesSemigroup const& S) {
    std::vector<ReesElement> out{ReesElement{}};
    for (std::size_t i = 0; i < S.Q(); ++i) {
      for (std::size_t j = 0; j < S.P(); ++j) {
        for (std::size_t g = 0; g < S.group().order(); ++g) {
          out.push_back(ReesElement::make(i, j, g));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Triples
  ////////////////////////////////////////////////////////////////////////

  std::string Triple::to_string() const {
    return "(" + std::to_string(d) + "," + std::to_string(m) + ","
           + std::to_string(n) + ")";
  }

  TripleSet::TripleSet(std::vector<Triple>                     triples,
                       std::vector<std::optional<std::size_t>> provenance) {
    if (!provenance.empty() && provenance.size() != triples.size()) {
      fail(ErrorKind::ShapeMismatch, "provenance does not match the triples");
    }
    for (std::size_t i = 0; i < triples.size(); ++i) {
      push_back(triples[i],
                provenance.empty() ? std::nullopt : provenance[i]);
    }
  }

  void TripleSet::push_back(Triple t, std::optional<std::size_t> source) {
    if (t.d == 0) {
      fail(ErrorKind::InvalidInput,
           "triple " + t.to_string() + " has d = 0");
    }
    if (t.m == 0 && t.n == 0) {
      fail(ErrorKind::InvalidInput,
           "triple " + t.to_string()
               + " is trivial; components with m = n = 0 are dropped");
    }
    _triples.push_back(t);
    _provenance.push_back(source);
  }

  void TripleSet::append(TripleSet const& that) {
    _triples.insert(_triples.end(), that._triples.begin(), that._triples.end());
    _provenance.insert(
        _provenance.end(), that._provenance.begin(), that._provenance.end());
  }

  std::vector<Triple> TripleSet::sorted() const {
    auto out = _triples;
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string TripleSet::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (auto const& t : sorted()) {
      if (!first) {
        out += ",";
      }
      out += t.to_string();
      first = false;
    }
    return out + "}";
  }

  AlgebraMatrix sandwich_matrix(ReesSemigroup const&                       S,
                                std::shared_ptr<GroupAlgebra const> const& A) {
    AlgebraMatrix mu{S.P(), S.Q(), {}};
    for (auto const& e : S.sandwich()) {
      mu.entries.push_back(e ? A->basis(*e) : A->zero());
    }
    return mu;
  }

  TripleExtractor::TripleExtractor(WedderburnData data)
      : _data(std::move(data)) {
    for (std::size_t k = 0; k < _data.components.size(); ++k) {
      _actions.emplace_back(_data, k);
    }
  }

  std::vector<ComponentInvariants>
  TripleExtractor::invariants(ReesSemigroup const& S) const {
    if (S.group().order() != _data.algebra->group().order()
        || S.group().table() != _data.algebra->group().table()) {
      fail(ErrorKind::ShapeMismatch,
           "semigroup and Wedderburn data use different groups");
    }
    std::vector<ComponentInvariants> out;
    for (std::size_t k = 0; k < _data.components.size(); ++k) {
      auto const&       comp  = _data.components[k];
      std::size_t const total = _actions[k].block_rank(S.sandwich(), S.P(), S.Q());
      MUNNLAB_ASSERT(total % comp.u == 0,
                     "isotypic rank is not a multiple of u_k");
      std::size_t const r = total / comp.u;
      MUNNLAB_ASSERT(r <= std::min(S.P(), S.Q()) * comp.c,
                     "component rank exceeds the matrix size");
      std::size_t const m = S.P() * comp.c - r;
      std::size_t const n = S.Q() * comp.c - r;
      // m_k - n_k = (P - Q) c_k for every k
      MUNNLAB_ASSERT(static_cast<long long>(m) - static_cast<long long>(n)
                         == (static_cast<long long>(S.P())
                             - static_cast<long long>(S.Q()))
                                * static_cast<long long>(comp.c),
                     "m_k - n_k differs from (P - Q) c_k");
      out.push_back({comp.d, comp.c, comp.u, r, m, n});
    }
    return out;
  }

  TripleSet TripleExtractor::triples(ReesSemigroup const& S) const {
    TripleSet T;
    auto      inv = invariants(S);
    for (std::size_t k = 0; k < inv.size(); ++k) {
      if (inv[k].m != 0 || inv[k].n != 0) {
        T.push_back({inv[k].d, inv[k].m, inv[k].n}, k);
      }
    }
    return T;
  }

  std::vector<ComponentInvariants>
  component_invariants(ReesSemigroup const& S, WedderburnData const& W) {
    return TripleExtractor(W).invariants(S);
  }

  TripleSet triples(ReesSemigroup const& S, WedderburnData const& W) {
    return TripleExtractor(W).triples(S);
  }

  TripleSet triples(ReesSemigroup const& S,
                    gf::Field const&     field,
                    std::uint64_t        seed) {
    return triples(S, wedderburn(S.group(), field, seed));
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  Matrix NormalForm::theta() const {
    Matrix J = block_identity(
        mu_k.field(), mu_k.rows(), mu_k.cols(), r);
    return col_transform * J.transpose() * row_transform;
  }

  NormalForm normal_form(Matrix const& mu_k, std::size_t component) {
    auto rnf = rank_normal_form(mu_k);
    return NormalForm{component,
                      rnf.rank,
                      mu_k,
                      std::move(rnf.row_transform),
                      std::move(rnf.col_transform)};
  }

  NormalForm normal_form(ReesSemigroup const&  S,
                         WedderburnData const& W,
                         std::size_t           component,
                         std::uint64_t         seed) {
    ComponentRealization R(W, component, seed);
    Matrix mu_k = R.represent(sandwich_matrix(S, W.algebra));
    return normal_form(mu_k, component);
  }

  bool has_unit(TripleSet const& T) {
    return T.empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Unions
  ////////////////////////////////////////////////////////////////////////

  UnionData
  union_data(std::vector<std::pair<ReesSemigroup, gf::Field>> const& parts,
             std::uint64_t                                           seed) {
    std::vector<std::pair<ReesSemigroup, TripleSet>> extracted;
    for (auto const& [S, field] : parts) {
      extracted.emplace_back(S, triples(S, field, seed));
    }
    return union_data(std::move(extracted));
  }

  UnionData union_data(std::vector<std::pair<ReesSemigroup, TripleSet>> parts) {
    if (parts.empty()) {
      fail(ErrorKind::EmptyUnion, "a union needs at least one part");
    }
    UnionData out;
    for (auto& [S, T] : parts) {
      std::size_t order = S.group().order();
      int         sign  = S.P() > S.Q() ? 1 : (S.P() < S.Q() ? -1 : 0);
      for (auto const& t : T.triples()) {
        int s = t.m > t.n ? 1 : (t.m < t.n ? -1 : 0);
        MUNNLAB_ASSERT(s == sign, "sign of m_k - n_k varies with k");
      }
      if (sign > 0) {
        out.T_gt += order;
      } else if (sign < 0) {
        out.T_lt += order;
      }
      (sign == 0 ? out.T1 : out.T0).append(T);
      out.parts.push_back(UnionPart{S, std::move(T), order, sign});
    }
    return out;
  }

}  // namespace munnlab
