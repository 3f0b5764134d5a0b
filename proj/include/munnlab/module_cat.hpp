// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Finite-dimensional modules over a Munn algebra, written as diagrams
// (V_0, {V_k}, alpha_{ki}: V_0 -> V_k, beta_{kj}: V_k -> V_0) with every
// alpha after every beta zero; the functors to and from representations of
// the valued graph, Hom spaces, the ideal J, and a brute-force census of
// indecomposables over tiny prime fields.
//
// Conventions. Everything is a matrix over the prime field k. The space V_k
// is F_k^t for its F_k-dimension t, stored as k^(t d_k) with the
// multiplication by the generator of F_k recorded as an action matrix; the
// canonical action is block diagonal with companion blocks of the modulus
// of F_k. Component k carries n_k alpha maps and m_k beta maps, matching
// the valuations of graph_from_triples: the edge -> k has d_{k-} = n_k and
// the edge k -> + has d_{k+} = m_k.

#ifndef MUNNLAB_MODULE_CAT_HPP_
#define MUNNLAB_MODULE_CAT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "munnlab/field.hpp"
#include "munnlab/matrix.hpp"
#include "munnlab/munn.hpp"

namespace munnlab {

  //! Input to module_make. `actions` may be left empty for the canonical
  //! F_k-structure on every V_k.
  struct ModuleData {
    std::uint64_t                    characteristic = 2;
    TripleSet                        triples;
    std::size_t                      v0_dim = 0;
    std::vector<std::size_t>         vk_dim;  // F_k-dimensions
    std::vector<std::vector<Matrix>> alphas;  // [k][i], i < n_k
    std::vector<std::vector<Matrix>> betas;   // [k][j], j < m_k
    std::vector<Matrix>              actions;
  };

  struct MunnModule {
    gf::Field                        field;
    TripleSet                        triples;
    std::vector<gf::Field>           component_fields;
    std::size_t                      v0_dim = 0;
    std::vector<std::size_t>         vk_dim;
    std::vector<Matrix>              actions;
    std::vector<std::vector<Matrix>> alphas;
    std::vector<std::vector<Matrix>> betas;

    //! Dimension of V_k over the prime field.
    std::size_t space_dim(std::size_t k) const {
      return vk_dim[k] * triples[k].d;
    }
    std::size_t total_dim() const;
    bool        is_zero() const {
      return total_dim() == 0;
    }
  };

  //! Validates shapes (ShapeMismatch), the F_k-action matrices
  //! (InvalidInput) and every alpha_{ki} beta_{lj} = 0 (RelationViolation).
  MunnModule module_make(ModuleData data);

  //! Multiplication by the generator of `F` on F^t, over the prime field.
  Matrix canonical_action(gf::Field const& F, std::size_t t);

  //! Sum of the images of the betas; columns in reduced echelon form.
  Matrix plus_subspace(MunnModule const& V);
  //! Intersection of the kernels of the alphas (V_0 when there are none).
  Matrix alpha_kernel(MunnModule const& V);

  bool is_in_mod_plus(MunnModule const& V);

  //! A representation of the valued graph: V_+ and V_- over k, V_k over
  //! F_k (same storage as in MunnModule), alpha_{ki}: V_- -> V_k and
  //! beta_{kj}: V_k -> V_+.
  struct GraphRep {
    gf::Field                        field;
    TripleSet                        triples;
    std::vector<gf::Field>           component_fields;
    std::size_t                      plus_dim  = 0;
    std::size_t                      minus_dim = 0;
    std::vector<std::size_t>         vk_dim;
    std::vector<Matrix>              actions;
    std::vector<std::vector<Matrix>> alphas;
    std::vector<std::vector<Matrix>> betas;
    //! False when built by to_graph_rep from a module outside Mod+.
    bool source_in_mod_plus = true;

    bool operator==(GraphRep const& that) const;
  };

  //! Sum of the images of the betas is V_+ and the alphas have no common
  //! kernel vector.
  bool is_in_rep_plus(GraphRep const& W);

  //! The functor Phi. V_+ gets the reduced echelon basis of the sum of the
  //! images of the betas; V_- = V_0 / V_+ gets the images of the standard
  //! vectors at the non-pivot positions of that basis. With `strict` a
  //! module outside Mod+ raises NotInModPlus; otherwise the result is
  //! flagged.
  GraphRep to_graph_rep(MunnModule const& V, bool strict = false);

  //! The functor Psi: V_0 = W_+ (+) W_-, in that order.
  MunnModule from_graph_rep(GraphRep const& W);

  //! A morphism of modules: phi_0 on V_0 and phi_k on each V_k.
  struct HomTuple {
    Matrix              phi0;
    std::vector<Matrix> phis;

    bool is_zero() const;
    bool operator==(HomTuple const&) const = default;
  };

  using HomBasis = std::vector<HomTuple>;

  //! Basis of Hom(V, W); raises ShapeMismatch unless V and W have the same
  //! triple set and characteristic.
  HomBasis hom_space(MunnModule const& V, MunnModule const& W);

  bool     is_hom(HomTuple const& phi, MunnModule const& V, MunnModule const& W);
  HomTuple identity_hom(MunnModule const& V);
  HomTuple zero_hom(MunnModule const& V, MunnModule const& W);
  //! psi after phi.
  HomTuple compose(HomTuple const& psi, HomTuple const& phi);
  //! sum_i coeffs[i] basis[i], coefficients in the prime field.
  HomTuple combination(HomBasis const&              basis,
                       std::vector<gf::Elem> const& coeffs,
                       MunnModule const&            V,
                       MunnModule const&            W);

  bool in_ideal_J(HomTuple const& phi, MunnModule const& V, MunnModule const& W);

  //! Phi on morphisms: (phi_+, phi_-, phi_k) between to_graph_rep(V) and
  //! to_graph_rep(W).
  struct GraphHom {
    Matrix              phi_plus;
    Matrix              phi_minus;
    std::vector<Matrix> phis;

    bool is_zero() const;
  };

  GraphHom to_graph_hom(HomTuple const&   phi,
                        MunnModule const& V,
                        MunnModule const& W);

  enum class Indecomposability { Indecomposable, Decomposable, Inconclusive };

  //! Exhaustive idempotent search in End(V). Beyond 2^16 elements of End
  //! only a Fitting witness (an endomorphism whose stable power is neither
  //! zero nor invertible) is sought, and its absence gives Inconclusive.
  //! The zero module counts as decomposable.
  Indecomposability is_indecomposable(MunnModule const& V);

  //! An invertible element of Hom(V, W), if one exists. Exhaustive when
  //! the field size to the power dim Hom is at most 2^16, otherwise a
  //! seeded random search that may miss.
  std::optional<HomTuple> find_isomorphism(MunnModule const& V,
                                           MunnModule const& W,
                                           std::uint64_t     seed = 0);

  //! Dimension caps for enumeration: dim V_0 <= v0 and every F_k-dimension
  //! of V_k <= vk.
  struct DimCaps {
    std::size_t v0 = 0;
    std::size_t vk = 0;
  };

  inline constexpr std::uint64_t default_census_budget = 10'000'000;

  //! Number of map tuples enumerate_indecomposables would visit.
  std::uint64_t census_cost(TripleSet const& T,
                            DimCaps          caps,
                            std::uint64_t    characteristic);

  //! One module per isomorphism class of indecomposables within the caps,
  //! ordered by total dimension. Raises BudgetExceeded when census_cost
  //! exceeds the budget, InvalidInput for characteristic other than 2, 3.
  std::vector<MunnModule> enumerate_indecomposables(
      TripleSet const& T,
      DimCaps          caps,
      std::uint64_t    characteristic,
      std::uint64_t    budget = default_census_budget);

  //! A random module in Mod+ within the caps, in a random basis.
  MunnModule random_mod_plus(TripleSet const& T,
                             DimCaps          caps,
                             std::uint64_t    characteristic,
                             std::mt19937_64& rng);

}  // namespace munnlab

#endif  // MUNNLAB_MODULE_CAT_HPP_
