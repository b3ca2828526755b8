#ifndef TENSORIA_TENSOR_HPP_
#define TENSORIA_TENSOR_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensoria/actions.hpp"
#include "tensoria/coset_enum.hpp"
#include "tensoria/hom.hpp"
#include "tensoria/permgrp.hpp"

namespace tensoria {

  struct BuildLimits {
    std::size_t max_cosets    = 1'000'000;
    Strategy    strategy      = Strategy::hlt;
    std::size_t compat_budget = default_compat_budget;
    // Up to this many cosets |eta| is recomputed by deterministic
    // Schreier-Sims instead of being read off the coset table.
    std::size_t exact_order_cosets = 5'000;
  };

  // Tensor generator g (x) h, realised as [g, h] in eta.  `left` and `right`
  // are element indices of the two factors.
  struct TensorGenerator {
    Index       left;
    Index       right;
    std::string label;
  };

  // G (x) H inside eta(G, H).  eta acts faithfully on the cosets of the
  // left copy of G followed by the points of G and of H; the last two
  // blocks realise the projection eta -> G x H whose kernel is G (x) H.
  struct TensorGroup {
    ActionPair   pair;
    Presentation presentation;
    PermGroup    eta;
    std::size_t  num_cosets      = 0;
    std::size_t  max_live_cosets = 0;
    BigInt       predicted_cosets;
    BigInt       eta_order;
    bool         eta_order_exact = false;
    CompatReport compat;

    PermGroup                    tensor;
    std::vector<TensorGenerator> generators;   // parallel to tensor.generators()

    // g (x) h -> g^-1 g^h in G and -> (h^-1)^g h in H, restricted from
    // relator-checked homomorphisms on eta into G x| H and H x| G.
    GroupHom lambda;
    GroupHom lambda_prime;
    // When the actions are conjugation in a common group K: restriction of
    // the relator-checked map eta -> K, x -> x, y -> y.
    std::optional<GroupHom> bracket;

    // Labels of the left factor's generators (default: their names).
    std::vector<std::string> left_names;

    std::size_t       num_left() const;
    std::size_t       num_right() const;
    std::vector<Perm> left_generators() const;
    std::vector<Perm> right_generators() const;
    // Images in eta of elements of G and H (element-table indices).
    Perm left(Index u) const;
    Perm right(Index v) const;
    Perm tensor_element(Index u, Index v) const {
      return commutator(left(u), right(v));
    }
    std::string label(Index u, Index v) const;
  };

  // Presentation of eta(G, H): both groups' relators and the relations
  // [x,y]^z = [x^z, y^z] for z in G or H, instantiated over generators and
  // their inverses, or over all elements when `all_elements` is set.
  Presentation eta_presentation(ActionPair const& p, bool all_elements = false);

  // |z_tensor(G^ab, H^ab)| * |G'| * |H'| * |H|: the cap compared with
  // max_cosets before enumerating.
  BigInt predicted_cosets(ActionPair const& p);

  TensorGroup build_eta(ActionPair p, BuildLimits const& limits = {});
  // nu(G): conjugation pair, right generators named <name>_phi.
  TensorGroup build_nu(std::shared_ptr<PresentedGroup const> g,
                       BuildLimits const&                    limits = {});
  // G (x) N for N normal in G, both acting by conjugation.
  TensorGroup tensor_with_subgroup(std::shared_ptr<PresentedGroup const> g,
                                   PermGroup const&                      n,
                                   BuildLimits const& limits = {});

  enum class Side { left, right };
  // <g^-1 g^h> in G (left) or <h^-1 h^g> in H (right).
  PermGroup derivative(ActionPair const& p, Side side,
                       std::size_t budget = default_compat_budget);

  // t.lambda after checking that its image is the left derivative.
  GroupHom const& lambda_map(TensorGroup const& t);

  // <g (x) g>, for pairs where H is a subgroup of G.
  PermGroup delta_subgroup(TensorGroup const& t);

  // (left, right) element pairs with equal images in G, for pairs where H
  // is a subgroup of G (nu(G) and G (x) N).
  std::vector<std::pair<Index, Index>> diagonal_fibre(TensorGroup const& t);

  // Quotient of the tensor group by the normal closure of the tensors of
  // the given pairs.
  Quotient exterior_product(TensorGroup const&                          t,
                            std::vector<std::pair<Index, Index>> const& fibre);

  struct TowerLevel {
    std::size_t n = 0;
    // eta(G^(n-1), G), or nu(G) for n = 2.
    TensorGroup tensor;
    // G^n -> gamma_n(G), [..[g1, g2].., gn].
    GroupHom     lambda_n;
  };

  struct TensorPowerTower {
    std::shared_ptr<PresentedGroup const> group;
    std::vector<TowerLevel>               levels;   // n = 2, 3, ...

    TowerLevel const& level(std::size_t n) const {
      return levels.at(n - 2);
    }
  };

  // G^(x)n for n >= 2.  G acts on G^(x)k diagonally (conjugation by the
  // right copy in the level below, checked against the relators of a
  // presentation of G^(x)k) and G^(x)k acts on G through lambda_k.
  TensorPowerTower tensor_power(std::shared_ptr<PresentedGroup const> g,
                                std::size_t n, BuildLimits const& limits = {});
  // Builds the next level (nu(G) when the tower is empty).
  void extend_tower(TensorPowerTower& tower, BuildLimits const& limits = {});

  // lambda_n with its image checked against gamma_n(G).
  GroupHom const& lambda_n_map(TensorPowerTower const& t, std::size_t n);

  struct CommutatorReport {
    bool        pass = true;
    std::size_t tuples_checked = 0;
    std::string witness;
  };

  // [m(x)n, m'(x)n'] = lambda(m(x)n) (x) lambda'(m'(x)n') over all 4-tuples
  // of generators and inverses.  With `perturb`, the left side is first
  // conjugated by that element of eta.
  CommutatorReport tensor_commutator_check(TensorGroup const& t,
                                           Perm const*        perturb = nullptr);

}  // namespace tensoria

#endif  // TENSORIA_TENSOR_HPP_
