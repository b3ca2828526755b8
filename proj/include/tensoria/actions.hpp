#ifndef TENSORIA_ACTIONS_HPP_
#define TENSORIA_ACTIONS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensoria/presented_group.hpp"

namespace tensoria {

  using Index = ElementTable::index_type;

  // Right action of `acting` on `acted` by automorphisms, given by the
  // images of acted's generators under each acting generator and extended
  // to a full table act(x, h) = x^h.
  class Action {
   public:
    Action() = default;
    // gen_images[s][j] = index in acted.elements() of (generator j)^(generator s).
    // Throws InputError unless each generator map extends to an
    // automorphism and the assignment respects acting's relators.
    Action(PresentedGroup const&                 acting,
           PresentedGroup const&                 acted,
           std::vector<std::vector<Index>> const& gen_images);

    Index act(Index x, Index h) const noexcept {
      return _table[static_cast<std::size_t>(h) * _n + x];
    }
    std::vector<std::vector<Index>> const& generator_images() const noexcept {
      return _gen_images;
    }
    bool is_trivial() const;

   private:
    std::size_t                     _n = 0;
    std::vector<std::vector<Index>> _gen_images;
    std::vector<Index>              _table;
  };

  struct ActionPair {
    std::shared_ptr<PresentedGroup const> g;
    std::shared_ptr<PresentedGroup const> h;
    Action                                h_on_g;
    Action                                g_on_h;
    // Set when both actions are conjugation inside a common group: the
    // images of g's and h's generators there.
    struct Ambient {
      PermGroup         group;
      std::vector<Perm> g_gens;
      std::vector<Perm> h_gens;
    };
    std::optional<Ambient> ambient;
    std::string            description;

    // Roles exchanged: (h, g) with the actions swapped.
    ActionPair swapped() const;
  };

  struct CompatReport {
    bool        pass = true;
    std::size_t triples_checked = 0;
    // Witness: identity 1 is g^(h^g1) = ((g^(g1^-1))^h)^g1, identity 2 the
    // symmetric one; the triple is (g, h, g1) resp. (h, g, h1).
    int         identity = 0;
    std::string witness[3];
    // False when only generator triples were checked.
    bool        exhaustive = true;
  };

  constexpr std::size_t default_compat_budget = 10'000'000;

  ActionPair conjugation_pair(std::shared_ptr<PresentedGroup const> g);
  ActionPair subgroup_conjugation_pair(std::shared_ptr<PresentedGroup const> g,
                                       PermGroup const&                      n,
                                       std::string const& prefix = "n");
  ActionPair trivial_pair(std::shared_ptr<PresentedGroup const> g,
                          std::shared_ptr<PresentedGroup const> h);

  // Exhaustive check of both compatibility identities.  Throws
  // LimitExceeded if |g|*|h|*(|g|+|h|) exceeds the budget.
  CompatReport check_compatibility(ActionPair const& p,
                                   std::size_t budget = default_compat_budget);

  // Both identities over triples of generators only.  This decides
  // compatibility: for fixed h and g1 both sides of identity 1 are
  // automorphisms of G in g, for fixed g1 both are homomorphisms H -> Aut(G)
  // in h, and the g1 satisfying it for all h form a subgroup.
  CompatReport check_compatibility_on_generators(ActionPair const& p);

  // Action file: {"h_on_g": {hgen: [word, ...]}, "g_on_h": {...}} where each
  // list gives the images of the acted-on generators in order.  Missing
  // objects mean trivial actions.
  ActionPair action_pair_from_json(std::shared_ptr<PresentedGroup const> g,
                                   std::shared_ptr<PresentedGroup const> h,
                                   std::string const&                    json);

}  // namespace tensoria

#endif  // TENSORIA_ACTIONS_HPP_
