#ifndef TENSORIA_PERMGRP_HPP_
#define TENSORIA_PERMGRP_HPP_

#include <vector>

#include "tensoria/abelian.hpp"
#include "tensoria/element_table.hpp"
#include "tensoria/hom.hpp"
#include "tensoria/perm_group.hpp"

namespace tensoria {

  // <elements>, each of which must lie in g.
  PermGroup subgroup(PermGroup const& g, std::vector<Perm> const& elements);

  // Smallest normal subgroup of g containing the seeds.
  PermGroup normal_closure(PermGroup const& g, std::vector<Perm> const& seeds);

  // [A, B] for subgroups normalised by g; computed as the normal closure in g
  // of commutators of generators.
  PermGroup commutator_subgroup(PermGroup const& g, PermGroup const& a,
                                PermGroup const& b);
  PermGroup derived_subgroup(PermGroup const& g);

  // gamma_1 = g, gamma_{i+1} = [gamma_i, g], stopping at the first repeat.
  std::vector<PermGroup> lower_central_series(PermGroup const& g);

  // Z_0 = 1, Z_1, ... up to the first repeat.  Uses element enumeration.
  std::vector<PermGroup> upper_central_series(PermGroup const& g);
  PermGroup              center(PermGroup const& g);

  struct Quotient {
    PermGroup group;
    GroupHom  hom;
  };
  // Action of g on the right cosets of the normal subgroup n.
  Quotient quotient(PermGroup const& g, PermGroup const& n);

  AbelianGroup abelian_invariants(PermGroup const& g);

  // Subgroup of g generated by elements given as indices of an element
  // table, with a small generating set picked greedily.
  PermGroup subgroup_from_indices(ElementTable const&                         t,
                                  std::size_t                                 degree,
                                  std::vector<ElementTable::index_type> const& idx);

  // Membership vector of the subgroup generated by the given elements.
  std::vector<bool> closure_indices(ElementTable const& t,
                                    std::vector<ElementTable::index_type> const& gens);

}  // namespace tensoria

#endif  // TENSORIA_PERMGRP_HPP_
