#ifndef TENSORIA_HOM_HPP_
#define TENSORIA_HOM_HPP_

#include <memory>
#include <string>
#include <vector>

#include "tensoria/perm_group.hpp"
#include "tensoria/presentation.hpp"

namespace tensoria {

  // Homomorphism between permutation groups given by generator images.
  // Images, kernels and preimages are computed in the graph group
  // {(x, phi(x))} acting on the disjoint union of both point sets.
  class GroupHom {
   public:
    GroupHom() = default;
    // The caller guarantees that the map extends to a homomorphism;
    // `how` records the reason (relator check, group action, ...).
    GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images,
             std::string how);

    PermGroup const& source() const noexcept {
      return _source;
    }
    PermGroup const& target() const noexcept {
      return _target;
    }
    std::vector<Perm> const& images() const noexcept {
      return _images;
    }
    std::string const& verification() const noexcept {
      return _how;
    }

    // Image of an element of the source.
    Perm      operator()(Perm const& x) const;
    PermGroup image() const;
    PermGroup kernel() const;
    // Restriction to a subgroup of the source.
    GroupHom restricted_to(PermGroup const& sub) const;

   private:
    std::vector<Perm> graph_generators() const;

    PermGroup                                   _source;
    PermGroup                                   _target;
    std::vector<Perm>                           _images;
    std::string                                 _how;
    mutable std::shared_ptr<StabChain const>    _image_chain;
    mutable std::shared_ptr<PermGroup const>    _kernel;
  };

  // Checks every relator of `p` on the images (p's generators correspond to
  // source.generators()).  Throws NotAHomomorphism naming the first
  // relator that fails.
  GroupHom define_hom(Presentation const& p, PermGroup const& source,
                      PermGroup const& target, std::vector<Perm> images);

  // Value of a word on given generator images.
  Perm evaluate(Word const& w, std::vector<Perm> const& gens,
                std::size_t degree);

}  // namespace tensoria

#endif  // TENSORIA_HOM_HPP_
