#ifndef TENSORIA_PQUOTIENT_HPP_
#define TENSORIA_PQUOTIENT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "tensoria/pcgroup.hpp"
#include "tensoria/perm.hpp"
#include "tensoria/presentation.hpp"

namespace tensoria {

  // How pc generator k arose: as a generator of the finitely presented
  // group (class 1), or as the new factor in the image of generator a,
  // in a_a^p, or in [a_a, a_b].  In each case the relation reads
  // lhs = rest * a_k.
  struct PcDefinition {
    enum class Kind { generator, image, power, commutator };
    Kind          kind = Kind::generator;
    std::uint32_t a    = 0;
    std::uint32_t b    = 0;
    PcWord        rest;
  };

  struct PQuotient {
    std::shared_ptr<PcGroup const> group;
    // Images of the presentation's generators.
    std::vector<PcElem>        images;
    std::vector<PcDefinition>  definitions;
    std::vector<std::uint32_t> weights;
    // Lower exponent-p class reached.
    std::size_t pclass = 0;
    // False when max_class stopped the computation early.
    bool complete = true;
  };

  struct PQuotientLimits {
    std::size_t max_generators = 1024;
    std::size_t max_class      = 0;   // 0: until the series stabilises
  };

  // Largest finite p-quotient of a finitely presented group, one layer of
  // the lower exponent-p central series at a time.  Throws LimitExceeded
  // past max_generators.  For a finite p-group this is the group itself.
  PQuotient p_quotient(Presentation const& pres, std::uint32_t p,
                       PQuotientLimits const& limits = {});

  // Images of the pc generators under the homomorphism that sends the
  // presentation's generators to fp_images, built from the definitions.
  std::vector<Perm> pc_images(PQuotient const& q, std::vector<Perm> const& fp_images,
                              std::size_t degree);

  Perm evaluate(PcElem const& x, std::vector<Perm> const& images, std::size_t degree);

  // True when the pc relations hold for the given generator images, so
  // they define a homomorphism.
  bool respects_relations(PcGroup const& g, std::vector<Perm> const& images,
                          std::size_t degree);

}  // namespace tensoria

#endif  // TENSORIA_PQUOTIENT_HPP_
