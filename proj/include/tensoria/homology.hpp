#ifndef TENSORIA_HOMOLOGY_HPP_
#define TENSORIA_HOMOLOGY_HPP_

#include "tensoria/abelian.hpp"
#include "tensoria/tensor.hpp"

namespace tensoria {

  constexpr std::size_t max_cocycle_order = 64;

  // ker(G ^ G -> G') inside the exterior square built from nu(G).
  AbelianGroup h2_via_wedge(std::shared_ptr<PresentedGroup const> g,
                            BuildLimits const&                    limits = {});
  AbelianGroup h2_via_wedge(TensorGroup const& nu);

  // H_2(G, Z) from the normalized bar complex: the torsion of the cokernel
  // of the boundary C_3 -> C_2.  For finite G this is the dual of
  // H^2(G, Q/Z).  Throws LimitExceeded above max_cocycle_order.
  AbelianGroup h2_via_cocycles(PermGroup const& g);

  struct H2Report {
    AbelianGroup via_wedge;
    AbelianGroup via_cocycles;
    bool         agree = false;
  };
  H2Report h2_cross_check(std::shared_ptr<PresentedGroup const> g,
                          BuildLimits const&                    limits = {});

}  // namespace tensoria

#endif  // TENSORIA_HOMOLOGY_HPP_
