#ifndef TENSORIA_PC_TENSOR_HPP_
#define TENSORIA_PC_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tensoria/abelian.hpp"
#include "tensoria/actions.hpp"
#include "tensoria/pquotient.hpp"
#include "tensoria/presented_group.hpp"

namespace tensoria {

  // Tensor powers of a finite p-group through pc presentations.  Level n
  // holds G^(x)n; level 1 is G itself.  Level n + 1 is the subgroup
  // [M, G] of eta(M, G) for M = G^(x)n, where G acts on M through the
  // diagonal action (conjugation by the right copy one level down) and
  // M acts on G through lambda_n.  eta(M, G) is a finite p-group, so its
  // largest p-quotient is eta itself.
  struct PcLevel {
    std::size_t                    n = 1;
    std::shared_ptr<PcGroup const> eta;      // null at n = 1
    std::shared_ptr<PcGroup const> tensor;   // G^(x)n on its own generators
    // Images in G of tensor's generators under lambda_n.
    std::vector<Perm> lambda;
    // diagonal[2s] and diagonal[2s+1]: images of tensor's generators
    // under generator s of G and under its inverse.
    std::vector<std::vector<PcElem>> diagonal;
    // Generator-triple check of the actions used to build this level.
    CompatReport compat;
    std::size_t  pclass = 0;
  };

  struct PcTensorTower {
    std::shared_ptr<PresentedGroup const> group;
    std::uint32_t                         prime = 0;
    std::vector<PcLevel>                  levels;   // n = 1, 2, ...

    PcLevel const& level(std::size_t n) const {
      return levels.at(n - 1);
    }
  };

  // p when the order is a power p^k with k >= 1.
  std::optional<std::uint32_t> prime_of_p_group(BigInt const& order);

  // Throws InputError unless G is a nontrivial p-group.
  PcTensorTower pc_tensor_power(std::shared_ptr<PresentedGroup const> g,
                                std::size_t n, PQuotientLimits const& limits = {});
  void extend_pc_tower(PcTensorTower& tower, PQuotientLimits const& limits = {});

  PermGroup  pc_lambda_image(PcTensorTower const& t, std::size_t n);
  PcSubgroup pc_lambda_kernel(PcTensorTower const& t, std::size_t n);
  // Elements of k commute with every generator of its group.
  bool         is_central(PcSubgroup const& k);
  AbelianGroup pc_abelian_invariants(std::shared_ptr<PcGroup const> g);

}  // namespace tensoria

#endif  // TENSORIA_PC_TENSOR_HPP_
