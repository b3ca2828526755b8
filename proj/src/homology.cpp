#include "tensoria/homology.hpp"

#include <map>

namespace tensoria {

  AbelianGroup h2_via_wedge(TensorGroup const& nu) {
    auto w   = exterior_product(nu, diagonal_fibre(nu));
    auto ker = nu.lambda.kernel();
    std::vector<Perm> img;
    for (auto const& x : ker.generators()) {
      img.push_back(w.hom(x));
    }
    return abelian_invariants(subgroup(w.group, img));
  }

  AbelianGroup h2_via_wedge(std::shared_ptr<PresentedGroup const> g,
                            BuildLimits const&                    limits) {
    return h2_via_wedge(build_nu(std::move(g), limits));
  }

  AbelianGroup h2_via_cocycles(PermGroup const& g) {
    if (g.order() > max_cocycle_order) {
      throw LimitExceeded("cocycle order",
                          "|G| = " + g.order().str() + " exceeds "
                              + std::to_string(max_cocycle_order));
    }
    ElementTable t(g);
    auto const   n = t.size();
    if (n == 1) {
      return {};
    }
    auto const m   = n - 1;
    auto       col = [m](Index a, Index b) {
      return static_cast<std::uint32_t>((a - 1) * m + (b - 1));
    };
    // d(a,b,c) = (b,c) - (ab,c) + (a,bc) - (a,b), dropping cells with an
    // identity entry.
    std::vector<SparseRow> rows;
    rows.reserve(m * m * m);
    for (Index a = 1; a < n; ++a) {
      for (Index b = 1; b < n; ++b) {
        auto ab = t.multiply(a, b);
        for (Index c = 1; c < n; ++c) {
          auto                              bc = t.multiply(b, c);
          std::map<std::uint32_t, std::int64_t> r;
          r[col(b, c)] += 1;
          if (ab != 0) {
            r[col(ab, c)] -= 1;
          }
          if (bc != 0) {
            r[col(a, bc)] += 1;
          }
          r[col(a, b)] -= 1;
          SparseRow row;
          for (auto [k, v] : r) {
            if (v != 0) {
              row.emplace_back(k, v);
            }
          }
          if (!row.empty()) {
            rows.push_back(std::move(row));
          }
        }
      }
    }
    // The cokernel is H_2 plus the free group C_2 / ker d_2.
    auto c = cokernel(std::move(rows), m * m);
    return AbelianGroup::from_cyclic(c.invariants());
  }

  H2Report h2_cross_check(std::shared_ptr<PresentedGroup const> g,
                          BuildLimits const&                    limits) {
    H2Report r;
    r.via_cocycles = h2_via_cocycles(g->group());
    r.via_wedge    = h2_via_wedge(g, limits);
    r.agree        = r.via_wedge == r.via_cocycles;
    return r;
  }

}  // namespace tensoria
