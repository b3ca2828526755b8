#ifndef TENSORIA_PERM_GROUP_HPP_
#define TENSORIA_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tensoria/bigint.hpp"
#include "tensoria/errors.hpp"
#include "tensoria/perm.hpp"

namespace tensoria {

  // The randomized construction gave up before reaching the declared order.
  // Callers that pass a candidate order treat this as "not generated".
  class ChainStalled : public Error {
   public:
    using Error::Error;
  };

  // Base and strong generating set with Schreier vectors.
  class StabChain {
   public:
    struct Level {
      point_type                 base;
      std::vector<std::uint32_t> gens;   // ids into strong_generators()
      std::vector<point_type>    orbit;
      std::vector<std::int32_t>  tree;   // -1 absent, -2 base, else gen id
    };

    explicit StabChain(std::size_t degree = 0);

    // Deterministic Schreier-Sims.
    static StabChain build(std::size_t                    degree,
                           std::vector<Perm> const&       gens,
                           std::vector<point_type> const& base_prefix = {});
    // Random Schreier-Sims stopped when the chain certifies `order`, which
    // must be the true order of <gens>.  Throws ChainStalled if the chain
    // stops growing below `order`.
    static StabChain build_with_order(std::size_t                    degree,
                                      std::vector<Perm> const&       gens,
                                      BigInt const&                  order,
                                      std::vector<point_type> const& base_prefix
                                      = {},
                                      std::uint64_t seed = 0x5eed);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<Level> const& levels() const noexcept {
      return _levels;
    }
    std::vector<Perm> const& strong_generators() const noexcept {
      return _strong;
    }
    std::vector<point_type> base() const;
    BigInt                  order() const;

    // Sifts g from level `from`; returns the residue and the level where
    // sifting stopped (levels().size() when it passed every level).
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const;
    bool                         contains(Perm const& g) const;
    // Coset representative u with base^u = p at `level`.
    Perm transversal(std::size_t level, point_type p) const;

    // Adds a generator, keeping the chain complete.  Returns false if g was
    // already a member.
    bool add_generator(Perm const& g);

   private:
    void add_level(point_type base);
    void add_strong(Perm const& h, std::size_t from, std::size_t to);
    void extend_orbit(std::size_t level, std::size_t first_new_gen);
    void schreier_sims(std::size_t start_level);
    void insert_generator(Perm const& g);

    std::size_t                             _degree;
    std::vector<Perm>                       _strong;
    std::vector<Perm>                       _inverse;
    std::vector<Level>                      _levels;
    std::vector<std::vector<std::uint32_t>> _done;
  };

  class PermGroup {
   public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Perm> gens);

    static PermGroup trivial(std::size_t degree) {
      return PermGroup(degree, {});
    }

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<Perm> const& generators() const noexcept {
      return _gens;
    }
    // Declares the exact order; the chain is then built by the randomized
    // method and certified against it.
    void set_order(BigInt order);
    void set_base_prefix(std::vector<point_type> prefix);
    // Installs a chain computed elsewhere (it must belong to this group).
    void set_chain(StabChain chain);

    StabChain const& chain() const;
    bool             has_chain() const noexcept {
      return static_cast<bool>(_chain);
    }
    BigInt order() const;
    bool   contains(Perm const& g) const;
    bool   is_trivial() const;
    Perm   identity() const {
      return Perm(_degree);
    }
    bool is_subgroup_of(PermGroup const& g) const;
    bool equals(PermGroup const& g) const;
    bool is_abelian() const;
    std::vector<point_type> moved_points() const;

   private:
    std::size_t                                _degree = 0;
    std::vector<Perm>                          _gens;
    std::optional<BigInt>                      _order;
    std::vector<point_type>                    _prefix;
    mutable std::shared_ptr<StabChain const>   _chain;
  };

}  // namespace tensoria

#endif  // TENSORIA_PERM_GROUP_HPP_
