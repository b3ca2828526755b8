#ifndef TENSORIA_PERM_HPP_
#define TENSORIA_PERM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tensoria/bigint.hpp"

namespace tensoria {

  using point_type = std::uint32_t;

  // Permutation of {0, ..., degree-1} acting on the right: the image of p
  // under a*b is (p^a)^b.
  class Perm {
   public:
    Perm() = default;
    explicit Perm(std::size_t degree);
    // Throws InputError unless `images` is a bijection.
    explicit Perm(std::vector<point_type> images);
    // No validation; for images known to form a bijection.
    static Perm unchecked(std::vector<point_type> images) {
      Perm p;
      p._img = std::move(images);
      return p;
    }
    // Cycles use 0-based points.
    static Perm from_cycles(std::size_t                                 degree,
                            std::vector<std::vector<point_type>> const& cycles);

    std::size_t degree() const noexcept {
      return _img.size();
    }
    point_type operator[](point_type p) const noexcept {
      return _img[p];
    }
    std::vector<point_type> const& images() const noexcept {
      return _img;
    }

    bool is_identity() const noexcept;
    Perm inverse() const;
    Perm pow(std::int64_t k) const;
    BigInt order() const;
    // b^-1 * this * b
    Perm conjugate(Perm const& b) const;
    // Same permutation on a larger point set, or shifted by `offset`.
    Perm widened(std::size_t degree, std::size_t offset = 0) const;
    // Restriction to [offset, offset+degree); the range must be invariant.
    Perm restricted(std::size_t offset, std::size_t degree) const;

    // In-place this = this * b.
    Perm& operator*=(Perm const& b);
    friend Perm operator*(Perm const& a, Perm const& b);
    bool operator==(Perm const&) const = default;
    auto operator<=>(Perm const&) const = default;

    // 1-based cycle notation, "()" for the identity.
    std::string to_string() const;
    std::size_t hash() const noexcept;

   private:
    std::vector<point_type> _img;
  };

  // [a,b] = a^-1 b^-1 a b
  Perm commutator(Perm const& a, Perm const& b);

  // Direct product of permutations on disjoint point sets.
  Perm direct_sum(Perm const& a, Perm const& b);

  struct PermHash {
    std::size_t operator()(Perm const& p) const noexcept {
      return p.hash();
    }
  };

}  // namespace tensoria

#endif  // TENSORIA_PERM_HPP_
