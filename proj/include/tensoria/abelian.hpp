#ifndef TENSORIA_ABELIAN_HPP_
#define TENSORIA_ABELIAN_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensoria/bigint.hpp"

namespace tensoria {

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    BigInt& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }
    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    bool operator==(IntMatrix const&) const = default;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<BigInt> _data;
  };

  // left * m * right == diag(diagonal) padded with zeros; left and right are
  // unimodular and the nonzero diagonal entries are positive with each
  // dividing the next.
  struct SmithForm {
    std::vector<BigInt> diagonal;
    IntMatrix           left;
    IntMatrix           right;
  };

  SmithForm smith_normal_form(IntMatrix const& m);

  // Finitely generated abelian group as Z_{d1} x ... x Z_{dk} x Z^r with
  // 1 < d1 | d2 | ... | dk.
  class AbelianGroup {
   public:
    AbelianGroup() = default;
    // Direct sum of cyclic groups; order 0 means infinite cyclic and
    // order 1 is dropped.
    static AbelianGroup from_cyclic(std::vector<BigInt> const& orders);
    static AbelianGroup parse(std::string_view text);

    std::vector<BigInt> const& invariants() const noexcept {
      return _inv;
    }
    std::size_t free_rank() const noexcept {
      return _free;
    }
    bool is_finite() const noexcept {
      return _free == 0;
    }
    bool is_trivial() const noexcept {
      return _free == 0 && _inv.empty();
    }
    // Throws InputError for infinite groups.
    BigInt order() const;
    // Invariants followed by one 0 per free summand.
    std::vector<BigInt> cyclic_factors() const;
    std::string         to_string() const;
    bool operator==(AbelianGroup const&) const = default;

   private:
    std::vector<BigInt> _inv;
    std::size_t         _free = 0;
  };

  // Relation rows for a cokernel computation: (column, coefficient) pairs.
  using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  // Z^ncols modulo the row span.
  AbelianGroup cokernel(std::vector<SparseRow> rows, std::size_t ncols);
  AbelianGroup cokernel(IntMatrix const& m);

  AbelianGroup z_tensor(AbelianGroup const& a, AbelianGroup const& b);
  AbelianGroup z_tensor_power(AbelianGroup const& a, std::size_t n);
  // Whitehead's quadratic functor from its full presentation on the
  // elements of a finite group of order at most 64.
  AbelianGroup gamma_whitehead(AbelianGroup const& a);
  AbelianGroup lambda2_exterior(AbelianGroup const& a);

}  // namespace tensoria

#endif  // TENSORIA_ABELIAN_HPP_
