#ifndef TENSORIA_COSET_ENUM_HPP_
#define TENSORIA_COSET_ENUM_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tensoria/presentation.hpp"

namespace tensoria {

  enum class Strategy { hlt, felsch };

  struct EnumLimits {
    std::size_t max_cosets = 1'000'000;
    Strategy    strategy   = Strategy::hlt;
  };

  // Right coset table of a subgroup.  Columns are letters (see make_letter),
  // so column 2g is the action of generator g and 2g+1 that of its inverse.
  // A complete table is standardized: cosets are numbered in breadth-first
  // order from coset 0 = H scanning columns in order.
  class CosetTable {
   public:
    static constexpr std::int32_t undefined = -1;

    CosetTable() = default;
    CosetTable(std::size_t num_gens, std::size_t num_cosets,
               std::vector<std::int32_t> entries, bool complete,
               std::size_t max_live, std::size_t total_defined);

    bool complete() const noexcept {
      return _complete;
    }
    std::size_t num_generators() const noexcept {
      return _num_gens;
    }
    std::size_t num_cosets() const noexcept {
      return _num_cosets;
    }
    std::int32_t entry(std::size_t coset, letter_type col) const {
      return _table[coset * 2 * _num_gens + col];
    }
    // Coset reached from `coset` by reading `w`.
    std::int32_t trace(std::size_t coset, Word const& w) const;

    // Statistics for reports.
    std::size_t max_live_cosets() const noexcept {
      return _max_live;
    }
    std::size_t total_defined() const noexcept {
      return _total_defined;
    }

   private:
    std::size_t               _num_gens   = 0;
    std::size_t               _num_cosets = 0;
    std::vector<std::int32_t> _table;
    bool                      _complete      = false;
    std::size_t               _max_live      = 0;
    std::size_t               _total_defined = 0;
  };

  // Enumerates the cosets of <subgroup> in the group presented by `p`.
  // When the number of live cosets would exceed limits.max_cosets the
  // returned table has complete() == false.
  CosetTable enumerate(Presentation const&      p,
                       std::vector<Word> const& subgroup,
                       EnumLimits const&        limits = {});

}  // namespace tensoria

#endif  // TENSORIA_COSET_ENUM_HPP_
