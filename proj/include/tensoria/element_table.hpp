#ifndef TENSORIA_ELEMENT_TABLE_HPP_
#define TENSORIA_ELEMENT_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tensoria/perm_group.hpp"
#include "tensoria/presentation.hpp"

namespace tensoria {

  constexpr std::size_t default_element_limit = 100'000;

  // Breadth-first enumeration of a permutation group over its generators
  // and their inverses.  Elements are numbered in discovery order (0 is the
  // identity) and identified by their images of a base.  Each element
  // carries a shortest word in the generators.
  class ElementTable {
   public:
    using index_type = std::uint32_t;

    explicit ElementTable(PermGroup const& g,
                          std::size_t      limit = default_element_limit);

    std::size_t size() const noexcept {
      return _parent.size();
    }
    std::size_t num_generators() const noexcept {
      return _gens.size();
    }
    // i * x where x is the generator or inverse encoded by letter l.
    index_type mul_letter(index_type i, letter_type l) const noexcept {
      return _next[static_cast<std::size_t>(i) * _nletters + l];
    }
    index_type generator(std::size_t j) const noexcept {
      return mul_letter(0, make_letter(static_cast<std::uint32_t>(j), false));
    }
    index_type multiply(index_type i, index_type j) const;
    index_type inverse(index_type i) const;
    // x^y = y^-1 x y
    index_type conjugate(index_type x, index_type y) const;
    index_type commutator(index_type x, index_type y) const;
    index_type evaluate(Word const& w, index_type start = 0) const;
    std::size_t depth(index_type i) const;
    // Breadth-first tree: element i = parent(i) * letter(i) for i > 0.
    index_type parent(index_type i) const noexcept {
      return _parent[i];
    }
    letter_type parent_letter(index_type i) const noexcept {
      return _parent_letter[i];
    }

    Word word(index_type i) const;
    Perm perm(index_type i) const;
    // -1 if x is not in the group.  With verify == false, x is assumed to
    // be a member and only its base images are compared.
    std::int64_t index_of(Perm const& x, bool verify = true) const;

   private:
    std::int64_t lookup(point_type const* key) const;
    void         insert(index_type idx);

    std::size_t              _degree;
    std::vector<Perm>        _gens;
    std::vector<Perm>        _letter_perm;
    std::size_t              _nletters = 0;
    std::vector<point_type>  _base;
    std::vector<point_type>  _keys;
    std::vector<index_type>  _next;
    std::vector<index_type>  _parent;
    std::vector<letter_type> _parent_letter;
    std::vector<std::int64_t> _hash;
    std::size_t              _mask = 0;
  };

}  // namespace tensoria

#endif  // TENSORIA_ELEMENT_TABLE_HPP_
