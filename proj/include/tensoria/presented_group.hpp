#ifndef TENSORIA_PRESENTED_GROUP_HPP_
#define TENSORIA_PRESENTED_GROUP_HPP_

#include <memory>
#include <string>
#include <vector>

#include "tensoria/coset_enum.hpp"
#include "tensoria/element_table.hpp"
#include "tensoria/perm_group.hpp"
#include "tensoria/presentation.hpp"

namespace tensoria {

  // A permutation group together with a presentation on its generators:
  // generator i of the presentation maps to group.generators()[i].
  class PresentedGroup {
   public:
    PresentedGroup() = default;
    PresentedGroup(Presentation p, PermGroup g);

    // Regular representation from a coset enumeration over the trivial
    // subgroup.  Element i of elements() is coset i.
    static PresentedGroup from_presentation(Presentation const& p,
                                            EnumLimits const&   limits = {});
    // Derives a presentation on the given generators from Cayley graph
    // cycles, adding relators until a coset enumeration certifies |g|.
    static PresentedGroup from_perm_group(PermGroup const&                g,
                                          std::vector<std::string> const& names);

    Presentation const& presentation() const noexcept {
      return _pres;
    }
    PermGroup const& group() const noexcept {
      return _group;
    }
    BigInt order() const {
      return _group.order();
    }
    std::size_t num_generators() const noexcept {
      return _pres.num_generators();
    }
    // Element table over the presentation generators (lazy).
    ElementTable const& elements() const;
    std::string element_string(ElementTable::index_type i) const {
      return _pres.word_to_string(elements().word(i));
    }
    // True when points of group() are the element indices and each
    // generator acts by right multiplication.
    bool is_regular() const noexcept {
      return _regular;
    }

   private:
    Presentation                                _pres;
    PermGroup                                   _group;
    bool                                        _regular = false;
    mutable std::shared_ptr<ElementTable const> _table;
  };

}  // namespace tensoria

#endif  // TENSORIA_PRESENTED_GROUP_HPP_
