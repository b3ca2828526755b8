#include "tensoria/presented_group.hpp"

#include <algorithm>
#include <set>

namespace tensoria {

  PresentedGroup::PresentedGroup(Presentation p, PermGroup g)
      : _pres(std::move(p)), _group(std::move(g)) {
    if (_pres.num_generators() != _group.generators().size()) {
      throw InputError("presentation and group have different generator counts");
    }
  }

  PresentedGroup PresentedGroup::from_presentation(Presentation const& p,
                                                   EnumLimits const&   limits) {
    auto t = enumerate(p, {}, limits);
    if (!t.complete()) {
      throw LimitExceeded("max_cosets",
                          "enumeration of " + p.to_string() + " aborted at "
                              + std::to_string(limits.max_cosets) + " cosets");
    }
    auto const        n = t.num_cosets();
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < p.num_generators(); ++j) {
      std::vector<point_type> img(n);
      for (std::size_t c = 0; c < n; ++c) {
        img[c] = static_cast<point_type>(
            t.entry(c, make_letter(static_cast<std::uint32_t>(j), false)));
      }
      gens.push_back(Perm::unchecked(std::move(img)));
    }
    PermGroup g(n, std::move(gens));
    g.set_order(n);
    PresentedGroup out(p, std::move(g));
    out._regular = true;
    // The element table explores the Cayley graph in the same order as the
    // standardized coset table, so element i is coset i.
    auto const& et = out.elements();
    for (ElementTable::index_type i = 0; i < n; i += std::max<std::size_t>(1, n / 64)) {
      if (et.perm(i)[0] != i) {
        throw InternalError("element numbering differs from coset numbering");
      }
    }
    return out;
  }

  PresentedGroup PresentedGroup::from_perm_group(
      PermGroup const& g, std::vector<std::string> const& names) {
    if (names.size() != g.generators().size()) {
      throw InputError("one name per generator is required");
    }
    ElementTable t(g);
    auto const   k = g.generators().size();
    auto const   n = t.size();

    std::vector<Word> candidates;
    for (std::size_t j = 0; j < k; ++j) {
      auto o = g.generators()[j].order();
      candidates.push_back(Word::generator(static_cast<std::uint32_t>(j),
                                           static_cast<std::int64_t>(o)));
    }
    std::vector<Word> cycles;
    for (ElementTable::index_type e = 0; e < n; ++e) {
      auto we = t.word(e);
      for (std::size_t j = 0; j < k; ++j) {
        auto d = t.mul_letter(e, make_letter(static_cast<std::uint32_t>(j), false));
        auto r = we * Word::generator(static_cast<std::uint32_t>(j))
                 * t.word(d).inverse();
        r = r.cyclically_reduced();
        if (!r.empty()) {
          cycles.push_back(std::move(r));
        }
      }
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](Word const& a, Word const& b) {
                       return a.length() < b.length();
                     });
    candidates.insert(candidates.end(), cycles.begin(), cycles.end());
    std::set<std::vector<letter_type>> seen;
    std::vector<Word>                  unique;
    for (auto& w : candidates) {
      auto key = canonical_relator(w);
      if (!key.empty() && seen.insert(key).second) {
        unique.push_back(std::move(w));
      }
    }

    Presentation p(names, {});
    std::size_t  used  = 0;
    std::size_t  batch = std::max<std::size_t>(8, k * k);
    EnumLimits   lim;
    lim.max_cosets = std::max<std::size_t>(4096, 64 * n);
    while (true) {
      auto upto = std::min(unique.size(), used + batch);
      for (; used < upto; ++used) {
        p.add_relator(unique[used]);
      }
      auto tab = enumerate(p, {}, lim);
      if (tab.complete() && tab.num_cosets() == n) {
        break;
      }
      if (used == unique.size()) {
        throw InternalError("Cayley graph relators do not present the group");
      }
      batch *= 2;
    }
    return PresentedGroup(std::move(p), g);
  }

  ElementTable const& PresentedGroup::elements() const {
    if (!_table) {
      _table = std::make_shared<ElementTable const>(_group);
    }
    return *_table;
  }

}  // namespace tensoria
