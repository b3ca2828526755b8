#include "tensoria/coset_enum.hpp"

#include <algorithm>
#include <set>

#include "tensoria/errors.hpp"

namespace tensoria {

  CosetTable::CosetTable(std::size_t num_gens, std::size_t num_cosets,
                         std::vector<std::int32_t> entries, bool complete,
                         std::size_t max_live, std::size_t total_defined)
      : _num_gens(num_gens),
        _num_cosets(num_cosets),
        _table(std::move(entries)),
        _complete(complete),
        _max_live(max_live),
        _total_defined(total_defined) {}

  std::int32_t CosetTable::trace(std::size_t coset, Word const& w) const {
    std::int32_t c = static_cast<std::int32_t>(coset);
    for (auto l : w.letters()) {
      c = entry(static_cast<std::size_t>(c), l);
      if (c == undefined) {
        return undefined;
      }
    }
    return c;
  }

  namespace {
    using row_t                 = std::int32_t;
    constexpr row_t none        = CosetTable::undefined;

    class Enumerator {
     public:
      Enumerator(Presentation const&      p,
                 std::vector<Word> const& subgroup,
                 EnumLimits const&        limits)
          : _ncols(2 * p.num_generators()),
            _max(limits.max_cosets),
            _felsch(limits.strategy == Strategy::felsch) {
        std::set<std::vector<letter_type>> seen;
        for (auto const& r : p.relators()) {
          auto w = r.cyclically_reduced();
          if (w.empty() || !seen.insert(canonical_relator(w)).second) {
            continue;
          }
          _rels.push_back(w.letters());
        }
        std::sort(_rels.begin(), _rels.end(), [](auto const& a, auto const& b) {
          return a.size() < b.size();
        });
        for (auto const& w : subgroup) {
          if (!w.empty()) {
            _subgens.push_back(w.letters());
          }
        }
        if (_felsch) {
          _conj.resize(_ncols);
          std::set<std::vector<letter_type>> rots;
          for (auto const& r : _rels) {
            auto inv = r;
            std::reverse(inv.begin(), inv.end());
            for (auto& l : inv) {
              l = inverse_letter(l);
            }
            for (std::vector<letter_type> const* src : {&r, static_cast<std::vector<letter_type> const*>(&inv)}) {
              for (std::size_t i = 0; i < src->size(); ++i) {
                std::vector<letter_type> rot(src->begin() + i, src->end());
                rot.insert(rot.end(), src->begin(), src->begin() + i);
                if (rots.insert(rot).second) {
                  _conj[rot[0]].push_back(std::move(rot));
                }
              }
            }
          }
        }
        _max_rel_len = 0;
        for (auto const& r : _rels) {
          _max_rel_len += r.size();
        }
        if (_max == 0) {
          _overflow = true;
          return;
        }
        new_row();
      }

      CosetTable run() {
        if (_overflow) {
          return CosetTable(_ncols / 2, 0, {}, false, 0, 0);
        }
        for (auto const& w : _subgens) {
          scan_and_fill(0, w);
          if (_overflow) {
            return aborted();
          }
        }
        if (_ncols == 0) {
          return finish();
        }
        if (_felsch) {
          process_deductions();
          if (_overflow) {
            return aborted();
          }
          while (true) {
            felsch_fill();
            if (_overflow) {
              return aborted();
            }
            // Closing pass: every relator at every coset.  Any coincidence
            // found here reopens the table.
            if (closing_pass()) {
              break;
            }
            if (_overflow) {
              return aborted();
            }
          }
          return finish();
        }
        hlt();
        if (_overflow) {
          return aborted();
        }
        return finish();
      }

     private:
      row_t& at(row_t c, letter_type x) {
        return _table[static_cast<std::size_t>(c) * _ncols + x];
      }

      bool live(row_t c) const {
        return _parent[static_cast<std::size_t>(c)] == c;
      }

      row_t new_row() {
        row_t c = static_cast<row_t>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _ncols, none);
        ++_live;
        ++_total;
        _max_live = std::max(_max_live, _live);
        return c;
      }

      // Define c^x as a new coset.
      bool define(row_t c, letter_type x) {
        if (_live >= _max) {
          _overflow = true;
          return false;
        }
        row_t d             = new_row();
        at(c, x)            = d;
        at(d, inverse_letter(x)) = c;
        if (_felsch) {
          _deductions.push_back({c, x});
        }
        return true;
      }

      row_t rep(row_t c) {
        row_t r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          row_t n    = _parent[c];
          _parent[c] = r;
          c          = n;
        }
        return r;
      }

      void merge(row_t k, row_t l) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        if (k > l) {
          std::swap(k, l);
        }
        _parent[l] = k;
        _queue.push_back(l);
        --_live;
        ++_dead;
      }

      void coincidence(row_t a, row_t b) {
        merge(a, b);
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          row_t e = _queue[i];
          for (letter_type x = 0; x < _ncols; ++x) {
            row_t f = at(e, x);
            if (f == none) {
              continue;
            }
            letter_type xi = inverse_letter(x);
            at(f, xi)      = none;
            row_t e1       = rep(e);
            row_t f1       = rep(f);
            if (at(e1, x) != none) {
              merge(f1, at(e1, x));
            } else if (at(f1, xi) != none) {
              merge(e1, at(f1, xi));
            } else {
              at(e1, x)  = f1;
              at(f1, xi) = e1;
              if (_felsch) {
                _deductions.push_back({e1, x});
              }
            }
          }
        }
        _queue.clear();
      }

      // HLT scan: defines cosets to complete the scan of w at c.
      void scan_and_fill(row_t c, std::vector<letter_type> const& w) {
        row_t       f = c, b = c;
        std::size_t i = 0, j = w.size();
        while (true) {
          while (i < j && at(f, w[i]) != none) {
            f = at(f, w[i]);
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && at(b, inverse_letter(w[j - 1])) != none) {
            b = at(b, inverse_letter(w[j - 1]));
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            at(f, w[i])                 = b;
            at(b, inverse_letter(w[i])) = f;
            if (_felsch) {
              _deductions.push_back({f, w[i]});
            }
            return;
          }
          if (!define(f, w[i])) {
            return;
          }
        }
      }

      // Felsch scan: no definitions, but records deductions.
      void scan(row_t c, std::vector<letter_type> const& w) {
        row_t       f = c, b = c;
        std::size_t i = 0, j = w.size();
        while (i < j && at(f, w[i]) != none) {
          f = at(f, w[i]);
          ++i;
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        while (j > i && at(b, inverse_letter(w[j - 1])) != none) {
          b = at(b, inverse_letter(w[j - 1]));
          --j;
        }
        if (j == i) {
          coincidence(f, b);
        } else if (j == i + 1) {
          at(f, w[i])                 = b;
          at(b, inverse_letter(w[i])) = f;
          _deductions.push_back({f, w[i]});
        }
      }

      void process_deductions() {
        while (!_deductions.empty()) {
          auto [a, x] = _deductions.back();
          _deductions.pop_back();
          if (!live(a)) {
            continue;
          }
          for (auto const& r : _conj[x]) {
            if (!live(a)) {
              break;
            }
            scan(a, r);
          }
          if (!live(a)) {
            continue;
          }
          row_t b = at(a, x);
          if (b == none || !live(b)) {
            continue;
          }
          for (auto const& r : _conj[inverse_letter(x)]) {
            if (!live(b)) {
              break;
            }
            scan(b, r);
          }
        }
      }

      void maybe_compact(row_t& cursor) {
        std::size_t rows = _parent.size();
        if (_dead < 1024 || _dead * 4 < rows) {
          return;
        }
        std::vector<row_t> newidx(rows, none);
        row_t              n = 0;
        row_t              newcursor = none;
        for (std::size_t c = 0; c < rows; ++c) {
          if (static_cast<row_t>(c) == cursor) {
            newcursor = n;
          }
          if (_parent[c] == static_cast<row_t>(c)) {
            newidx[c] = n++;
          }
        }
        if (newcursor == none) {
          newcursor = n;
        }
        std::vector<row_t> table(static_cast<std::size_t>(n) * _ncols);
        for (std::size_t c = 0; c < rows; ++c) {
          if (newidx[c] == none) {
            continue;
          }
          for (std::size_t x = 0; x < _ncols; ++x) {
            row_t v = _table[c * _ncols + x];
            table[static_cast<std::size_t>(newidx[c]) * _ncols + x]
                = v == none ? none : newidx[v];
          }
        }
        _table.swap(table);
        _parent.resize(n);
        for (row_t c = 0; c < n; ++c) {
          _parent[c] = c;
        }
        _dead  = 0;
        cursor = newcursor;
      }

      void hlt() {
        row_t c = 0;
        while (static_cast<std::size_t>(c) < _parent.size()) {
          maybe_compact(c);
          if (static_cast<std::size_t>(c) >= _parent.size()) {
            break;
          }
          if (live(c)) {
            for (auto const& r : _rels) {
              scan_and_fill(c, r);
              if (_overflow) {
                return;
              }
              if (!live(c)) {
                break;
              }
            }
            for (letter_type x = 0; x < _ncols && live(c); ++x) {
              if (at(c, x) == none && !define(c, x)) {
                return;
              }
            }
          }
          ++c;
        }
      }

      void felsch_fill() {
        row_t c = 0;
        while (static_cast<std::size_t>(c) < _parent.size()) {
          maybe_compact(c);
          if (static_cast<std::size_t>(c) >= _parent.size()) {
            break;
          }
          if (!live(c)) {
            ++c;
            continue;
          }
          letter_type x = 0;
          while (x < _ncols && at(c, x) != none) {
            ++x;
          }
          if (x == _ncols) {
            ++c;
            continue;
          }
          if (!define(c, x)) {
            return;
          }
          process_deductions();
          if (_overflow) {
            return;
          }
        }
      }

      // Returns true if every relator closes at every live coset.
      bool closing_pass() {
        bool clean = true;
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          for (auto const& r : _rels) {
            if (!live(static_cast<row_t>(c))) {
              break;
            }
            std::size_t before = _dead;
            std::size_t tot    = _total;
            scan_and_fill(static_cast<row_t>(c), r);
            if (_overflow) {
              return false;
            }
            if (_dead != before || _total != tot) {
              clean = false;
            }
          }
        }
        for (auto const& w : _subgens) {
          std::size_t before = _dead;
          std::size_t tot    = _total;
          scan_and_fill(rep(0), w);
          if (_dead != before || _total != tot) {
            clean = false;
          }
        }
        process_deductions();
        return clean && !_overflow;
      }

      CosetTable aborted() {
        return CosetTable(_ncols / 2, _live, {}, false, _max_live, _total);
      }

      CosetTable finish() {
        // Standardize in breadth-first order from coset 0.
        std::size_t        rows = _parent.size();
        std::vector<row_t> newidx(rows, none);
        std::vector<row_t> order;
        order.reserve(_live);
        newidx[0] = 0;
        order.push_back(0);
        for (std::size_t i = 0; i < order.size(); ++i) {
          row_t c = order[i];
          for (letter_type x = 0; x < _ncols; ++x) {
            row_t d = at(c, x);
            if (d == none) {
              throw InternalError("coset table incomplete after enumeration");
            }
            if (newidx[d] == none) {
              newidx[d] = static_cast<row_t>(order.size());
              order.push_back(d);
            }
          }
        }
        std::vector<row_t> table(order.size() * _ncols);
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (letter_type x = 0; x < _ncols; ++x) {
            table[i * _ncols + x] = newidx[at(order[i], x)];
          }
        }
        return CosetTable(_ncols / 2, order.size(), std::move(table), true,
                          _max_live, _total);
      }

      std::size_t                                         _ncols;
      std::size_t                                         _max;
      bool                                                _felsch;
      std::vector<std::vector<letter_type>>               _rels;
      std::vector<std::vector<letter_type>>               _subgens;
      std::vector<std::vector<std::vector<letter_type>>>  _conj;
      std::size_t                                         _max_rel_len = 0;
      std::vector<row_t>                                  _table;
      std::vector<row_t>                                  _parent;
      std::vector<row_t>                                  _queue;
      std::vector<std::pair<row_t, letter_type>>          _deductions;
      std::size_t                                         _live     = 0;
      std::size_t                                         _dead     = 0;
      std::size_t                                         _total    = 0;
      std::size_t                                         _max_live = 0;
      bool                                                _overflow = false;
    };
  }  // namespace

  CosetTable enumerate(Presentation const&      p,
                       std::vector<Word> const& subgroup,
                       EnumLimits const&        limits) {
    for (auto const& w : subgroup) {
      if (w.generator_bound() > p.num_generators()) {
        throw InputError("subgroup word uses an undeclared generator");
      }
    }
    Enumerator e(p, subgroup, limits);
    return e.run();
  }

}  // namespace tensoria
