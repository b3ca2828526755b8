#include "tensoria/element_table.hpp"

#include <algorithm>

namespace tensoria {

  namespace {
    std::size_t hash_key(point_type const* key, std::size_t n) {
      std::uint64_t h = 1469598103934665603ULL;
      for (std::size_t i = 0; i < n; ++i) {
        h ^= key[i];
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  }  // namespace

  ElementTable::ElementTable(PermGroup const& g, std::size_t limit)
      : _degree(g.degree()), _gens(g.generators()) {
    auto order = g.order();
    if (order > limit) {
      throw LimitExceeded("element enumeration",
                          "group of order " + order.str() + " exceeds "
                              + std::to_string(limit) + " elements");
    }
    auto n    = static_cast<std::size_t>(order);
    _base     = g.chain().base();
    _nletters = 2 * _gens.size();
    for (auto const& x : _gens) {
      _letter_perm.push_back(x);
      _letter_perm.push_back(x.inverse());
    }
    std::size_t cap = 4;
    while (cap < 2 * n + 2) {
      cap <<= 1;
    }
    _hash.assign(cap, -1);
    _mask = cap - 1;
    auto const m = _base.size();
    _keys.reserve(n * m);
    _next.reserve(n * _nletters);
    _parent.reserve(n);
    _parent_letter.reserve(n);

    _keys.insert(_keys.end(), _base.begin(), _base.end());
    _parent.push_back(0);
    _parent_letter.push_back(0);
    insert(0);
    std::vector<point_type> key(m);
    for (std::size_t i = 0; i < _parent.size(); ++i) {
      for (letter_type l = 0; l < _nletters; ++l) {
        auto const& p = _letter_perm[l];
        for (std::size_t b = 0; b < m; ++b) {
          key[b] = p[_keys[i * m + b]];
        }
        auto found = lookup(key.data());
        if (found < 0) {
          if (_parent.size() >= n) {
            throw InternalError("element enumeration exceeded group order");
          }
          auto idx = static_cast<index_type>(_parent.size());
          _keys.insert(_keys.end(), key.begin(), key.end());
          _parent.push_back(static_cast<index_type>(i));
          _parent_letter.push_back(l);
          insert(idx);
          found = idx;
        }
        _next.push_back(static_cast<index_type>(found));
      }
    }
    if (_parent.size() != n) {
      throw InternalError("element enumeration disagrees with group order");
    }
  }

  std::int64_t ElementTable::lookup(point_type const* key) const {
    auto const m = _base.size();
    for (std::size_t h = hash_key(key, m) & _mask;; h = (h + 1) & _mask) {
      auto v = _hash[h];
      if (v < 0) {
        return -1;
      }
      if (std::equal(key, key + m,
                     _keys.begin() + static_cast<std::ptrdiff_t>(v * m))) {
        return v;
      }
    }
  }

  void ElementTable::insert(index_type idx) {
    auto const m = _base.size();
    auto       h = hash_key(_keys.data() + idx * m, m) & _mask;
    while (_hash[h] >= 0) {
      h = (h + 1) & _mask;
    }
    _hash[h] = idx;
  }

  std::size_t ElementTable::depth(index_type i) const {
    std::size_t d = 0;
    while (i != 0) {
      i = _parent[i];
      ++d;
    }
    return d;
  }

  ElementTable::index_type ElementTable::multiply(index_type i,
                                                  index_type j) const {
    thread_local std::vector<letter_type> path;
    path.clear();
    while (j != 0) {
      path.push_back(_parent_letter[j]);
      j = _parent[j];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      i = mul_letter(i, *it);
    }
    return i;
  }

  ElementTable::index_type ElementTable::inverse(index_type i) const {
    index_type r = 0;
    while (i != 0) {
      r = mul_letter(r, inverse_letter(_parent_letter[i]));
      i = _parent[i];
    }
    return r;
  }

  ElementTable::index_type ElementTable::conjugate(index_type x,
                                                   index_type y) const {
    return multiply(multiply(inverse(y), x), y);
  }

  ElementTable::index_type ElementTable::commutator(index_type x,
                                                    index_type y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
  }

  ElementTable::index_type ElementTable::evaluate(Word const& w,
                                                  index_type  start) const {
    index_type i = start;
    for (auto const& s : w.syllables()) {
      auto l = make_letter(s.gen, s.exp < 0);
      if (s.gen >= _gens.size()) {
        throw InputError("word uses an undeclared generator");
      }
      for (std::int64_t k = 0; k < (s.exp < 0 ? -s.exp : s.exp); ++k) {
        i = mul_letter(i, l);
      }
    }
    return i;
  }

  Word ElementTable::word(index_type i) const {
    std::vector<letter_type> letters;
    while (i != 0) {
      letters.push_back(_parent_letter[i]);
      i = _parent[i];
    }
    std::reverse(letters.begin(), letters.end());
    return Word::from_letters(letters);
  }

  Perm ElementTable::perm(index_type i) const {
    std::vector<letter_type> letters;
    while (i != 0) {
      letters.push_back(_parent_letter[i]);
      i = _parent[i];
    }
    Perm p(_degree);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      p *= _letter_perm[*it];
    }
    return p;
  }

  std::int64_t ElementTable::index_of(Perm const& x, bool verify) const {
    std::vector<point_type> key(_base.size());
    for (std::size_t b = 0; b < _base.size(); ++b) {
      if (_base[b] >= x.degree()) {
        return -1;
      }
      key[b] = x[_base[b]];
    }
    auto idx = lookup(key.data());
    if (idx < 0 || (verify && perm(static_cast<index_type>(idx)) != x)) {
      return -1;
    }
    return idx;
  }

}  // namespace tensoria
