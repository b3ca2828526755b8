#include "tensoria/pcgroup.hpp"

#include <algorithm>

#include "tensoria/errors.hpp"

namespace tensoria {

  Collector::Collector(std::uint32_t p, std::size_t n, std::size_t tails)
      : _p(p),
        _n(n),
        _m(tails),
        _pow(n),
        _pow_tail(n),
        _conj(n * n),
        _conj_tail(n * n) {
    if (p < 2 || p > 251) {
      throw InputError("pc presentations need a prime below 256");
    }
  }

  void Collector::set_power(std::size_t i, PcWord w, TailVec t) {
    _pow[i]      = std::move(w);
    _pow_tail[i] = std::move(t);
  }

  void Collector::set_conj(std::size_t i, std::size_t j, PcWord w, TailVec t) {
    _conj[i * _n + j]      = std::move(w);
    _conj_tail[i * _n + j] = std::move(t);
  }

  Collector::Elem Collector::identity() const {
    return {std::vector<std::uint8_t>(_n, 0), std::vector<std::uint8_t>(_m, 0)};
  }

  Collector::Elem Collector::generator(std::size_t i) const {
    auto x = identity();
    x.e[i] = 1;
    return x;
  }

  Collector::Elem Collector::from_word(PcWord const& w) const {
    auto x = identity();
    for (auto [g, k] : w) {
      mul_gen(x, g, k);
    }
    return x;
  }

  PcWord Collector::to_word(Elem const& x) {
    PcWord w;
    for (std::uint32_t i = 0; i < x.e.size(); ++i) {
      if (x.e[i]) {
        w.emplace_back(i, x.e[i]);
      }
    }
    return w;
  }

  void Collector::add_tails(Elem& x, TailVec const& t, std::uint32_t times) const {
    for (auto [i, c] : t) {
      x.t[i] = static_cast<std::uint8_t>((x.t[i] + c * times) % _p);
    }
  }

  // x = prefix * rest with prefix on a_0..a_g; then
  // x a_g = prefix a_g * rest^{a_g}, and rest^{a_g} is rebuilt factor by
  // factor from a_k^{a_g} = a_k conj(g, k).
  void Collector::mul_gen(Elem& x, std::uint32_t g, std::uint32_t k) const {
    k %= _p;
    for (; k > 0; --k) {
      std::vector<std::pair<std::uint32_t, std::uint8_t>> rest;
      for (std::uint32_t i = g + 1; i < _n; ++i) {
        if (x.e[i]) {
          rest.emplace_back(i, x.e[i]);
          x.e[i] = 0;
        }
      }
      if (rest.empty()) {
        // Nothing to move past: add the remaining power in one go.
        std::uint32_t s = x.e[g] + k;
        if (s < _p) {
          x.e[g] = static_cast<std::uint8_t>(s);
          return;
        }
        x.e[g] = static_cast<std::uint8_t>(s - _p);
        add_tails(x, _pow_tail[g]);
        for (auto [h, e] : _pow[g]) {
          mul_gen(x, h, e);
        }
        return;
      }
      if (++x.e[g] == _p) {
        x.e[g] = 0;
        add_tails(x, _pow_tail[g]);
        for (auto [h, e] : _pow[g]) {
          mul_gen(x, h, e);
        }
      }
      for (auto [i, e] : rest) {
        auto const& c  = _conj[g * _n + i];
        auto const& ct = _conj_tail[g * _n + i];
        if (c.empty()) {
          mul_gen(x, i, e);
          add_tails(x, ct, e);
          continue;
        }
        for (std::uint8_t r = 0; r < e; ++r) {
          mul_gen(x, i, 1);
          for (auto [h, f] : c) {
            mul_gen(x, h, f);
          }
          add_tails(x, ct);
        }
      }
    }
  }

  void Collector::mul(Elem& x, Elem const& y) const {
    for (std::uint32_t i = 0; i < _n; ++i) {
      if (y.e[i]) {
        mul_gen(x, i, y.e[i]);
      }
    }
    for (std::size_t i = 0; i < _m; ++i) {
      x.t[i] = static_cast<std::uint8_t>((x.t[i] + y.t[i]) % _p);
    }
  }

  Collector::Elem Collector::inverse(Elem const& x) const {
    // Right-multiply x by a_i^k clearing position i in turn; the product of
    // the factors is the inverse up to the central tail part left over.
    Elem z = x;
    Elem y = identity();
    for (std::uint32_t i = 0; i < _n; ++i) {
      if (z.e[i]) {
        std::uint32_t k = _p - z.e[i];
        mul_gen(z, i, k);
        y.e[i] = static_cast<std::uint8_t>(k);
      }
    }
    for (std::size_t i = 0; i < _m; ++i) {
      y.t[i] = static_cast<std::uint8_t>((_p - z.t[i]) % _p);
    }
    return y;
  }

  Collector::Elem Collector::power(Elem const& x, std::uint64_t k) const {
    Elem r = identity(), b = x;
    while (k) {
      if (k & 1) {
        mul(r, b);
      }
      k >>= 1;
      if (k) {
        b = product(b, b);
      }
    }
    return r;
  }

  Collector::Elem Collector::commutator(Elem const& x, Elem const& y) const {
    auto r = product(inverse(x), inverse(y));
    mul(r, x);
    mul(r, y);
    return r;
  }

  Collector::Elem Collector::conjugate(Elem const& x, Elem const& y) const {
    auto r = product(inverse(y), x);
    mul(r, y);
    return r;
  }

  bool Collector::is_identity(Elem const& x) const {
    return std::all_of(x.e.begin(), x.e.end(), [](auto v) { return v == 0; })
           && std::all_of(x.t.begin(), x.t.end(), [](auto v) { return v == 0; });
  }

  BigInt PcGroup::order() const {
    BigInt r = 1;
    for (std::size_t i = 0; i < size(); ++i) {
      r *= prime();
    }
    return r;
  }

  namespace {
    Word pc_word(PcWord const& w) {
      Word r;
      for (auto [g, e] : w) {
        r *= Word::generator(g, e);
      }
      return r;
    }
  }  // namespace

  Presentation PcGroup::presentation(std::vector<std::string> const& names) const {
    std::vector<Word> rels;
    auto const        n = size();
    for (std::uint32_t i = 0; i < n; ++i) {
      rels.push_back(Word::generator(i, prime()) * pc_word(_c.power(i)).inverse());
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        rels.push_back(tensoria::commutator(Word::generator(j), Word::generator(i))
                       * pc_word(_c.conj(i, j)).inverse());
      }
    }
    Presentation p(names, std::move(rels));
    p.deduplicate();
    return p;
  }

  std::string PcGroup::consistency_failure() const {
    auto const n = static_cast<std::uint32_t>(size());
    auto const p = prime();
    auto gen = [&](std::uint32_t i, std::uint32_t k) {
      auto x = identity();
      _c.mul_gen(x, i, k);
      return x;
    };
    auto differ = [&](PcElem const& u, PcElem const& v, PcElem const& w) {
      auto l = _c.product(_c.product(u, v), w);
      auto r = _c.product(u, _c.product(v, w));
      return l.e != r.e || l.t != r.t;
    };
    for (std::uint32_t k = 0; k < n; ++k) {
      for (std::uint32_t j = 0; j < k; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
          if (differ(gen(k, 1), gen(j, 1), gen(i, 1))) {
            return "(a" + std::to_string(k) + " a" + std::to_string(j) + ") a"
                   + std::to_string(i);
          }
        }
      }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t i = 0; i < j; ++i) {
        if (differ(gen(j, p - 1), gen(j, 1), gen(i, 1))) {
          return "a" + std::to_string(j) + "^p a" + std::to_string(i);
        }
        if (differ(gen(j, 1), gen(i, p - 1), gen(i, 1))) {
          return "a" + std::to_string(j) + " a" + std::to_string(i) + "^p";
        }
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (differ(gen(i, 1), gen(i, p - 1), gen(i, 1))) {
        return "a" + std::to_string(i) + "^(p+1)";
      }
    }
    return {};
  }

  PcSubgroup::PcSubgroup(std::shared_ptr<PcGroup const> g)
      : _g(std::move(g)), _at(_g->size(), -1) {
    for (std::size_t i = 0; i < _g->size(); ++i) {
      _at[i] = static_cast<std::int64_t>(i);
      _gens.push_back(_g->generator(i));
      _inv.push_back(_g->inverse(_gens.back()));
    }
  }

  PcSubgroup::PcSubgroup(std::shared_ptr<PcGroup const> g,
                         std::vector<PcElem> const& gens)
      : _g(std::move(g)), _at(_g->size(), -1) {
    for (auto const& x : gens) {
      add(x);
    }
  }

  std::uint32_t PcSubgroup::lead(PcElem const& x) const {
    for (std::uint32_t i = 0; i < x.e.size(); ++i) {
      if (x.e[i]) {
        return i;
      }
    }
    return static_cast<std::uint32_t>(x.e.size());
  }

  PcElem PcSubgroup::sift(PcElem x, std::vector<std::uint32_t>* coords) const {
    auto const& c = _g->collector();
    auto const  n = _g->size();
    for (auto l = lead(x); l < n; l = lead(x)) {
      auto k = _at[l];
      if (k < 0) {
        break;
      }
      auto e = x.e[l];
      if (coords) {
        (*coords)[static_cast<std::size_t>(k)] = e;
      }
      // x <- u^-e x clears position l.
      auto y = c.power(_inv[static_cast<std::size_t>(k)], e);
      c.mul(y, x);
      x = std::move(y);
    }
    return x;
  }

  void PcSubgroup::insert(PcElem x) {
    auto const& c = _g->collector();
    auto const  p = _g->prime();
    auto        l = lead(x);
    // Normalise the leading exponent to 1.
    std::uint32_t e = x.e[l], k = 1;
    while ((e * k) % p != 1) {
      ++k;
    }
    x = c.power(x, k);
    std::size_t pos = 0;
    while (pos < _gens.size() && lead(_gens[pos]) < l) {
      ++pos;
    }
    _inv.insert(_inv.begin() + static_cast<std::ptrdiff_t>(pos), c.inverse(x));
    _gens.insert(_gens.begin() + static_cast<std::ptrdiff_t>(pos), std::move(x));
    std::fill(_at.begin(), _at.end(), -1);
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      _at[lead(_gens[i])] = static_cast<std::int64_t>(i);
    }
  }

  bool PcSubgroup::add(PcElem const& x) {
    auto const& c = _g->collector();
    auto        r = sift(x, nullptr);
    if (lead(r) == _g->size()) {
      return false;
    }
    std::vector<PcElem> queue{std::move(r)};
    while (!queue.empty()) {
      auto y = sift(std::move(queue.back()), nullptr);
      queue.pop_back();
      if (lead(y) == _g->size()) {
        continue;
      }
      insert(y);
      auto const& u = _gens[static_cast<std::size_t>(_at[lead(y)])];
      queue.push_back(c.power(u, _g->prime()));
      for (auto const& v : _gens) {
        queue.push_back(c.commutator(u, v));
      }
    }
    return true;
  }

  void PcSubgroup::normal_closure() {
    auto const& c = _g->collector();
    for (bool changed = true; changed;) {
      changed = false;
      auto gens = _gens;
      for (auto const& u : gens) {
        for (std::size_t s = 0; s < _g->size(); ++s) {
          changed = add(c.conjugate(u, _g->generator(s))) || changed;
        }
      }
    }
  }

  BigInt PcSubgroup::order() const {
    BigInt r = 1;
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      r *= _g->prime();
    }
    return r;
  }

  bool PcSubgroup::contains(PcElem const& x) const {
    return lead(sift(x, nullptr)) == _g->size();
  }

  std::vector<std::uint32_t> PcSubgroup::coordinates(PcElem const& x) const {
    std::vector<std::uint32_t> co(_gens.size(), 0);
    if (lead(sift(x, &co)) != _g->size()) {
      throw InternalError("element is not in the pc subgroup");
    }
    return co;
  }

  bool PcSubgroup::equals(PcSubgroup const& other) const {
    if (other.size() != size()) {
      return false;
    }
    return std::all_of(other._gens.begin(), other._gens.end(),
                       [&](PcElem const& x) { return contains(x); });
  }

  PcGroup PcSubgroup::as_group() const {
    auto const& c = _g->collector();
    auto const  r = _gens.size();
    auto word = [&](PcElem const& x, std::size_t after) {
      auto   co = coordinates(x);
      PcWord w;
      for (std::uint32_t i = 0; i < r; ++i) {
        if (co[i]) {
          if (i <= after) {
            throw InternalError("subgroup generators do not form a pc sequence");
          }
          w.emplace_back(i, co[i]);
        }
      }
      return w;
    };
    Collector out(_g->prime(), r);
    for (std::size_t i = 0; i < r; ++i) {
      out.set_power(i, word(c.power(_gens[i], _g->prime()), i));
      for (std::size_t j = i + 1; j < r; ++j) {
        out.set_conj(i, j, word(c.commutator(_gens[j], _gens[i]), j));
      }
    }
    return PcGroup(std::move(out));
  }

}  // namespace tensoria
