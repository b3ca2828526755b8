#include "tensoria/perm_group.hpp"

#include <random>

namespace tensoria {

  StabChain::StabChain(std::size_t degree) : _degree(degree) {}

  std::vector<point_type> StabChain::base() const {
    std::vector<point_type> b;
    for (auto const& l : _levels) {
      b.push_back(l.base);
    }
    return b;
  }

  BigInt StabChain::order() const {
    BigInt o = 1;
    for (auto const& l : _levels) {
      o *= l.orbit.size();
    }
    return o;
  }

  void StabChain::add_level(point_type base) {
    Level l;
    l.base = base;
    l.orbit.push_back(base);
    l.tree.assign(_degree, -1);
    l.tree[base] = -2;
    _levels.push_back(std::move(l));
    _done.push_back({0});
  }

  void StabChain::extend_orbit(std::size_t level, std::size_t first_new_gen) {
    auto&       L     = _levels[level];
    std::size_t old   = L.orbit.size();
    auto        visit = [&](point_type p, std::uint32_t id) {
      point_type q = _strong[id][p];
      if (L.tree[q] == -1) {
        L.tree[q] = static_cast<std::int32_t>(id);
        L.orbit.push_back(q);
      }
    };
    for (std::size_t i = 0; i < old; ++i) {
      for (std::size_t k = first_new_gen; k < L.gens.size(); ++k) {
        visit(L.orbit[i], L.gens[k]);
      }
    }
    for (std::size_t i = old; i < L.orbit.size(); ++i) {
      for (auto id : L.gens) {
        visit(L.orbit[i], id);
      }
    }
    _done[level].resize(L.orbit.size(), 0);
  }

  void StabChain::add_strong(Perm const& h, std::size_t from, std::size_t to) {
    auto id = static_cast<std::uint32_t>(_strong.size());
    _strong.push_back(h);
    _inverse.push_back(h.inverse());
    if (to == _levels.size()) {
      point_type p = 0;
      while (h[p] == p) {
        ++p;
      }
      add_level(p);
    }
    for (std::size_t l = from; l <= to; ++l) {
      _levels[l].gens.push_back(id);
      extend_orbit(l, _levels[l].gens.size() - 1);
    }
  }

  void StabChain::insert_generator(Perm const& g) {
    if (g.is_identity()) {
      return;
    }
    std::size_t l = 0;
    while (l < _levels.size() && g[_levels[l].base] == _levels[l].base) {
      ++l;
    }
    add_strong(g, 0, l);
  }

  std::pair<Perm, std::size_t> StabChain::strip(Perm g,
                                                std::size_t from) const {
    for (std::size_t l = from; l < _levels.size(); ++l) {
      auto const& L = _levels[l];
      point_type  q = g[L.base];
      if (L.tree[q] == -1) {
        return {std::move(g), l};
      }
      while (L.tree[q] != -2) {
        auto j = static_cast<std::size_t>(L.tree[q]);
        g *= _inverse[j];
        q = _inverse[j][q];
      }
    }
    return {std::move(g), _levels.size()};
  }

  bool StabChain::contains(Perm const& g) const {
    if (g.degree() != _degree) {
      return false;
    }
    return strip(g).first.is_identity();
  }

  Perm StabChain::transversal(std::size_t level, point_type p) const {
    auto const&                L = _levels[level];
    std::vector<std::uint32_t> path;
    while (L.tree[p] != -2) {
      auto j = static_cast<std::uint32_t>(L.tree[p]);
      path.push_back(j);
      p = _inverse[j][p];
    }
    Perm u(_degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      u *= _strong[*it];
    }
    return u;
  }

  void StabChain::schreier_sims(std::size_t start_level) {
    auto i = static_cast<std::ptrdiff_t>(start_level);
    if (i >= static_cast<std::ptrdiff_t>(_levels.size())) {
      i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
    }
    while (i >= 0) {
      auto lvl  = static_cast<std::size_t>(i);
      bool grew = false;
      for (std::size_t oi = 0; oi < _levels[lvl].orbit.size() && !grew;
           ++oi) {
        while (_done[lvl][oi] < _levels[lvl].gens.size()) {
          auto const& L  = _levels[lvl];
          auto        s  = L.gens[_done[lvl][oi]++];
          point_type  p  = L.orbit[oi];
          point_type  q  = _strong[s][p];
          // Tree edges give trivial Schreier generators.
          if (L.tree[q] == static_cast<std::int32_t>(s)
              && _inverse[s][q] == p) {
            continue;
          }
          auto [h, j] = strip(transversal(lvl, p) * _strong[s], lvl);
          if (!h.is_identity()) {
            add_strong(h, lvl + 1, j);
            i    = static_cast<std::ptrdiff_t>(j);
            grew = true;
            break;
          }
        }
      }
      if (!grew) {
        --i;
      }
    }
  }

  StabChain StabChain::build(std::size_t                    degree,
                             std::vector<Perm> const&       gens,
                             std::vector<point_type> const& base_prefix) {
    StabChain c(degree);
    for (auto p : base_prefix) {
      c.add_level(p);
    }
    for (auto const& g : gens) {
      c.insert_generator(g);
    }
    if (!c._levels.empty()) {
      c.schreier_sims(c._levels.size() - 1);
    }
    return c;
  }

  bool StabChain::add_generator(Perm const& g) {
    auto [h, j] = strip(g);
    if (h.is_identity()) {
      return false;
    }
    add_strong(h, 0, j);
    schreier_sims(j);
    return true;
  }

  StabChain StabChain::build_with_order(std::size_t              degree,
                                        std::vector<Perm> const& gens,
                                        BigInt const&            order,
                                        std::vector<point_type> const& prefix,
                                        std::uint64_t            seed) {
    StabChain c(degree);
    for (auto p : prefix) {
      c.add_level(p);
    }
    std::vector<Perm> state;
    for (auto const& g : gens) {
      c.insert_generator(g);
      if (!g.is_identity()) {
        state.push_back(g);
      }
    }
    if (c.order() == order) {
      return c;
    }
    if (state.empty()) {
      throw ChainStalled("trivial generating set below declared order");
    }
    // Product replacement.
    std::size_t const k = state.size();
    std::size_t const n = std::max<std::size_t>(10, k);
    for (std::size_t i = state.size(); i < n; ++i) {
      state.push_back(state[i % k]);
    }
    std::mt19937_64 rng(seed);
    Perm            acc(degree);
    auto            step = [&]() {
      std::size_t i = rng() % n, j = rng() % (n - 1);
      if (j >= i) {
        ++j;
      }
      if (rng() & 1) {
        state[i] *= state[j];
      } else {
        state[i] = state[j] * state[i];
      }
      acc *= state[i];
      return acc;
    };
    for (int k = 0; k < 50; ++k) {
      step();
    }
    std::size_t misses = 0;
    while (true) {
      auto o = c.order();
      if (o == order) {
        return c;
      }
      if (o > order) {
        throw InternalError("group is larger than its declared order");
      }
      auto [h, j] = c.strip(step());
      if (h.is_identity()) {
        if (++misses > 80) {
          throw ChainStalled("random Schreier-Sims stalled at order "
                             + o.str() + " below " + order.str());
        }
        continue;
      }
      misses = 0;
      c.add_strong(h, 0, j);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
      : _degree(degree), _gens(std::move(gens)) {
    for (auto const& g : _gens) {
      if (g.degree() != degree) {
        throw InputError("generator degree mismatch");
      }
    }
  }

  void PermGroup::set_order(BigInt order) {
    _order = std::move(order);
  }

  void PermGroup::set_base_prefix(std::vector<point_type> prefix) {
    _prefix = std::move(prefix);
    _chain.reset();
  }

  void PermGroup::set_chain(StabChain chain) {
    _chain = std::make_shared<StabChain const>(std::move(chain));
  }

  StabChain const& PermGroup::chain() const {
    if (!_chain) {
      if (_order) {
        _chain = std::make_shared<StabChain const>(
            StabChain::build_with_order(_degree, _gens, *_order, _prefix));
      } else {
        _chain = std::make_shared<StabChain const>(
            StabChain::build(_degree, _gens, _prefix));
      }
    }
    return *_chain;
  }

  BigInt PermGroup::order() const {
    if (_order) {
      return *_order;
    }
    return chain().order();
  }

  bool PermGroup::contains(Perm const& g) const {
    return g.degree() == _degree && chain().contains(g);
  }

  bool PermGroup::is_trivial() const {
    for (auto const& g : _gens) {
      if (!g.is_identity()) {
        return false;
      }
    }
    return true;
  }

  bool PermGroup::is_subgroup_of(PermGroup const& g) const {
    if (g.degree() != _degree) {
      return false;
    }
    for (auto const& x : _gens) {
      if (!g.contains(x)) {
        return false;
      }
    }
    return true;
  }

  bool PermGroup::equals(PermGroup const& g) const {
    return is_subgroup_of(g) && order() == g.order();
  }

  bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      for (std::size_t j = i + 1; j < _gens.size(); ++j) {
        if (_gens[i] * _gens[j] != _gens[j] * _gens[i]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<point_type> PermGroup::moved_points() const {
    std::vector<bool> moved(_degree, false);
    for (auto const& g : _gens) {
      for (std::size_t i = 0; i < _degree; ++i) {
        if (g[static_cast<point_type>(i)] != i) {
          moved[i] = true;
        }
      }
    }
    std::vector<point_type> out;
    for (std::size_t i = 0; i < _degree; ++i) {
      if (moved[i]) {
        out.push_back(static_cast<point_type>(i));
      }
    }
    return out;
  }

}  // namespace tensoria
