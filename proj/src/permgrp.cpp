#include "tensoria/permgrp.hpp"

#include <numeric>

namespace tensoria {

  PermGroup subgroup(PermGroup const& g, std::vector<Perm> const& elements) {
    for (auto const& x : elements) {
      if (!g.contains(x)) {
        throw InputError("subgroup generator " + x.to_string()
                         + " is not an element of the group");
      }
    }
    return PermGroup(g.degree(), elements);
  }

  PermGroup normal_closure(PermGroup const& g, std::vector<Perm> const& seeds) {
    StabChain         c = StabChain::build(g.degree(), {});
    std::vector<Perm> gens;
    for (auto const& s : seeds) {
      if (s.degree() != g.degree()) {
        throw InputError("seed degree mismatch");
      }
      if (c.add_generator(s)) {
        gens.push_back(s);
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (auto const& x : g.generators()) {
        auto y = gens[i].conjugate(x);
        if (c.add_generator(y)) {
          gens.push_back(std::move(y));
        }
      }
    }
    PermGroup n(g.degree(), std::move(gens));
    n.set_chain(std::move(c));
    return n;
  }

  PermGroup commutator_subgroup(PermGroup const& g, PermGroup const& a,
                                PermGroup const& b) {
    std::vector<Perm> seeds;
    for (auto const& x : a.generators()) {
      for (auto const& y : b.generators()) {
        auto c = commutator(x, y);
        if (!c.is_identity()) {
          seeds.push_back(std::move(c));
        }
      }
    }
    return normal_closure(g, seeds);
  }

  PermGroup derived_subgroup(PermGroup const& g) {
    return commutator_subgroup(g, g, g);
  }

  std::vector<PermGroup> lower_central_series(PermGroup const& g) {
    std::vector<PermGroup> terms{g};
    while (true) {
      auto next = commutator_subgroup(g, terms.back(), g);
      if (next.order() == terms.back().order()) {
        break;
      }
      terms.push_back(std::move(next));
    }
    return terms;
  }

  std::vector<bool> closure_indices(
      ElementTable const&                          t,
      std::vector<ElementTable::index_type> const& gens) {
    std::vector<bool>                     in(t.size(), false);
    std::vector<ElementTable::index_type> queue{0};
    in[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : gens) {
        auto y = t.multiply(queue[i], g);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
    return in;
  }

  PermGroup subgroup_from_indices(
      ElementTable const& t, std::size_t degree,
      std::vector<ElementTable::index_type> const& idx) {
    std::vector<ElementTable::index_type> chosen;
    std::vector<bool>                     in(t.size(), false);
    in[0] = true;
    for (auto x : idx) {
      if (in[x]) {
        continue;
      }
      chosen.push_back(x);
      in = closure_indices(t, chosen);
    }
    std::vector<Perm> gens;
    for (auto x : chosen) {
      gens.push_back(t.perm(x));
    }
    PermGroup h(degree, std::move(gens));
    h.set_order(std::count(in.begin(), in.end(), true));
    return h;
  }

  namespace {
    // Upper central series as membership vectors over an element table.
    std::vector<std::vector<bool>> upper_series_members(ElementTable const& t) {
      std::vector<std::vector<bool>> out;
      std::vector<bool>              z(t.size(), false);
      z[0] = true;
      out.push_back(z);
      std::size_t count = 1;
      while (true) {
        std::vector<bool> next(t.size(), false);
        std::size_t       c = 0;
        for (ElementTable::index_type x = 0; x < t.size(); ++x) {
          bool ok = true;
          for (std::size_t j = 0; j < t.num_generators() && ok; ++j) {
            ok = z[t.commutator(x, t.generator(j))];
          }
          if (ok) {
            next[x] = true;
            ++c;
          }
        }
        if (c == count) {
          break;
        }
        count = c;
        z     = next;
        out.push_back(std::move(next));
      }
      return out;
    }

    std::vector<ElementTable::index_type> members(std::vector<bool> const& in) {
      std::vector<ElementTable::index_type> out;
      for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i]) {
          out.push_back(static_cast<ElementTable::index_type>(i));
        }
      }
      return out;
    }

    struct CosetClasses {
      std::vector<std::uint32_t>            cls;
      std::vector<ElementTable::index_type> reps;
    };

    // Right cosets Nx as classes of left multiplication by generators of N.
    CosetClasses right_cosets(ElementTable const& t, PermGroup const& n) {
      std::vector<std::uint32_t> parent(t.size());
      std::iota(parent.begin(), parent.end(), 0U);
      auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      for (auto const& p : n.generators()) {
        auto ni = t.index_of(p);
        if (ni < 0) {
          throw InputError("subgroup generator is not an element of the group");
        }
        for (ElementTable::index_type x = 0; x < t.size(); ++x) {
          auto a = find(x);
          auto b = find(t.multiply(static_cast<ElementTable::index_type>(ni), x));
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
      CosetClasses out;
      out.cls.assign(t.size(), UINT32_MAX);
      std::vector<std::uint32_t> id(t.size(), UINT32_MAX);
      for (ElementTable::index_type x = 0; x < t.size(); ++x) {
        auto r = find(x);
        if (id[r] == UINT32_MAX) {
          id[r] = static_cast<std::uint32_t>(out.reps.size());
          out.reps.push_back(x);
        }
        out.cls[x] = id[r];
      }
      return out;
    }
  }  // namespace

  std::vector<PermGroup> upper_central_series(PermGroup const& g) {
    ElementTable           t(g, 10'000);
    std::vector<PermGroup> out;
    for (auto const& z : upper_series_members(t)) {
      out.push_back(subgroup_from_indices(t, g.degree(), members(z)));
    }
    return out;
  }

  PermGroup center(PermGroup const& g) {
    auto s = upper_central_series(g);
    return s.size() > 1 ? s[1] : s[0];
  }

  Quotient quotient(PermGroup const& g, PermGroup const& n) {
    for (auto const& x : n.generators()) {
      for (auto const& y : g.generators()) {
        if (!n.contains(x.conjugate(y))) {
          throw InputError("quotient by a subgroup that is not normal");
        }
      }
    }
    ElementTable t(g);
    auto         cc = right_cosets(t, n);
    auto const   k  = cc.reps.size();
    std::vector<Perm> imgs;
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      std::vector<point_type> img(k);
      for (std::size_t c = 0; c < k; ++c) {
        img[c] = cc.cls[t.mul_letter(cc.reps[c],
                                     make_letter(static_cast<std::uint32_t>(j),
                                                 false))];
      }
      imgs.push_back(Perm(std::move(img)));
    }
    PermGroup q(k, imgs);
    q.set_order(k);
    return {q, GroupHom(g, q, imgs, "coset action")};
  }

  // In A = G/G', <G', g_j^m> / G' = A^m, so |A^(p^i)| for each prime p
  // dividing |A| gives the number of cyclic p-factors of each order.
  AbelianGroup abelian_invariants(PermGroup const& g) {
    auto const& gens = g.generators();
    if (gens.empty()) {
      return {};
    }
    auto const d  = derived_subgroup(g);
    BigInt     q  = g.order() / d.order();
    auto       vp = [](BigInt x, std::uint32_t p) {
      std::size_t e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      return e;
    };
    std::vector<BigInt> orders;
    // Prime divisors of |G| are at most the degree.
    for (std::uint32_t p = 2; q > 1; ++p) {
      if (q % p != 0) {
        continue;
      }
      std::vector<std::size_t> r{vp(q, p)};
      while (q % p == 0) {
        q /= p;
      }
      BigInt m = p;
      while (r.back() > 0) {
        auto h = d.generators();
        for (auto const& x : gens) {
          h.push_back(x.pow(static_cast<std::int64_t>(m)));
        }
        r.push_back(vp(PermGroup(g.degree(), h).order() / d.order(), p));
        m *= p;
      }
      BigInt pj = 1;
      for (std::size_t j = 1; j < r.size(); ++j) {
        pj *= p;
        auto at_least = r[j - 1] - r[j];
        auto above    = j + 1 < r.size() ? r[j] - r[j + 1] : 0;
        for (std::size_t c = 0; c < at_least - above; ++c) {
          orders.push_back(pj);
        }
      }
    }
    return AbelianGroup::from_cyclic(orders);
  }

}  // namespace tensoria
