#include "tensoria/pc_tensor.hpp"

#include <map>
#include <string>

#include "tensoria/errors.hpp"

namespace tensoria {

  std::optional<std::uint32_t> prime_of_p_group(BigInt const& order) {
    if (order < 2) {
      return std::nullopt;
    }
    BigInt        n = order;
    std::uint32_t p = 2;
    while (n % p != 0) {
      ++p;
    }
    while (n % p == 0) {
      n /= p;
    }
    if (n != 1) {
      return std::nullopt;
    }
    return p;
  }

  namespace {

    Word pc_word(PcElem const& x) {
      Word w;
      for (auto [g, e] : Collector::to_word(x)) {
        w *= Word::generator(g, e);
      }
      return w;
    }

    // Image of x under the automorphism with the given generator images.
    PcElem apply(PcGroup const& m, std::vector<PcElem> const& images, PcElem const& x) {
      auto r = m.identity();
      for (std::size_t i = 0; i < x.e.size(); ++i) {
        if (x.e[i]) {
          r = m.mul(r, m.power(images[i], x.e[i]));
        }
      }
      return r;
    }

    // Image of x under the element h of G, through the diagonal action.
    PcElem apply(PcGroup const& m, PcLevel const& lv, PresentedGroup const& g,
                 Perm const& h, PcElem x) {
      auto idx = g.elements().index_of(h);
      if (idx < 0) {
        throw InternalError("element outside G");
      }
      auto const w = g.elements().word(static_cast<Index>(idx));
      for (auto const& s : w.syllables()) {
        auto const& images = lv.diagonal[2 * s.gen + (s.exp < 0 ? 1 : 0)];
        for (std::int64_t t = 0; t < std::abs(s.exp); ++t) {
          x = apply(m, images, x);
        }
      }
      return x;
    }

    std::vector<std::vector<PcElem>> conjugation_images(
        PcGroup const& eta, PcSubgroup const& t, std::vector<PcElem> const& by,
        PcGroup const& target) {
      std::vector<std::vector<PcElem>> out;
      for (auto const& y : by) {
        for (auto const& z : {y, eta.inverse(y)}) {
          std::vector<PcElem> row;
          for (auto const& u : t.generators()) {
            auto co = t.coordinates(eta.conjugate(u, z));
            auto x  = target.identity();
            for (std::size_t i = 0; i < co.size(); ++i) {
              x.e[i] = static_cast<std::uint8_t>(co[i]);
            }
            row.push_back(std::move(x));
          }
          out.push_back(std::move(row));
        }
      }
      return out;
    }

    // Both compatibility identities over generator triples for the pair
    // (M, G) of the level below.
    CompatReport check_pair(PcLevel const& lv, PresentedGroup const& g) {
      CompatReport r;
      r.exhaustive   = false;
      auto const& m  = *lv.tensor;
      auto const  a  = m.size();
      auto const& gg = g.group().generators();
      auto const  deg = g.group().degree();
      auto fail = [&](int id, std::string x, std::string y, std::string z) {
        r.pass        = false;
        r.identity    = id;
        r.witness[0]  = std::move(x);
        r.witness[1]  = std::move(y);
        r.witness[2]  = std::move(z);
      };
      auto const& names = g.presentation().names();
      for (std::size_t i = 0; i < a && r.pass; ++i) {
        auto u = m.generator(i);
        for (std::size_t s = 0; s < gg.size() && r.pass; ++s) {
          for (std::size_t j = 0; j < a && r.pass; ++j) {
            ++r.triples_checked;
            auto v   = m.generator(j);
            auto lhs = apply(m, lv, g, gg[s].conjugate(lv.lambda[j]), u);
            auto rhs = m.conjugate(apply(m, lv, g, gg[s], m.conjugate(u, m.inverse(v))), v);
            if (lhs.e != rhs.e) {
              fail(1, "t" + std::to_string(i), names[s], "t" + std::to_string(j));
            }
          }
        }
      }
      for (std::size_t s = 0; s < gg.size() && r.pass; ++s) {
        for (std::size_t i = 0; i < a && r.pass; ++i) {
          for (std::size_t t = 0; t < gg.size() && r.pass; ++t) {
            ++r.triples_checked;
            auto gi  = apply(m, lv, g, gg[t], m.generator(i));
            auto lhs = gg[s].conjugate(evaluate(gi, lv.lambda, deg));
            auto rhs = gg[s].conjugate(gg[t].inverse()).conjugate(lv.lambda[i]).conjugate(gg[t]);
            if (lhs != rhs) {
              fail(2, names[s], "t" + std::to_string(i), names[t]);
            }
          }
        }
      }
      return r;
    }

    PcLevel first_level(PresentedGroup const& g, std::uint32_t p,
                        PQuotientLimits const& limits) {
      auto q = p_quotient(g.presentation(), p, limits);
      if (q.group->order() != g.order()) {
        throw InternalError("p-quotient of G has order " + q.group->order().str());
      }
      auto const  deg  = g.group().degree();
      auto const& gens = g.group().generators();
      PcLevel     lv;
      lv.n      = 1;
      lv.tensor = q.group;
      lv.pclass = q.pclass;
      lv.lambda = pc_images(q, gens, deg);
      if (!respects_relations(*q.group, lv.lambda, deg)) {
        throw InternalError("pc presentation of G does not map onto G");
      }
      PcSubgroup whole(q.group);
      lv.diagonal = conjugation_images(*q.group, whole, q.images, *q.group);
      return lv;
    }

    PcLevel next_level(PcLevel const& prev, PresentedGroup const& g, std::uint32_t p,
                       PQuotientLimits const& limits) {
      auto const& m    = *prev.tensor;
      auto const  a    = static_cast<std::uint32_t>(m.size());
      auto const  b    = static_cast<std::uint32_t>(g.num_generators());
      auto const& gens = g.group().generators();
      auto const  deg  = g.group().degree();
      auto const& gt   = g.elements();

      std::vector<std::string> names;
      for (std::uint32_t i = 0; i < a; ++i) {
        names.push_back("t" + std::to_string(i + 1));
      }
      bool rename = false;
      for (auto const& n : g.presentation().names()) {
        rename = rename || std::find(names.begin(), names.end(), n) != names.end();
      }
      for (auto const& n : g.presentation().names()) {
        names.push_back(rename ? n + "_phi" : n);
      }
      std::vector<std::uint32_t> shift(b);
      for (std::uint32_t s = 0; s < b; ++s) {
        shift[s] = a + s;
      }

      Presentation pres(names, {});
      auto const mpres =
          m.presentation(std::vector<std::string>(names.begin(), names.begin() + a));
      for (auto const& r : mpres.relators()) {
        pres.add_relator(r);
      }
      for (auto const& r : g.presentation().relators()) {
        pres.add_relator(r.relabel(shift));
      }
      auto gword = [&](Perm const& x) {
        auto idx = gt.index_of(x);
        if (idx < 0) {
          throw InternalError("element outside G");
        }
        return gt.word(static_cast<Index>(idx)).relabel(shift);
      };

      struct MLetter {
        Word   w;
        PcElem x;
        Perm   lambda;
      };
      struct GLetter {
        Word        w;
        Perm        x;
        std::size_t letter;
      };
      std::vector<MLetter> ml;
      for (std::uint32_t i = 0; i < a; ++i) {
        auto u = m.generator(i);
        ml.push_back({Word::generator(i), u, prev.lambda[i]});
        ml.push_back({Word::generator(i, -1), m.inverse(u), prev.lambda[i].inverse()});
      }
      std::vector<GLetter> gl;
      for (std::uint32_t s = 0; s < b; ++s) {
        gl.push_back({Word::generator(a + s), gens[s], 2 * s});
        gl.push_back({Word::generator(a + s, -1), gens[s].inverse(), 2 * s + 1});
      }
      for (auto const& x : ml) {
        for (auto const& y : gl) {
          auto c = commutator(x.w, y.w);
          for (auto const& z : ml) {
            auto rhs = commutator(pc_word(m.conjugate(x.x, z.x)),
                                  gword(y.x.conjugate(z.lambda)));
            pres.add_relator(conjugate(c, z.w) * rhs.inverse());
          }
          for (auto const& z : gl) {
            auto rhs = commutator(pc_word(apply(m, prev.diagonal[z.letter], x.x)),
                                  gword(y.x.conjugate(z.x)));
            pres.add_relator(conjugate(c, z.w) * rhs.inverse());
          }
        }
      }
      pres.deduplicate();

      auto q   = p_quotient(pres, p, limits);
      auto eta = q.group;
      std::vector<PcElem> brackets, right;
      for (std::uint32_t i = 0; i < a; ++i) {
        for (std::uint32_t s = 0; s < b; ++s) {
          brackets.push_back(eta->commutator(q.images[i], q.images[a + s]));
        }
      }
      for (std::uint32_t s = 0; s < b; ++s) {
        right.push_back(q.images[a + s]);
      }
      PcSubgroup t(eta, brackets);
      t.normal_closure();
      if (eta->order() != m.order() * g.order() * t.order()) {
        throw InternalError("|eta| = " + eta->order().str()
                            + " differs from |M| |G| |M (x) G|");
      }

      // eta -> G, M-generators to their lambda images, G to itself.
      std::vector<Perm> fp(prev.lambda.begin(), prev.lambda.end());
      fp.insert(fp.end(), gens.begin(), gens.end());
      auto images = pc_images(q, fp, deg);
      if (!respects_relations(*eta, images, deg)) {
        throw InternalError("bracket map is not a homomorphism");
      }
      for (std::size_t x = 0; x < fp.size(); ++x) {
        if (evaluate(q.images[x], images, deg) != fp[x]) {
          throw InternalError("bracket map disagrees on a generator");
        }
      }

      PcLevel lv;
      lv.n      = prev.n + 1;
      lv.eta    = eta;
      lv.pclass = q.pclass;
      lv.tensor = std::make_shared<PcGroup const>(t.as_group());
      for (auto const& u : t.generators()) {
        lv.lambda.push_back(evaluate(u, images, deg));
      }
      lv.diagonal = conjugation_images(*eta, t, right, *lv.tensor);
      lv.compat   = check_pair(prev, g);
      if (!lv.compat.pass) {
        throw InternalError("level actions are incompatible");
      }
      return lv;
    }

  }  // namespace

  PcTensorTower pc_tensor_power(std::shared_ptr<PresentedGroup const> g,
                                std::size_t n, PQuotientLimits const& limits) {
    PcTensorTower t;
    t.group = std::move(g);
    while (t.levels.size() < n) {
      extend_pc_tower(t, limits);
    }
    return t;
  }

  void extend_pc_tower(PcTensorTower& t, PQuotientLimits const& limits) {
    auto const& g = *t.group;
    if (t.levels.empty()) {
      auto p = prime_of_p_group(g.order());
      if (!p) {
        throw InputError("pc tensor powers need a nontrivial p-group");
      }
      t.prime = *p;
      t.levels.push_back(first_level(g, t.prime, limits));
      return;
    }
    t.levels.push_back(next_level(t.levels.back(), g, t.prime, limits));
  }

  PermGroup pc_lambda_image(PcTensorTower const& t, std::size_t n) {
    return PermGroup(t.group->group().degree(), t.level(n).lambda);
  }

  PcSubgroup pc_lambda_kernel(PcTensorTower const& t, std::size_t n) {
    auto const& lv  = t.level(n);
    auto const& m   = *lv.tensor;
    auto const  deg = t.group->group().degree();
    // Schreier generators over the (small) image.
    std::map<Perm, PcElem> seen{{Perm(deg), m.identity()}};
    std::vector<Perm>      queue{Perm(deg)};
    PcSubgroup             k(lv.tensor, {});
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto const x  = queue[head];
      auto const tx = seen.at(x);
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto y  = x * lv.lambda[i];
        auto ty = m.mul(tx, m.generator(i));
        auto it = seen.find(y);
        if (it == seen.end()) {
          seen.emplace(y, std::move(ty));
          queue.push_back(std::move(y));
        } else {
          k.add(m.mul(ty, m.inverse(it->second)));
        }
      }
    }
    if (k.order() * queue.size() != m.order()) {
      throw InternalError("kernel of lambda has the wrong order");
    }
    return k;
  }

  bool is_central(PcSubgroup const& k) {
    auto const& g = k.group();
    for (auto const& x : k.generators()) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g.is_identity(g.commutator(x, g.generator(i)))) {
          return false;
        }
      }
    }
    return true;
  }

  AbelianGroup pc_abelian_invariants(std::shared_ptr<PcGroup const> g) {
    auto const& G = *g;
    std::vector<PcElem> comms;
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        comms.push_back(G.commutator(G.generator(j), G.generator(i)));
      }
    }
    PcSubgroup der(g, comms);
    der.normal_closure();
    // r[i] = rank of (G^ab)^(p^i) over F_p-layers: log_p |G^(p^i) G'| - log_p |G'|.
    std::vector<std::size_t> r;
    std::vector<PcElem>      pw;
    for (std::size_t i = 0; i < G.size(); ++i) {
      pw.push_back(G.generator(i));
    }
    while (true) {
      auto gens = der.generators();
      gens.insert(gens.end(), pw.begin(), pw.end());
      PcSubgroup s(g, gens);
      r.push_back(s.size() - der.size());
      if (r.back() == 0) {
        break;
      }
      for (auto& x : pw) {
        x = G.power(x, G.prime());
      }
    }
    std::vector<BigInt> orders;
    BigInt              q = 1;
    for (std::size_t j = 1; j < r.size(); ++j) {
      q *= G.prime();
      auto ge   = r[j - 1] - r[j];                            // factors of order >= p^j
      auto next = j + 1 < r.size() ? r[j] - r[j + 1] : 0;     // of order >= p^(j+1)
      for (std::size_t c = 0; c < ge - next; ++c) {
        orders.push_back(q);
      }
    }
    return AbelianGroup::from_cyclic(orders);
  }

}  // namespace tensoria
