#include "tensoria/actions.hpp"

#include <json.hpp>

namespace tensoria {

  namespace {
    // Table of x -> x^s for every element x, from generator images.
    std::vector<Index> extend_endomorphism(ElementTable const&       t,
                                           std::vector<Index> const& img) {
      std::vector<Index> inv(img.size());
      for (std::size_t j = 0; j < img.size(); ++j) {
        inv[j] = t.inverse(img[j]);
      }
      std::vector<Index> phi(t.size());
      phi[0] = 0;
      for (Index i = 1; i < t.size(); ++i) {
        auto l   = t.parent_letter(i);
        auto gen = letter_generator(l);
        phi[i]   = t.multiply(phi[t.parent(i)], (l & 1U) ? inv[gen] : img[gen]);
      }
      return phi;
    }

    Index evaluate_on_images(ElementTable const& t, Word const& w,
                             std::vector<Index> const& img) {
      Index x = 0;
      for (auto const& s : w.syllables()) {
        Index y = s.exp < 0 ? t.inverse(img[s.gen]) : img[s.gen];
        for (std::int64_t k = 0; k < (s.exp < 0 ? -s.exp : s.exp); ++k) {
          x = t.multiply(x, y);
        }
      }
      return x;
    }
  }  // namespace

  Action::Action(PresentedGroup const&                  acting,
                 PresentedGroup const&                  acted,
                 std::vector<std::vector<Index>> const& gen_images)
      : _gen_images(gen_images) {
    auto const& at = acted.elements();
    auto const& ht = acting.elements();
    _n             = at.size();
    auto const m   = ht.size();
    if (gen_images.size() != acting.num_generators()) {
      throw InputError("one automorphism per acting generator is required");
    }
    if (static_cast<double>(_n) * static_cast<double>(m) > 5e7) {
      throw LimitExceeded("action table", std::to_string(_n) + " x "
                                              + std::to_string(m)
                                              + " entries");
    }
    std::vector<std::vector<Index>> letter_maps;
    for (std::size_t s = 0; s < gen_images.size(); ++s) {
      auto const& img = gen_images[s];
      if (img.size() != acted.num_generators()) {
        throw InputError("one image per acted-on generator is required");
      }
      for (auto x : img) {
        if (x >= _n) {
          throw InputError("image index out of range");
        }
      }
      auto const& rels = acted.presentation().relators();
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (evaluate_on_images(at, rels[r], img) != 0) {
          throw InputError("action of generator "
                           + acting.presentation().names()[s]
                           + " does not respect relator "
                           + acted.presentation().word_to_string(rels[r]));
        }
      }
      auto              phi = extend_endomorphism(at, img);
      std::vector<Index> inv(_n, static_cast<Index>(-1));
      for (Index x = 0; x < _n; ++x) {
        if (inv[phi[x]] != static_cast<Index>(-1)) {
          throw InputError("action of generator "
                           + acting.presentation().names()[s]
                           + " is not bijective");
        }
        inv[phi[x]] = x;
      }
      letter_maps.push_back(std::move(phi));
      letter_maps.push_back(std::move(inv));
    }
    _table.resize(_n * m);
    for (Index x = 0; x < _n; ++x) {
      _table[x] = x;
    }
    for (Index h = 1; h < m; ++h) {
      auto const& lm = letter_maps[ht.parent_letter(h)];
      auto        p  = static_cast<std::size_t>(ht.parent(h)) * _n;
      for (Index x = 0; x < _n; ++x) {
        _table[h * _n + x] = lm[_table[p + x]];
      }
    }
    // The assignment must respect acting's relators.
    for (auto const& r : acting.presentation().relators()) {
      for (std::size_t j = 0; j < acted.num_generators(); ++j) {
        Index x = at.generator(j);
        for (auto l : r.letters()) {
          x = letter_maps[l][x];
        }
        if (x != at.generator(j)) {
          throw InputError("action does not respect relator "
                           + acting.presentation().word_to_string(r));
        }
      }
    }
  }

  bool Action::is_trivial() const {
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] != i % _n) {
        return false;
      }
    }
    return true;
  }

  ActionPair ActionPair::swapped() const {
    ActionPair p;
    p.g      = h;
    p.h      = g;
    p.h_on_g = g_on_h;
    p.g_on_h = h_on_g;
    if (ambient) {
      p.ambient = Ambient{ambient->group, ambient->h_gens, ambient->g_gens};
    }
    p.description = description + " (swapped)";
    return p;
  }

  ActionPair conjugation_pair(std::shared_ptr<PresentedGroup const> g) {
    auto const&                     t = g->elements();
    std::vector<std::vector<Index>> img(g->num_generators());
    for (std::size_t s = 0; s < g->num_generators(); ++s) {
      for (std::size_t j = 0; j < g->num_generators(); ++j) {
        img[s].push_back(t.conjugate(t.generator(j), t.generator(s)));
      }
    }
    ActionPair p;
    p.g       = g;
    p.h       = g;
    p.h_on_g  = Action(*g, *g, img);
    p.g_on_h  = p.h_on_g;
    p.ambient = ActionPair::Ambient{g->group(), g->group().generators(),
                                    g->group().generators()};
    p.description = "conjugation";
    return p;
  }

  ActionPair subgroup_conjugation_pair(std::shared_ptr<PresentedGroup const> g,
                                       PermGroup const&                      n,
                                       std::string const& prefix) {
    auto const& G = g->group();
    for (auto const& x : n.generators()) {
      if (!G.contains(x)) {
        throw InputError("subgroup generator is not in the group");
      }
      for (auto const& y : G.generators()) {
        if (!n.contains(x.conjugate(y))) {
          throw InputError("subgroup is not normal");
        }
      }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n.generators().size(); ++i) {
      names.push_back(prefix + std::to_string(i + 1));
    }
    auto N = std::make_shared<PresentedGroup const>(
        PresentedGroup::from_perm_group(n, names));
    auto const& gt = g->elements();
    auto const& nt = N->elements();
    std::vector<std::vector<Index>> n_on_g(N->num_generators());
    for (std::size_t s = 0; s < N->num_generators(); ++s) {
      for (std::size_t j = 0; j < g->num_generators(); ++j) {
        auto c = G.generators()[j].conjugate(n.generators()[s]);
        n_on_g[s].push_back(static_cast<Index>(gt.index_of(c)));
      }
    }
    std::vector<std::vector<Index>> g_on_n(g->num_generators());
    for (std::size_t s = 0; s < g->num_generators(); ++s) {
      for (std::size_t j = 0; j < N->num_generators(); ++j) {
        auto c = n.generators()[j].conjugate(G.generators()[s]);
        g_on_n[s].push_back(static_cast<Index>(nt.index_of(c)));
      }
    }
    ActionPair p;
    p.g       = g;
    p.h       = N;
    p.h_on_g  = Action(*N, *g, n_on_g);
    p.g_on_h  = Action(*g, *N, g_on_n);
    p.ambient = ActionPair::Ambient{G, G.generators(), n.generators()};
    p.description = "conjugation on a normal subgroup";
    return p;
  }

  ActionPair trivial_pair(std::shared_ptr<PresentedGroup const> g,
                          std::shared_ptr<PresentedGroup const> h) {
    auto ident = [](PresentedGroup const& acting, PresentedGroup const& acted) {
      std::vector<std::vector<Index>> img(acting.num_generators());
      for (auto& v : img) {
        for (std::size_t j = 0; j < acted.num_generators(); ++j) {
          v.push_back(acted.elements().generator(j));
        }
      }
      return Action(acting, acted, img);
    };
    ActionPair p;
    p.g           = g;
    p.h           = h;
    p.h_on_g      = ident(*h, *g);
    p.g_on_h      = ident(*g, *h);
    p.description = "trivial";
    return p;
  }

  namespace {
    class Conj {
     public:
      explicit Conj(ElementTable const& t) : _t(t), _n(t.size()) {
        if (_n * _n <= (1U << 24)) {
          _table.resize(_n * _n);
          for (Index y = 0; y < _n; ++y) {
            for (Index x = 0; x < _n; ++x) {
              _table[static_cast<std::size_t>(y) * _n + x] = t.conjugate(x, y);
            }
          }
        }
      }
      Index operator()(Index x, Index y) const {
        return _table.empty() ? _t.conjugate(x, y)
                              : _table[static_cast<std::size_t>(y) * _n + x];
      }

     private:
      ElementTable const& _t;
      std::size_t         _n;
      std::vector<Index>  _table;
    };
  }  // namespace

  CompatReport check_compatibility(ActionPair const& p, std::size_t budget) {
    auto const& gt = p.g->elements();
    auto const& ht = p.h->elements();
    auto const  ng = gt.size(), nh = ht.size();
    double      need = static_cast<double>(ng) * static_cast<double>(nh)
                  * static_cast<double>(ng + nh);
    if (need > static_cast<double>(budget)) {
      throw LimitExceeded("compatibility budget",
                          std::to_string(static_cast<unsigned long long>(need))
                              + " triples required, budget "
                              + std::to_string(budget));
    }
    Conj         cg(gt), ch(ht);
    CompatReport rep;
    // g^(h^g1) = ((g^(g1^-1))^h)^g1
    for (Index g = 0; g < ng; ++g) {
      for (Index h = 0; h < nh; ++h) {
        for (Index g1 = 0; g1 < ng; ++g1) {
          ++rep.triples_checked;
          auto lhs = p.h_on_g.act(g, p.g_on_h.act(h, g1));
          auto rhs = cg(p.h_on_g.act(cg(g, gt.inverse(g1)), h), g1);
          if (lhs != rhs) {
            rep.pass       = false;
            rep.identity   = 1;
            rep.witness[0] = p.g->element_string(g);
            rep.witness[1] = p.h->element_string(h);
            rep.witness[2] = p.g->element_string(g1);
            return rep;
          }
        }
      }
    }
    // h^(g^h1) = ((h^(h1^-1))^g)^h1
    for (Index h = 0; h < nh; ++h) {
      for (Index g = 0; g < ng; ++g) {
        for (Index h1 = 0; h1 < nh; ++h1) {
          ++rep.triples_checked;
          auto lhs = p.g_on_h.act(h, p.h_on_g.act(g, h1));
          auto rhs = ch(p.g_on_h.act(ch(h, ht.inverse(h1)), g), h1);
          if (lhs != rhs) {
            rep.pass       = false;
            rep.identity   = 2;
            rep.witness[0] = p.h->element_string(h);
            rep.witness[1] = p.g->element_string(g);
            rep.witness[2] = p.h->element_string(h1);
            return rep;
          }
        }
      }
    }
    return rep;
  }

  CompatReport check_compatibility_on_generators(ActionPair const& p) {
    auto const& gt = p.g->elements();
    auto const& ht = p.h->elements();
    auto const  kg = p.g->num_generators(), kh = p.h->num_generators();
    CompatReport rep;
    rep.exhaustive = false;
    for (std::size_t i = 0; i < kg; ++i) {
      for (std::size_t s = 0; s < kh; ++s) {
        for (std::size_t j = 0; j < kg; ++j) {
          ++rep.triples_checked;
          auto g = gt.generator(i), h = ht.generator(s), g1 = gt.generator(j);
          auto lhs = p.h_on_g.act(g, p.g_on_h.act(h, g1));
          auto rhs = gt.conjugate(
              p.h_on_g.act(gt.conjugate(g, gt.inverse(g1)), h), g1);
          if (lhs != rhs) {
            rep.pass       = false;
            rep.identity   = 1;
            rep.witness[0] = p.g->element_string(g);
            rep.witness[1] = p.h->element_string(h);
            rep.witness[2] = p.g->element_string(g1);
            return rep;
          }
        }
      }
    }
    for (std::size_t s = 0; s < kh; ++s) {
      for (std::size_t i = 0; i < kg; ++i) {
        for (std::size_t t = 0; t < kh; ++t) {
          ++rep.triples_checked;
          auto h = ht.generator(s), g = gt.generator(i), h1 = ht.generator(t);
          auto lhs = p.g_on_h.act(h, p.h_on_g.act(g, h1));
          auto rhs = ht.conjugate(
              p.g_on_h.act(ht.conjugate(h, ht.inverse(h1)), g), h1);
          if (lhs != rhs) {
            rep.pass       = false;
            rep.identity   = 2;
            rep.witness[0] = p.h->element_string(h);
            rep.witness[1] = p.g->element_string(g);
            rep.witness[2] = p.h->element_string(h1);
            return rep;
          }
        }
      }
    }
    return rep;
  }

  ActionPair action_pair_from_json(std::shared_ptr<PresentedGroup const> g,
                                   std::shared_ptr<PresentedGroup const> h,
                                   std::string const&                    text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object()) {
      throw InputError("action file must be a JSON object");
    }
    auto read = [&](char const* key, PresentedGroup const& acting,
                    PresentedGroup const& acted) {
      std::vector<std::vector<Index>> img(acting.num_generators());
      for (std::size_t s = 0; s < acting.num_generators(); ++s) {
        for (std::size_t k = 0; k < acted.num_generators(); ++k) {
          img[s].push_back(acted.elements().generator(k));
        }
      }
      if (!j.contains(key)) {
        return Action(acting, acted, img);
      }
      auto const& obj = j.at(key);
      if (!obj.is_object()) {
        throw InputError(std::string(key) + " must be an object");
      }
      for (auto const& [name, list] : obj.items()) {
        auto s = acting.presentation().generator_index(name);
        if (s < 0) {
          throw InputError("unknown acting generator '" + name + "'");
        }
        if (!list.is_array() || list.size() != acted.num_generators()) {
          throw InputError("images for '" + name
                           + "' must list one word per acted-on generator");
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
          if (!list[k].is_string()) {
            throw InputError("image words must be strings");
          }
          auto w = acted.presentation().parse_word(list[k].get<std::string>());
          img[static_cast<std::size_t>(s)][k] = acted.elements().evaluate(w);
        }
      }
      return Action(acting, acted, img);
    };
    ActionPair p;
    p.g           = g;
    p.h           = h;
    p.h_on_g      = read("h_on_g", *h, *g);
    p.g_on_h      = read("g_on_h", *g, *h);
    p.description = "from file";
    return p;
  }

}  // namespace tensoria
