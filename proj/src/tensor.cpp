#include "tensoria/tensor.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace tensoria {

  namespace {
    std::vector<Index> letter_elements(ElementTable const& t) {
      std::vector<Index> out;
      for (std::size_t j = 0; j < t.num_generators(); ++j) {
        auto e = t.generator(j);
        out.push_back(e);
        out.push_back(t.inverse(e));
      }
      return out;
    }

    std::vector<Index> generator_elements(ElementTable const& t) {
      std::vector<Index> out;
      for (std::size_t j = 0; j < t.num_generators(); ++j) {
        out.push_back(t.generator(j));
      }
      return out;
    }

    std::vector<Index> all_elements(ElementTable const& t) {
      std::vector<Index> out(t.size());
      for (Index i = 0; i < t.size(); ++i) {
        out[i] = i;
      }
      return out;
    }

    std::string word_string(Word const& w, std::vector<std::string> const& names) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto const& s : w.syllables()) {
        if (!out.empty()) {
          out += '*';
        }
        out += names[s.gen];
        if (s.exp != 1) {
          out += '^' + std::to_string(s.exp);
        }
      }
      return out;
    }

    // Elements of a semidirect product X x| Y as index pairs, with Y acting
    // on X from the right: (x1, y1)(x2, y2) = (x1 x2^(y1^-1), y1 y2).
    struct Semidirect {
      ElementTable const& xt;
      ElementTable const& yt;
      Action const&       y_on_x;

      using Elt = std::pair<Index, Index>;

      Elt mul(Elt a, Elt b) const {
        auto x = y_on_x.act(b.first, yt.inverse(a.second));
        return {xt.multiply(a.first, x), yt.multiply(a.second, b.second)};
      }
      Elt inv(Elt a) const {
        return {y_on_x.act(xt.inverse(a.first), a.second), yt.inverse(a.second)};
      }
      Elt comm(Elt a, Elt b) const {
        return mul(mul(inv(a), inv(b)), mul(a, b));
      }
      Elt eval(Word const& w, std::vector<Elt> const& gens) const {
        Elt r{0, 0};
        for (auto const& s : w.syllables()) {
          auto g = s.exp < 0 ? inv(gens[s.gen]) : gens[s.gen];
          for (std::int64_t k = 0; k < (s.exp < 0 ? -s.exp : s.exp); ++k) {
            r = mul(r, g);
          }
        }
        return r;
      }
    };

    // Checks the relators of `p` in X x| Y on the given generator images.
    void check_relators(Presentation const& p, Semidirect const& sd,
                        std::vector<Semidirect::Elt> const& gens,
                        std::string const&                  what) {
      auto const& rels = p.relators();
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (sd.eval(rels[r], gens) != Semidirect::Elt{0, 0}) {
          throw NotAHomomorphism(what + " fails on relator "
                                     + p.word_to_string(rels[r]),
                                 r);
        }
      }
    }

    // Orbit of point 0 under a growing generating set.
    class Orbit {
     public:
      explicit Orbit(std::size_t degree) : _in(degree, false) {
        _pts.push_back(0);
        _in[0] = true;
      }
      bool contains(point_type p) const {
        return _in[p];
      }
      std::size_t size() const {
        return _pts.size();
      }
      // Closes the orbit under gens; those seen by the previous call were
      // already applied to the points found so far.
      void extend(std::vector<Perm> const& gens) {
        auto const old = _pts.size();
        for (std::size_t i = 0; i < _pts.size(); ++i) {
          for (std::size_t j = i < old ? _applied : 0; j < gens.size(); ++j) {
            auto q = gens[j][_pts[i]];
            if (!_in[q]) {
              _in[q] = true;
              _pts.push_back(q);
            }
          }
        }
        _applied = gens.size();
      }

     private:
      std::vector<point_type> _pts;
      std::vector<bool>       _in;
      std::size_t             _applied = 0;
    };

    // Small generating set of <elems> chosen greedily by membership.
    PermGroup generated(std::size_t degree, std::vector<Perm> const& elems) {
      StabChain         chain(degree);
      std::vector<Perm> gens;
      for (auto const& e : elems) {
        if (chain.add_generator(e)) {
          gens.push_back(e);
        }
      }
      PermGroup g(degree, gens);
      g.set_chain(std::move(chain));
      return g;
    }
  }  // namespace

  std::size_t TensorGroup::num_left() const {
    return pair.g->num_generators();
  }
  std::size_t TensorGroup::num_right() const {
    return pair.h->num_generators();
  }
  std::vector<Perm> TensorGroup::left_generators() const {
    auto const& g = eta.generators();
    return {g.begin(), g.begin() + static_cast<std::ptrdiff_t>(num_left())};
  }
  std::vector<Perm> TensorGroup::right_generators() const {
    auto const& g = eta.generators();
    return {g.begin() + static_cast<std::ptrdiff_t>(num_left()), g.end()};
  }
  Perm TensorGroup::left(Index u) const {
    return evaluate(pair.g->elements().word(u), left_generators(), eta.degree());
  }
  Perm TensorGroup::right(Index v) const {
    return evaluate(pair.h->elements().word(v), right_generators(),
                    eta.degree());
  }
  std::string TensorGroup::label(Index u, Index v) const {
    auto const& names = left_names.empty() ? pair.g->presentation().names()
                                           : left_names;
    return "(" + word_string(pair.g->elements().word(u), names) + " ⊗ "
           + pair.h->element_string(v) + ")";
  }

  Presentation eta_presentation(ActionPair const& p, bool all) {
    auto const& G  = *p.g;
    auto const& H  = *p.h;
    auto const  kg = G.num_generators();
    auto const  kh = H.num_generators();

    auto names  = G.presentation().names();
    bool rename = p.g == p.h;
    for (auto const& n : H.presentation().names()) {
      rename = rename || G.presentation().generator_index(n) >= 0;
    }
    for (auto const& n : H.presentation().names()) {
      names.push_back(rename ? n + "_phi" : n);
    }
    std::vector<std::uint32_t> rmap(kh);
    for (std::size_t j = 0; j < kh; ++j) {
      rmap[j] = static_cast<std::uint32_t>(kg + j);
    }

    Presentation out(names, {});
    for (auto const& r : G.presentation().relators()) {
      out.add_relator(r);
    }
    for (auto const& r : H.presentation().relators()) {
      out.add_relator(r.relabel(rmap));
    }

    auto const& gt = G.elements();
    auto const& ht = H.elements();
    std::vector<Word> gw(gt.size()), hw(ht.size());
    for (Index i = 0; i < gt.size(); ++i) {
      gw[i] = gt.word(i);
    }
    for (Index i = 0; i < ht.size(); ++i) {
      hw[i] = ht.word(i).relabel(rmap);
    }
    auto xs = all ? all_elements(gt) : letter_elements(gt);
    auto ys = all ? all_elements(ht) : letter_elements(ht);
    for (auto x : xs) {
      for (auto y : ys) {
        auto c = commutator(gw[x], hw[y]);
        for (auto z : xs) {
          auto rhs = commutator(gw[gt.conjugate(x, z)], hw[p.g_on_h.act(y, z)]);
          out.add_relator(conjugate(c, gw[z]) * rhs.inverse());
        }
        for (auto z : ys) {
          auto rhs = commutator(gw[p.h_on_g.act(x, z)], hw[ht.conjugate(y, z)]);
          out.add_relator(conjugate(c, hw[z]) * rhs.inverse());
        }
      }
    }
    out.deduplicate();
    return out;
  }

  BigInt predicted_cosets(ActionPair const& p) {
    auto const& g  = p.g->group();
    auto const& h  = p.h->group();
    auto        ab = z_tensor(abelian_invariants(g), abelian_invariants(h));
    return ab.order() * derived_subgroup(g).order() * derived_subgroup(h).order()
           * h.order();
  }

  TensorGroup build_eta(ActionPair p, BuildLimits const& limits) {
    TensorGroup t;
    t.pair   = std::move(p);
    auto& pr = t.pair;
    try {
      t.compat = check_compatibility(pr, limits.compat_budget);
    } catch (LimitExceeded const&) {
      t.compat = check_compatibility_on_generators(pr);
    }
    if (!t.compat.pass) {
      throw InputError("actions are not compatible: identity "
                       + std::to_string(t.compat.identity) + " fails at ("
                       + t.compat.witness[0] + ", " + t.compat.witness[1]
                       + ", " + t.compat.witness[2] + ")");
    }
    t.predicted_cosets = predicted_cosets(pr);
    if (t.predicted_cosets > limits.max_cosets) {
      throw LimitExceeded("max_cosets",
                          "predicted " + t.predicted_cosets.str()
                              + " cosets exceed the limit of "
                              + std::to_string(limits.max_cosets));
    }

    auto const& G  = *pr.g;
    auto const& H  = *pr.h;
    auto const  kg = G.num_generators();
    auto const  kh = H.num_generators();
    auto const& gt = G.elements();
    auto const& ht = H.elements();

    t.presentation = eta_presentation(pr);
    std::vector<Word> sub;
    for (std::size_t i = 0; i < kg; ++i) {
      sub.push_back(Word::generator(static_cast<std::uint32_t>(i)));
    }
    auto table = enumerate(t.presentation, sub,
                           {limits.max_cosets, limits.strategy});
    if (!table.complete()) {
      throw LimitExceeded("max_cosets",
                          "enumeration of eta aborted at "
                              + std::to_string(limits.max_cosets) + " cosets");
    }
    t.num_cosets      = table.num_cosets();
    t.max_live_cosets = table.max_live_cosets();

    auto const idx = t.num_cosets;
    auto const dg  = G.group().degree();
    auto const dh  = H.group().degree();
    auto const deg = idx + dg + dh;
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < kg + kh; ++j) {
      std::vector<point_type> img(deg);
      for (std::size_t c = 0; c < idx; ++c) {
        img[c] = static_cast<point_type>(
            table.entry(c, make_letter(static_cast<std::uint32_t>(j), false)));
      }
      for (std::size_t a = 0; a < dg; ++a) {
        img[idx + a] = static_cast<point_type>(
            idx + (j < kg ? G.group().generators()[j][a] : a));
      }
      for (std::size_t a = 0; a < dh; ++a) {
        img[idx + dg + a] = static_cast<point_type>(
            idx + dg + (j >= kg ? H.group().generators()[j - kg][a] : a));
      }
      gens.push_back(Perm::unchecked(std::move(img)));
    }
    t.eta = PermGroup(deg, gens);
    if (idx <= limits.exact_order_cosets) {
      auto chain        = StabChain::build(deg, gens);
      t.eta_order       = chain.order();
      t.eta_order_exact = true;
      t.eta.set_chain(std::move(chain));
    } else {
      // The left copy meets the kernel of the projection to G trivially,
      // so it has order |G|.
      t.eta_order = BigInt(idx) * G.order();
      t.eta.set_order(t.eta_order);
    }

    // Tensor generators: conjugates of [x, y] over generator pairs, kept
    // when they enlarge the group, until the kernel of the projection is
    // reached.  Conjugates of [g, h] are again of this form.
    auto const target =
        static_cast<std::size_t>(BigInt(idx) / H.order());
    std::vector<std::optional<Perm>> lcache(gt.size()), rcache(ht.size());
    auto lperm = [&](Index u) -> Perm const& {
      if (!lcache[u]) {
        lcache[u] = t.left(u);
      }
      return *lcache[u];
    };
    auto rperm = [&](Index v) -> Perm const& {
      if (!rcache[v]) {
        rcache[v] = t.right(v);
      }
      return *rcache[v];
    };
    // The tensor group meets the left copy, and so every stabilizer of a
    // coset, trivially: it acts semiregularly on the cosets and the order
    // of a subgroup is the length of its orbit through coset 0.
    std::vector<std::pair<Index, Index>> queue;
    std::unordered_set<std::uint64_t>    seen;
    auto push = [&](Index u, Index v) {
      auto key = (static_cast<std::uint64_t>(u) << 32) | v;
      if (seen.insert(key).second) {
        queue.emplace_back(u, v);
      }
    };
    auto const gl = generator_elements(gt);
    auto const hl = generator_elements(ht);
    for (auto x : gl) {
      for (auto y : hl) {
        push(x, y);
      }
    }
    std::vector<std::pair<Index, Index>> chosen;
    std::vector<Perm>                    chosen_perms;
    Orbit                                orbit(idx);
    for (std::size_t q = 0; q < queue.size() && orbit.size() != target; ++q) {
      auto [u, v] = queue[q];
      auto c      = commutator(lperm(u), rperm(v));
      if (!orbit.contains(c[0])) {
        chosen.emplace_back(u, v);
        chosen_perms.push_back(std::move(c));
        orbit.extend(chosen_perms);
      }
      for (auto z : gl) {
        push(gt.conjugate(u, z), pr.g_on_h.act(v, z));
      }
      for (auto z : hl) {
        push(pr.h_on_g.act(u, z), ht.conjugate(v, z));
      }
    }
    BigInt const order = orbit.size();
    // Drop generators that the others already produce.
    for (std::size_t i = chosen.size(); i-- > 0 && chosen.size() > 1;) {
      std::vector<Perm> rest;
      for (std::size_t j = 0; j < chosen_perms.size(); ++j) {
        if (j != i) {
          rest.push_back(chosen_perms[j]);
        }
      }
      Orbit o(idx);
      o.extend(rest);
      if (o.size() == orbit.size()) {
        chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
        chosen_perms.erase(chosen_perms.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    t.tensor = PermGroup(deg, chosen_perms);
    t.tensor.set_base_prefix({0});
    t.tensor.set_order(order);
    for (auto [u, v] : chosen) {
      t.generators.push_back({u, v, t.label(u, v)});
    }

    // lambda and lambda' through G x| H and H x| G.
    {
      Semidirect                   sd{gt, ht, pr.h_on_g};
      std::vector<Semidirect::Elt> im;
      for (std::size_t i = 0; i < kg; ++i) {
        im.emplace_back(gt.generator(i), 0);
      }
      for (std::size_t j = 0; j < kh; ++j) {
        im.emplace_back(0, ht.generator(j));
      }
      check_relators(t.presentation, sd, im, "eta -> G x| H");
      std::vector<Perm> images;
      for (auto [u, v] : chosen) {
        auto e = sd.comm({u, 0}, {0, v});
        if (e.second != 0) {
          throw InternalError("tensor generator leaves G in G x| H");
        }
        images.push_back(gt.perm(e.first));
      }
      t.lambda = GroupHom(t.tensor, G.group(), std::move(images),
                          "restriction of eta -> G x| H, relators checked");
    }
    {
      Semidirect                   sd{ht, gt, pr.g_on_h};
      std::vector<Semidirect::Elt> im;
      for (std::size_t i = 0; i < kg; ++i) {
        im.emplace_back(0, gt.generator(i));
      }
      for (std::size_t j = 0; j < kh; ++j) {
        im.emplace_back(ht.generator(j), 0);
      }
      check_relators(t.presentation, sd, im, "eta -> H x| G");
      std::vector<Perm> images;
      for (auto [u, v] : chosen) {
        auto e = sd.comm({0, u}, {v, 0});
        if (e.second != 0) {
          throw InternalError("tensor generator leaves H in H x| G");
        }
        images.push_back(ht.perm(e.first));
      }
      t.lambda_prime = GroupHom(t.tensor, H.group(), std::move(images),
                                "restriction of eta -> H x| G, relators checked");
    }
    if (pr.ambient) {
      auto const& amb = *pr.ambient;
      auto        im  = amb.g_gens;
      im.insert(im.end(), amb.h_gens.begin(), amb.h_gens.end());
      define_hom(t.presentation, t.eta, amb.group, im);
      auto const        d = amb.group.degree();
      std::vector<Perm> images;
      for (auto [u, v] : chosen) {
        images.push_back(commutator(evaluate(gt.word(u), amb.g_gens, d),
                                    evaluate(ht.word(v), amb.h_gens, d)));
      }
      t.bracket = GroupHom(t.tensor, amb.group, std::move(images),
                           "restriction of eta -> ambient group, relators checked");
    }
    return t;
  }

  TensorGroup build_nu(std::shared_ptr<PresentedGroup const> g,
                       BuildLimits const&                    limits) {
    return build_eta(conjugation_pair(std::move(g)), limits);
  }

  TensorGroup tensor_with_subgroup(std::shared_ptr<PresentedGroup const> g,
                                   PermGroup const&                      n,
                                   BuildLimits const&                    limits) {
    return build_eta(subgroup_conjugation_pair(std::move(g), n), limits);
  }

  PermGroup derivative(ActionPair const& p, Side side, std::size_t budget) {
    auto const& x  = side == Side::left ? *p.g : *p.h;
    auto const& y  = side == Side::left ? *p.h : *p.g;
    auto const& ac = side == Side::left ? p.h_on_g : p.g_on_h;
    auto const& xt = x.elements();
    auto const& yt = y.elements();
    if (static_cast<double>(xt.size()) * static_cast<double>(yt.size())
        > static_cast<double>(budget)) {
      throw LimitExceeded("derivative budget",
                          std::to_string(xt.size()) + " x "
                              + std::to_string(yt.size()) + " pairs");
    }
    std::vector<bool>  hit(xt.size(), false);
    std::vector<Index> idx;
    for (Index a = 0; a < xt.size(); ++a) {
      auto ai = xt.inverse(a);
      for (Index b = 0; b < yt.size(); ++b) {
        auto e = xt.multiply(ai, ac.act(a, b));
        if (!hit[e]) {
          hit[e] = true;
          idx.push_back(e);
        }
      }
    }
    return subgroup_from_indices(xt, x.group().degree(), idx);
  }

  GroupHom const& lambda_map(TensorGroup const& t) {
    if (!t.lambda.image().equals(derivative(t.pair, Side::left))) {
      throw InternalError("image of lambda differs from the derivative");
    }
    return t.lambda;
  }

  std::vector<std::pair<Index, Index>> diagonal_fibre(TensorGroup const& t) {
    auto const& gt = t.pair.g->elements();
    auto const& ht = t.pair.h->elements();
    std::vector<std::pair<Index, Index>> out;
    for (Index v = 0; v < ht.size(); ++v) {
      auto u = gt.index_of(ht.perm(v));
      if (u < 0) {
        throw InputError("right factor is not a subgroup of the left one");
      }
      out.emplace_back(static_cast<Index>(u), v);
    }
    return out;
  }

  PermGroup delta_subgroup(TensorGroup const& t) {
    std::vector<Perm> elems;
    for (auto [u, v] : diagonal_fibre(t)) {
      elems.push_back(t.tensor_element(u, v));
    }
    return generated(t.tensor.degree(), elems);
  }

  Quotient exterior_product(TensorGroup const&                          t,
                            std::vector<std::pair<Index, Index>> const& fibre) {
    std::vector<Perm> seeds;
    for (auto [u, v] : fibre) {
      seeds.push_back(t.tensor_element(u, v));
    }
    return quotient(t.tensor, normal_closure(t.tensor, seeds));
  }

  namespace {
    // G^(x)k from its realisation in eta, with a derived presentation on
    // the tensor generators and the smaller of the two representations.
    std::shared_ptr<PresentedGroup const> factor_group(TensorGroup const& t) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < t.generators.size(); ++i) {
        names.push_back("t" + std::to_string(i + 1));
      }
      auto m = PresentedGroup::from_perm_group(t.tensor, names);
      if (m.order() < t.tensor.degree()) {
        EnumLimits lim;
        lim.max_cosets = std::max<std::size_t>(
            4096, 4 * static_cast<std::size_t>(m.order()));
        return std::make_shared<PresentedGroup const>(
            PresentedGroup::from_presentation(m.presentation(), lim));
      }
      return std::make_shared<PresentedGroup const>(std::move(m));
    }
  }  // namespace

  TensorPowerTower tensor_power(std::shared_ptr<PresentedGroup const> g,
                                std::size_t n, BuildLimits const& limits) {
    if (n < 2) {
      throw InputError("tensor power needs n >= 2");
    }
    TensorPowerTower tower;
    tower.group = std::move(g);
    while (tower.levels.size() + 1 < n) {
      extend_tower(tower, limits);
    }
    return tower;
  }

  void extend_tower(TensorPowerTower& tower, BuildLimits const& limits) {
    auto const& g = tower.group;
    if (tower.levels.empty()) {
      TowerLevel lv;
      lv.n        = 2;
      lv.tensor   = build_nu(g, limits);
      lv.lambda_n = *lv.tensor.bracket;
      tower.levels.push_back(std::move(lv));
      return;
    }
    auto const& gt = g->elements();
    auto const  kg = g->num_generators();
    auto const& prev = tower.levels.back();
    auto const& pt   = prev.tensor;
    auto        m    = factor_group(pt);
    auto const& mt   = m->elements();
    auto const  km   = m->num_generators();
    ElementTable tt(pt.tensor);

    // Diagonal action: conjugation by the right copy of G.
    auto const rg = pt.right_generators();
    std::vector<std::vector<Index>> g_on_m(kg);
    for (std::size_t s = 0; s < kg; ++s) {
      for (std::size_t j = 0; j < km; ++j) {
        auto c = tt.index_of(pt.tensor.generators()[j].conjugate(rg[s]));
        if (c < 0) {
          throw InternalError("diagonal action leaves the tensor group");
        }
        g_on_m[s].push_back(mt.evaluate(tt.word(static_cast<Index>(c))));
      }
    }
    // G^(x)k on G through lambda_k.
    std::vector<Index> lam;
    for (auto const& x : prev.lambda_n.images()) {
      auto e = gt.index_of(x);
      if (e < 0) {
        throw InternalError("lambda image outside G");
      }
      lam.push_back(static_cast<Index>(e));
    }
    std::vector<std::vector<Index>> m_on_g(km);
    for (std::size_t j = 0; j < km; ++j) {
      for (std::size_t i = 0; i < kg; ++i) {
        m_on_g[j].push_back(gt.conjugate(gt.generator(i), lam[j]));
      }
    }
    auto const k = prev.n;
    ActionPair p;
    p.g           = m;
    p.h           = g;
    p.h_on_g      = Action(*g, *m, g_on_m);
    p.g_on_h      = Action(*m, *g, m_on_g);
    p.ambient     = ActionPair::Ambient{g->group(), prev.lambda_n.images(),
                                        g->group().generators()};
    p.description = "tensor power level " + std::to_string(k + 1);

    std::vector<std::string> labels;
    for (auto const& x : pt.generators) {
      labels.push_back(x.label);
    }
    TowerLevel lv;
    lv.n      = k + 1;
    lv.tensor = build_eta(std::move(p), limits);
    lv.tensor.left_names = labels;
    for (auto& x : lv.tensor.generators) {
      x.label = lv.tensor.label(x.left, x.right);
    }
    lv.lambda_n = *lv.tensor.bracket;
    tower.levels.push_back(std::move(lv));
  }

  GroupHom const& lambda_n_map(TensorPowerTower const& t, std::size_t n) {
    auto const& lv     = t.level(n);
    auto        series = lower_central_series(t.group->group());
    auto const& gamma  = series[std::min(n - 1, series.size() - 1)];
    if (!lv.lambda_n.image().equals(gamma)) {
      throw InternalError("image of lambda_" + std::to_string(n)
                          + " differs from gamma_" + std::to_string(n));
    }
    return lv.lambda_n;
  }

  CommutatorReport tensor_commutator_check(TensorGroup const& t,
                                           Perm const*        perturb) {
    auto const& gt = t.pair.g->elements();
    auto const& ht = t.pair.h->elements();
    auto const  gl = letter_elements(gt);
    auto const  hl = letter_elements(ht);
    struct Gen {
      Index u, v;
      Perm  tensor;
      Index lam, lam_prime;
    };
    std::vector<Gen> gens;
    for (auto u : gl) {
      for (auto v : hl) {
        auto x  = t.tensor_element(u, v);
        auto l  = gt.index_of(t.lambda(x));
        auto lp = ht.index_of(t.lambda_prime(x));
        if (l < 0 || lp < 0) {
          throw InternalError("lambda value outside its target");
        }
        gens.push_back({u, v, std::move(x), static_cast<Index>(l),
                        static_cast<Index>(lp)});
      }
    }
    CommutatorReport rep;
    for (auto const& a : gens) {
      for (auto const& b : gens) {
        ++rep.tuples_checked;
        auto lhs = commutator(a.tensor, b.tensor);
        if (perturb) {
          lhs = lhs.conjugate(*perturb);
        }
        auto rhs = t.tensor_element(a.lam, b.lam_prime);
        if (lhs != rhs) {
          rep.pass    = false;
          rep.witness = "[" + t.label(a.u, a.v) + ", " + t.label(b.u, b.v)
                        + "]";
          return rep;
        }
      }
    }
    return rep;
  }

}  // namespace tensoria
