#include "tensoria/hom.hpp"

#include "tensoria/errors.hpp"

namespace tensoria {

  Perm evaluate(Word const& w, std::vector<Perm> const& gens,
                std::size_t degree) {
    Perm r(degree);
    for (auto const& s : w.syllables()) {
      if (s.gen >= gens.size()) {
        throw InputError("word uses an undeclared generator");
      }
      r *= gens[s.gen].pow(s.exp);
    }
    return r;
  }

  GroupHom::GroupHom(PermGroup source, PermGroup target,
                     std::vector<Perm> images, std::string how)
      : _source(std::move(source)),
        _target(std::move(target)),
        _images(std::move(images)),
        _how(std::move(how)) {
    if (_images.size() != _source.generators().size()) {
      throw InputError("one image per source generator is required");
    }
    for (auto const& x : _images) {
      if (x.degree() != _target.degree()) {
        throw InputError("image degree does not match the target");
      }
    }
  }

  std::vector<Perm> GroupHom::graph_generators() const {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      gens.push_back(direct_sum(_source.generators()[i], _images[i]));
    }
    return gens;
  }

  Perm GroupHom::operator()(Perm const& x) const {
    if (x.degree() != _source.degree()) {
      throw InputError("element is not in the source");
    }
    if (!_image_chain) {
      auto prefix = _source.chain().base();
      _image_chain = std::make_shared<StabChain const>(
          StabChain::build_with_order(_source.degree() + _target.degree(),
                                      graph_generators(), _source.order(),
                                      prefix));
    }
    auto [r, level] = _image_chain->strip(direct_sum(x, Perm(_target.degree())));
    if (level != _image_chain->levels().size()) {
      throw InputError("element is not in the source");
    }
    auto tpart = r.restricted(_source.degree(), _target.degree());
    if (!r.restricted(0, _source.degree()).is_identity()) {
      throw InputError("element is not in the source");
    }
    return tpart.inverse();
  }

  PermGroup GroupHom::image() const {
    return PermGroup(_target.degree(), _images);
  }

  PermGroup GroupHom::kernel() const {
    if (_kernel) {
      return *_kernel;
    }
    auto const ds = _source.degree();
    auto const dt = _target.degree();
    auto       im = image();
    std::vector<point_type> prefix;
    for (auto b : im.chain().base()) {
      prefix.push_back(static_cast<point_type>(b + ds));
    }
    auto chain = StabChain::build_with_order(ds + dt, graph_generators(),
                                             _source.order(), prefix);
    std::vector<Perm> gens;
    BigInt            order = 1;
    auto const&       lv    = chain.levels();
    if (lv.size() > prefix.size()) {
      for (auto id : lv[prefix.size()].gens) {
        gens.push_back(chain.strong_generators()[id].restricted(0, ds));
      }
      for (std::size_t l = prefix.size(); l < lv.size(); ++l) {
        order *= lv[l].orbit.size();
      }
    }
    PermGroup k(ds, std::move(gens));
    k.set_order(order);
    _kernel = std::make_shared<PermGroup const>(k);
    return k;
  }

  GroupHom GroupHom::restricted_to(PermGroup const& sub) const {
    std::vector<Perm> imgs;
    for (auto const& g : sub.generators()) {
      imgs.push_back((*this)(g));
    }
    return GroupHom(sub, _target, std::move(imgs), _how + "; restriction");
  }

  GroupHom define_hom(Presentation const& p, PermGroup const& source,
                      PermGroup const& target, std::vector<Perm> images) {
    if (p.num_generators() != source.generators().size()
        || images.size() != p.num_generators()) {
      throw InputError("generator count mismatch in homomorphism");
    }
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      if (!evaluate(p.relators()[i], images, target.degree()).is_identity()) {
        throw NotAHomomorphism(
            "relator " + p.word_to_string(p.relators()[i])
                + " is not mapped to the identity",
            i);
      }
    }
    return GroupHom(source, target, std::move(images), "relators checked");
  }

}  // namespace tensoria
