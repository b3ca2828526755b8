#include "tensoria/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "tensoria/errors.hpp"
#include "tensoria/homology.hpp"
#include "tensoria/pc_tensor.hpp"
#include "tensoria/permgrp.hpp"

namespace tensoria {

  namespace {
    using Clock = std::chrono::steady_clock;

    nlohmann::json big(BigInt const& x) {
      if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(x);
      }
      return x.str();
    }

    nlohmann::json invariants_json(AbelianGroup const& a) {
      auto j = nlohmann::json::array();
      for (auto const& d : a.cyclic_factors()) {
        j.push_back(big(d));
      }
      return j;
    }

    CheckResult row(std::string check, std::string group,
                    nlohmann::json params = nlohmann::json::object()) {
      CheckResult r;
      r.check  = std::move(check);
      r.group  = std::move(group);
      r.params = std::move(params);
      return r;
    }

    CheckResult skipped(CheckResult r, LimitExceeded const& e) {
      r.verdict = Verdict::skipped;
      r.detail  = e.what();
      return r;
    }

    // Runs f on r; LimitExceeded turns into a skip and any other library
    // error into a failure carrying the message.
    template <class F>
    CheckResult guarded(CheckResult r, F&& f) {
      auto start = Clock::now();
      try {
        f(r);
      } catch (LimitExceeded const& e) {
        r = skipped(std::move(r), e);
      } catch (Error const& e) {
        r.verdict = Verdict::fail;
        r.detail  = e.what();
      }
      r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return r;
    }

    void expect(CheckResult& r, bool ok, std::string const& witness) {
      r.verdict = ok ? Verdict::pass : Verdict::fail;
      if (!ok) {
        r.detail = witness;
      }
    }

    bool is_central_in(PermGroup const& sub, PermGroup const& g) {
      for (auto const& k : sub.generators()) {
        for (auto const& x : g.generators()) {
          if (k * x != x * k) {
            return false;
          }
        }
      }
      return true;
    }

    PermGroup gamma(std::vector<PermGroup> const& series, std::size_t n) {
      return series[std::min(n - 1, series.size() - 1)];
    }

    std::string word_label(PresentedGroup const& g,
                           std::vector<std::size_t> const& gens,
                           std::vector<bool> const& inv) {
      std::string s = "[";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        s += (i ? ", " : "") + g.presentation().names()[gens[i]]
             + (inv[i] ? "^-1" : "");
      }
      return s + "]";
    }

    // [g1, ..., g_{k-1}^m] == [g1, ..., g_{k-1}]^m modulo gamma_k, for all
    // tuples of generators and inverses.
    CheckResult commutator_power(std::string const&    name,
                                 PresentedGroup const& g,
                                 std::vector<PermGroup> const& series,
                                 BigInt const&         exponent) {
      auto r = row("commutator_power", name);
      return guarded(std::move(r), [&](CheckResult& r) {
        auto const& gens  = g.group().generators();
        auto const  ng    = gens.size();
        auto const  cls   = series.size() - 1;   // gamma_{cls+1} = 1
        auto const  mmax  = static_cast<std::size_t>(exponent);
        std::size_t tuples = 0;
        for (std::size_t len = 2; len <= cls; ++len) {
          auto const& mod = gamma(series, len + 1);
          std::vector<std::size_t> idx(len, 0);
          std::vector<bool>        inv(len, false);
          auto const total = static_cast<std::size_t>(
              std::pow(2.0 * static_cast<double>(ng), static_cast<double>(len)));
          for (std::size_t code = 0; code < total; ++code) {
            auto c = code;
            for (std::size_t i = 0; i < len; ++i) {
              idx[i] = (c % (2 * ng)) / 2;
              inv[i] = c % 2 == 1;
              c /= 2 * ng;
            }
            auto elem = [&](std::size_t i) {
              return inv[i] ? gens[idx[i]].inverse() : gens[idx[i]];
            };
            Perm head = elem(0);
            for (std::size_t i = 1; i + 1 < len; ++i) {
              head = commutator(head, elem(i));
            }
            auto last = elem(len - 1);
            auto base = commutator(head, last);
            Perm pw   = g.group().identity();
            Perm basem = g.group().identity();
            for (std::size_t m = 1; m <= mmax; ++m) {
              pw    = pw * last;
              basem = basem * base;
              ++tuples;
              auto lhs = commutator(head, pw);
              if (!mod.contains(lhs * basem.inverse())) {
                expect(r, false,
                       word_label(g, idx, inv) + " with m = "
                           + std::to_string(m));
                r.data["tuples"] = tuples;
                return;
              }
            }
          }
        }
        r.data["class"]  = cls;
        r.data["tuples"] = tuples;
        expect(r, true, "");
      });
    }

    // K(x) = ker(G (x) gamma_n -> gamma_{n+1}), K^ its image in the
    // exterior product; the quotient map must be onto the kernel of the
    // induced map and |K(x)|/|K^| must divide |Gamma(gamma_n/gamma_{n+1})|.
    CheckResult gamma_sequence(std::string const&                          name,
                               std::shared_ptr<PresentedGroup const> const& g,
                               std::vector<PermGroup> const& series,
                               std::size_t n, BuildLimits const& limits) {
      auto r = row("gamma_sequence", name, {{"n", n}});
      return guarded(std::move(r), [&](CheckResult& r) {
        auto const gn  = gamma(series, n);
        auto const gn1 = gamma(series, n + 1);
        auto       t   = tensor_with_subgroup(g, gn, limits);
        auto const& br = *t.bracket;
        auto kt = br.kernel();
        auto fibre = diagonal_fibre(t);
        for (auto [u, v] : fibre) {
          if (!br(t.tensor_element(u, v)).is_identity()) {
            throw InternalError("bracket does not vanish on a diagonal tensor");
          }
        }
        auto w = exterior_product(t, fibre);
        GroupHom induced(w.group, br.target(), br.images(),
                         "bracket, which vanishes on the diagonal tensors");
        auto kw = induced.kernel();
        std::vector<Perm> img;
        for (auto const& x : kt.generators()) {
          img.push_back(w.hom(x));
        }
        bool onto  = subgroup(w.group, img).equals(kw);
        auto ratio = kt.order() / kw.order();
        auto quot  = abelian_invariants(quotient(gn, gn1).group);
        auto whd   = gamma_whitehead(quot);
        bool divides = whd.order() % ratio == 0;
        r.data["tensor_order"]    = big(t.tensor.order());
        r.data["k_tensor"]        = big(kt.order());
        r.data["k_exterior"]      = big(kw.order());
        r.data["gamma_quotient"]  = invariants_json(quot);
        r.data["whitehead_order"] = big(whd.order());
        r.data["image_of_bracket_ok"] = br.image().equals(gn1);
        expect(r, onto && divides && br.image().equals(gn1),
               !onto      ? "quotient map K(x) -> K^ is not onto"
               : !divides ? "|K(x)|/|K^| = " + ratio.str()
                                + " does not divide |Gamma| = "
                                + whd.order().str()
                          : "bracket image differs from gamma_"
                                + std::to_string(n + 1));
      });
    }

    // Tower rows read off the pc tower.
    CheckResult pc_row(CheckResult r, PcTensorTower const& pc, std::size_t n,
                       std::vector<PermGroup> const& series, AbelianGroup const& ab) {
      return guarded(std::move(r), [&](CheckResult& r) {
        auto const& lv = pc.level(n);
        auto const& T  = lv.tensor;
        r.data["backend"] = "p-quotient";
        if (r.check == "lambda_image") {
          auto gn  = gamma(series, n);
          auto img = pc_lambda_image(pc, n);
          r.data["image_order"] = big(img.order());
          r.data["gamma_order"] = big(gn.order());
          expect(r, img.equals(gn), "image of lambda_" + std::to_string(n)
                                        + " differs from gamma_" + std::to_string(n));
        } else if (r.check == "kernel_central") {
          auto k = pc_lambda_kernel(pc, n);
          r.data["kernel_order"] = big(k.order());
          expect(r, is_central(k),
                 "ker lambda_" + std::to_string(n) + " is not central");
        } else if (r.check == "finiteness") {
          r.data["order"]              = big(T->order());
          r.data["abelian_invariants"] = invariants_json(pc_abelian_invariants(T));
          r.data["pc_generators"]      = lv.eta ? lv.eta->size() : 0;
          r.data["compat_exhaustive"]  = lv.compat.exhaustive;
          expect(r, lv.compat.pass, "level actions incompatible");
        } else {
          auto z = z_tensor_power(ab, n);
          r.data["order"]  = big(T->order());
          r.data["oracle"] = big(z.order());
          expect(r, T->order() == z.order(),
                 "|G^(x)" + std::to_string(n) + "| = " + T->order().str()
                     + ", Z-module power has order " + z.order().str());
        }
      });
    }

    std::vector<CheckResult> tower_checks(std::string const&           name,
                                          TensorPowerTower&            tower,
                                          std::vector<PermGroup> const& series,
                                          bool abelian, AbelianGroup const& ab,
                                          VerifyOptions const& opt) {
      std::vector<CheckResult> out;
      std::optional<LimitExceeded> stop;
      // Fallback for p-groups once enumeration gives up.
      bool const is_p = prime_of_p_group(tower.group->order()).has_value();
      std::optional<PcTensorTower> pc;
      std::optional<LimitExceeded> pc_stop;
      std::optional<std::string>   pc_error;
      PQuotientLimits              pc_limits;
      pc_limits.max_generators = opt.max_pc_generators;
      for (std::size_t n = 2; n <= opt.max_power; ++n) {
        nlohmann::json params{{"n", n}};
        auto start = Clock::now();
        if (!stop && tower.levels.size() + 1 < n) {
          try {
            auto lim = opt.limits;
            if (!is_p) {
              lim.max_cosets = std::max(lim.max_cosets, opt.tower_max_cosets);
            }
            extend_tower(tower, lim);
          } catch (LimitExceeded const& e) {
            stop = e;
          }
        }
        auto build_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        std::vector<CheckResult> rows;
        rows.push_back(row("lambda_image", name, params));
        rows.push_back(row("kernel_central", name, params));
        if (n <= 3) {
          rows.push_back(row("finiteness", name, params));
        }
        if (abelian && n <= 3) {
          rows.push_back(row("abelian_power", name, params));
        }
        if (stop && is_p) {
          auto pc_start = Clock::now();
          if (!pc) {
            pc.emplace();
            pc->group = tower.group;
          }
          while (!pc_stop && !pc_error && pc->levels.size() < n) {
            try {
              extend_pc_tower(*pc, pc_limits);
            } catch (LimitExceeded const& e) {
              pc_stop = e;
            } catch (Error const& e) {
              pc_error = e.what();
            }
          }
          auto pc_seconds =
              std::chrono::duration<double>(Clock::now() - pc_start).count();
          for (auto& r : rows) {
            if (pc_stop) {
              r = skipped(std::move(r), *pc_stop);
            } else if (pc_error) {
              r.verdict = Verdict::fail;
              r.detail  = *pc_error;
            } else {
              r = pc_row(std::move(r), *pc, n, series, ab);
            }
          }
          rows.front().seconds += build_seconds + pc_seconds;
          for (auto& r : rows) {
            out.push_back(std::move(r));
          }
          continue;
        }
        if (stop) {
          for (auto& r : rows) {
            out.push_back(skipped(std::move(r), *stop));
          }
          continue;
        }
        auto const& lv = tower.level(n);
        auto const& T  = lv.tensor.tensor;
        for (auto& r : rows) {
          r = guarded(std::move(r), [&](CheckResult& r) {
            if (r.check == "lambda_image") {
              auto gn  = gamma(series, n);
              auto img = lv.lambda_n.image();
              r.data["image_order"] = big(img.order());
              r.data["gamma_order"] = big(gn.order());
              bool ok = img.equals(gn);
              if (n == 2) {
                auto d = derivative(lv.tensor.pair, Side::left);
                ok = ok && lv.tensor.lambda.image().equals(d);
              }
              expect(r, ok, "image of lambda_" + std::to_string(n)
                                + " differs from gamma_" + std::to_string(n));
            } else if (r.check == "kernel_central") {
              auto k = lv.lambda_n.kernel();
              r.data["kernel_order"] = big(k.order());
              expect(r, is_central_in(k, T),
                     "ker lambda_" + std::to_string(n) + " is not central");
            } else if (r.check == "finiteness") {
              r.data["order"]           = big(T.order());
              r.data["abelian_invariants"] = invariants_json(abelian_invariants(T));
              r.data["cosets"]          = lv.tensor.num_cosets;
              r.data["compat_exhaustive"] = lv.tensor.compat.exhaustive;
              expect(r, lv.tensor.compat.pass, "level actions incompatible");
            } else {
              auto z = z_tensor_power(ab, n);
              r.data["order"]  = big(T.order());
              r.data["oracle"] = big(z.order());
              expect(r, T.order() == z.order(),
                     "|G^(x)" + std::to_string(n) + "| = " + T.order().str()
                         + ", Z-module power has order " + z.order().str());
            }
          });
        }
        rows.front().seconds += build_seconds;
        for (auto& r : rows) {
          out.push_back(std::move(r));
        }
      }
      return out;
    }

    std::vector<CheckResult> identity_checks(CorpusEntry const&  e,
                                             VerifyOptions const& opt) {
      std::vector<CheckResult> out;
      auto const& name = e.name;
      std::shared_ptr<PresentedGroup const> g;
      {
        auto r = guarded(row("corpus_order", name), [&](CheckResult& r) {
          EnumLimits lim;
          lim.max_cosets = opt.limits.max_cosets;
          lim.strategy   = opt.limits.strategy;
          g = std::make_shared<PresentedGroup const>(
              PresentedGroup::from_presentation(e.presentation, lim));
          r.data["order"] = big(g->order());
          expect(r, e.expected_order == 0 || g->order() == e.expected_order,
                 "enumerated order " + g->order().str() + ", expected "
                     + e.expected_order.str());
        });
        out.push_back(std::move(r));
        if (!g) {
          return out;
        }
      }
      auto const series  = lower_central_series(g->group());
      auto const ab      = abelian_invariants(g->group());
      bool const abelian = g->group().is_abelian();
      bool const nilpotent = series.back().is_trivial();

      out.push_back(guarded(row("compatibility", name), [&](CheckResult& r) {
        auto c = check_compatibility(conjugation_pair(g), opt.limits.compat_budget);
        r.data["triples"] = c.triples_checked;
        expect(r, c.pass, "identity " + std::to_string(c.identity) + " at ("
                              + c.witness[0] + ", " + c.witness[1] + ", "
                              + c.witness[2] + ")");
      }));

      // nu(G) and the checks that live on it.
      std::optional<TensorGroup> nu;
      std::optional<LimitExceeded> nu_limit;
      auto nu_start = Clock::now();
      try {
        auto lim = opt.limits;
        lim.exact_order_cosets =
            std::max(lim.exact_order_cosets, opt.nu_exact_order_cosets);
        nu = build_nu(g, lim);
      } catch (LimitExceeded const& e) {
        nu_limit = e;
      }
      auto nu_seconds =
          std::chrono::duration<double>(Clock::now() - nu_start).count();
      std::vector<CheckResult> nu_rows{
          row("nu_order", name), row("nu_derived_order", name),
          row("kernel_factorization", name), row("h2_agreement", name),
          row("tensor_commutator", name)};
      for (auto& r : nu_rows) {
        if (nu_limit) {
          out.push_back(skipped(std::move(r), *nu_limit));
          continue;
        }
        auto const& t = *nu;
        out.push_back(guarded(std::move(r), [&](CheckResult& r) {
          auto const gorder = g->order();
          auto const torder = t.tensor.order();
          if (r.check == "nu_order") {
            r.data["tensor_order"]    = big(torder);
            r.data["eta_order"]       = big(t.eta_order);
            r.data["eta_order_exact"] = t.eta_order_exact;
            r.data["cosets"]          = t.num_cosets;
            auto chain_order = t.eta.order();
            expect(r, t.eta_order == gorder * gorder * torder
                          && chain_order == t.eta_order,
                   "|nu| = " + t.eta_order.str() + ", |G|^2 |G(x)G| = "
                       + BigInt(gorder * gorder * torder).str());
          } else if (r.check == "nu_derived_order") {
            auto d  = derived_subgroup(t.eta).order();
            auto gd = series.size() > 1 ? series[1].order() : BigInt(1);
            auto k  = t.lambda.kernel().order();
            r.data["derived_order"] = big(d);
            r.data["kernel_order"]  = big(k);
            expect(r, d == gd * gd * gd * k,
                   "|nu'| = " + d.str() + ", |G'|^3 |ker| = "
                       + BigInt(gd * gd * gd * k).str());
          } else if (r.check == "kernel_factorization") {
            auto k  = t.lambda.kernel().order();
            auto dl = delta_subgroup(t).order();
            auto h2 = h2_via_cocycles(g->group());
            r.data["kernel_order"] = big(k);
            r.data["delta_order"]  = big(dl);
            r.data["h2"]           = invariants_json(h2);
            expect(r, k == dl * h2.order(),
                   "|ker| = " + k.str() + ", |Delta| |H2| = "
                       + BigInt(dl * h2.order()).str());
          } else if (r.check == "h2_agreement") {
            auto w = h2_via_wedge(t);
            auto c = h2_via_cocycles(g->group());
            r.data["via_wedge"]    = w.to_string();
            r.data["via_cocycles"] = c.to_string();
            expect(r, w == c, "wedge " + w.to_string() + ", cocycles "
                                  + c.to_string());
          } else {
            auto c = tensor_commutator_check(t);
            r.data["tuples"] = c.tuples_checked;
            expect(r, c.pass, c.witness);
          }
        }));
        if (out.back().check == "nu_order") {
          out.back().seconds += nu_seconds;
        }
      }

      TensorPowerTower tower;
      tower.group = g;
      if (nu) {
        tower.levels.push_back(TowerLevel{2, *nu, *nu->bracket});
      }
      for (auto& r : tower_checks(name, tower, series, abelian, ab, opt)) {
        out.push_back(std::move(r));
      }

      for (std::size_t n = 1; n <= 3; ++n) {
        if (g->order() > opt.max_nu_order) {
          auto r = row("gamma_sequence", name, {{"n", n}});
          out.push_back(skipped(
              std::move(r),
              LimitExceeded("max_nu_order",
                            "|G| = " + g->order().str() + " exceeds "
                                + std::to_string(opt.max_nu_order))));
          continue;
        }
        out.push_back(gamma_sequence(name, g, series, n, opt.limits));
      }

      if (nilpotent && !abelian) {
        auto exp = ab.invariants().empty() ? BigInt(1) : ab.invariants().back();
        out.push_back(commutator_power(name, *g, series, exp));
      }
      return out;
    }

    // Perturbs one generator image of the conjugation action on D4 until
    // the compatibility check rejects the pair.
    CheckResult control_action() {
      auto r = row("control_perturbed_action", "D4");
      return guarded(std::move(r), [&](CheckResult& r) {
        auto g = std::make_shared<PresentedGroup const>(
            PresentedGroup::from_presentation(
                parse_presentation("<a,b | a^4, b^2, (a*b)^2>")));
        auto base = conjugation_pair(g);
        auto const& t = g->elements();
        std::size_t tried = 0;
        for (std::size_t s = 0; s < g->num_generators(); ++s) {
          for (std::size_t j = 0; j < g->num_generators(); ++j) {
            for (Index e = 0; e < t.size(); ++e) {
              auto img = base.h_on_g.generator_images();
              if (img[s][j] == e) {
                continue;
              }
              img[s][j]    = e;
              ActionPair p = base;
              try {
                p.h_on_g = Action(*g, *g, img);
              } catch (InputError const&) {
                continue;
              }
              ++tried;
              auto c = check_compatibility(p);
              if (!c.pass) {
                auto const& names = g->presentation().names();
                r.data["perturbation"] = names[j] + "^" + names[s] + " -> "
                                         + g->element_string(e);
                r.data["identity"] = c.identity;
                r.data["witness"]  = {c.witness[0], c.witness[1], c.witness[2]};
                r.data["tried"]    = tried;
                expect(r, true, "");
                return;
              }
            }
          }
        }
        r.data["tried"] = tried;
        expect(r, false, "no perturbed action was rejected");
      });
    }

    // Conjugates the left side of the commutator relation in nu(S4) by
    // generators of nu until the check rejects it.
    CheckResult control_commutator(BuildLimits const& limits) {
      auto r = row("control_perturbed_commutator", "S4");
      return guarded(std::move(r), [&](CheckResult& r) {
        auto g = std::make_shared<PresentedGroup const>(
            PresentedGroup::from_presentation(
                parse_presentation("<a,b | a^2, b^3, (a*b)^4>")));
        auto t = build_nu(g, limits);
        auto const& names = t.presentation.names();
        auto const& gens  = t.eta.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          auto c = tensor_commutator_check(t, &gens[i]);
          if (!c.pass) {
            r.data["perturbation"] = "conjugation by " + names[i];
            r.data["witness"]      = c.witness;
            expect(r, true, "");
            return;
          }
        }
        expect(r, false, "no perturbed relation was rejected");
      });
    }

    std::vector<CheckResult> run_jobs(
        std::vector<std::function<std::vector<CheckResult>()>> const& jobs,
        std::size_t                                                   nthreads) {
      std::vector<std::vector<CheckResult>> results(jobs.size());
      std::atomic<std::size_t>              next{0};
      auto worker = [&] {
        for (;;) {
          auto i = next.fetch_add(1);
          if (i >= jobs.size()) {
            return;
          }
          results[i] = jobs[i]();
        }
      };
      nthreads = std::clamp<std::size_t>(nthreads, 1, std::max<std::size_t>(1, jobs.size()));
      if (nthreads == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < nthreads; ++i) {
          pool.emplace_back(worker);
        }
        for (auto& th : pool) {
          th.join();
        }
      }
      std::vector<CheckResult> out;
      for (auto& v : results) {
        for (auto& r : v) {
          out.push_back(std::move(r));
        }
      }
      return out;
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return out + "\"";
    }
  }  // namespace

  Corpus builtin_corpus() {
    Corpus c;
    auto add = [&](std::string name, std::string text, unsigned order) {
      c.push_back({std::move(name), parse_presentation(text), BigInt(order)});
    };
    add("C1", "< | >", 1);
    for (unsigned n = 2; n <= 12; ++n) {
      add("C" + std::to_string(n), "<a | a^" + std::to_string(n) + ">", n);
    }
    for (unsigned n = 1; n <= 6; ++n) {
      add("D" + std::to_string(n),
          "<a,b | a^" + std::to_string(n) + ", b^2, (a*b)^2>", 2 * n);
    }
    add("Q8", "<a,b | a^4, a^2*b^-2, b^-1*a*b*a>", 8);
    add("V4", "<a,b | a^2, b^2, [a,b]>", 4);
    add("Z2^3", "<a,b,c | a^2, b^2, c^2, [a,b], [a,c], [b,c]>", 8);
    add("S3", "<a,b | a^3, b^2, (a*b)^2>", 6);
    add("S4", "<a,b | a^2, b^3, (a*b)^4>", 24);
    add("A4", "<a,b | a^2, b^3, (a*b)^3>", 12);
    add("Heis27", "<x,y | x^3, y^3, [x,y]^3, [x,y,x], [x,y,y]>", 27);
    add("C3:C4", "<a,b | a^3, b^4, b^-1*a*b*a>", 12);
    return c;
  }

  Corpus load_corpus(std::string_view text) {
    Corpus c;
    for (auto& e : parse_corpus(text)) {
      c.push_back({std::move(e.name), std::move(e.presentation), BigInt(0)});
    }
    return c;
  }

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::pass: return "pass";
      case Verdict::fail: return "fail";
      default: return "skipped";
    }
  }

  CheckResult schur_baer_divisibility(std::string const&    name,
                                      PresentedGroup const& h, std::size_t n,
                                      BuildLimits const& limits) {
    auto r = row("schur_baer", name, {{"n", n}});
    return guarded(std::move(r), [&](CheckResult& r) {
      if (n < 1) {
        throw InputError("Schur-Baer check needs n >= 1");
      }
      auto const& hg  = h.group();
      auto        zs  = upper_central_series(hg);
      auto const& zn  = zs[std::min(n, zs.size() - 1)];
      auto        q   = quotient(hg, zn);
      auto        g   = std::make_shared<PresentedGroup const>(
          PresentedGroup::from_perm_group(q.group, h.presentation().names()));
      auto tower = tensor_power(g, n + 1, limits);
      auto const& T = tower.level(n + 1).tensor.tensor;
      auto gam = gamma(lower_central_series(hg), n + 1).order();
      r.data["center_order"]   = big(zn.order());
      r.data["quotient_order"] = big(g->order());
      r.data["tensor_order"]   = big(T.order());
      r.data["gamma_order"]    = big(gam);
      expect(r, T.order() % gam == 0,
             "|gamma_" + std::to_string(n + 1) + "(H)| = " + gam.str()
                 + " does not divide " + T.order().str());
    });
  }

  CheckResult finiteness_theorem_check(std::string const&                    name,
                                       std::shared_ptr<PresentedGroup const> g,
                                       std::size_t n, BuildLimits const& limits) {
    auto r = row("finiteness", name, {{"n", n}});
    return guarded(std::move(r), [&](CheckResult& r) {
      auto tower = tensor_power(std::move(g), n, limits);
      auto const& T = tower.level(n).tensor.tensor;
      r.data["order"] = big(T.order());
      r.data["abelian_invariants"] = invariants_json(abelian_invariants(T));
      expect(r, true, "");
    });
  }

  std::vector<CheckResult> run_identity_suite(Corpus const&        c,
                                              VerifyOptions const& opt) {
    std::vector<std::function<std::vector<CheckResult>()>> jobs;
    for (auto const& e : c) {
      jobs.push_back([&e, &opt] { return identity_checks(e, opt); });
    }
    jobs.push_back([] { return std::vector<CheckResult>{control_action()}; });
    jobs.push_back([&opt] {
      return std::vector<CheckResult>{control_commutator(opt.limits)};
    });
    return run_jobs(jobs, opt.jobs);
  }

  std::vector<CheckResult> run_schur_baer_suite(Corpus const&        c,
                                                VerifyOptions const& opt) {
    std::vector<std::function<std::vector<CheckResult>()>> jobs;
    for (auto const& e : c) {
      for (std::size_t n : {1, 2}) {
        jobs.push_back([&e, &opt, n] {
          std::shared_ptr<PresentedGroup const> h;
          auto r = guarded(row("schur_baer", e.name, {{"n", n}}),
                           [&](CheckResult& r) {
                             EnumLimits lim;
                             lim.max_cosets = opt.limits.max_cosets;
                             h = std::make_shared<PresentedGroup const>(
                                 PresentedGroup::from_presentation(e.presentation,
                                                                   lim));
                             r = schur_baer_divisibility(e.name, *h, n, opt.limits);
                           });
          return std::vector<CheckResult>{std::move(r)};
        });
      }
    }
    return run_jobs(jobs, opt.jobs);
  }

  std::vector<CheckResult> run_negative_controls(VerifyOptions const& opt) {
    return {control_action(), control_commutator(opt.limits)};
  }

  std::vector<CheckResult> run_all(Corpus const& c, VerifyOptions const& opt) {
    auto out = run_identity_suite(c, opt);
    for (auto& r : run_schur_baer_suite(c, opt)) {
      out.push_back(std::move(r));
    }
    return out;
  }

  nlohmann::json to_json(std::vector<CheckResult> const& results) {
    auto arr = nlohmann::json::array();
    for (auto const& r : results) {
      arr.push_back({{"check", r.check},
                     {"group", r.group},
                     {"params", r.params},
                     {"verdict", to_string(r.verdict)},
                     {"detail", r.detail},
                     {"data", r.data}});
    }
    return arr;
  }

  std::string to_csv(std::vector<CheckResult> const& results) {
    std::ostringstream os;
    os << "check,group,params,verdict,detail\n";
    for (auto const& r : results) {
      os << csv_field(r.check) << ',' << csv_field(r.group) << ','
         << csv_field(r.params.dump()) << ',' << to_string(r.verdict) << ','
         << csv_field(r.detail) << '\n';
    }
    return os.str();
  }

  Tally tally(std::vector<CheckResult> const& results) {
    Tally t;
    for (auto const& r : results) {
      (r.verdict == Verdict::pass   ? t.pass
       : r.verdict == Verdict::fail ? t.fail
                                    : t.skipped)++;
    }
    return t;
  }

}  // namespace tensoria
