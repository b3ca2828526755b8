#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensoria/errors.hpp"
#include "tensoria/homology.hpp"
#include "tensoria/pc_tensor.hpp"
#include "tensoria/permgrp.hpp"
#include "tensoria/verify.hpp"

using namespace tensoria;
using nlohmann::json;

namespace {

  constexpr char const* version = "tensoria 0.1.0";

  json big(BigInt const& x) {
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
      return static_cast<std::uint64_t>(x);
    }
    return x.str();
  }

  std::string invariants(AbelianGroup const& a) {
    return a.is_trivial() ? "1" : a.to_string();
  }

  struct TensorArgs {
    std::string input;
    std::size_t power      = 2;
    bool        exterior   = false;
    bool        h2         = false;
    bool        as_json    = false;
    bool        no_cache   = false;
    std::size_t max_cosets = BuildLimits{}.max_cosets;
    std::string strategy   = "hlt";
    std::string backend    = "auto";
  };

  struct VerifyArgs {
    std::string corpus     = "builtin";
    std::string suite      = "all";
    std::string out        = "verify_results.json";
    std::size_t jobs       = 1;
    std::size_t max_cosets = BuildLimits{}.max_cosets;
    std::size_t max_power  = 4;
    std::size_t tower_max_cosets = VerifyOptions{}.tower_max_cosets;
  };

  Presentation resolve_input(std::string const& input) {
    if (input.find('<') != std::string::npos) {
      return parse_presentation(input);
    }
    for (auto const& e : builtin_corpus()) {
      if (e.name == input) {
        return e.presentation;
      }
    }
    throw InputError("unknown corpus entry: " + input);
  }

  // One JSON file per key: the FNV-1a hash of the canonical request text
  // names the file, and the full text plus tool version must match.
  std::uint64_t fnv1a(std::string const& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::optional<std::filesystem::path> cache_path(std::string const& key) {
    char const* dir = std::getenv("TENSORIA_CACHE_DIR");
    if (!dir || !*dir) {
      return std::nullopt;
    }
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key)
         << ".json";
    return std::filesystem::path(dir) / name.str();
  }

  std::optional<json> cache_get(std::string const& key) {
    auto p = cache_path(key);
    if (!p || !std::filesystem::exists(*p)) {
      return std::nullopt;
    }
    try {
      std::ifstream in(*p);
      auto          j = json::parse(in);
      if (j.at("version") == version && j.at("key") == key) {
        return j.at("report");
      }
    } catch (std::exception const&) {
    }
    return std::nullopt;
  }

  void cache_put(std::string const& key, json const& report) {
    auto p = cache_path(key);
    if (!p) {
      return;
    }
    std::error_code ec;
    std::filesystem::create_directories(p->parent_path(), ec);
    auto          tmp = p->string() + ".tmp";
    std::ofstream out(tmp);
    if (!out) {
      return;
    }
    out << json{{"version", version}, {"key", key}, {"report", report}}.dump(2)
        << '\n';
    out.close();
    std::filesystem::rename(tmp, *p, ec);
  }

  json tensor_report(TensorArgs const& a, Presentation const& pres,
                     BuildLimits const& limits) {
    EnumLimits el;
    el.max_cosets = limits.max_cosets;
    el.strategy   = limits.strategy;
    auto g = std::make_shared<PresentedGroup const>(
        PresentedGroup::from_presentation(pres, el));
    json r;
    r["presentation"] = pres.to_string();
    r["group_order"]  = big(g->order());
    r["power"]        = a.power;

    bool const is_p = prime_of_p_group(g->order()).has_value();
    if (a.backend == "pc" && !is_p) {
      throw InputError("--backend pc needs a nontrivial p-group");
    }
    std::optional<TensorPowerTower> tower;
    if (a.backend != "pc") {
      try {
        tower = tensor_power(g, a.power, limits);
      } catch (LimitExceeded const&) {
        if (a.backend == "enum" || !is_p) {
          throw;
        }
      }
    }
    if (!tower) {
      auto pc = pc_tensor_power(g, a.power);
      auto const& lv = pc.level(a.power);
      auto        ker = pc_lambda_kernel(pc, a.power);
      r["backend"]            = "p-quotient";
      r["tensor_order"]       = big(lv.tensor->order());
      r["abelian_invariants"] = invariants(pc_abelian_invariants(lv.tensor));
      r["eta_order"]          = big(lv.eta->order());
      r["pc_generators"]      = lv.eta->size();
      r["lambda_image_order"] = big(pc_lambda_image(pc, a.power).order());
      r["kernel_order"]       = big(ker.order());
      r["kernel_invariants"]  = invariants(pc_abelian_invariants(
          std::make_shared<PcGroup const>(ker.as_group())));
      if (a.exterior || a.h2) {
        tower = tensor_power(g, 2, limits);
      }
    } else {
      r["backend"] = "coset enumeration";
      auto const& lv  = tower->level(a.power);
      auto const& t   = lv.tensor;
      auto        ker = lv.lambda_n.kernel();
      r["tensor_order"]       = big(t.tensor.order());
      r["abelian_invariants"] = invariants(abelian_invariants(t.tensor));
      r["eta_order"]          = big(t.eta_order);
      r["cosets"]             = t.num_cosets;
      r["lambda_image_order"] = big(lambda_n_map(*tower, a.power).image().order());
      r["kernel_order"]       = big(ker.order());
      r["kernel_invariants"]  = invariants(abelian_invariants(ker));
    }
    if (a.exterior) {
      auto const& nu = tower->level(2).tensor;
      auto        w  = exterior_product(nu, diagonal_fibre(nu));
      r["delta_order"]       = big(delta_subgroup(nu).order());
      r["exterior_order"]    = big(w.group.order());
      r["exterior_invariants"] = invariants(abelian_invariants(w.group));
    }
    if (a.h2) {
      auto const& nu = tower->level(2).tensor;
      auto        w  = h2_via_wedge(nu);
      auto        c  = h2_via_cocycles(g->group());
      r["h2"] = {{"via_wedge", invariants(w)},
                 {"via_cocycles", invariants(c)},
                 {"agree", w == c}};
    }
    return r;
  }

  void print_report(json const& r) {
    auto line = [](std::string const& k, json const& v) {
      std::cout << std::left << std::setw(22) << k
                << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    };
    line("group order", r["group_order"]);
    line("power", r["power"]);
    line("tensor order", r["tensor_order"]);
    line("abelian invariants", r["abelian_invariants"]);
    line("backend", r["backend"]);
    line("eta order", r["eta_order"]);
    if (r.contains("cosets")) {
      line("cosets", r["cosets"]);
    } else {
      line("pc generators", r["pc_generators"]);
    }
    line("image of lambda", r["lambda_image_order"]);
    line("ker lambda", r["kernel_order"]);
    line("ker lambda invariants", r["kernel_invariants"]);
    if (r.contains("exterior_order")) {
      line("Delta order", r["delta_order"]);
      line("exterior order", r["exterior_order"]);
      line("exterior invariants", r["exterior_invariants"]);
    }
    if (r.contains("h2")) {
      line("H2 via wedge", r["h2"]["via_wedge"]);
      line("H2 via cocycles", r["h2"]["via_cocycles"]);
      line("H2 agree", r["h2"]["agree"]);
    }
  }

  int cmd_tensor(TensorArgs const& a) {
    BuildLimits limits;
    limits.max_cosets = a.max_cosets;
    limits.strategy   = a.strategy == "felsch" ? Strategy::felsch : Strategy::hlt;
    auto pres = resolve_input(a.input);
    if (a.power < 2) {
      throw InputError("--power must be at least 2");
    }
    json key{{"op", "tensor"},
             {"presentation", pres.to_string()},
             {"power", a.power},
             {"exterior", a.exterior},
             {"h2", a.h2},
             {"max_cosets", limits.max_cosets},
             {"strategy", a.strategy},
             {"backend", a.backend}};
    auto const key_text = key.dump();
    std::optional<json> report;
    if (!a.no_cache) {
      report = cache_get(key_text);
    }
    if (!report) {
      report = tensor_report(a, pres, limits);
      if (!a.no_cache) {
        cache_put(key_text, *report);
      }
    }
    if (a.as_json) {
      std::cout << report->dump(2) << '\n';
    } else {
      print_report(*report);
    }
    return 0;
  }

  int cmd_verify(VerifyArgs const& a) {
    Corpus corpus;
    if (a.corpus == "builtin") {
      corpus = builtin_corpus();
    } else {
      std::ifstream in(a.corpus);
      if (!in) {
        throw InputError("cannot read corpus file " + a.corpus);
      }
      std::stringstream ss;
      ss << in.rdbuf();
      corpus = load_corpus(ss.str());
    }
    VerifyOptions opt;
    opt.limits.max_cosets = a.max_cosets;
    opt.jobs              = a.jobs;
    opt.max_power         = a.max_power;
    opt.tower_max_cosets  = a.tower_max_cosets;

    std::filesystem::path json_path(a.out);
    auto                  csv_path = json_path;
    csv_path.replace_extension(".csv");
    std::ofstream jout(json_path), cout_csv(csv_path);
    if (!jout || !cout_csv) {
      throw InputError("cannot write results to " + a.out);
    }

    std::vector<CheckResult> results;
    if (a.suite == "identity") {
      results = run_identity_suite(corpus, opt);
    } else if (a.suite == "schur-baer") {
      results = run_schur_baer_suite(corpus, opt);
    } else {
      results = run_all(corpus, opt);
    }
    jout << to_json(results).dump(2) << '\n';
    cout_csv << to_csv(results);

    for (auto const& r : results) {
      std::cout << std::left << std::setw(30) << r.check << std::setw(9)
                << r.group << std::setw(10)
                << (r.params.empty() ? "" : r.params.dump()) << std::setw(9)
                << to_string(r.verdict) << std::right << std::fixed
                << std::setprecision(2) << std::setw(8) << r.seconds << "s";
      if (!r.detail.empty()) {
        std::cout << "  " << r.detail;
      }
      std::cout << '\n';
    }
    auto t = tally(results);
    std::cout << "pass " << t.pass << ", fail " << t.fail << ", skipped "
              << t.skipped << '\n';
    return t.fail == 0 ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-abelian tensor products and powers of finite groups"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);

  TensorArgs ta;
  auto*      tensor = app.add_subcommand("tensor", "tensor power of one group");
  tensor->add_option("input", ta.input, "presentation <gens | rels> or corpus name")
      ->required();
  tensor->add_option("--power", ta.power, "n for G^(x)n")->capture_default_str();
  tensor->add_flag("--exterior", ta.exterior, "exterior square and Delta");
  tensor->add_flag("--h2", ta.h2, "H2 by both routes");
  tensor->add_flag("--json", ta.as_json, "JSON report");
  tensor->add_flag("--no-cache", ta.no_cache, "ignore TENSORIA_CACHE_DIR");
  tensor->add_option("--max-cosets", ta.max_cosets)->capture_default_str();
  tensor->add_option("--backend", ta.backend,
                     "auto: pc presentations for p-groups beyond the coset limit")
      ->check(CLI::IsMember({"auto", "enum", "pc"}))
      ->capture_default_str();
  tensor->add_option("--strategy", ta.strategy)
      ->check(CLI::IsMember({"hlt", "felsch"}))
      ->capture_default_str();

  VerifyArgs va;
  auto*      verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--corpus", va.corpus, "builtin or a corpus file")
      ->capture_default_str();
  verify->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"identity", "schur-baer", "all"}))
      ->capture_default_str();
  verify->add_option("--out", va.out, "JSON results; CSV goes next to it")
      ->capture_default_str();
  verify->add_option("--jobs", va.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--max-cosets", va.max_cosets)->capture_default_str();
  verify->add_option("--tower-max-cosets", va.tower_max_cosets,
                     "coset limit for tower levels of groups that are not p-groups")
      ->capture_default_str();
  verify->add_option("--max-power", va.max_power)->check(CLI::Range(2, 8))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (tensor->parsed()) {
      return cmd_tensor(ta);
    }
    return cmd_verify(va);
  } catch (LimitExceeded const& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return 2;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
