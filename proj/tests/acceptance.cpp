// One line per acceptance criterion.  Criteria 1-9 are read off an
// in-process run of the full verification suite; criterion 10 runs the
// command-line tool twice and compares the JSON files byte for byte.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "tensoria/abelian.hpp"
#include "tensoria/verify.hpp"

using namespace tensoria;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  std::string row_name(CheckResult const& r) {
    auto s = r.check + " " + r.group;
    if (r.params.contains("n")) {
      s += " n=" + r.params["n"].dump();
    }
    return s;
  }

  // Every expected row must be present and pass.
  Outcome all_pass(std::vector<CheckResult> const& res,
                   std::function<bool(CheckResult const&)> const& pick,
                   std::size_t expected_rows) {
    Outcome     o;
    std::size_t seen = 0;
    for (auto const& r : res) {
      if (!pick(r)) {
        continue;
      }
      ++seen;
      if (r.verdict != Verdict::pass) {
        o.pass = false;
        if (o.detail.size() < 400) {
          o.detail += "; " + row_name(r) + ": " + to_string(r.verdict)
                      + (r.detail.empty() ? "" : " (" + r.detail + ")");
        }
      }
    }
    if (seen != expected_rows) {
      o.pass = false;
      o.detail += "; " + std::to_string(seen) + " rows, expected "
                  + std::to_string(expected_rows);
    }
    o.detail = std::to_string(seen) + " rows" + o.detail;
    return o;
  }

  double seconds(std::vector<CheckResult> const& res,
                 std::function<bool(CheckResult const&)> const& pick) {
    double s = 0;
    for (auto const& r : res) {
      if (pick(r)) {
        s += r.seconds;
      }
    }
    return s;
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream     in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int n_of(CheckResult const& r) {
    return r.params.contains("n") ? r.params["n"].get<int>() : 0;
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to tensoria>\n";
    return 2;
  }
  std::string const cli = argv[1];
  auto const jobs = std::max(1u, std::thread::hardware_concurrency());

  auto const    corpus = builtin_corpus();
  VerifyOptions opt;
  opt.jobs = jobs;
  auto const start = std::chrono::steady_clock::now();
  auto const res   = run_all(corpus, opt);
  auto const wall  = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  std::map<std::string, BigInt> order;
  std::set<std::string>         abelian;
  for (auto const& e : corpus) {
    order[e.name] = e.expected_order;
    auto g = PresentedGroup::from_presentation(e.presentation);
    if (g.group().is_abelian()) {
      abelian.insert(e.name);
    }
  }
  std::size_t small = 0;
  for (auto const& e : corpus) {
    small += e.expected_order <= 16 ? 1 : 0;
  }
  auto is_small = [&](CheckResult const& r) {
    return order.count(r.group) && order[r.group] <= 16;
  };

  std::vector<std::pair<std::string, Outcome>> lines;

  {
    auto pick = [&](CheckResult const& r) {
      return r.check == "nu_order" && is_small(r);
    };
    auto o = all_pass(res, pick, small);
    auto s = seconds(res, pick);
    o.pass = o.pass && s < 60;
    o.detail += "; " + std::to_string(s) + " s";
    lines.emplace_back("nu order identity |nu(G)| = |G|^2 |G(x)G|", o);
  }
  lines.emplace_back(
      "kernel factorization |ker lambda_2| = |Delta| |H2|",
      all_pass(res, [&](CheckResult const& r) {
        return r.check == "kernel_factorization" && is_small(r);
      }, small));
  lines.emplace_back(
      "abelian powers match the Z-module tensor powers, n = 2, 3",
      all_pass(res, [&](CheckResult const& r) {
        return r.check == "abelian_power" && (n_of(r) == 2 || n_of(r) == 3);
      }, 2 * abelian.size()));
  lines.emplace_back(
      "image of lambda_n is gamma_n, n <= 4",
      all_pass(res, [&](CheckResult const& r) {
        return r.check == "lambda_image" && n_of(r) <= 4;
      }, 3 * corpus.size()));
  {
    auto pick = [&](CheckResult const& r) {
      return r.check == "h2_agreement" && is_small(r);
    };
    auto o = all_pass(res, pick, small);
    auto s = seconds(res, pick);
    o.pass = o.pass && s < 120;
    o.detail += "; " + std::to_string(s) + " s";
    lines.emplace_back("H2 via the exterior square equals the cocycle route", o);
  }
  lines.emplace_back(
      "Gamma sequence divisibility, |G| <= 16, n <= 3",
      all_pass(res, [&](CheckResult const& r) {
        return r.check == "gamma_sequence" && is_small(r) && n_of(r) <= 3;
      }, 3 * small));
  {
    auto o = all_pass(res, [&](CheckResult const& r) {
      return r.check == "finiteness" && n_of(r) <= 3;
    }, 2 * corpus.size());
    auto oracle = z_tensor_power(AbelianGroup::from_cyclic({2, 2}), 3).order();
    bool v4     = false;
    for (auto const& r : res) {
      if (r.check == "finiteness" && r.group == "V4" && n_of(r) == 3
          && r.verdict == Verdict::pass) {
        v4 = r.data["order"] == static_cast<std::uint64_t>(oracle);
      }
    }
    o.pass = o.pass && v4;
    o.detail += v4 ? "; V4 n=3 order 256 matches the oracle"
                   : "; V4 n=3 does not match the oracle";
    lines.emplace_back("G^(x)n finite with explicit order, n <= 3", o);
  }
  lines.emplace_back(
      "Schur-Baer divisibility for D4, Q8, D6, Heis27, n = 1, 2",
      all_pass(res, [&](CheckResult const& r) {
        static std::set<std::string> const hs{"D4", "Q8", "D6", "Heis27"};
        return r.check == "schur_baer" && hs.count(r.group);
      }, 8));
  lines.emplace_back(
      "negative controls are rejected",
      all_pass(res, [&](CheckResult const& r) {
        return r.check.rfind("control_", 0) == 0;
      }, 2));
  {
    Outcome o;
    auto    dir = std::filesystem::temp_directory_path()
               / ("tensoria_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::string runs[2];
    for (int i = 0; i < 2; ++i) {
      auto out = dir / ("run" + std::to_string(i) + ".json");
      auto cmd = "\"" + cli + "\" verify --suite all --jobs "
                 + std::to_string(jobs) + " --out \"" + out.string()
                 + "\" > /dev/null";
      int  rc  = std::system(cmd.c_str());
      runs[i]  = slurp(out);
      o.detail += (i ? ", " : "") + std::string("run ") + std::to_string(i + 1)
                  + " exit " + std::to_string(rc);
    }
    std::filesystem::remove_all(dir);
    bool same      = !runs[0].empty() && runs[0] == runs[1];
    bool in_proc   = runs[0] == to_json(res).dump(2) + "\n";
    o.pass         = same;
    o.detail      += same ? "; JSON byte-identical" : "; JSON differs";
    o.detail      += in_proc ? ", equal to the in-process run"
                             : ", differs from the in-process run";
    lines.emplace_back("two verify runs give byte-identical JSON", o);
  }

  bool all = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto const& [what, o] = lines[i];
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
              << what << " [" << o.detail << "]\n";
  }
  auto t = tally(res);
  std::cout << "suite: " << t.pass << " pass, " << t.fail << " fail, "
            << t.skipped << " skipped, " << wall << " s wall\n";
  return all ? 0 : 1;
}
