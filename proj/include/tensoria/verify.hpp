#ifndef TENSORIA_VERIFY_HPP_
#define TENSORIA_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "tensoria/presentation.hpp"
#include "tensoria/presented_group.hpp"
#include "tensoria/tensor.hpp"

namespace tensoria {

  struct CorpusEntry {
    std::string  name;
    Presentation presentation;
    BigInt       expected_order;   // 0 when unknown (user corpora)
  };
  using Corpus = std::vector<CorpusEntry>;

  // C1..C12, D1..D6 (D_n of order 2n), Q8, V4, Z2^3, S3, S4, A4, Heis27,
  // C3:C4.
  Corpus builtin_corpus();
  // Corpus file text; entries carry no expected order.
  Corpus load_corpus(std::string_view text);

  enum class Verdict { pass, fail, skipped };
  std::string to_string(Verdict v);

  struct CheckResult {
    std::string    check;
    std::string    group;
    nlohmann::json params = nlohmann::json::object();
    Verdict        verdict = Verdict::pass;
    // Witness for failures, the limit that fired for skips.
    std::string    detail;
    nlohmann::json data = nlohmann::json::object();
    double         seconds = 0;   // not serialized
  };

  struct VerifyOptions {
    BuildLimits limits;
    std::size_t max_power = 4;
    // Largest corpus order for nu-based checks (H2, Gamma sequence).
    std::size_t max_nu_order = 64;
    // nu(G) orders up to this many cosets come from Schreier-Sims rather
    // than from the coset count.
    std::size_t nu_exact_order_cosets = 20'000;
    // Tower levels of p-groups that coset enumeration cannot reach are
    // built from pc presentations of at most this many generators.
    std::size_t max_pc_generators = 1024;
    // Coset limit for tower levels of groups that are not p-groups, where
    // enumeration is the only backend.
    std::size_t tower_max_cosets = 3'000'000;
    std::size_t jobs = 1;
  };

  std::vector<CheckResult> run_identity_suite(Corpus const&        c,
                                              VerifyOptions const& opt = {});
  std::vector<CheckResult> run_schur_baer_suite(Corpus const&        c,
                                                VerifyOptions const& opt = {});
  // Perturbed actions and relations that the checks must reject.
  std::vector<CheckResult> run_negative_controls(VerifyOptions const& opt = {});
  // identity + schur-baer + negative controls.
  std::vector<CheckResult> run_all(Corpus const& c, VerifyOptions const& opt = {});

  // N = Z_n(H), G = H/N; pass iff |gamma_{n+1}(H)| divides |G^(x)(n+1)|.
  CheckResult schur_baer_divisibility(std::string const&    name,
                                      PresentedGroup const& h, std::size_t n,
                                      BuildLimits const& limits = {});
  // Builds G^(x)n and records its order.
  CheckResult finiteness_theorem_check(std::string const&                    name,
                                       std::shared_ptr<PresentedGroup const> g,
                                       std::size_t n,
                                       BuildLimits const& limits = {});

  nlohmann::json to_json(std::vector<CheckResult> const& results);
  std::string    to_csv(std::vector<CheckResult> const& results);

  struct Tally {
    std::size_t pass = 0, fail = 0, skipped = 0;
  };
  Tally tally(std::vector<CheckResult> const& results);

}  // namespace tensoria

#endif  // TENSORIA_VERIFY_HPP_
