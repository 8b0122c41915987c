#ifndef COXWORD_SUITES_HPP_
#define COXWORD_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxword/registry.hpp"

namespace coxword {

  struct SuiteOptions {
    std::size_t threads = 1;
    // Drops one non-braid schema (chosen by the seed) from the relation set
    // under test.
    std::optional<std::uint64_t> fault_seed;
    // Length bound for involution Hecke words is l(z) + hecke_slack.
    std::size_t hecke_slack = 2;
  };

  struct SuiteRecord {
    std::string    z;
    bool           pass = true;
    nlohmann::json data = nlohmann::json::object();
  };

  struct VerificationReport {
    std::string              suite;
    std::string              system;
    std::vector<SuiteRecord> records;
    bool                     pass         = true;
    double                   wall_seconds = 0;
    nlohmann::json           summary      = nlohmann::json::object();

    // One JSON object per record, then a summary line.
    std::string               to_jsonl() const;
    static VerificationReport from_jsonl(std::string const& text);

    SuiteRecord const* find(std::string const& z) const;
  };

  std::vector<std::string> suite_names();

  // Throws UnknownSuite.
  VerificationReport run_suite(std::string const& suite, SystemHandle const& system,
                               SuiteOptions const& options = {});

  // Shared checks, also used by the acceptance driver.

  struct SpanResult {
    std::size_t                target  = 0;
    std::size_t                reached = 0;
    std::optional<std::string> violation;

    bool spans() const noexcept {
      return !violation && reached == target;
    }
    nlohmann::json to_json() const;
  };

  // Closure of the first word of `target` (sorted) under `rules`, with
  // membership in `target` as the oracle.
  SpanResult check_span(std::vector<PrimedWord> const& target, RewriteSystem const& rules,
                        std::size_t rank);

  // Ranked closure of H_inv(z) truncated at `bound` letters.
  SpanResult check_hecke_span(InvolutionEngine const& engine, ElementId z, std::size_t bound,
                              RewriteSystem const& rules);

  // Removes one schema of a kind other than (primed) braid.
  std::vector<RelationSchema> inject_fault(std::vector<RelationSchema> schemas,
                                           std::uint64_t               seed);

}  // namespace coxword

#endif  // COXWORD_SUITES_HPP_
