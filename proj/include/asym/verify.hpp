#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asym/io.hpp"
#include "asym/symmetry.hpp"

namespace asym {

struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    std::size_t dim_min = 1;
    std::size_t dim_max = 4;
    IndexMutation mutation = IndexMutation::none;
};

struct Counterexample {
    std::size_t case_index = 0;
    std::size_t original_generators = 0;
    PolyhedralGauge gauge;  // after shrinking
    std::string message;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;  // precondition of the invariant not met
    std::optional<Counterexample> counterexample;  // first failing case
};

struct CampaignReport {
    RunConfig config;
    std::vector<SuiteResult> suites;  // empty when config.cases == 0

    bool ok() const;
};

/// "none", "drop-ball-rows", "drop-reverse-row"
std::string mutation_name(IndexMutation m);
/// Throws InputError on an unknown name.
IndexMutation parse_mutation(const std::string& name);

/// Names of every invariant suite, in report order.
const std::vector<std::string>& suite_names();

/// Case i draws from derive_seed(seed, i); results depend on (config) only.
CampaignReport run_campaign(const RunConfig& config);

io::Json to_json(const CampaignReport& report);
std::string render_text(const CampaignReport& report);

} // namespace asym
