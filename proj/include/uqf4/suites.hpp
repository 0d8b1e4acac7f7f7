// Named verification suites producing flat, deterministic check records.
#pragma once

#include "uqf4/coeff.hpp"
#include "uqf4/pbw.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uqf4 {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string check_id;
    std::string ref;  // what is being verified, in words
    CheckStatus status = CheckStatus::pass;
    std::string witness;
    // A failure that reproduces a documented discrepancy.
    bool known = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckRecord> records;
    int passed() const;
    int failed() const;
    int skipped() const;
};

struct SuiteContext {
    std::shared_ptr<const GenericTable> table;
    std::optional<SpecParams> spec;
    int max_height = 6;
    bool extended = false;
};

// In canonical run order.
const std::vector<std::string>& suite_names();
bool suite_needs_spec(const std::string& name);

// Throws std::invalid_argument for an unknown name, or for a specialized suite without a spec.
SuiteResult run_suite(const std::string& name, const SuiteContext& ctx);

}  // namespace uqf4
