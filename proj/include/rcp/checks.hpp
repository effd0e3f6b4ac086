#pragma once

// Named property suites, each sweeping a full advertised range.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rcp {

struct CheckReport {
    std::string name;
    std::uint64_t cap = 0;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> counterexamples;  // first few failures
    std::vector<std::string> notes;

    bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_check, in display order.
const std::vector<std::string>& check_names();

/// The range a suite sweeps when no cap is given.
std::uint64_t default_cap(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
CheckReport run_check(const std::string& name, std::optional<std::uint64_t> cap = std::nullopt, unsigned jobs = 1);

}  // namespace rcp
