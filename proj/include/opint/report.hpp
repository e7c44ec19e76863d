#pragma once

#include "opint/parallel.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace opint {

enum class Verdict { Pass, Fail, Capped };

const char* to_string(Verdict v);

/// Outcome of one exhaustive check.
struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::size_t instances = 0;
    bool sampled = false;
    std::optional<std::string> counterexample;

    bool passed() const noexcept { return verdict == Verdict::Pass; }

    /// "associativity: pass (1234 instances)"
    std::string summary() const;
};

/// Worst verdict wins: Fail over Capped over Pass.
Verdict combine(Verdict a, Verdict b);
Verdict combine(const std::vector<CheckReport>& reports);

/// Default cap on filler candidates per check; OPINT_CAP overrides it.
std::size_t default_cap();

struct CheckOptions {
    std::size_t cap = default_cap();
    Exec exec = Exec::Parallel;
};

} // namespace opint
