#include "opint/report.hpp"

#include <cstdlib>
#include <string>

namespace opint {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Capped: return "capped";
    }
    return "?";
}

std::string CheckReport::summary() const {
    std::string s = name + ": " + to_string(verdict) + " (" + std::to_string(instances) + " instances";
    if (sampled) s += ", sampled";
    s += ")";
    if (counterexample) s += "\n  counterexample: " + *counterexample;
    return s;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Capped || b == Verdict::Capped) return Verdict::Capped;
    return Verdict::Pass;
}

Verdict combine(const std::vector<CheckReport>& reports) {
    Verdict v = Verdict::Pass;
    for (const auto& r : reports) v = combine(v, r.verdict);
    return v;
}

std::size_t default_cap() {
    if (const char* env = std::getenv("OPINT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

} // namespace opint
