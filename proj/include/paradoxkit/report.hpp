#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace paradoxkit {

enum class Outcome { pass, fail, inconclusive };

inline const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

// One named finding inside a verification report.
struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {})
    {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    bool all_passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    // First failing check, or nullptr.
    const Check* first_failure() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return &c;
        return nullptr;
    }
};

} // namespace paradoxkit
