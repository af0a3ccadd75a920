#pragma once

#include <string>
#include <vector>

namespace constaring {

/// One verified assertion: name, verdict, and witness data on failure.
struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }

    const Check* first_failure() const {
        for (const auto& c : checks) {
            if (!c.pass) return &c;
        }
        return nullptr;
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

}  // namespace constaring
