#pragma once

#include <string>
#include <vector>

namespace twisthom {

struct Violation {
    std::string rule;    // stable machine-readable tag, e.g. "maurer_cartan"
    std::string detail;  // human-readable witness description
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string rule, std::string detail) {
        violations.push_back({std::move(rule), std::move(detail)});
    }
    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    std::string to_string() const {
        std::string s;
        for (const auto& v : violations) s += v.rule + ": " + v.detail + "\n";
        return s;
    }
};

}  // namespace twisthom
