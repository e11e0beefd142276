/// @file report.hpp
/// @brief Verification reports: named suites with instance counts and recorded
///        failures, serializable to JSON for the CLI.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qh {

/// One verification suite: how many relation instances were checked and which
/// ones failed (each failure is a short human-readable description).
struct Suite {
    std::string name;
    long long instances = 0;
    std::vector<std::string> failures;

    /// Record one checked instance; when `ok` is false, log `what`.
    void check(bool ok, const std::string& what) {
        ++instances;
        if (!ok) failures.push_back(what);
    }
    bool passed() const { return failures.empty(); }
};

struct Report {
    std::vector<Suite> suites;

    Suite& suite(const std::string& name) {
        for (auto& s : suites)
            if (s.name == name) return s;
        suites.push_back(Suite{name, 0, {}});
        return suites.back();
    }
    void absorb(const Report& other) {
        for (const auto& s : other.suites) {
            Suite& mine = suite(s.name);
            mine.instances += s.instances;
            mine.failures.insert(mine.failures.end(), s.failures.begin(), s.failures.end());
        }
    }
    bool ok() const {
        for (const auto& s : suites)
            if (!s.passed()) return false;
        return true;
    }
    long long total_instances() const {
        long long t = 0;
        for (const auto& s : suites) t += s.instances;
        return t;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : suites) {
            nlohmann::ordered_json js;
            js["name"] = s.name;
            js["instances"] = s.instances;
            js["failures"] = s.failures;
            arr.push_back(js);
        }
        return arr;
    }
};

}  // namespace qh
