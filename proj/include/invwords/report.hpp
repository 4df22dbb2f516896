#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "invwords/word.hpp"

namespace invwords {

/// One failed check; group elements are carried as reduced words.
struct Failure {
    std::string check;
    Word x;
    Word y;
    std::vector<Word> expected;
    std::vector<Word> got;
};

struct Report {
    std::string system;
    std::size_t pairs_checked = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }

    void merge(Report other) {
        pairs_checked += other.pairs_checked;
        for (auto& f : other.failures) failures.push_back(std::move(f));
    }

    std::string summary() const {
        return "pairs_checked: " + std::to_string(pairs_checked) + ", failures: " + std::to_string(failures.size());
    }
};

inline void to_json(nlohmann::json& j, const Failure& f) {
    j = nlohmann::json{{"x", f.x}, {"y", f.y}, {"expected", f.expected}, {"got", f.got}};
    if (!f.check.empty()) j["check"] = f.check;
}

inline void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"system", r.system}, {"pairs_checked", r.pairs_checked}, {"failures", r.failures}};
}

}  // namespace invwords
