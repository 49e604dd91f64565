#pragma once

#include <string>
#include <vector>

namespace wqa {

struct ReportItem {
    std::string input;
    std::string expected;
    std::string got;
    bool pass = false;
    // Recorded but excluded from the overall verdict.
    bool informational = false;
};

struct Report {
    std::string name;
    std::vector<ReportItem> items;

    void add(std::string input, std::string expected, std::string got, bool pass, bool informational = false) {
        items.push_back({std::move(input), std::move(expected), std::move(got), pass, informational});
    }
    // Appends the items of `other`, prefixing their inputs with its name.
    void merge(const Report& other);

    bool passed() const;
    std::size_t failures() const;

    std::string to_json(int indent = 2) const;
    std::string to_text() const;
};

} // namespace wqa
