#ifndef UQAW_REPORT_HPP
#define UQAW_REPORT_HPP

#include <string>
#include <vector>

namespace uqaw {

struct CheckItem {
    std::string name;
    bool pass = false;
    long residue_terms = 0;
    double wall_ms = 0.0;
    std::string detail;
};

/// Result of a verification campaign; failures are entries, not exceptions.
struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    void add(CheckItem item) { items.push_back(std::move(item)); }

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace uqaw

#endif
