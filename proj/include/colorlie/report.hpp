#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace colorlie {

// One recorded identity: where it was evaluated and both sides as text.
struct CheckItem {
    std::string where;
    std::string lhs;
    std::string rhs;
    bool ok = true;
};

// Result of one verification pass.  Generator-level checks record every item;
// exhaustive element sweeps count everything but store only the first few
// violations.
struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<CheckItem> items;

    static constexpr std::size_t kMaxStoredViolations = 32;

    bool pass() const { return failed == 0; }

    void record(CheckItem item) {
        ++checked;
        if (!item.ok) {
            ++failed;
            if (failed <= kMaxStoredViolations) items.push_back(std::move(item));
        } else {
            items.push_back(std::move(item));
        }
    }

    void count(bool ok, CheckItem item_if_failed) {
        ++checked;
        if (!ok) {
            ++failed;
            if (failed <= kMaxStoredViolations) {
                item_if_failed.ok = false;
                items.push_back(std::move(item_if_failed));
            }
        }
    }
};

}  // namespace colorlie
