#pragma once

#include <string>
#include <vector>

namespace kbchroma {

/// One named check inside a verification report.
struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckLine> lines;

    bool all_ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
    }
};

}  // namespace kbchroma
