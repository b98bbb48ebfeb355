#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cnls {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Flat pass/fail report; rendering is deterministic for fixed content.
struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;

    void add(std::string name, bool pass, std::string detail = "") {
        lines.push_back({std::move(name), pass, std::move(detail)});
    }
    int passed() const {
        int n = 0;
        for (auto& l : lines) n += l.pass;
        return n;
    }
    int failed() const { return static_cast<int>(lines.size()) - passed(); }
    bool ok() const { return failed() == 0; }

    std::string to_text() const {
        std::string out = "suite: " + suite + "\n";
        for (const CheckLine& l : lines) {
            out += l.pass ? "  [pass] " : "  [FAIL] ";
            out += l.name;
            if (!l.detail.empty()) out += "  -- " + l.detail;
            out += "\n";
        }
        out += "summary: " + std::to_string(passed()) + "/" + std::to_string(lines.size()) +
               " checks passed\n";
        return out;
    }

    nlohmann::ordered_json to_tree() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["passed"] = passed();
        j["failed"] = failed();
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const CheckLine& l : lines) {
            nlohmann::ordered_json c;
            c["name"] = l.name;
            c["pass"] = l.pass;
            if (!l.detail.empty()) c["detail"] = l.detail;
            checks.push_back(c);
        }
        j["checks"] = checks;
        return j;
    }
};

} // namespace cnls
