#pragma once

// Machine-readable outcome of a validation or property check. A failing
// report always carries at least one witness naming the offending entity
// (basis triple, vertex, edge, ...).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mq {

struct Witness {
    std::string kind;  // e.g. "triple", "edge", "vertex", "path-pair"
    std::vector<std::pair<std::string, std::string>> fields;

    [[nodiscard]] std::string to_string() const {
        std::string s = kind;
        for (const auto& [k, v] : fields) s += " " + k + "=" + v;
        return s;
    }
};

struct CheckReport {
    bool pass = true;
    std::vector<Witness> witnesses;
    std::map<std::string, std::int64_t> stats;
    std::string message;

    void fail(Witness w, const std::string& msg = "") {
        pass = false;
        witnesses.push_back(std::move(w));
        if (message.empty()) message = msg;
    }

    void merge(const CheckReport& o) {
        if (!o.pass) pass = false;
        witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
        for (const auto& [k, v] : o.stats) stats[k] = v;
        if (message.empty()) message = o.message;
    }
};

}  // namespace mq
