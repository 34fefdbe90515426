#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chord {

struct CheckOutcome {
    bool pass = true;
    std::vector<std::string> lines;

    void require(bool ok, const std::string& line);
    void info(const std::string& line) { lines.push_back("     " + line); }
};

struct CheckInfo {
    std::string id;
    std::string description;
    int default_budget = 6;
    bool report_only = false;  // never fails a run
    std::function<CheckOutcome(int budget, int jobs)> run;
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& id);

}  // namespace chord
