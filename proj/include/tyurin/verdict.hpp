#pragma once

#include <string>
#include <vector>

namespace tyurin {

enum class Status { pass, fail, unverifiable, inconclusive };

std::string to_string(Status s); // "PASS", "FAIL", "UNVERIFIABLE", "INCONCLUSIVE"

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

struct Verdict {
    std::vector<Check> checks;

    /// FAIL if any check failed, else INCONCLUSIVE if any was inconclusive,
    /// else PASS. Unverifiable clauses do not affect the outcome.
    Status status() const;
    bool passed() const { return status() == Status::pass; }
    void add(std::string name, bool ok, std::string detail = {});
    void add(Check c) { checks.push_back(std::move(c)); }
    void append(const Verdict& other);
};

} // namespace tyurin
