#include "tyurin/verdict.hpp"

#include <algorithm>

namespace tyurin {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "PASS";
    case Status::fail:
        return "FAIL";
    case Status::unverifiable:
        return "UNVERIFIABLE";
    case Status::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

Status Verdict::status() const
{
    auto any = [&](Status s) {
        return std::any_of(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; });
    };
    if (any(Status::fail))
        return Status::fail;
    if (any(Status::inconclusive))
        return Status::inconclusive;
    return Status::pass;
}

void Verdict::add(std::string name, bool ok, std::string detail)
{
    checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
}

void Verdict::append(const Verdict& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

} // namespace tyurin
