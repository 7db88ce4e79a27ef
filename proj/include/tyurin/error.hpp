#pragma once

#include <stdexcept>
#include <string>

namespace tyurin {

/// Every engine failure carries a stable name (e.g. "NotFullDimensional")
/// that the CLI reports verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)), detail_(message)
    {
    }

    const std::string& name() const noexcept { return name_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string name_;
    std::string detail_;
};

} // namespace tyurin
