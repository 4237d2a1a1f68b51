#pragma once

#include <stdexcept>
#include <string>

namespace dho {

// Library-wide failure type. `module` feeds the CLI's machine-parsable
// "ERROR <module>:" prefix, so it must name the subsystem, not the function.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error(message), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

    std::string prefixed() const { return "ERROR " + module_ + ": " + what(); }

private:
    std::string module_;
};

} // namespace dho
