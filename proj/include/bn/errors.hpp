#pragma once

#include <stdexcept>
#include <string>

namespace bn {

struct RingMismatch final : std::runtime_error {
    explicit RingMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonNilpotent final : std::runtime_error {
    explicit NonNilpotent(const std::string& what) : std::runtime_error(what) {}
};

struct NotPointClass final : std::runtime_error {
    explicit NotPointClass(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidFlag final : std::runtime_error {
    explicit InvalidFlag(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidMultiplicity final : std::runtime_error {
    explicit InvalidMultiplicity(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError final : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded final : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError final : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bn
