#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tclass {

class SingularMatrixError : public std::invalid_argument {
public:
    explicit SingularMatrixError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input text failed to parse. line/column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line(line), column(column) {}

    std::size_t line;
    std::size_t column;
};

/// A computation would exceed its resource cap. Carries the group order
/// predicted by formula or table when one is known.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what,
                              std::optional<std::string> predicted = std::nullopt)
        : std::runtime_error(what), predicted_order(std::move(predicted)) {}

    std::optional<std::string> predicted_order;
};

}  // namespace tclass
