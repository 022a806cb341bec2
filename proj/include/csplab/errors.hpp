#pragma once

#include <stdexcept>
#include <string>

namespace csplab {

// Errors that signal bad *input* (caller can recover / report).
struct NotPolynomialError : std::runtime_error {
    explicit NotPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

struct MultiplicityNegativeError : std::runtime_error {
    explicit MultiplicityNegativeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedClassError : std::runtime_error {
    explicit UnsupportedClassError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Errors that signal an internal inconsistency (a bug, never expected on valid data).
struct ModelAssertionError : std::logic_error {
    explicit ModelAssertionError(const std::string& what) : std::logic_error(what) {}
};

struct TypingAmbiguityError : std::logic_error {
    explicit TypingAmbiguityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace csplab
