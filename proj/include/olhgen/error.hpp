#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace olhgen {

enum class Errc {
    invalid_argument,
    degenerate_column,
    budget_exceeded,
    unsupported_order,
    not_in_catalog,
    condition_violation,
    no_olh_exists,
    parse_error,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::degenerate_column: return "degenerate-column";
        case Errc::budget_exceeded: return "budget-exceeded";
        case Errc::unsupported_order: return "unsupported-order";
        case Errc::not_in_catalog: return "not-in-catalog";
        case Errc::condition_violation: return "condition-violation";
        case Errc::no_olh_exists: return "no-olh-exists";
        case Errc::parse_error: return "parse-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    /// For condition violations, `clause` names the failed hypothesis
    /// ("i", "ii", "iii", "iva", "ivb", ...).
    Error(Errc code, std::string clause, const std::string& what)
        : std::runtime_error(what), code_(code), clause_(std::move(clause)) {}

    Errc code() const noexcept { return code_; }
    const std::string& clause() const noexcept { return clause_; }

private:
    Errc code_;
    std::string clause_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace olhgen
