#pragma once

#include <stdexcept>
#include <string>

namespace surfq {

// Invariant or precondition violation with a human-readable diagnostic.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (signatures, quiver files).
struct parse_error : validation_error {
    explicit parse_error(const std::string& what) : validation_error(what) {}
};

// Arithmetic left the representable range (multiplicities are exact integers).
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// A search exceeded its configured node or result budget.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// The requested surface is on a classification exception list.  `item`
// identifies the entry (1-4 for the construction exceptions).
struct exception_surface : std::runtime_error {
    int item;
    exception_surface(int item_, const std::string& what)
        : std::runtime_error(what), item(item_) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace surfq
