#pragma once

#include <stdexcept>
#include <string>

namespace keg {

// Malformed textual graph input (edge list, graph6, DIMACS).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration exceeded its configured capacity bound.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guaranteed internal consistency condition failed; indicates a defect.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace keg
