#pragma once

#include <stdexcept>
#include <string>

namespace circol {

// Input files that do not conform to the documented formats.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An explicit enumeration or search cap was hit.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct disconnected_graph : std::runtime_error {
    explicit disconnected_graph(const std::string& what) : std::runtime_error(what) {}
};

struct tree_edge_error : std::invalid_argument {
    explicit tree_edge_error(const std::string& what) : std::invalid_argument(what) {}
};

struct not_a_path : std::invalid_argument {
    explicit not_a_path(const std::string& what) : std::invalid_argument(what) {}
};

// (p,q) outside the range an operation supports.
struct param_out_of_range : std::invalid_argument {
    explicit param_out_of_range(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_colouring : std::invalid_argument {
    explicit invalid_colouring(const std::string& what) : std::invalid_argument(what) {}
};

struct domain_mismatch : std::invalid_argument {
    explicit domain_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct colour_out_of_range : std::invalid_argument {
    explicit colour_out_of_range(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace circol
