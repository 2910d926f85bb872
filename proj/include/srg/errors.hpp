#pragma once

#include <stdexcept>
#include <string>

namespace srg {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// malformed input data (graph6 text, bad CLI values, ...)
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// filesystem-level failures, kept distinct from parse failures
struct io_error : error {
    explicit io_error(const std::string& what) : error(what) {}
};

// a computation refused because it would exceed the configured work budget
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace srg
