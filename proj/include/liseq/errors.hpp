#pragma once

#include <stdexcept>
#include <string>

namespace liseq {

// Working precision or table coverage insufficient for the request.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (zeros files, cache files).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liseq
