#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qcspec/qc.hpp"

namespace qcspec {

struct CheckLine {
    std::string what, got, want;
    bool pass = false;
};

struct ExampleResult {
    std::string name;
    std::vector<CheckLine> lines;
    double seconds = 0;

    bool pass() const;
    nlohmann::json to_json() const;
};

// Registered reproduction checks, in run order.
const std::vector<std::string>& example_names();
// Throws invalid_argument for an unknown name.
ExampleResult run_example(const std::string& name);

// Named worked-example codes: example-9-2-6, example-12-3-4, example-8-6-2,
// design-10-5-4, lrc-c3-12-2-8, lrc-c1-15-9-3.
const std::vector<std::string>& example_code_names();
QcCode example_code(const std::string& name);

// Scalar code with each component written as a block of n coordinates.
LinearCode component_major(const LinearCode& c, std::uint32_t n, std::size_t ell);

}  // namespace qcspec
