#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace graphsee {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;

/// Malformed or inconsistent input data (parse failures, domain violations).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (singular system, non-convergence, unusable weights).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphsee
