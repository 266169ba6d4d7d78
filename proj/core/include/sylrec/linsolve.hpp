#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sylrec/types.hpp"

namespace sylrec {

/// Square dense system A x = rhs, row-major.
struct DenseSystem {
    std::size_t n = 0;
    std::vector<double> matrix;  // n * n
    std::vector<double> rhs;     // n

    static DenseSystem zero(std::size_t n) {
        return DenseSystem{n, std::vector<double>(n * n, 0.0),
                           std::vector<double>(n, 0.0)};
    }
    double& at(std::size_t r, std::size_t c) { return matrix[r * n + c]; }
    double at(std::size_t r, std::size_t c) const { return matrix[r * n + c]; }
};

class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& msg, std::size_t column)
        : Error(msg), pivot_column(column) {}
    std::size_t pivot_column;
};

/// Gaussian elimination with partial pivoting. Throws SingularSystemError
/// when the best available pivot falls below 1e-12 times the largest entry of
/// the initial matrix; the error carries the failing column.
std::vector<double> solve_dense(DenseSystem sys);

/// max-norm residual ||A x - rhs||_inf.
double max_residual(const DenseSystem& sys, std::span<const double> x);

}  // namespace sylrec
