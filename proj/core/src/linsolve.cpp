#include "sylrec/linsolve.hpp"

#include <algorithm>
#include <cmath>

namespace sylrec {

std::vector<double> solve_dense(DenseSystem sys) {
    const std::size_t n = sys.n;
    if (n == 0) throw ValidationError("solve: empty system");
    if (sys.matrix.size() != n * n || sys.rhs.size() != n)
        throw ValidationError("solve: inconsistent system shape");

    double max_entry = 0.0;
    for (double v : sys.matrix) max_entry = std::max(max_entry, std::abs(v));
    const double pivot_floor = 1e-12 * max_entry;

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_mag = std::abs(sys.at(perm[col], col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(sys.at(perm[r], col));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag <= pivot_floor)
            throw SingularSystemError(
                "singular system: pivot " + std::to_string(pivot_mag) +
                    " at column " + std::to_string(col),
                col);
        std::swap(perm[col], perm[pivot_row]);

        const double pivot = sys.at(perm[col], col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = sys.at(perm[r], col) / pivot;
            if (factor == 0.0) continue;
            sys.at(perm[r], col) = 0.0;
            for (std::size_t c = col + 1; c < n; ++c)
                sys.at(perm[r], c) -= factor * sys.at(perm[col], c);
            sys.rhs[perm[r]] -= factor * sys.rhs[perm[col]];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = sys.rhs[perm[i]];
        for (std::size_t c = i + 1; c < n; ++c) acc -= sys.at(perm[i], c) * x[c];
        x[i] = acc / sys.at(perm[i], i);
    }
    return x;
}

double max_residual(const DenseSystem& sys, std::span<const double> x) {
    if (x.size() != sys.n) throw ValidationError("residual: size mismatch");
    double worst = 0.0;
    for (std::size_t r = 0; r < sys.n; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < sys.n; ++c) acc += sys.at(r, c) * x[c];
        worst = std::max(worst, std::abs(acc - sys.rhs[r]));
    }
    return worst;
}

}  // namespace sylrec
