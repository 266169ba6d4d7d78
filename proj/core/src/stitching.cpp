#include "sylrec/stitching.hpp"

#include <algorithm>
#include <cmath>

namespace sylrec {

namespace {

struct Moments {
    double s4 = 0, s3 = 0, s2 = 0, s1 = 0;
    double count = 0;
};

Moments moments_of(const std::vector<double>& y) {
    Moments m;
    for (double v : y) {
        const double v2 = v * v;
        m.s4 += v2 * v2;
        m.s3 += v2 * v;
        m.s2 += v2;
        m.s1 += v;
        m.count += 1.0;
    }
    return m;
}

void require_nonempty(const std::vector<std::vector<double>>& ys) {
    if (ys.empty()) throw ValidationError("stitch: no syllables");
    for (std::size_t k = 0; k < ys.size(); ++k)
        if (ys[k].empty())
            throw ValidationError("stitch: syllable " + std::to_string(k) + " is empty");
}

std::vector<double> channel_of(const Trajectory& t, std::size_t c) {
    std::vector<double> out(t.frame_count());
    for (std::size_t i = 0; i < t.frame_count(); ++i) out[i] = t.frame(i)[c];
    return out;
}

}  // namespace

const char* to_string(StitchModel model) {
    return model == StitchModel::linear ? "linear" : "quadratic";
}

bool StitchResult::any_fallback() const {
    return std::any_of(identity_fallback.begin(), identity_fallback.end(),
                       [](bool f) { return f; });
}

double StitchResult::max_junction_residual() const {
    double worst = 0.0;
    for (const auto& per_channel : junction_residuals)
        for (double r : per_channel) worst = std::max(worst, r);
    return worst;
}

DenseSystem build_linear_system(const std::vector<std::vector<double>>& ys) {
    require_nonempty(ys);
    const std::size_t R = ys.size();
    auto sys = DenseSystem::zero(2 * R);

    // Normal equations for the first syllable.
    const Moments m1 = moments_of(ys[0]);
    sys.at(0, 0) = m1.s2;
    sys.at(0, 1) = m1.s1;
    sys.rhs[0] = m1.s2;
    sys.at(1, 0) = m1.s1;
    sys.at(1, 1) = m1.count;
    sys.rhs[1] = m1.s1;

    // Junction value constraints: transformed last sample of syllable j equals
    // transformed first sample of syllable j+1.
    for (std::size_t j = 0; j + 1 < R; ++j) {
        const std::size_t row = 2 + j;
        sys.at(row, 2 * j) = ys[j].back();
        sys.at(row, 2 * j + 1) = 1.0;
        sys.at(row, 2 * (j + 1)) = -ys[j + 1].front();
        sys.at(row, 2 * (j + 1) + 1) = -1.0;
        sys.rhs[row] = 0.0;
    }

    // First-moment normal equation for each later syllable.
    for (std::size_t k = 1; k < R; ++k) {
        const std::size_t row = R + 1 + k - 1;
        const Moments mk = moments_of(ys[k]);
        sys.at(row, 2 * k) = mk.s1;
        sys.at(row, 2 * k + 1) = mk.count;
        sys.rhs[row] = mk.s1;
    }
    return sys;
}

DenseSystem build_quadratic_system(const std::vector<std::vector<double>>& ys) {
    require_nonempty(ys);
    const std::size_t R = ys.size();
    auto sys = DenseSystem::zero(3 * R);

    // Moment equations for the first syllable.
    const Moments m1 = moments_of(ys[0]);
    sys.at(0, 0) = m1.s4;
    sys.at(0, 1) = m1.s3;
    sys.at(0, 2) = m1.s2;
    sys.rhs[0] = m1.s3;
    sys.at(1, 0) = m1.s3;
    sys.at(1, 1) = m1.s2;
    sys.at(1, 2) = m1.s1;
    sys.rhs[1] = m1.s2;
    sys.at(2, 0) = m1.s2;
    sys.at(2, 1) = m1.s1;
    sys.at(2, 2) = m1.count;
    sys.rhs[2] = m1.s1;

    // Junction value constraints.
    for (std::size_t j = 0; j + 1 < R; ++j) {
        const std::size_t row = 3 + j;
        const double yl = ys[j].back(), yr = ys[j + 1].front();
        sys.at(row, 3 * j) = yl * yl;
        sys.at(row, 3 * j + 1) = yl;
        sys.at(row, 3 * j + 2) = 1.0;
        sys.at(row, 3 * (j + 1)) = -yr * yr;
        sys.at(row, 3 * (j + 1) + 1) = -yr;
        sys.at(row, 3 * (j + 1) + 2) = -1.0;
        sys.rhs[row] = 0.0;
    }

    // Junction slope constraints: 2*a*y + b matched across the junction.
    for (std::size_t j = 0; j + 1 < R; ++j) {
        const std::size_t row = 3 + (R - 1) + j;
        sys.at(row, 3 * j) = 2.0 * ys[j].back();
        sys.at(row, 3 * j + 1) = 1.0;
        sys.at(row, 3 * (j + 1)) = -2.0 * ys[j + 1].front();
        sys.at(row, 3 * (j + 1) + 1) = -1.0;
        sys.rhs[row] = 0.0;
    }

    // Lowest moment equation for each later syllable.
    for (std::size_t k = 1; k < R; ++k) {
        const std::size_t row = 3 + 2 * (R - 1) + k - 1;
        const Moments mk = moments_of(ys[k]);
        sys.at(row, 3 * k) = mk.s2;
        sys.at(row, 3 * k + 1) = mk.s1;
        sys.at(row, 3 * k + 2) = mk.count;
        sys.rhs[row] = mk.s1;
    }
    return sys;
}

namespace {

void check_coeff_shape(std::size_t rows, std::size_t cols,
                       const std::vector<std::vector<double>>& m, const char* name) {
    if (m.size() != rows)
        throw ValidationError(std::string("sigma: coefficient '") + name +
                              "' has " + std::to_string(m.size()) + " syllables, expected " +
                              std::to_string(rows));
    for (const auto& row : m)
        if (row.size() != cols)
            throw ValidationError(std::string("sigma: coefficient '") + name +
                                  "' has a row of " + std::to_string(row.size()) +
                                  " channels, expected " + std::to_string(cols));
}

std::size_t common_dim(const std::vector<Trajectory>& syllables) {
    if (syllables.empty()) throw ValidationError("stitch: no syllables");
    const std::size_t dim = syllables[0].dim();
    for (const auto& s : syllables)
        if (s.dim() != dim)
            throw ValidationError("stitch: channel mismatch " + std::to_string(s.dim()) +
                                  " vs " + std::to_string(dim));
    return dim;
}

}  // namespace

std::vector<double> sigma_squared(const LinearCoeffs& coeffs,
                                  const std::vector<Trajectory>& syllables) {
    const std::size_t P = common_dim(syllables);
    check_coeff_shape(syllables.size(), P, coeffs.a, "a");
    check_coeff_shape(syllables.size(), P, coeffs.b, "b");
    std::vector<double> out(P, 0.0);
    for (std::size_t k = 0; k < syllables.size(); ++k) {
        const auto& t = syllables[k];
        for (std::size_t i = 0; i < t.frame_count(); ++i) {
            const auto f = t.frame(i);
            for (std::size_t c = 0; c < P; ++c) {
                const double d = coeffs.a[k][c] * f[c] + coeffs.b[k][c] - f[c];
                out[c] += d * d;
            }
        }
    }
    return out;
}

std::vector<double> sigma_squared(const QuadraticCoeffs& coeffs,
                                  const std::vector<Trajectory>& syllables) {
    const std::size_t P = common_dim(syllables);
    check_coeff_shape(syllables.size(), P, coeffs.a, "a");
    check_coeff_shape(syllables.size(), P, coeffs.b, "b");
    check_coeff_shape(syllables.size(), P, coeffs.c, "c");
    std::vector<double> out(P, 0.0);
    for (std::size_t k = 0; k < syllables.size(); ++k) {
        const auto& t = syllables[k];
        for (std::size_t i = 0; i < t.frame_count(); ++i) {
            const auto f = t.frame(i);
            for (std::size_t c = 0; c < P; ++c) {
                const double d = coeffs.a[k][c] * f[c] * f[c] +
                                 coeffs.b[k][c] * f[c] + coeffs.c[k][c] - f[c];
                out[c] += d * d;
            }
        }
    }
    return out;
}

StitchResult stitch(const std::vector<Trajectory>& syllables, StitchModel model) {
    const std::size_t P = common_dim(syllables);
    const std::size_t R = syllables.size();

    const bool linear = (model == StitchModel::linear);
    LinearCoeffs lin{std::vector<std::vector<double>>(R, std::vector<double>(P, 1.0)),
                     std::vector<std::vector<double>>(R, std::vector<double>(P, 0.0))};
    QuadraticCoeffs quad{
        std::vector<std::vector<double>>(R, std::vector<double>(P, 0.0)),
        std::vector<std::vector<double>>(R, std::vector<double>(P, 1.0)),
        std::vector<std::vector<double>>(R, std::vector<double>(P, 0.0))};
    std::vector<bool> fallback(P, false);

    // Channels are independent: one system per channel, identity on failure.
    for (std::size_t c = 0; c < P; ++c) {
        std::vector<std::vector<double>> ys(R);
        for (std::size_t k = 0; k < R; ++k) ys[k] = channel_of(syllables[k], c);
        try {
            if (linear) {
                const auto x = solve_dense(build_linear_system(ys));
                for (std::size_t k = 0; k < R; ++k) {
                    lin.a[k][c] = x[2 * k];
                    lin.b[k][c] = x[2 * k + 1];
                }
            } else {
                const auto x = solve_dense(build_quadratic_system(ys));
                for (std::size_t k = 0; k < R; ++k) {
                    quad.a[k][c] = x[3 * k];
                    quad.b[k][c] = x[3 * k + 1];
                    quad.c[k][c] = x[3 * k + 2];
                }
            }
        } catch (const SingularSystemError&) {
            fallback[c] = true;  // identity coefficients already in place
        }
    }

    const auto apply = [&](std::size_t k, std::size_t c, double y) {
        if (linear) return lin.a[k][c] * y + lin.b[k][c];
        return quad.a[k][c] * y * y + quad.b[k][c] * y + quad.c[k][c];
    };

    std::vector<double> values;
    for (std::size_t k = 0; k < R; ++k) {
        const auto& t = syllables[k];
        for (std::size_t i = 0; i < t.frame_count(); ++i) {
            const auto f = t.frame(i);
            for (std::size_t c = 0; c < P; ++c) values.push_back(apply(k, c, f[c]));
        }
    }
    Trajectory stitched(std::move(values), P);

    std::vector<std::vector<double>> residuals;
    for (std::size_t j = 0; j + 1 < R; ++j) {
        std::vector<double> per_channel(P);
        const auto left = syllables[j].frame(syllables[j].frame_count() - 1);
        const auto right = syllables[j + 1].frame(0);
        for (std::size_t c = 0; c < P; ++c)
            per_channel[c] = std::abs(apply(j, c, left[c]) - apply(j + 1, c, right[c]));
        residuals.push_back(std::move(per_channel));
    }

    std::vector<double> sigma2 =
        linear ? sigma_squared(lin, syllables) : sigma_squared(quad, syllables);

    StitchResult result{model,
                        linear ? std::variant<LinearCoeffs, QuadraticCoeffs>(std::move(lin))
                               : std::variant<LinearCoeffs, QuadraticCoeffs>(std::move(quad)),
                        std::move(stitched),
                        std::move(sigma2),
                        std::move(residuals),
                        std::move(fallback)};
    return result;
}

}  // namespace sylrec
