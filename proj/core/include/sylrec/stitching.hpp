#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "sylrec/linsolve.hpp"
#include "sylrec/types.hpp"

namespace sylrec {

enum class StitchModel { linear, quadratic };

const char* to_string(StitchModel model);

/// Per-syllable, per-channel transform y~ = a*y + b. Shape: [syllable][channel].
struct LinearCoeffs {
    std::vector<std::vector<double>> a;
    std::vector<std::vector<double>> b;
};

/// Per-syllable, per-channel transform y~ = a*y^2 + b*y + c.
struct QuadraticCoeffs {
    std::vector<std::vector<double>> a;
    std::vector<std::vector<double>> b;
    std::vector<std::vector<double>> c;
};

/// Outcome of stitching R syllable trajectories into one smooth trajectory.
/// Channels whose system was singular (constant or single-frame syllables)
/// keep the identity transform and are flagged in identity_fallback.
struct StitchResult {
    StitchModel model;
    std::variant<LinearCoeffs, QuadraticCoeffs> coeffs;
    Trajectory stitched;
    std::vector<double> sigma2;                           // per channel
    std::vector<std::vector<double>> junction_residuals;  // [junction][channel]
    std::vector<bool> identity_fallback;                  // per channel

    bool any_fallback() const;
    double max_junction_residual() const;
};

/// Builds the exactly-determined 2R x 2R linear-model system for one channel.
/// ys[k] is syllable k's value sequence. Unknown order (a_1, b_1, ..., a_R, b_R);
/// rows: the two k=1 normal equations, the R-1 junction value constraints,
/// then the first-moment normal equation for each k >= 2. The junction value
/// of syllable k is its last sample; of syllable k+1, its first.
DenseSystem build_linear_system(const std::vector<std::vector<double>>& ys);

/// Builds the 3R x 3R quadratic-model system. Unknown order
/// (a_1, b_1, c_1, ..., a_R, b_R, c_R); rows: the three k=1 moment equations,
/// the R-1 junction value constraints, the R-1 junction slope constraints
/// (2*a*y + b matched across the junction), then the lowest moment equation
/// for each k >= 2.
DenseSystem build_quadratic_system(const std::vector<std::vector<double>>& ys);

/// Fits the model per channel, applies the transforms, and concatenates the
/// transformed syllables. Singular channels fall back to identity and are
/// flagged; the pipeline never aborts on them.
StitchResult stitch(const std::vector<Trajectory>& syllables, StitchModel model);

/// Total squared deformation per channel: sum over syllables and frames of
/// |transformed - original|^2.
std::vector<double> sigma_squared(const LinearCoeffs& coeffs,
                                  const std::vector<Trajectory>& syllables);
std::vector<double> sigma_squared(const QuadraticCoeffs& coeffs,
                                  const std::vector<Trajectory>& syllables);

}  // namespace sylrec
