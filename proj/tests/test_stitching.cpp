#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sylrec/rng.hpp"
#include "sylrec/stitching.hpp"
#include "test_helpers.hpp"

using namespace sylrec;
using sylrec::testing::traj1;

namespace {

std::vector<double> channel(const Trajectory& t, std::size_t c) {
    std::vector<double> out;
    for (std::size_t i = 0; i < t.frame_count(); ++i) out.push_back(t.frame(i)[c]);
    return out;
}

/// Syllable sequences that join continuously: each syllable starts at the
/// previous one's final value.
std::vector<Trajectory> continuous_syllables(SeededRng& rng, std::size_t count,
                                             std::size_t dim, std::size_t min_len = 4,
                                             std::size_t max_len = 10) {
    std::vector<double> last(dim);
    for (double& v : last) v = rng.uniform(-1.0, 1.0);
    std::vector<Trajectory> out;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t frames = min_len + rng.below(max_len - min_len + 1);
        std::vector<double> values;
        for (std::size_t i = 0; i < frames; ++i) {
            for (std::size_t c = 0; c < dim; ++c) {
                if (i == 0) {
                    values.push_back(last[c]);
                } else {
                    values.push_back(values[(i - 1) * dim + c] + rng.uniform(0.05, 0.4));
                }
            }
        }
        for (std::size_t c = 0; c < dim; ++c) last[c] = values[(frames - 1) * dim + c];
        out.emplace_back(std::move(values), dim);
    }
    return out;
}

}  // namespace

TEST_CASE("linear system for a single syllable holds its moment rows") {
    const auto sys = build_linear_system({{0.0, 1.0}});
    REQUIRE(sys.n == 2);
    CHECK(sys.matrix == std::vector<double>{1, 1, 1, 2});
    CHECK(sys.rhs == std::vector<double>{1, 1});
}

TEST_CASE("linear system for two syllables matches the hand-built block") {
    const auto sys = build_linear_system({{0.0, 1.0}, {2.0, 3.0}});
    REQUIRE(sys.n == 4);
    CHECK(sys.matrix == std::vector<double>{1, 1, 0, 0,    //
                                            1, 2, 0, 0,    //
                                            1, 1, -2, -1,  //
                                            0, 0, 5, 2});
    CHECK(sys.rhs == std::vector<double>{1, 1, 0, 5});
}

TEST_CASE("a constant second syllable produces proportional rows") {
    const double c = 3.0;
    const auto sys = build_linear_system({{0.0, 1.0}, {c, c}});
    // Last row is (0, 0, 2c, 2 | 2c); together with the junction row the
    // (a2, b2) columns lose rank.
    CHECK(sys.at(3, 2) == 2 * c);
    CHECK(sys.at(3, 3) == 2.0);
    CHECK(sys.rhs[3] == 2 * c);
    CHECK_THROWS_AS(solve_dense(sys), SingularSystemError);
}

TEST_CASE("quadratic system for a single syllable holds its power sums") {
    const auto sys = build_quadratic_system({{0.0, 1.0, 2.0}});
    REQUIRE(sys.n == 3);
    CHECK(sys.matrix == std::vector<double>{17, 9, 5,  //
                                            9, 5, 3,   //
                                            5, 3, 3});
    CHECK(sys.rhs == std::vector<double>{9, 5, 3});
}

TEST_CASE("identity satisfies every quadratic row at a continuous junction") {
    const auto sys = build_quadratic_system({{0.0, 0.5, 1.0}, {1.0, 1.5, 2.5}});
    const std::vector<double> identity{0, 1, 0, 0, 1, 0};
    CHECK(max_residual(sys, identity) == 0.0);
}

TEST_CASE("a constant syllable collapses the quadratic moment rank") {
    const auto sys = build_quadratic_system({{2.0, 2.0, 2.0}});
    CHECK_THROWS_AS(solve_dense(sys), SingularSystemError);
}

TEST_CASE("system sizes follow the block counts") {
    SeededRng rng(5);
    for (std::size_t R = 1; R <= 6; ++R) {
        std::vector<std::vector<double>> ys(R);
        for (auto& y : ys) {
            y.resize(2 + rng.below(6));
            for (double& v : y) v = rng.uniform(-1, 1);
        }
        CHECK(build_linear_system(ys).n == 2 * R);
        CHECK(build_quadratic_system(ys).n == 3 * R);
    }
}

TEST_CASE("stitch solves the worked linear case") {
    // Independently solved: coefficients (1, 0, 3, -5), stitched [0, 1, 1, 4],
    // sigma2 = 2, junction residual 0.
    const std::vector<Trajectory> ys{traj1({0, 1}), traj1({2, 3})};
    const auto result = stitch(ys, StitchModel::linear);

    const auto& lin = std::get<LinearCoeffs>(result.coeffs);
    CHECK(lin.a[0][0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(lin.b[0][0]) <= 1e-9);
    CHECK(lin.a[1][0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(lin.b[1][0] == doctest::Approx(-5.0).epsilon(1e-9));

    const auto got = channel(result.stitched, 0);
    const std::vector<double> want{0, 1, 1, 4};
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));

    CHECK(result.sigma2[0] == doctest::Approx(2.0).epsilon(1e-9));
    REQUIRE(result.junction_residuals.size() == 1);
    CHECK(result.junction_residuals[0][0] <= 1e-9);
    CHECK_FALSE(result.any_fallback());
}

TEST_CASE("stitch chains transforms across two junctions") {
    // Independently solved (R=3): the first syllable anchors at identity and
    // each later syllable chains to the previous junction value, giving exact
    // integer coefficients (1, 0, 2, -3, -3, 8) and sigma2 = 34.
    const std::vector<Trajectory> ys{traj1({0, 1}), traj1({2, 4}), traj1({1, 3})};
    const auto result = stitch(ys, StitchModel::linear);
    REQUIRE_FALSE(result.any_fallback());
    const auto& lin = std::get<LinearCoeffs>(result.coeffs);
    const double want[6] = {1, 0, 2, -3, -3, 8};
    const double got[6] = {lin.a[0][0], lin.b[0][0], lin.a[1][0],
                           lin.b[1][0], lin.a[2][0], lin.b[2][0]};
    for (int i = 0; i < 6; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    const std::vector<double> want_stitched{0, 1, 1, 5, 5, -1};
    for (std::size_t i = 0; i < want_stitched.size(); ++i)
        CHECK(result.stitched.values()[i] ==
              doctest::Approx(want_stitched[i]).epsilon(1e-12));
    CHECK(result.sigma2[0] == doctest::Approx(34.0).epsilon(1e-12));
    CHECK(result.max_junction_residual() <= 1e-12);
}

TEST_CASE("quadratic stitch matches an independent solve") {
    // Independently solved (R=2, Y1=[0,1,2,4], Y2=[1,2,5]): syllable 1 keeps
    // the identity, syllable 2 gets exactly (-9/17, 35/17, 42/17).
    const std::vector<Trajectory> ys{traj1({0, 1, 2, 4}), traj1({1, 2, 5})};
    const auto result = stitch(ys, StitchModel::quadratic);
    REQUIRE_FALSE(result.any_fallback());
    const auto& quad = std::get<QuadraticCoeffs>(result.coeffs);
    CHECK(std::abs(quad.a[0][0]) <= 1e-10);
    CHECK(quad.b[0][0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(quad.c[0][0]) <= 1e-10);
    CHECK(quad.a[1][0] == doctest::Approx(-9.0 / 17.0).epsilon(1e-10));
    CHECK(quad.b[1][0] == doctest::Approx(35.0 / 17.0).epsilon(1e-10));
    CHECK(quad.c[1][0] == doctest::Approx(42.0 / 17.0).epsilon(1e-10));
    CHECK(result.sigma2[0] == doctest::Approx(13014.0 / 289.0).epsilon(1e-10));
    CHECK(result.max_junction_residual() <= 1e-10);
}

TEST_CASE("an already continuous pair keeps the identity transform") {
    const std::vector<Trajectory> ys{traj1({0, 1}), traj1({1, 2})};
    const auto result = stitch(ys, StitchModel::linear);
    const auto& lin = std::get<LinearCoeffs>(result.coeffs);
    CHECK(lin.a[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(lin.b[0][0]) <= 1e-12);
    CHECK(lin.a[1][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(lin.b[1][0]) <= 1e-12);
    CHECK(channel(result.stitched, 0) == std::vector<double>{0, 1, 1, 2});
    CHECK(result.sigma2[0] <= 1e-16);
}

TEST_CASE("quadratic identity recovery on a continuous concatenation") {
    SeededRng rng(99);
    const auto ys = continuous_syllables(rng, 3, 1);
    const auto result = stitch(ys, StitchModel::quadratic);
    REQUIRE_FALSE(result.any_fallback());
    const auto& quad = std::get<QuadraticCoeffs>(result.coeffs);
    for (std::size_t k = 0; k < ys.size(); ++k) {
        CHECK(std::abs(quad.a[k][0]) <= 1e-9);
        CHECK(quad.b[k][0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(quad.c[k][0]) <= 1e-9);
    }
    double scale = 0.0;
    for (const auto& t : ys)
        for (double v : t.values()) scale = std::max(scale, std::abs(v));
    CHECK(result.sigma2[0] <= 1e-16 * (1.0 + scale) * (1.0 + scale));
}

TEST_CASE("sigma_squared on identity coefficients is zero") {
    const std::vector<Trajectory> ys{traj1({0, 1, 2})};
    const LinearCoeffs identity{{{1.0}}, {{0.0}}};
    CHECK(sigma_squared(identity, ys) == std::vector<double>{0.0});
}

TEST_CASE("sigma_squared of a unit offset is the frame count") {
    const std::vector<Trajectory> ys{traj1({0, 1, 2, 3, 4})};
    const LinearCoeffs shifted{{{1.0}}, {{1.0}}};
    CHECK(sigma_squared(shifted, ys)[0] == doctest::Approx(5.0));
}

TEST_CASE("sigma_squared matches the worked case") {
    const std::vector<Trajectory> ys{traj1({0, 1}), traj1({2, 3})};
    const LinearCoeffs coeffs{{{1.0}, {3.0}}, {{0.0}, {-5.0}}};
    CHECK(sigma_squared(coeffs, ys)[0] == doctest::Approx(2.0));
}

TEST_CASE("sigma_squared validates coefficient shape") {
    const std::vector<Trajectory> ys{traj1({0, 1})};
    const LinearCoeffs wrong{{{1.0}, {1.0}}, {{0.0}, {0.0}}};
    CHECK_THROWS_AS(sigma_squared(wrong, ys), ValidationError);
}

TEST_CASE("junction constraints hold on random nonsingular instances") {
    SeededRng rng(31337);
    int done = 0;
    while (done < 60) {
        const std::size_t R = 1 + rng.below(6);
        const std::size_t dim = 1 + rng.below(2);
        std::vector<Trajectory> ys;
        for (std::size_t k = 0; k < R; ++k)
            ys.push_back(sylrec::testing::random_trajectory(
                rng, 4 + rng.below(9), dim));  // lengths 4..12

        for (const auto model : {StitchModel::linear, StitchModel::quadratic}) {
            const auto result = stitch(ys, model);
            if (result.any_fallback()) continue;  // not a nonsingular instance

            double scale = 0.0;
            for (const auto& t : ys)
                for (double v : t.values()) scale = std::max(scale, std::abs(v));
            for (double v : result.stitched.values())
                scale = std::max(scale, std::abs(v));
            const double tol = 1e-8 * (1.0 + scale);

            CHECK(result.max_junction_residual() <= tol);

            if (model == StitchModel::quadratic) {
                // Slope proxy (2 a y + b) must also match across junctions.
                const auto& q = std::get<QuadraticCoeffs>(result.coeffs);
                for (std::size_t j = 0; j + 1 < R; ++j) {
                    for (std::size_t c = 0; c < dim; ++c) {
                        const double yl =
                            ys[j].frame(ys[j].frame_count() - 1)[c];
                        const double yr = ys[j + 1].frame(0)[c];
                        const double left = 2 * q.a[j][c] * yl + q.b[j][c];
                        const double right = 2 * q.a[j + 1][c] * yr + q.b[j + 1][c];
                        CHECK(std::abs(left - right) <= tol);
                    }
                }
            }

            // The solver itself must satisfy its residual contract.
            for (std::size_t c = 0; c < dim; ++c) {
                std::vector<std::vector<double>> ys_c;
                for (const auto& t : ys) ys_c.push_back(channel(t, c));
                const DenseSystem sys = model == StitchModel::linear
                                            ? build_linear_system(ys_c)
                                            : build_quadratic_system(ys_c);
                std::vector<double> x;
                if (model == StitchModel::linear) {
                    const auto& lin = std::get<LinearCoeffs>(result.coeffs);
                    for (std::size_t k = 0; k < R; ++k) {
                        x.push_back(lin.a[k][c]);
                        x.push_back(lin.b[k][c]);
                    }
                } else {
                    const auto& q = std::get<QuadraticCoeffs>(result.coeffs);
                    for (std::size_t k = 0; k < R; ++k) {
                        x.push_back(q.a[k][c]);
                        x.push_back(q.b[k][c]);
                        x.push_back(q.c[k][c]);
                    }
                }
                double rhs_norm = 0.0;
                for (double v : sys.rhs) rhs_norm = std::max(rhs_norm, std::abs(v));
                CHECK(max_residual(sys, x) <= 1e-9 * (1.0 + rhs_norm));
            }
            ++done;
        }
    }
}

TEST_CASE("constant syllables fall back to identity without aborting") {
    const std::vector<Trajectory> ys{traj1({0, 1}), traj1({5, 5})};
    const auto result = stitch(ys, StitchModel::linear);
    REQUIRE(result.identity_fallback.size() == 1);
    CHECK(result.identity_fallback[0]);
    CHECK(channel(result.stitched, 0) == std::vector<double>{0, 1, 5, 5});
    // The junction stays broken and is reported as such.
    CHECK(result.junction_residuals[0][0] == doctest::Approx(4.0));
}

TEST_CASE("single-frame syllables fall back as well") {
    const std::vector<Trajectory> ys{traj1({2.0})};
    const auto linear = stitch(ys, StitchModel::linear);
    CHECK(linear.identity_fallback[0]);
    CHECK(channel(linear.stitched, 0) == std::vector<double>{2.0});
    const auto quad = stitch(ys, StitchModel::quadratic);
    CHECK(quad.identity_fallback[0]);
}

TEST_CASE("fallback hits only the degenerate channel") {
    // Channel 0 is constant across the second syllable, channel 1 is healthy.
    const Trajectory y1({0.0, 0.0, 1.0, 1.0}, 2);
    const Trajectory y2({5.0, 2.0, 5.0, 3.0}, 2);
    const auto result = stitch({y1, y2}, StitchModel::linear);
    CHECK(result.identity_fallback[0]);
    CHECK_FALSE(result.identity_fallback[1]);
}

TEST_CASE("a single syllable degenerates to the identity") {
    const std::vector<Trajectory> ys{traj1({0, 1, 2, 5})};
    for (const auto model : {StitchModel::linear, StitchModel::quadratic}) {
        const auto result = stitch(ys, model);
        CHECK_FALSE(result.any_fallback());
        CHECK(result.junction_residuals.empty());
        CHECK(result.sigma2[0] <= 1e-16);
        CHECK(result.stitched.frame_count() == 4);
    }
}

TEST_CASE("channels are fitted independently") {
    SeededRng rng(77);
    const Trajectory a = sylrec::testing::random_trajectory(rng, 6, 2);
    const Trajectory b = sylrec::testing::random_trajectory(rng, 5, 2);

    // Same data with the two channels swapped.
    const auto swap_channels = [](const Trajectory& t) {
        std::vector<double> v;
        for (std::size_t i = 0; i < t.frame_count(); ++i) {
            v.push_back(t.frame(i)[1]);
            v.push_back(t.frame(i)[0]);
        }
        return Trajectory(std::move(v), 2);
    };

    const auto normal = stitch({a, b}, StitchModel::linear);
    const auto swapped = stitch({swap_channels(a), swap_channels(b)}, StitchModel::linear);
    const auto& n = std::get<LinearCoeffs>(normal.coeffs);
    const auto& s = std::get<LinearCoeffs>(swapped.coeffs);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(n.a[k][0] == s.a[k][1]);
        CHECK(n.a[k][1] == s.a[k][0]);
        CHECK(n.b[k][0] == s.b[k][1]);
        CHECK(n.b[k][1] == s.b[k][0]);
    }
    CHECK(normal.sigma2[0] == swapped.sigma2[1]);
    CHECK(normal.sigma2[1] == swapped.sigma2[0]);
}

TEST_CASE("stitch rejects empty and mismatched input") {
    CHECK_THROWS_AS(stitch({}, StitchModel::linear), ValidationError);
    const Trajectory one({0.0, 1.0}, 1);
    const Trajectory two({0.0, 1.0}, 2);
    CHECK_THROWS_AS(stitch({one, two}, StitchModel::linear), ValidationError);
}
