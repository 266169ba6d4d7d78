#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylrec/compare.hpp"
#include "sylrec/rng.hpp"
#include "test_helpers.hpp"

using namespace sylrec;
using sylrec::testing::dtw_brute_force;
using sylrec::testing::traj1;

TEST_CASE("frame_distance is Euclidean") {
    const std::vector<double> a{0, 0}, b{3, 4};
    CHECK(frame_distance(a, b) == doctest::Approx(5.0));
    const std::vector<double> c{1.5};
    CHECK(frame_distance(c, c) == 0.0);
    const std::vector<double> d{1}, e{4};
    CHECK(frame_distance(d, e) == doctest::Approx(3.0));
    CHECK_THROWS_AS(frame_distance(a, c), ValidationError);
}

TEST_CASE("dtw of a sequence with itself is zero") {
    const Trajectory t = traj1({0, 1, 2});
    CHECK(dtw_distance(t, t) == 0.0);
}

TEST_CASE("dtw of single frames is the local cost") {
    CHECK(dtw_distance(traj1({2}), traj1({5})) == doctest::Approx(3.0));
}

TEST_CASE("dtw matches the alignment-enumeration oracle on the worked case") {
    const Trajectory a = traj1({0, 2, 4});
    const Trajectory b = traj1({0, 4});
    CHECK(dtw_brute_force(FrameSpan(a), FrameSpan(b)) == doctest::Approx(2.0));
    CHECK(dtw_distance(a, b) == doctest::Approx(2.0));
}

TEST_CASE("dtw rejects empty sequences and mixed dimensions") {
    const Trajectory a = traj1({1, 2});
    CHECK_THROWS_AS(dtw_distance(FrameSpan(a.values().data(), 0, 1), FrameSpan(a)),
                    ValidationError);
    const Trajectory b({0.0, 0.0, 1.0, 1.0}, 2);
    CHECK_THROWS_AS(dtw_distance(a, b), ValidationError);
}

TEST_CASE("dtw equals the exhaustive minimum on random short sequences") {
    SeededRng rng(2024);
    for (int round = 0; round < 300; ++round) {
        const std::size_t dim = 1 + rng.below(2);
        const Trajectory a =
            sylrec::testing::random_trajectory(rng, 1 + rng.below(6), dim);
        const Trajectory b =
            sylrec::testing::random_trajectory(rng, 1 + rng.below(6), dim);
        const double dp = dtw_distance(a, b);
        const double brute = dtw_brute_force(FrameSpan(a), FrameSpan(b));
        CHECK(dp == doctest::Approx(brute).epsilon(1e-12));
        CHECK(dp >= 0.0);
        CHECK(dtw_distance(b, a) == doctest::Approx(dp).epsilon(1e-12));
        CHECK(dtw_distance(a, a) == 0.0);
    }
}

namespace {

Dictionary small_dictionary() {
    std::vector<SyllablePattern> patterns;
    patterns.push_back(sylrec::testing::unit_pattern("two_a", {4.0, 4.0}));
    patterns.push_back(sylrec::testing::unit_pattern("two_b", {1.5, 0.0}));
    patterns.push_back(sylrec::testing::unit_pattern("three", {0.0, 0.0, 0.0}));
    return Dictionary(std::move(patterns));
}

}  // namespace

TEST_CASE("syllable_distance is zero on identical segments") {
    const auto input = sylrec::testing::unit_input({4.0, 4.0});
    const auto group = make_group(input, 0, 2);
    const auto dict = small_dictionary();
    CHECK(syllable_distance(group, dict.at(0)) == 0.0);
}

TEST_CASE("syllable_distance rejects a segment-count mismatch") {
    const auto input = sylrec::testing::unit_input({4.0, 4.0});
    const auto group = make_group(input, 0, 2);
    const auto dict = small_dictionary();
    CHECK_THROWS_WITH_AS(syllable_distance(group, dict.at(2)),
                         doctest::Contains("segment count mismatch"), ValidationError);
}

TEST_CASE("syllable_distance adds per-segment DTW distances") {
    // Segment pair 1: [0,2,4] vs [0,4] has oracle distance 2; pair 2: [2] vs
    // [5] has distance 3. Their syllable distance must be 5.
    const Trajectory input_traj = traj1({0, 2, 4, 2});
    const SegmentedInput input = SegmentedInput::make(input_traj, {0, 3});
    const SyllablePattern pattern =
        SyllablePattern::make("p", {"ph", "ph"}, traj1({0, 4, 5}), {0, 2});

    const auto segs_in = slice_segments(input.trajectory, input.boundaries);
    const auto segs_ref = slice_segments(pattern.trajectory, pattern.boundaries);
    CHECK(dtw_brute_force(segs_in[0], segs_ref[0]) == doctest::Approx(2.0));
    CHECK(dtw_brute_force(segs_in[1], segs_ref[1]) == doctest::Approx(3.0));

    const auto group = make_group(input, 0, 2);
    CHECK(syllable_distance(group, pattern) == doctest::Approx(5.0));
}

TEST_CASE("best_pattern finds an exact source pattern at distance zero") {
    const auto dict = small_dictionary();
    const auto input = sylrec::testing::unit_input({1.5, 0.0});
    const auto match = best_pattern(make_group(input, 0, 2), dict);
    CHECK(match.pattern->label == "two_b");
    CHECK(match.distance == 0.0);
}

TEST_CASE("best_pattern breaks ties toward the earlier dictionary entry") {
    std::vector<SyllablePattern> patterns;
    patterns.push_back(sylrec::testing::unit_pattern("first", {1.0, 1.0}));
    patterns.push_back(sylrec::testing::unit_pattern("second", {1.0, 1.0}));
    const Dictionary dict(std::move(patterns));
    const auto input = sylrec::testing::unit_input({0.0, 0.0});
    const auto match = best_pattern(make_group(input, 0, 2), dict);
    CHECK(match.pattern->label == "first");
    CHECK(match.index == 0);
}

TEST_CASE("best_pattern picks the minimum among applicable patterns") {
    // Single-frame segments: distances to input value 0 are {4.0, 1.5, 7.0}.
    std::vector<SyllablePattern> patterns;
    patterns.push_back(sylrec::testing::unit_pattern("d4", {4.0}));
    patterns.push_back(sylrec::testing::unit_pattern("d15", {1.5}));
    patterns.push_back(sylrec::testing::unit_pattern("d7", {7.0}));
    const Dictionary dict(std::move(patterns));
    const auto input = sylrec::testing::unit_input({0.0});
    const auto match = best_pattern(make_group(input, 0, 1), dict);
    CHECK(match.pattern->label == "d15");
    CHECK(match.distance == doctest::Approx(1.5));

    for (const auto& p : dict.syllables())
        CHECK(match.distance <= syllable_distance(make_group(input, 0, 1), p));
}

TEST_CASE("best_pattern reports an impossible arc") {
    const auto dict = small_dictionary();
    const auto input = sylrec::testing::unit_input({0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(best_pattern(make_group(input, 0, 4), dict),
                    NoApplicablePatternError);
}
