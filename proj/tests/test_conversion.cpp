#include <doctest.h>

#include <random>

#include "ifwar/conversion.hpp"
#include "test_util.hpp"

using namespace ifwar;
namespace tu = ifwar::testutil;

TEST_CASE("interval conversion boundary and hand values") {
    const std::vector<IntervalNumber> rows = {{1, 2}, {2, 4}};
    const auto out = intervals_to_ifns(rows);
    CHECK(out[0].mu() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(out[0].nu() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out[1].mu() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out[1].nu() == doctest::Approx(0.0).epsilon(1e-12));

    // the row attaining [maxU, maxU] maps to (1,0); [0,0] maps to (0,1)
    const std::vector<IntervalNumber> edges = {{4, 4}, {0, 0}, {1, 3}};
    const auto conv = intervals_to_ifns(edges);
    CHECK(approx_equal(conv[0], {1, 0}));
    CHECK(approx_equal(conv[1], {0, 1}));

    // all-zero column collapses to (0,0) rows
    const std::vector<IntervalNumber> zeros(10, IntervalNumber(0, 0.0));
    for (const Ifn& f : intervals_to_ifns(zeros)) CHECK(f == Ifn(0, 0));

    // the worked visibility column: identical [0, 0.2] rows give (0,0)
    const std::vector<IntervalNumber> vis(10, IntervalNumber(0, 0.2));
    for (const Ifn& f : intervals_to_ifns(vis)) CHECK(approx_equal(f, {0, 0}));

    CHECK_THROWS_AS(intervals_to_ifns(std::vector<IntervalNumber>{{-1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("real conversion reproduces the printed distance column") {
    const auto out = reals_to_ifns(tu::kGoldenDistanceReal, Polarity::Cost, {});
    for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(out[i].mu() == doctest::Approx(tu::kGoldenDistanceIfn[i].mu).epsilon(1e-6));
        CHECK(out[i].nu() == doctest::Approx(tu::kGoldenDistanceIfn[i].nu).epsilon(1e-6));
    }
}

TEST_CASE("real conversion reproduces the printed environment and defense columns") {
    const std::vector<double> env = {0, 0, 0, 0, 0, 0, 0, 0, 3, 0};
    const auto env_out = reals_to_ifns(env, Polarity::Cost, {});
    CHECK(env_out[8].mu() == doctest::Approx(6.6644e-05).epsilon(1e-6));
    CHECK(env_out[8].nu() == doctest::Approx(0.199933356).epsilon(1e-6));
    CHECK(approx_equal(env_out[0], {0.2, 0.0}, 1e-9));

    const std::vector<double> def = {0, 0, 0.3, 0.5, 1, 0, 0, 0.3, 1, 0.7};
    const auto def_out = reals_to_ifns(def, Polarity::Cost, {});
    CHECK(def_out[2].mu() == doctest::Approx(0.000664452).epsilon(1e-6));
    CHECK(def_out[2].nu() == doctest::Approx(0.199335548).epsilon(1e-6));
    CHECK(def_out[9].mu() == doctest::Approx(0.000285307).epsilon(1e-6));
    CHECK(def_out[9].nu() == doctest::Approx(0.199714693).epsilon(1e-6));
}

TEST_CASE("real conversion edge behavior") {
    const std::vector<double> same = {4, 4, 4};
    for (const auto pol : {Polarity::Benefit, Polarity::Cost}) {
        for (const Ifn& f : reals_to_ifns(same, pol, {})) {
            CHECK(f.mu() == doctest::Approx(0.2).epsilon(1e-12));
            CHECK(f.nu() == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
    // all-zero column with a zero guard still defined, lands on (beta, 0)
    const std::vector<double> zeros = {0, 0, 0};
    for (const auto pol : {Polarity::Benefit, Polarity::Cost}) {
        for (const Ifn& f : reals_to_ifns(zeros, pol, {0.2, 0.0})) {
            CHECK(approx_equal(f, {0.2, 0.0}));
        }
    }
    CHECK_THROWS_AS(reals_to_ifns(std::vector<double>{}, Polarity::Cost, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reals_to_ifns(std::vector<double>{-1}, Polarity::Cost, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reals_to_ifns(std::vector<double>{1}, Polarity::Cost, {1.5, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("conversion principles hold over random columns") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> val(0.0, 100.0);
    const ConversionParams params{0.2, 0.001};
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> len(1, 12);
        const int n = len(rng);
        std::vector<double> reals(n);
        for (double& v : reals) v = val(rng);
        for (const auto pol : {Polarity::Benefit, Polarity::Cost}) {
            const auto out = reals_to_ifns(reals, pol, params);
            for (const Ifn& f : out) {
                // range limitation plus the mu + nu == beta column checksum
                CHECK(f.mu() >= -kAlgebraTol);
                CHECK(f.mu() + f.nu() == doctest::Approx(params.beta).epsilon(1e-12));
            }
            // monotonicity: benefit ordered with values, cost reversed
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (reals[i] < reals[j]) {
                        if (pol == Polarity::Benefit) {
                            CHECK(out[i].mu() < out[j].mu());
                            CHECK(out[i].nu() > out[j].nu());
                        } else {
                            CHECK(out[i].mu() > out[j].mu());
                            CHECK(out[i].nu() < out[j].nu());
                        }
                    }
                }
            }
        }

        std::vector<IntervalNumber> ivals(n);
        for (auto& iv : ivals) iv = tu::random_interval(rng, 0.0, 50.0);
        const auto conv = intervals_to_ifns(ivals);
        for (int i = 0; i < n; ++i) {
            CHECK(conv[i].mu() >= 0.0);
            CHECK(conv[i].mu() + conv[i].nu() <= 1.0 + kAlgebraTol);
            for (int j = 0; j < n; ++j) {
                // fully ordered intervals map strictly monotonically
                if (ivals[i].hi() < ivals[j].lo()) {
                    CHECK(conv[i].mu() < conv[j].mu());
                    CHECK(conv[i].nu() > conv[j].nu());
                }
            }
        }
    }
}
