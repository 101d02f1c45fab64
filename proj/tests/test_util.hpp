#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ifwar/ifn.hpp"
#include "ifwar/interval.hpp"

namespace ifwar::testutil {

inline Ifn random_ifn(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double mu = unit(rng);
    const double nu = unit(rng) * (1.0 - mu);
    return {mu, nu};
}

inline IntervalNumber random_interval(std::mt19937_64& rng, double lo = 0.0,
                                      double hi = 10.0) {
    std::uniform_real_distribution<double> range(lo, hi);
    double a = range(rng);
    double b = range(rng);
    if (a > b) std::swap(a, b);
    return {a, b};
}

// ---------------------------------------------------------------------------
// Golden rows: distance / speed / environment / defense indicator tables for
// the bundled t1 snapshot, as printed in the worked example.
// ---------------------------------------------------------------------------

struct GoldenIfn {
    double mu, nu;
};

inline const std::vector<double> kGoldenDistanceReal = {
    8.16, 8.155, 8.15, 8.655, 8.15, 8.655, 8.66, 7.655, 7.645, 7.645};

inline const std::vector<GoldenIfn> kGoldenDistanceIfn = {
    {0.187378998, 0.012621002}, {0.18749387, 0.01250613},
    {0.187608882, 0.012391118}, {0.176663586, 0.023336414},
    {0.187608882, 0.012391118}, {0.176663586, 0.023336414},
    {0.176561598, 0.023438402}, {0.199738767, 0.000261233},
    {0.2, 0.0},                 {0.2, 0.0}};

inline const std::vector<double> kGoldenSpeedReal = {
    2.6, 2.333333333, 2.0, 2.0, 2.0, 2.0, 2.0, 2.333333333, 2.142857143, 2.333333333};

inline const std::vector<GoldenIfn> kGoldenSpeedIfn = {
    {0.153863899, 0.046136101}, {0.171440811, 0.028559189},
    {0.2, 0.0},                 {0.2, 0.0},
    {0.2, 0.0},                 {0.2, 0.0},
    {0.2, 0.0},                 {0.171440811, 0.028559189},
    {0.186672886, 0.013327114}, {0.171440811, 0.028559189}};

inline const std::vector<GoldenIfn> kGoldenEnvironmentIfn = {
    {0.2, 0.0}, {0.2, 0.0}, {0.2, 0.0}, {0.2, 0.0}, {0.2, 0.0},
    {0.2, 0.0}, {0.2, 0.0}, {0.2, 0.0}, {6.6644e-05, 0.199933356}, {0.2, 0.0}};

inline const std::vector<GoldenIfn> kGoldenDefenseIfn = {
    {0.2, 0.0},                 {0.2, 0.0},
    {0.000664452, 0.199335548}, {0.000399202, 0.199600798},
    {0.0001998, 0.1998002},     {0.2, 0.0},
    {0.2, 0.0},                 {0.000664452, 0.199335548},
    {0.0001998, 0.1998002},     {0.000285307, 0.199714693}};

// Attack and visibility columns of the combined decision table.
inline const GoldenIfn kGoldenAttackIfn = {0.2, 0.0};
inline const GoldenIfn kGoldenVisibilityIfn = {0.0, 0.0};

// Weighted similarities and closeness of the combined table.
inline const std::vector<double> kGoldenSPlus = {
    0.9900131572106283, 0.9930194457658972, 0.9713249517102417, 0.9694274902547305,
    0.9712630240082707, 0.9960298049584839, 0.9960124538670997, 0.9685356920167532,
    0.9447732710194203, 0.9685296037271114};

inline const std::vector<double> kGoldenSMinus = {
    0.9451975215527424, 0.9421912329974735, 0.963885727053129, 0.9657831885086402,
    0.9639476547551001, 0.9391808738048868, 0.9391982248962711, 0.9666749867466174,
    0.9904374077439504, 0.9666810750362593};

inline const std::vector<double> kGoldenCloseness = {
    0.5115790069137391, 0.5131324752716081, 0.5019220710020746, 0.5009415775207532,
    0.5018900705058751, 0.5146880470889931, 0.5146790810929003, 0.5004807500523212,
    0.4882017660336315, 0.500477603991942};

inline const std::string kGoldenRanking = "T6>T7>T2>T1>T3>T5>T4>T8>T10>T9";

inline std::string data_dir() {
#ifdef IFWAR_DATA_DIR
    return IFWAR_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace ifwar::testutil
