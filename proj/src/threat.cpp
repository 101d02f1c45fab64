#include "ifwar/threat.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ifwar {

ArmorClass armor_from_string(const std::string& s) {
    if (s == "composite" || s == "Composite armor" || s == "composite armor") {
        return ArmorClass::Composite;
    }
    if (s == "heavy" || s == "Heavy armor" || s == "heavy armor") return ArmorClass::Heavy;
    if (s == "medium" || s == "Medium armor" || s == "medium armor") return ArmorClass::Medium;
    if (s == "light" || s == "Light armor" || s == "light armor") return ArmorClass::Light;
    if (s == "unarmored" || s == "Unarmored") return ArmorClass::Unarmored;
    throw std::invalid_argument("unknown armor class: " + s);
}

std::string armor_to_string(ArmorClass a) {
    switch (a) {
        case ArmorClass::Composite: return "composite";
        case ArmorClass::Heavy: return "heavy";
        case ArmorClass::Medium: return "medium";
        case ArmorClass::Light: return "light";
        case ArmorClass::Unarmored: return "unarmored";
    }
    throw std::logic_error("bad ArmorClass");
}

SpeedClass speed_class_from_string(const std::string& s) {
    if (s == "composite_armored" || s == "composite") return SpeedClass::CompositeArmored;
    if (s == "heavy") return SpeedClass::Heavy;
    if (s == "light") return SpeedClass::Light;
    throw std::invalid_argument("unknown speed class: " + s);
}

std::string speed_class_to_string(SpeedClass c) {
    switch (c) {
        case SpeedClass::CompositeArmored: return "composite_armored";
        case SpeedClass::Heavy: return "heavy";
        case SpeedClass::Light: return "light";
    }
    throw std::logic_error("bad SpeedClass");
}

double distance_threat(const DistanceParams& p) {
    if (!(p.d_max > 0.0)) throw std::invalid_argument("distance_threat: d_max must be > 0");
    if (!(p.tau_common > 0.0) || !(p.tau_at > 0.0)) {
        throw std::invalid_argument("distance_threat: stamina costs must be > 0");
    }
    const double control = (p.tau_common / p.tau_at) * (1.0 - p.dist_to_control / p.d_max);
    const double proximity = p.d_max - p.d_ij;
    return 0.5 * (control + proximity);
}

double speed_threat(const SpeedParams& p, SpeedMode mode) {
    if (mode == SpeedMode::Formula) {
        if (!(p.v_class_max > 0.0)) {
            throw std::invalid_argument("speed_threat: v_class_max must be > 0");
        }
        return p.beta_class * p.v_rel / p.v_class_max;
    }
    if (!(p.v_nominal > 0.0)) {
        throw std::invalid_argument("speed_threat: v_nominal must be > 0");
    }
    return p.v_rel / p.v_nominal;
}

double attack_threat(const AttackParams& p) {
    const double a1 = std::accumulate(p.weapon_capabilities.begin(),
                                      p.weapon_capabilities.end(), 0.0);
    const double a2 = std::accumulate(p.detection_capabilities.begin(),
                                      p.detection_capabilities.end(), 0.0);
    if (!(p.maneuverability > 0.0)) {
        throw std::invalid_argument("attack_threat: maneuverability must be > 0");
    }
    if (!(a1 + 1.0 > 0.0) || !(a2 > 0.0)) {
        throw std::invalid_argument("attack_threat: nonpositive log argument");
    }
    return (std::log(p.maneuverability) + std::log(a1 + 1.0) + std::log(a2)) *
           p.eps1 * p.eps2 * p.eps3 * p.eps4;
}

IntervalNumber visibility_threat(const VisibilityParams& p) {
    if (!(p.t1 < p.t2)) throw std::invalid_argument("visibility_threat: need t1 < t2");
    const double dj = p.h_max_between - p.h_j;
    const double di = p.h_max_between - p.h_i;
    if (dj <= 0.0 && di <= 0.0) return {p.t2, 1.0};  // both see over the ridge
    if (dj >= 0.0 && di >= 0.0) return {0.0, 0.0};   // both blocked
    if (dj >= 0.0 && di <= 0.0) return {0.0, p.t1};  // observer high, target low
    if (dj <= 0.0 && di >= 0.0) return {1.0, 1.0};   // target high, observer low
    return {p.t1, p.t2};                             // indirect fire
}

double environment_threat(const EnvironmentParams& p) {
    return p.w1 * p.h1 + p.w2 * p.h2 + p.w3 * p.r;
}

double defense_value(ArmorClass a) {
    switch (a) {
        case ArmorClass::Composite: return 1.0;
        case ArmorClass::Heavy: return 0.7;
        case ArmorClass::Medium: return 0.5;
        case ArmorClass::Light: return 0.3;
        case ArmorClass::Unarmored: return 0.0;
    }
    throw std::logic_error("bad ArmorClass");
}

}  // namespace ifwar
