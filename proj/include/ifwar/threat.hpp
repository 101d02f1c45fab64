#pragma once

#include <string>
#include <vector>

#include "ifwar/interval.hpp"

namespace ifwar {

enum class SpeedClass { CompositeArmored, Heavy, Light };
enum class ArmorClass { Composite, Heavy, Medium, Light, Unarmored };
enum class SpeedMode { Formula, Table };

ArmorClass armor_from_string(const std::string& s);
std::string armor_to_string(ArmorClass a);
SpeedClass speed_class_from_string(const std::string& s);
std::string speed_class_to_string(SpeedClass c);

struct DistanceParams {
    double tau_common = 3.0;       // stamina per ordinary hex
    double tau_at = 6.0;           // stamina at the target's hex
    double dist_to_control = 0.0;  // target's hex distance to the control point
    double d_max = 50.0;           // maximum map distance
    double d_ij = 0.0;             // hex distance between the two pieces
};

struct SpeedParams {
    SpeedClass cls = SpeedClass::Heavy;
    double beta_class = 1.0;    // per-class speed threat factor, in [0,1]
    double v_rel = 0.0;         // relative speed between the two pieces
    double v_class_max = 1.0;   // class maximum speed (Formula mode)
    double v_nominal = 1.0;     // target's nominal speed (Table mode)
};

struct AttackParams {
    double maneuverability = 1.0;             // B
    std::vector<double> weapon_capabilities;  // A1 components
    std::vector<double> detection_capabilities;  // A2 components
    double eps1 = 1.0;  // forward firing
    double eps2 = 1.0;  // bomb carrying
    double eps3 = 1.0;  // electronic countermeasures
    double eps4 = 1.0;  // missile offense
};

struct VisibilityParams {
    double h_i = 0.0;            // evaluating (red) piece elevation
    double h_j = 0.0;            // target (blue) piece elevation
    double h_max_between = 0.0;  // max terrain elevation along the segment
    double t1 = 0.0;
    double t2 = 0.2;
};

struct EnvironmentParams {
    double w1 = 3.0, w2 = 2.0, w3 = 1.0;  // weights
    int h1 = 0;  // first-class road within two hexes
    int h2 = 0;  // second-class road within two hexes
    int r = 0;   // urban residential area within two hexes
};

/// Comprehensive distance threat: the mean of the control-point term
/// (tau_common/tau_at)*(1 - D(J,O)/D_max) and the proximity term
/// D_max - D_ij. Larger when the target is near us and near the objective.
double distance_threat(const DistanceParams& p);

/// Formula mode: beta_class * v_rel / v_class_max (the printed equation).
/// Table mode: v_rel / v_nominal (the quantity the worked tables use).
double speed_threat(const SpeedParams& p, SpeedMode mode);

/// C = [ln B + ln(sum A1 + 1) + ln(sum A2)] * eps1*eps2*eps3*eps4.
double attack_threat(const AttackParams& p);

/// Five-case interval score. Cases are tried in the printed order with
/// first match winning, which resolves the non-strict boundary overlaps:
///   1. both endpoints at/above the ridge        -> [t2, 1]
///   2. both below                               -> [0, 0]
///   3. observer above, target below             -> [0, t1]
///   4. target above, observer below             -> [1, 1]
///   5. otherwise (indirect fire)                -> [t1, t2]
IntervalNumber visibility_threat(const VisibilityParams& p);

/// w1*h1 + w2*h2 + w3*r.
double environment_threat(const EnvironmentParams& p);

/// Quantified armor protection: Composite 1, Heavy 0.7, Medium 0.5,
/// Light 0.3, Unarmored 0.
double defense_value(ArmorClass a);

}  // namespace ifwar
