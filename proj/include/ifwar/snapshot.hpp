#pragma once

#include <array>
#include <string>
#include <vector>

#include "ifwar/conversion.hpp"
#include "ifwar/madm.hpp"
#include "ifwar/scenario.hpp"
#include "ifwar/threat.hpp"

namespace ifwar {

/// One opposing piece as captured by a situation snapshot.
struct SnapshotTarget {
    int number = 0;                      // 1-based target label
    std::pair<int, int> posting{0, 0};   // hex cell (col,row)
    double elevation = 0.0;
    std::string type = "Tank";
    double distance = 0.0;               // hexes to the evaluating piece
    int range = 0;
    double taking_fire = 0.0;            // recorded but feeds no indicator
    double control_distance = 0.0;       // hexes to the control point
    ArmorClass armor = ArmorClass::Unarmored;
    double nominal_speed = 150.0;
    double relative_speed = 350.0;
    std::array<int, 3> env_flags{0, 0, 0};  // h1, h2, r
    AttackParams attack;
};

struct Snapshot {
    int version = 1;
    std::string label;  // t1..t5
    std::vector<SnapshotTarget> targets;
};

Snapshot load_snapshot(const std::string& path);
Snapshot snapshot_from_json_text(const std::string& text);

/// Threat-pipeline configuration for snapshot assessment: the shared
/// ThreatConfig plus the snapshot-wide visibility geometry.
struct AssessParams {
    int version = 1;
    ThreatConfig threat;
    double red_elevation = 130.0;  // evaluating piece elevation
    double max_between = 150.0;    // highest terrain along every sight line
};

AssessParams load_assess_params(const std::string& path);
AssessParams assess_params_from_json_text(const std::string& text);

/// Raw and converted values for all six indicators, one row per target.
struct IndicatorTables {
    std::vector<double> distance_real, speed_real, attack_real;
    std::vector<double> environment_real, defense_real;
    std::vector<IntervalNumber> visibility_interval;
    std::vector<Ifn> distance_ifn, speed_ifn, attack_ifn, visibility_ifn;
    std::vector<Ifn> environment_ifn, defense_ifn;
    DecisionMatrix matrix;  // targets x 6 attributes
};

IndicatorTables build_indicator_tables(const Snapshot& snapshot,
                                       const AssessParams& params);

}  // namespace ifwar
