#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ifwar/conversion.hpp"
#include "ifwar/hex.hpp"
#include "ifwar/madm.hpp"
#include "ifwar/threat.hpp"

namespace ifwar {

enum class Side { Red, Blue };
Side opposite(Side s);
std::string side_to_string(Side s);
Side side_from_string(const std::string& s);

/// Per-hex stamina costs for entering a hex of the given kind.
struct MoveCosts {
    double ordinary = 3.0;
    double special = 6.0;
    double first_class_road = 2.0;
    double second_class_road = 2.5;
};

struct HitModel {
    bool stochastic = false;   // default: deterministic hits
    double hit_probability = 0.8;
};

/// Threat-pipeline configuration shared by snapshot assessment and the
/// in-game threat refresh.
struct ThreatConfig {
    ConversionParams conversion;            // beta / epsilon_guard
    double tau_common = 3.0;
    double tau_special = 6.0;
    std::optional<double> d_max;            // absent: derived from the map
    double t1 = 0.0;
    double t2 = 0.2;
    std::vector<double> env_weights = {3.0, 2.0, 1.0};
    SpeedMode speed_mode = SpeedMode::Table;
    double beta_composite = 1.0, beta_heavy = 1.0, beta_light = 1.0;
    // Per-attribute conversion polarity, keyed to match the worked tables.
    Polarity distance_polarity = Polarity::Cost;
    Polarity speed_polarity = Polarity::Cost;
    Polarity attack_polarity = Polarity::Benefit;
    Polarity environment_polarity = Polarity::Cost;
    Polarity defense_polarity = Polarity::Cost;
    EntropyReading entropy_reading = EntropyReading::AttributeCount;
    int refresh_every = 1;                  // threat cache cadence, in turns
};

struct PieceSpec {
    std::string id;
    SpeedClass speed_class = SpeedClass::Heavy;
    double nominal_speed = 150.0;
    ArmorClass armor = ArmorClass::Unarmored;
    int range = 4;
    double stamina = 150.0;
    AttackParams attack;
    std::optional<std::pair<int, int>> position;  // fixed (col,row); else zone
};

struct SideSpec {
    std::vector<PieceSpec> pieces;
    /// Candidate deployment cells (col,row). Pieces without a fixed position
    /// are assigned distinct zone cells by the reset seed.
    std::vector<std::pair<int, int>> deployment;
};

struct MapSpec {
    int width = 0;
    int height = 0;
    std::pair<int, int> control_point;          // (col,row)
    double elevation_fill = 100.0;
    std::vector<double> elevation;              // row-major, optional (dense)
    // (col,row,value) sparse overrides applied on top of the fill.
    std::vector<std::tuple<int, int, double>> elevation_overrides;
    std::vector<std::pair<int, int>> first_class_road;
    std::vector<std::pair<int, int>> second_class_road;
    std::vector<std::pair<int, int>> urban_residential;
    std::vector<std::pair<int, int>> special_terrain;
};

struct Scenario {
    int version = 1;
    std::string name;
    MapSpec map;
    MoveCosts costs;
    HitModel hit_model;
    ThreatConfig threat;
    SideSpec red;
    SideSpec blue;
    int turn_limit = 200;

    const SideSpec& side(Side s) const { return s == Side::Red ? red : blue; }
};

Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text);

}  // namespace ifwar
