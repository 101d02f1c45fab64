#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ifwar/hex.hpp"
#include "ifwar/scenario.hpp"

namespace ifwar {

/// Terrain grid with odd-r offset storage and a single control point.
class HexMap {
public:
    HexMap() = default;
    HexMap(const MapSpec& spec, const MoveCosts& costs);

    int width() const { return width_; }
    int height() const { return height_; }
    Hex control_point() const { return control_point_; }
    bool on_map(Hex h) const;
    double elevation(Hex h) const;
    bool first_class_road(Hex h) const { return flag(road1_, h); }
    bool second_class_road(Hex h) const { return flag(road2_, h); }
    bool urban_residential(Hex h) const { return flag(urban_, h); }
    bool special_terrain(Hex h) const { return flag(special_, h); }
    /// Stamina cost of entering this hex. Road discounts win over special
    /// terrain; first-class beats second-class.
    double enter_cost(Hex h) const;
    /// Largest hex distance between any two on-map cells.
    int max_distance() const { return max_distance_; }

private:
    std::size_t index(Hex h) const;
    bool flag(const std::vector<std::uint8_t>& v, Hex h) const;

    int width_ = 0;
    int height_ = 0;
    Hex control_point_{};
    int max_distance_ = 0;
    MoveCosts costs_;
    std::vector<double> elevation_;
    std::vector<std::uint8_t> road1_, road2_, urban_, special_;
};

/// True unless some hex strictly between a and b is higher than both
/// endpoint hexes.
bool line_of_sight(const HexMap& map, Hex a, Hex b);

struct PieceState {
    int index = 0;  // position in the global roster
    std::string id;
    Side side = Side::Red;
    Hex pos{};
    SpeedClass speed_class = SpeedClass::Heavy;
    double nominal_speed = 150.0;
    ArmorClass armor = ArmorClass::Unarmored;
    int range = 4;
    double stamina = 0.0;
    double initial_stamina = 0.0;
    AttackParams attack;
    bool alive = true;
    bool concealed = false;
};

struct Action {
    enum class Kind { Move, Shoot, Hold };
    Kind kind = Kind::Hold;
    int direction = 0;  // Move: 0..5
    int target = -1;    // Shoot: global roster index

    static Action move(int direction) { return {Kind::Move, direction, -1}; }
    static Action shoot(int target) { return {Kind::Shoot, 0, target}; }
    static Action hold() { return {}; }
    friend bool operator==(const Action&, const Action&) = default;
};

enum class VictoryCause { ControlPoint, Annihilation, TurnLimit };

struct MoveEvent {
    int piece = 0;
    Hex from{}, to{};
    bool moved = false;
    bool boundary_bump = false;  // tried to leave the map
    bool blocked = false;        // destination occupied or stamina exhausted
    int dist_delta = 0;          // hex distance to control point, after - before
};

struct ShotEvent {
    int shooter = 0;
    int target = 0;
    bool hit = false;
    // "" on hit; otherwise out_of_range | no_los | concealed | missed
    std::string miss_reason;
};

struct KillEvent {
    int piece = 0;
    int by = -1;
};

struct VictoryEvent {
    Side winner = Side::Red;
    VictoryCause cause = VictoryCause::ControlPoint;
    int final_kill_by = -1;  // killer piece when an annihilating kill ended it
};

struct EventLog {
    long turn = 0;
    int red_roster_size = 0;  // piece indices below this are red
    int alive_red_start = 0;
    int alive_blue_start = 0;
    std::vector<MoveEvent> moves;
    std::vector<ShotEvent> shots;
    std::vector<KillEvent> kills;
    std::optional<VictoryEvent> victory;

    std::string to_json_line() const;
    static EventLog from_json_line(const std::string& line);
    friend bool operator==(const EventLog&, const EventLog&);
};

struct EnvState {
    std::vector<PieceState> pieces;
    long turn = 0;
    bool done = false;
    std::optional<Side> winner;
};

/// Deterministic, seedable simultaneous-move wargame. One instance is
/// single-writer; independent instances can run in parallel.
class Env {
public:
    explicit Env(Scenario scenario);

    const Scenario& scenario() const { return scenario_; }
    const HexMap& map() const { return map_; }
    const EnvState& state() const { return state_; }
    /// Side whose pieces resolve first in movement conflicts.
    void set_priority(Side s) { priority_ = s; }
    Side priority() const { return priority_; }

    /// Deploys pieces (seeded draw from the deployment zones for pieces
    /// without fixed positions) and runs the initial victory check.
    const EnvState& reset(std::uint64_t seed);

    /// Simultaneous resolution: movement (priority side first, roster
    /// order), then shooting (all shots evaluated before deaths apply),
    /// then the victory check. Stepping a done state is a no-op.
    EventLog step(const std::vector<Action>& red_actions,
                  const std::vector<Action>& blue_actions);

    /// Flat observation for one side; layout and dimension documented in
    /// observation_dim().
    std::vector<double> observe(Side side) const;
    /// 6 features per own piece, 7 per enemy piece, plus the turn counter:
    ///   own:   alive, dq/W, dr/W, stamina frac, concealed, armor value
    ///   enemy: alive, dq/W, dr/W, armor value, dist to nearest own /W,
    ///          visible to any own piece, concealed
    /// where (dq,dr) is the axial offset from the control point and
    /// W = max(map width, map height).
    static int observation_dim(const Scenario& scenario, Side side);

    /// Action count per piece slot for one side: 6 moves + hold + one
    /// shoot slot per opposing roster entry.
    static int action_count(const Scenario& scenario, Side side);

    /// Legality mask over the side's action ids for one piece.
    std::vector<std::uint8_t> legal_actions(int piece_index) const;
    /// Decode a side-local action id for a piece into an Action.
    Action decode_action(int piece_index, int action_id) const;

    /// Deterministic scripted opponent: shoot the nearest visible in-range
    /// enemy, else move along the cheapest path toward the control point,
    /// else hold. Returns one action per alive piece, roster order.
    std::vector<Action> rule_policy(Side side) const;

    std::vector<int> alive_indices(Side side) const;
    const PieceState& piece(int index) const { return state_.pieces.at(index); }
    int roster_size(Side side) const;

private:
    void check_victory(EventLog& log, const std::vector<KillEvent>& kills);
    bool occupied(Hex h, const std::vector<Hex>& positions,
                  const std::vector<bool>& alive) const;

    Scenario scenario_;
    HexMap map_;
    EnvState state_;
    Side priority_ = Side::Red;
    std::mt19937_64 rng_;
    std::vector<double> cost_to_control_;  // Dijkstra field for rule_policy
    void build_cost_field();
    double cost_to_control(Hex h) const;
};

}  // namespace ifwar
