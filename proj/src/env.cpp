#include "ifwar/env.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include <json.hpp>

namespace ifwar {

using nlohmann::json;

// ---------------------------------------------------------------------------
// HexMap
// ---------------------------------------------------------------------------

HexMap::HexMap(const MapSpec& spec, const MoveCosts& costs) {
    width_ = spec.width;
    height_ = spec.height;
    const std::size_t cells = static_cast<std::size_t>(width_) * height_;
    elevation_.assign(cells, spec.elevation_fill);
    if (!spec.elevation.empty()) elevation_ = spec.elevation;
    for (const auto& [c, r, h] : spec.elevation_overrides) {
        if (c < 0 || c >= width_ || r < 0 || r >= height_) {
            throw std::invalid_argument("elevation override off the map");
        }
        elevation_[static_cast<std::size_t>(r) * width_ + c] = h;
    }
    road1_.assign(cells, 0);
    road2_.assign(cells, 0);
    urban_.assign(cells, 0);
    special_.assign(cells, 0);
    auto mark = [&](const std::vector<std::pair<int, int>>& cells_in,
                    std::vector<std::uint8_t>& out, const char* what) {
        for (const auto& [c, r] : cells_in) {
            if (c < 0 || c >= width_ || r < 0 || r >= height_) {
                throw std::invalid_argument(std::string(what) + " cell off the map");
            }
            out[static_cast<std::size_t>(r) * width_ + c] = 1;
        }
    };
    mark(spec.first_class_road, road1_, "first_class_road");
    mark(spec.second_class_road, road2_, "second_class_road");
    mark(spec.urban_residential, urban_, "urban_residential");
    mark(spec.special_terrain, special_, "special_terrain");

    control_point_ = hex_from_offset(spec.control_point.first, spec.control_point.second);
    if (!on_map(control_point_)) {
        throw std::invalid_argument("control point off the map");
    }
    // Corners are the mutually farthest offset cells of a hex rectangle.
    const std::array<Hex, 4> corners = {
        hex_from_offset(0, 0), hex_from_offset(width_ - 1, 0),
        hex_from_offset(0, height_ - 1), hex_from_offset(width_ - 1, height_ - 1)};
    max_distance_ = 0;
    for (const Hex a : corners) {
        for (const Hex b : corners) {
            max_distance_ = std::max(max_distance_, hex_distance(a, b));
        }
    }
    costs_ = costs;
}

std::size_t HexMap::index(Hex h) const {
    const auto [c, r] = hex_to_offset(h);
    return static_cast<std::size_t>(r) * width_ + c;
}

bool HexMap::on_map(Hex h) const {
    const auto [c, r] = hex_to_offset(h);
    return c >= 0 && c < width_ && r >= 0 && r < height_;
}

bool HexMap::flag(const std::vector<std::uint8_t>& v, Hex h) const {
    return on_map(h) && v[index(h)] != 0;
}

double HexMap::elevation(Hex h) const {
    if (!on_map(h)) throw std::out_of_range("elevation: hex off the map");
    return elevation_[index(h)];
}

double HexMap::enter_cost(Hex h) const {
    if (!on_map(h)) throw std::out_of_range("enter_cost: hex off the map");
    if (first_class_road(h)) return costs_.first_class_road;
    if (second_class_road(h)) return costs_.second_class_road;
    if (special_terrain(h)) return costs_.special;
    return costs_.ordinary;
}

bool line_of_sight(const HexMap& map, Hex a, Hex b) {
    const double ha = map.elevation(a);
    const double hb = map.elevation(b);
    for (const Hex h : hex_line_between(a, b)) {
        if (!map.on_map(h)) continue;
        const double hm = map.elevation(h);
        if (hm > ha && hm > hb) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// EventLog serialization
// ---------------------------------------------------------------------------

std::string EventLog::to_json_line() const {
    json j;
    j["turn"] = turn;
    j["red_roster"] = red_roster_size;
    j["alive_red"] = alive_red_start;
    j["alive_blue"] = alive_blue_start;
    auto& jm = j["moves"] = json::array();
    for (const auto& m : moves) {
        jm.push_back({m.piece, m.from.q, m.from.r, m.to.q, m.to.r,
                      m.moved, m.boundary_bump, m.blocked, m.dist_delta});
    }
    auto& js = j["shots"] = json::array();
    for (const auto& s : shots) {
        js.push_back({s.shooter, s.target, s.hit, s.miss_reason});
    }
    auto& jk = j["kills"] = json::array();
    for (const auto& k : kills) jk.push_back({k.piece, k.by});
    if (victory) {
        j["victory"] = {side_to_string(victory->winner),
                        victory->cause == VictoryCause::ControlPoint ? "control"
                        : victory->cause == VictoryCause::Annihilation ? "annihilation"
                                                                       : "turn_limit",
                        victory->final_kill_by};
    } else {
        j["victory"] = nullptr;
    }
    return j.dump();
}

EventLog EventLog::from_json_line(const std::string& line) {
    const json j = json::parse(line);
    EventLog log;
    log.turn = j.at("turn").get<long>();
    log.red_roster_size = j.at("red_roster").get<int>();
    log.alive_red_start = j.at("alive_red").get<int>();
    log.alive_blue_start = j.at("alive_blue").get<int>();
    for (const auto& m : j.at("moves")) {
        MoveEvent e;
        e.piece = m.at(0).get<int>();
        e.from = {m.at(1).get<int>(), m.at(2).get<int>()};
        e.to = {m.at(3).get<int>(), m.at(4).get<int>()};
        e.moved = m.at(5).get<bool>();
        e.boundary_bump = m.at(6).get<bool>();
        e.blocked = m.at(7).get<bool>();
        e.dist_delta = m.at(8).get<int>();
        log.moves.push_back(e);
    }
    for (const auto& s : j.at("shots")) {
        ShotEvent e;
        e.shooter = s.at(0).get<int>();
        e.target = s.at(1).get<int>();
        e.hit = s.at(2).get<bool>();
        e.miss_reason = s.at(3).get<std::string>();
        log.shots.push_back(e);
    }
    for (const auto& k : j.at("kills")) {
        log.kills.push_back({k.at(0).get<int>(), k.at(1).get<int>()});
    }
    if (!j.at("victory").is_null()) {
        const auto& v = j.at("victory");
        VictoryEvent e;
        e.winner = side_from_string(v.at(0).get<std::string>());
        const auto cause = v.at(1).get<std::string>();
        e.cause = cause == "control" ? VictoryCause::ControlPoint
                  : cause == "annihilation" ? VictoryCause::Annihilation
                                            : VictoryCause::TurnLimit;
        e.final_kill_by = v.at(2).get<int>();
        log.victory = e;
    }
    return log;
}

bool operator==(const EventLog& a, const EventLog& b) {
    auto move_eq = [](const MoveEvent& x, const MoveEvent& y) {
        return x.piece == y.piece && x.from == y.from && x.to == y.to &&
               x.moved == y.moved && x.boundary_bump == y.boundary_bump &&
               x.blocked == y.blocked && x.dist_delta == y.dist_delta;
    };
    auto shot_eq = [](const ShotEvent& x, const ShotEvent& y) {
        return x.shooter == y.shooter && x.target == y.target && x.hit == y.hit &&
               x.miss_reason == y.miss_reason;
    };
    if (a.turn != b.turn || a.red_roster_size != b.red_roster_size ||
        a.alive_red_start != b.alive_red_start ||
        a.alive_blue_start != b.alive_blue_start ||
        a.moves.size() != b.moves.size() || a.shots.size() != b.shots.size() ||
        a.kills.size() != b.kills.size() || a.victory.has_value() != b.victory.has_value()) {
        return false;
    }
    for (std::size_t i = 0; i < a.moves.size(); ++i) {
        if (!move_eq(a.moves[i], b.moves[i])) return false;
    }
    for (std::size_t i = 0; i < a.shots.size(); ++i) {
        if (!shot_eq(a.shots[i], b.shots[i])) return false;
    }
    for (std::size_t i = 0; i < a.kills.size(); ++i) {
        if (a.kills[i].piece != b.kills[i].piece || a.kills[i].by != b.kills[i].by) return false;
    }
    if (a.victory) {
        if (a.victory->winner != b.victory->winner || a.victory->cause != b.victory->cause ||
            a.victory->final_kill_by != b.victory->final_kill_by) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Env
// ---------------------------------------------------------------------------

Env::Env(Scenario scenario)
    : scenario_(std::move(scenario)), map_(scenario_.map, scenario_.costs) {
    build_cost_field();
}

void Env::build_cost_field() {
    const std::size_t cells = static_cast<std::size_t>(map_.width()) * map_.height();
    cost_to_control_.assign(cells, std::numeric_limits<double>::infinity());
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto cell_index = [&](Hex h) {
        const auto [c, r] = hex_to_offset(h);
        return static_cast<std::size_t>(r) * map_.width() + c;
    };
    const std::size_t start = cell_index(map_.control_point());
    cost_to_control_[start] = 0.0;
    heap.push({0.0, start});
    while (!heap.empty()) {
        const auto [d, idx] = heap.top();
        heap.pop();
        if (d > cost_to_control_[idx]) continue;
        const int r = static_cast<int>(idx) / map_.width();
        const int c = static_cast<int>(idx) % map_.width();
        const Hex here = hex_from_offset(c, r);
        for (const Hex nb : hex_neighbors(here)) {
            if (!map_.on_map(nb)) continue;
            // Walking nb -> here enters `here`, so the edge back out of the
            // control field charges enter_cost(here).
            const double nd = d + map_.enter_cost(here);
            const std::size_t nidx = cell_index(nb);
            if (nd < cost_to_control_[nidx]) {
                cost_to_control_[nidx] = nd;
                heap.push({nd, nidx});
            }
        }
    }
}

double Env::cost_to_control(Hex h) const {
    const auto [c, r] = hex_to_offset(h);
    return cost_to_control_[static_cast<std::size_t>(r) * map_.width() + c];
}

int Env::roster_size(Side side) const {
    return static_cast<int>(scenario_.side(side).pieces.size());
}

std::vector<int> Env::alive_indices(Side side) const {
    std::vector<int> out;
    for (const auto& p : state_.pieces) {
        if (p.side == side && p.alive) out.push_back(p.index);
    }
    return out;
}

const EnvState& Env::reset(std::uint64_t seed) {
    rng_.seed(seed);
    state_ = EnvState{};
    auto deploy_side = [&](Side side) {
        const SideSpec& spec = scenario_.side(side);
        // Seeded Fisher-Yates over the deployment zone.
        std::vector<std::pair<int, int>> zone = spec.deployment;
        for (std::size_t i = zone.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng_() % i);
            std::swap(zone[i - 1], zone[j]);
        }
        std::size_t next_zone = 0;
        for (const PieceSpec& ps : spec.pieces) {
            PieceState p;
            p.index = static_cast<int>(state_.pieces.size());
            p.id = ps.id;
            p.side = side;
            std::pair<int, int> cell;
            if (ps.position) {
                cell = *ps.position;
            } else {
                if (next_zone >= zone.size()) {
                    throw std::invalid_argument("deployment zone smaller than roster");
                }
                cell = zone[next_zone++];
            }
            p.pos = hex_from_offset(cell.first, cell.second);
            if (!map_.on_map(p.pos)) throw std::invalid_argument("piece deployed off the map");
            for (const auto& other : state_.pieces) {
                if (other.alive && other.pos == p.pos) {
                    throw std::invalid_argument("two pieces deployed on one hex");
                }
            }
            p.speed_class = ps.speed_class;
            p.nominal_speed = ps.nominal_speed;
            p.armor = ps.armor;
            p.range = ps.range;
            p.stamina = ps.stamina;
            p.initial_stamina = ps.stamina;
            p.attack = ps.attack;
            p.alive = true;
            p.concealed = map_.urban_residential(p.pos);
            state_.pieces.push_back(p);
        }
    };
    deploy_side(Side::Red);
    deploy_side(Side::Blue);

    EventLog log;
    log.turn = 0;
    log.red_roster_size = roster_size(Side::Red);
    log.alive_red_start = static_cast<int>(alive_indices(Side::Red).size());
    log.alive_blue_start = static_cast<int>(alive_indices(Side::Blue).size());
    check_victory(log, {});
    return state_;
}

bool Env::occupied(Hex h, const std::vector<Hex>& positions,
                   const std::vector<bool>& alive) const {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (alive[i] && positions[i] == h) return true;
    }
    return false;
}

EventLog Env::step(const std::vector<Action>& red_actions,
                   const std::vector<Action>& blue_actions) {
    EventLog log;
    log.turn = state_.turn;
    log.red_roster_size = roster_size(Side::Red);
    if (state_.done) return log;  // absorbing

    const std::vector<int> red_alive = alive_indices(Side::Red);
    const std::vector<int> blue_alive = alive_indices(Side::Blue);
    log.alive_red_start = static_cast<int>(red_alive.size());
    log.alive_blue_start = static_cast<int>(blue_alive.size());
    if (red_actions.size() != red_alive.size() || blue_actions.size() != blue_alive.size()) {
        throw std::invalid_argument("step: need exactly one action per alive piece");
    }

    std::vector<Action> by_piece(state_.pieces.size(), Action::hold());
    for (std::size_t i = 0; i < red_alive.size(); ++i) by_piece[red_alive[i]] = red_actions[i];
    for (std::size_t i = 0; i < blue_alive.size(); ++i) by_piece[blue_alive[i]] = blue_actions[i];

    // Shoot targets must reference enemy pieces alive at turn start.
    for (const auto& p : state_.pieces) {
        if (!p.alive) continue;
        const Action& a = by_piece[p.index];
        if (a.kind != Action::Kind::Shoot) continue;
        if (a.target < 0 || a.target >= static_cast<int>(state_.pieces.size())) {
            throw std::invalid_argument("step: shot references unknown piece");
        }
        const PieceState& t = state_.pieces[a.target];
        if (!t.alive) throw std::invalid_argument("step: shot references dead piece");
        if (t.side == p.side) throw std::invalid_argument("step: shot references own side");
    }

    auto ordered_pieces = [&]() {
        std::vector<int> order;
        const Side first = priority_;
        for (const auto& p : state_.pieces) {
            if (p.alive && p.side == first) order.push_back(p.index);
        }
        for (const auto& p : state_.pieces) {
            if (p.alive && p.side != first) order.push_back(p.index);
        }
        return order;
    }();

    // --- movement phase ---
    std::vector<Hex> pos(state_.pieces.size());
    std::vector<bool> alive(state_.pieces.size());
    for (const auto& p : state_.pieces) {
        pos[p.index] = p.pos;
        alive[p.index] = p.alive;
    }
    for (const int idx : ordered_pieces) {
        const Action& a = by_piece[idx];
        if (a.kind != Action::Kind::Move) continue;
        PieceState& p = state_.pieces[idx];
        MoveEvent ev;
        ev.piece = idx;
        ev.from = p.pos;
        ev.to = p.pos;
        const Hex dest = hex_neighbor(p.pos, a.direction);
        if (!map_.on_map(dest)) {
            ev.boundary_bump = true;
        } else if (occupied(dest, pos, alive)) {
            ev.blocked = true;
        } else if (p.stamina < map_.enter_cost(dest)) {
            ev.blocked = true;
        } else {
            p.stamina -= map_.enter_cost(dest);
            ev.moved = true;
            ev.to = dest;
            ev.dist_delta = hex_distance(dest, map_.control_point()) -
                            hex_distance(p.pos, map_.control_point());
            p.pos = dest;
            p.concealed = map_.urban_residential(dest);
            pos[idx] = dest;
        }
        log.moves.push_back(ev);
    }

    // --- shooting phase (simultaneous; every shot sees post-move positions
    // and pre-death targets, so mutual fire lands on both sides) ---
    std::vector<int> killed_by(state_.pieces.size(), -1);
    std::vector<bool> dying(state_.pieces.size(), false);
    for (const int idx : ordered_pieces) {
        const Action& a = by_piece[idx];
        if (a.kind != Action::Kind::Shoot) continue;
        const PieceState& shooter = state_.pieces[idx];
        const PieceState& target = state_.pieces[a.target];
        ShotEvent ev;
        ev.shooter = idx;
        ev.target = a.target;
        if (hex_distance(shooter.pos, target.pos) > shooter.range) {
            ev.miss_reason = "out_of_range";
        } else if (!line_of_sight(map_, shooter.pos, target.pos)) {
            ev.miss_reason = "no_los";
        } else if (target.concealed) {
            ev.miss_reason = "concealed";
        } else if (scenario_.hit_model.stochastic &&
                   std::uniform_real_distribution<double>(0.0, 1.0)(rng_) >=
                       scenario_.hit_model.hit_probability) {
            ev.miss_reason = "missed";
        } else {
            ev.hit = true;
            if (!dying[a.target]) {
                dying[a.target] = true;
                killed_by[a.target] = idx;
            }
        }
        log.shots.push_back(ev);
    }
    for (const int idx : ordered_pieces) {
        if (dying[idx]) {
            state_.pieces[idx].alive = false;
            log.kills.push_back({idx, killed_by[idx]});
        }
    }

    state_.turn += 1;
    log.turn = state_.turn - 1;
    check_victory(log, log.kills);
    return log;
}

void Env::check_victory(EventLog& log, const std::vector<KillEvent>& kills) {
    if (state_.done) return;
    const std::vector<int> red = alive_indices(Side::Red);
    const std::vector<int> blue = alive_indices(Side::Blue);

    auto finish = [&](Side winner, VictoryCause cause, int final_kill_by) {
        state_.done = true;
        state_.winner = winner;
        log.victory = VictoryEvent{winner, cause, final_kill_by};
    };

    if (red.empty() || blue.empty()) {
        Side winner = priority_;
        if (red.empty() && !blue.empty()) winner = Side::Blue;
        if (blue.empty() && !red.empty()) winner = Side::Red;
        const Side loser = opposite(winner);
        int final_by = -1;
        for (const auto& k : kills) {
            if (state_.pieces[k.piece].side == loser) final_by = k.by;
        }
        finish(winner, VictoryCause::Annihilation, final_by);
        return;
    }
    for (const auto& p : state_.pieces) {
        if (p.alive && p.pos == map_.control_point()) {
            finish(p.side, VictoryCause::ControlPoint, -1);
            return;
        }
    }
    if (state_.turn >= scenario_.turn_limit) {
        auto closest = [&](const std::vector<int>& side_pieces) {
            int best = std::numeric_limits<int>::max();
            for (const int i : side_pieces) {
                best = std::min(best, hex_distance(state_.pieces[i].pos, map_.control_point()));
            }
            return best;
        };
        // Ties at the turn limit go to Blue, so Red must strictly outrun
        // the opposition to claim a timeout win.
        const Side winner = closest(red) < closest(blue) ? Side::Red : Side::Blue;
        finish(winner, VictoryCause::TurnLimit, -1);
    }
}

int Env::observation_dim(const Scenario& scenario, Side side) {
    const int own = static_cast<int>(scenario.side(side).pieces.size());
    const int enemy = static_cast<int>(scenario.side(opposite(side)).pieces.size());
    return 6 * own + 7 * enemy + 1;
}

int Env::action_count(const Scenario& scenario, Side side) {
    return 7 + static_cast<int>(scenario.side(opposite(side)).pieces.size());
}

std::vector<double> Env::observe(Side side) const {
    const double w = std::max(map_.width(), map_.height());
    const Hex cp = map_.control_point();
    std::vector<double> out;
    out.reserve(observation_dim(scenario_, side));

    std::vector<const PieceState*> own, enemy;
    for (const auto& p : state_.pieces) {
        (p.side == side ? own : enemy).push_back(&p);
    }
    for (const PieceState* p : own) {
        if (!p->alive) {
            out.insert(out.end(), {0, 0, 0, 0, 0, 0});
            continue;
        }
        out.push_back(1.0);
        out.push_back((p->pos.q - cp.q) / w);
        out.push_back((p->pos.r - cp.r) / w);
        out.push_back(p->initial_stamina > 0 ? p->stamina / p->initial_stamina : 0.0);
        out.push_back(p->concealed ? 1.0 : 0.0);
        out.push_back(defense_value(p->armor));
    }
    for (const PieceState* e : enemy) {
        if (!e->alive) {
            out.insert(out.end(), {0, 0, 0, 0, 0, 0, 0});
            continue;
        }
        out.push_back(1.0);
        out.push_back((e->pos.q - cp.q) / w);
        out.push_back((e->pos.r - cp.r) / w);
        out.push_back(defense_value(e->armor));
        int nearest = map_.max_distance();
        bool visible = false;
        for (const PieceState* p : own) {
            if (!p->alive) continue;
            nearest = std::min(nearest, hex_distance(p->pos, e->pos));
            if (!e->concealed && line_of_sight(map_, p->pos, e->pos)) visible = true;
        }
        out.push_back(nearest / w);
        out.push_back(visible ? 1.0 : 0.0);
        out.push_back(e->concealed ? 1.0 : 0.0);
    }
    out.push_back(static_cast<double>(state_.turn) / scenario_.turn_limit);
    return out;
}

std::vector<std::uint8_t> Env::legal_actions(int piece_index) const {
    const PieceState& p = state_.pieces.at(piece_index);
    const int n = action_count(scenario_, p.side);
    std::vector<std::uint8_t> mask(n, 0);
    mask[6] = 1;  // hold
    if (!p.alive) return mask;

    std::vector<Hex> pos(state_.pieces.size());
    std::vector<bool> alive(state_.pieces.size());
    for (const auto& q : state_.pieces) {
        pos[q.index] = q.pos;
        alive[q.index] = q.alive;
    }
    for (int d = 0; d < 6; ++d) {
        const Hex dest = hex_neighbor(p.pos, d);
        if (map_.on_map(dest) && !occupied(dest, pos, alive) &&
            p.stamina >= map_.enter_cost(dest)) {
            mask[d] = 1;
        }
    }
    const Side enemy_side = opposite(p.side);
    int slot = 0;
    for (const auto& e : state_.pieces) {
        if (e.side != enemy_side) continue;
        if (e.alive && !e.concealed && hex_distance(p.pos, e.pos) <= p.range &&
            line_of_sight(map_, p.pos, e.pos)) {
            mask[7 + slot] = 1;
        }
        ++slot;
    }
    return mask;
}

Action Env::decode_action(int piece_index, int action_id) const {
    const PieceState& p = state_.pieces.at(piece_index);
    if (action_id >= 0 && action_id < 6) return Action::move(action_id);
    if (action_id == 6) return Action::hold();
    const int slot = action_id - 7;
    const Side enemy_side = opposite(p.side);
    int seen = 0;
    for (const auto& e : state_.pieces) {
        if (e.side != enemy_side) continue;
        if (seen == slot) return Action::shoot(e.index);
        ++seen;
    }
    throw std::invalid_argument("decode_action: action id out of range");
}

std::vector<Action> Env::rule_policy(Side side) const {
    std::vector<Action> actions;
    std::vector<Hex> pos(state_.pieces.size());
    std::vector<bool> alive(state_.pieces.size());
    for (const auto& q : state_.pieces) {
        pos[q.index] = q.pos;
        alive[q.index] = q.alive;
    }
    std::vector<Hex> reserved;  // cells claimed by earlier own pieces

    for (const auto& p : state_.pieces) {
        if (!p.alive || p.side != side) continue;
        // Priority 1: shoot the nearest targetable enemy.
        int best_target = -1;
        int best_dist = std::numeric_limits<int>::max();
        for (const auto& e : state_.pieces) {
            if (!e.alive || e.side == side || e.concealed) continue;
            const int d = hex_distance(p.pos, e.pos);
            if (d <= p.range && d < best_dist && line_of_sight(map_, p.pos, e.pos)) {
                best_dist = d;
                best_target = e.index;
            }
        }
        if (best_target >= 0) {
            actions.push_back(Action::shoot(best_target));
            continue;
        }
        // Priority 2: step down the stamina-cost field toward the control
        // point.
        int best_dir = -1;
        double best_cost = cost_to_control(p.pos);
        for (int d = 0; d < 6; ++d) {
            const Hex dest = hex_neighbor(p.pos, d);
            if (!map_.on_map(dest)) continue;
            if (occupied(dest, pos, alive)) continue;
            if (std::find(reserved.begin(), reserved.end(), dest) != reserved.end()) continue;
            if (p.stamina < map_.enter_cost(dest)) continue;
            const double c = cost_to_control(dest);
            if (c < best_cost) {
                best_cost = c;
                best_dir = d;
            }
        }
        if (best_dir >= 0) {
            reserved.push_back(hex_neighbor(p.pos, best_dir));
            actions.push_back(Action::move(best_dir));
        } else {
            actions.push_back(Action::hold());
        }
    }
    return actions;
}

}  // namespace ifwar
