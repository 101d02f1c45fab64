#include "ifwar/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "json_detail.hpp"

namespace ifwar {

using nlohmann::json;

Side opposite(Side s) { return s == Side::Red ? Side::Blue : Side::Red; }

std::string side_to_string(Side s) { return s == Side::Red ? "red" : "blue"; }

Side side_from_string(const std::string& s) {
    if (s == "red") return Side::Red;
    if (s == "blue") return Side::Blue;
    throw std::invalid_argument("unknown side: " + s);
}

namespace detail {

Polarity polarity_from_string(const std::string& s) {
    if (s == "benefit") return Polarity::Benefit;
    if (s == "cost") return Polarity::Cost;
    throw std::invalid_argument("unknown polarity: " + s);
}

ThreatConfig parse_threat_config(const json& j) {
    ThreatConfig t;
    t.conversion.beta = j.value("beta", 0.2);
    t.conversion.epsilon_guard = j.value("epsilon_guard", 0.001);
    t.tau_common = j.value("tau_common", 3.0);
    t.tau_special = j.value("tau_special", 6.0);
    if (j.contains("d_max") && !j["d_max"].is_null()) t.d_max = j["d_max"].get<double>();
    t.t1 = j.value("t1", 0.0);
    t.t2 = j.value("t2", 0.2);
    if (j.contains("env_weights")) t.env_weights = j["env_weights"].get<std::vector<double>>();
    if (t.env_weights.size() != 3) {
        throw std::invalid_argument("threat.env_weights must have 3 entries");
    }
    if (j.contains("speed_mode")) {
        const auto m = j["speed_mode"].get<std::string>();
        if (m == "table") {
            t.speed_mode = SpeedMode::Table;
        } else if (m == "formula") {
            t.speed_mode = SpeedMode::Formula;
        } else {
            throw std::invalid_argument("unknown speed_mode: " + m);
        }
    }
    if (j.contains("beta_class")) {
        auto b = j["beta_class"].get<std::vector<double>>();
        if (b.size() != 3) throw std::invalid_argument("threat.beta_class must have 3 entries");
        t.beta_composite = b[0];
        t.beta_heavy = b[1];
        t.beta_light = b[2];
    }
    if (j.contains("polarities")) {
        const auto& p = j["polarities"];
        if (p.contains("distance")) t.distance_polarity = polarity_from_string(p["distance"]);
        if (p.contains("speed")) t.speed_polarity = polarity_from_string(p["speed"]);
        if (p.contains("attack")) t.attack_polarity = polarity_from_string(p["attack"]);
        if (p.contains("environment")) t.environment_polarity = polarity_from_string(p["environment"]);
        if (p.contains("defense")) t.defense_polarity = polarity_from_string(p["defense"]);
    }
    if (j.contains("entropy_reading")) {
        const auto r = j["entropy_reading"].get<std::string>();
        if (r == "attribute_count") {
            t.entropy_reading = EntropyReading::AttributeCount;
        } else if (r == "target_count") {
            t.entropy_reading = EntropyReading::TargetCount;
        } else {
            throw std::invalid_argument("unknown entropy_reading: " + r);
        }
    }
    t.refresh_every = j.value("refresh_every", 1);
    if (t.refresh_every < 1) throw std::invalid_argument("threat.refresh_every must be >= 1");
    return t;
}

}  // namespace detail

namespace {

std::pair<int, int> parse_cell(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument(std::string("expected [col,row] for ") + what);
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<std::pair<int, int>> parse_cells(const json& j, const char* what) {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : j) out.push_back(parse_cell(c, what));
    return out;
}

AttackParams parse_attack(const json& j) {
    AttackParams p;
    p.maneuverability = j.value("maneuverability", 6.0);
    if (j.contains("weapon")) p.weapon_capabilities = j["weapon"].get<std::vector<double>>();
    if (j.contains("detection")) p.detection_capabilities = j["detection"].get<std::vector<double>>();
    if (j.contains("eps")) {
        auto eps = j["eps"].get<std::vector<double>>();
        if (eps.size() != 4) throw std::invalid_argument("attack.eps must have 4 entries");
        p.eps1 = eps[0];
        p.eps2 = eps[1];
        p.eps3 = eps[2];
        p.eps4 = eps[3];
    }
    return p;
}

PieceSpec parse_piece(const json& j) {
    PieceSpec p;
    p.id = j.at("id").get<std::string>();
    p.speed_class = speed_class_from_string(j.value("speed_class", std::string("heavy")));
    p.nominal_speed = j.value("nominal_speed", 150.0);
    p.armor = armor_from_string(j.value("armor", std::string("unarmored")));
    p.range = j.value("range", 4);
    p.stamina = j.value("stamina", 150.0);
    if (j.contains("attack")) p.attack = parse_attack(j["attack"]);
    if (j.contains("position")) p.position = parse_cell(j["position"], "piece position");
    return p;
}

SideSpec parse_side(const json& j) {
    SideSpec s;
    for (const auto& pj : j.at("pieces")) s.pieces.push_back(parse_piece(pj));
    if (j.contains("deployment")) s.deployment = parse_cells(j["deployment"], "deployment");
    return s;
}

MapSpec parse_map(const json& j) {
    MapSpec m;
    m.width = j.at("width").get<int>();
    m.height = j.at("height").get<int>();
    if (m.width < 1 || m.height < 1) throw std::invalid_argument("map dimensions must be >= 1");
    m.control_point = parse_cell(j.at("control_point"), "control_point");
    m.elevation_fill = j.value("elevation_fill", 100.0);
    if (j.contains("elevation")) {
        m.elevation = j["elevation"].get<std::vector<double>>();
        if (m.elevation.size() != static_cast<std::size_t>(m.width * m.height)) {
            throw std::invalid_argument("map.elevation size must be width*height");
        }
    }
    if (j.contains("elevation_overrides")) {
        for (const auto& o : j["elevation_overrides"]) {
            if (!o.is_array() || o.size() != 3) {
                throw std::invalid_argument("elevation_overrides entries are [col,row,elevation]");
            }
            m.elevation_overrides.emplace_back(o[0].get<int>(), o[1].get<int>(), o[2].get<double>());
        }
    }
    if (j.contains("first_class_road")) m.first_class_road = parse_cells(j["first_class_road"], "first_class_road");
    if (j.contains("second_class_road")) m.second_class_road = parse_cells(j["second_class_road"], "second_class_road");
    if (j.contains("urban_residential")) m.urban_residential = parse_cells(j["urban_residential"], "urban_residential");
    if (j.contains("special_terrain")) m.special_terrain = parse_cells(j["special_terrain"], "special_terrain");
    return m;
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario parse error: ") + e.what());
    }
    Scenario s;
    s.version = j.value("version", 1);
    if (s.version != 1) {
        throw std::invalid_argument("unsupported scenario version " + std::to_string(s.version));
    }
    s.name = j.value("name", std::string("scenario"));
    s.map = parse_map(j.at("map"));
    if (j.contains("costs")) {
        const auto& c = j["costs"];
        s.costs.ordinary = c.value("ordinary", 3.0);
        s.costs.special = c.value("special", 6.0);
        s.costs.first_class_road = c.value("first_class_road", 2.0);
        s.costs.second_class_road = c.value("second_class_road", 2.5);
    }
    if (j.contains("hit_model")) {
        const auto& h = j["hit_model"];
        s.hit_model.stochastic = h.value("stochastic", false);
        s.hit_model.hit_probability = h.value("hit_probability", 0.8);
    }
    if (j.contains("threat")) s.threat = detail::parse_threat_config(j["threat"]);
    s.red = parse_side(j.at("sides").at("red"));
    s.blue = parse_side(j.at("sides").at("blue"));
    s.turn_limit = j.value("turn_limit", 200);
    if (s.turn_limit < 1) throw std::invalid_argument("turn_limit must be >= 1");
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

}  // namespace ifwar
