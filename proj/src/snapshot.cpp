#include "ifwar/snapshot.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "json_detail.hpp"

namespace ifwar {

using nlohmann::json;

namespace {

AttackParams parse_attack_block(const json& j) {
    AttackParams p;
    p.maneuverability = j.value("maneuverability", 6.0);
    if (j.contains("weapon")) p.weapon_capabilities = j["weapon"].get<std::vector<double>>();
    if (j.contains("detection")) {
        p.detection_capabilities = j["detection"].get<std::vector<double>>();
    }
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

}  // namespace

Snapshot snapshot_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("snapshot parse error: ") + e.what());
    }
    Snapshot snap;
    snap.version = j.value("version", 1);
    if (snap.version != 1) {
        throw std::invalid_argument("unsupported snapshot version " +
                                    std::to_string(snap.version));
    }
    snap.label = j.value("label", std::string("t?"));
    if (!j.contains("targets") || !j["targets"].is_array() || j["targets"].empty()) {
        throw std::invalid_argument("snapshot needs a nonempty 'targets' array");
    }
    std::size_t row = 0;
    for (const auto& tj : j["targets"]) {
        SnapshotTarget t;
        try {
            t.number = tj.value("number", static_cast<int>(row) + 1);
            if (tj.contains("posting")) {
                t.posting = {tj["posting"].at(0).get<int>(), tj["posting"].at(1).get<int>()};
            }
            t.elevation = tj.value("elevation", 0.0);
            t.type = tj.value("type", std::string("Tank"));
            t.distance = tj.at("distance").get<double>();
            t.range = tj.value("range", 0);
            t.taking_fire = tj.value("taking_fire", 0.0);
            t.control_distance = tj.at("control_distance").get<double>();
            t.armor = armor_from_string(tj.at("armor").get<std::string>());
            t.nominal_speed = tj.at("nominal_speed").get<double>();
            t.relative_speed = tj.at("relative_speed").get<double>();
            if (tj.contains("env_flags")) {
                const auto& f = tj["env_flags"];
                if (!f.is_array() || f.size() != 3) {
                    throw std::invalid_argument("env_flags must be [h1,h2,r]");
                }
                t.env_flags = {f[0].get<int>(), f[1].get<int>(), f[2].get<int>()};
            }
            if (tj.contains("attack")) t.attack = parse_attack_block(tj["attack"]);
        } catch (const std::exception& e) {
            throw std::invalid_argument("snapshot row " + std::to_string(row) + ": " +
                                        e.what());
        }
        snap.targets.push_back(std::move(t));
        ++row;
    }
    return snap;
}

Snapshot load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return snapshot_from_json_text(buf.str());
}

AssessParams assess_params_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("params parse error: ") + e.what());
    }
    AssessParams p;
    p.version = j.value("version", 1);
    if (p.version != 1) {
        throw std::invalid_argument("unsupported params version " +
                                    std::to_string(p.version));
    }
    if (j.contains("threat")) p.threat = detail::parse_threat_config(j["threat"]);
    p.red_elevation = j.value("red_elevation", 130.0);
    p.max_between = j.value("max_between", 150.0);
    return p;
}

AssessParams load_assess_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open params file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return assess_params_from_json_text(buf.str());
}

IndicatorTables build_indicator_tables(const Snapshot& snapshot,
                                       const AssessParams& params) {
    const ThreatConfig& tc = params.threat;
    const double d_max = tc.d_max.value_or(50.0);
    IndicatorTables t;

    for (std::size_t i = 0; i < snapshot.targets.size(); ++i) {
        const SnapshotTarget& tgt = snapshot.targets[i];
        try {
            DistanceParams dp;
            dp.tau_common = tc.tau_common;
            dp.tau_at = tc.tau_special;
            dp.dist_to_control = tgt.control_distance;
            dp.d_max = d_max;
            dp.d_ij = tgt.distance;
            t.distance_real.push_back(distance_threat(dp));

            SpeedParams sp;
            sp.v_rel = tgt.relative_speed;
            sp.v_nominal = tgt.nominal_speed;
            sp.v_class_max = tgt.nominal_speed;
            t.speed_real.push_back(speed_threat(sp, tc.speed_mode));

            t.attack_real.push_back(attack_threat(tgt.attack));

            VisibilityParams vp;
            vp.h_i = params.red_elevation;
            vp.h_j = tgt.elevation;
            vp.h_max_between = params.max_between;
            vp.t1 = tc.t1;
            vp.t2 = tc.t2;
            t.visibility_interval.push_back(visibility_threat(vp));

            EnvironmentParams ep;
            ep.w1 = tc.env_weights[0];
            ep.w2 = tc.env_weights[1];
            ep.w3 = tc.env_weights[2];
            ep.h1 = tgt.env_flags[0];
            ep.h2 = tgt.env_flags[1];
            ep.r = tgt.env_flags[2];
            t.environment_real.push_back(environment_threat(ep));

            t.defense_real.push_back(defense_value(tgt.armor));
        } catch (const std::exception& e) {
            throw std::invalid_argument("indicator build failed at target row " +
                                        std::to_string(i) + ": " + e.what());
        }
    }

    t.distance_ifn = reals_to_ifns(t.distance_real, tc.distance_polarity, tc.conversion);
    t.speed_ifn = reals_to_ifns(t.speed_real, tc.speed_polarity, tc.conversion);
    t.attack_ifn = reals_to_ifns(t.attack_real, tc.attack_polarity, tc.conversion);
    t.visibility_ifn = intervals_to_ifns(t.visibility_interval);
    t.environment_ifn =
        reals_to_ifns(t.environment_real, tc.environment_polarity, tc.conversion);
    t.defense_ifn = reals_to_ifns(t.defense_real, tc.defense_polarity, tc.conversion);

    t.matrix.attribute_names = {"distance", "speed", "attack",
                                "visibility", "environment", "defense"};
    for (std::size_t i = 0; i < snapshot.targets.size(); ++i) {
        t.matrix.entries.push_back({t.distance_ifn[i], t.speed_ifn[i], t.attack_ifn[i],
                                    t.visibility_ifn[i], t.environment_ifn[i],
                                    t.defense_ifn[i]});
    }
    return t;
}

}  // namespace ifwar
