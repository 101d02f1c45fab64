#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ifwar/conversion.hpp"
#include "ifwar/harness.hpp"
#include "ifwar/ifn.hpp"
#include "ifwar/interval.hpp"
#include "ifwar/madm.hpp"
#include "ifwar/reward.hpp"
#include "ifwar/threat.hpp"
#include "ifwar/trainer.hpp"

namespace py = pybind11;
using namespace ifwar;

namespace {

DecisionMatrix matrix_from_pairs(const std::vector<std::vector<std::pair<double, double>>>& rows) {
    DecisionMatrix m;
    for (const auto& row : rows) {
        std::vector<Ifn> out;
        out.reserve(row.size());
        for (const auto& [mu, nu] : row) out.emplace_back(mu, nu);
        m.entries.push_back(std::move(out));
    }
    return m;
}

EntropyReading reading_from_string(const std::string& s) {
    if (s == "attribute_count") return EntropyReading::AttributeCount;
    if (s == "target_count") return EntropyReading::TargetCount;
    throw std::invalid_argument("entropy reading must be attribute_count|target_count");
}

py::dict assessment_to_dict(const ThreatAssessment& a) {
    py::dict d;
    d["weights"] = a.weights;
    d["s_plus"] = a.s_plus;
    d["s_minus"] = a.s_minus;
    d["closeness"] = a.closeness;
    d["ranking"] = a.ranking;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Intuitionistic-fuzzy threat assessment and hex wargame core";

    py::class_<Ifn>(m, "Ifn")
        .def(py::init<double, double>(), py::arg("mu"), py::arg("nu"))
        .def_property_readonly("mu", &Ifn::mu)
        .def_property_readonly("nu", &Ifn::nu)
        .def_property_readonly("pi", &Ifn::pi)
        .def("__repr__", [](const Ifn& v) {
            return "Ifn(" + std::to_string(v.mu()) + ", " + std::to_string(v.nu()) + ")";
        });
    m.def("ifn_add", &ifn_add);
    m.def("ifn_mul", &ifn_mul);
    m.def("ifn_scale", &ifn_scale, py::arg("lam"), py::arg("a"));
    m.def("ifn_pow", &ifn_pow, py::arg("a"), py::arg("lam"));
    m.def("ifwa", [](const std::vector<Ifn>& values, const std::vector<double>& weights) {
        return ifwa(values, weights);
    });

    py::class_<IntervalNumber>(m, "IntervalNumber")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_property_readonly("lo", &IntervalNumber::lo)
        .def_property_readonly("hi", &IntervalNumber::hi)
        .def("__repr__", [](const IntervalNumber& v) {
            return "[" + std::to_string(v.lo()) + ", " + std::to_string(v.hi()) + "]";
        });
    m.def("interval_add", &interval_add);
    m.def("interval_sub", &interval_sub);
    m.def("interval_scale", &interval_scale);
    m.def("interval_mul", &interval_mul);
    m.def("interval_div", &interval_div);

    py::enum_<Polarity>(m, "Polarity")
        .value("Benefit", Polarity::Benefit)
        .value("Cost", Polarity::Cost);
    m.def(
        "intervals_to_ifns",
        [](const std::vector<IntervalNumber>& rows) { return intervals_to_ifns(rows); });
    m.def(
        "reals_to_ifns",
        [](const std::vector<double>& values, Polarity polarity, double beta,
           double epsilon_guard) {
            return reals_to_ifns(values, polarity, {beta, epsilon_guard});
        },
        py::arg("values"), py::arg("polarity"), py::arg("beta") = 0.2,
        py::arg("epsilon_guard") = 0.001);

    m.def(
        "distance_threat",
        [](double tau_common, double tau_at, double dist_to_control, double d_max,
           double d_ij) {
            return distance_threat({tau_common, tau_at, dist_to_control, d_max, d_ij});
        },
        py::arg("tau_common"), py::arg("tau_at"), py::arg("dist_to_control"),
        py::arg("d_max"), py::arg("d_ij"));
    m.def(
        "speed_threat",
        [](double v_rel, double v_nominal, double v_class_max, double beta_class,
           const std::string& mode) {
            SpeedParams p;
            p.v_rel = v_rel;
            p.v_nominal = v_nominal;
            p.v_class_max = v_class_max;
            p.beta_class = beta_class;
            return speed_threat(p, mode == "table" ? SpeedMode::Table : SpeedMode::Formula);
        },
        py::arg("v_rel"), py::arg("v_nominal"), py::arg("v_class_max") = 1.0,
        py::arg("beta_class") = 1.0, py::arg("mode") = "table");
    m.def(
        "attack_threat",
        [](double maneuverability, const std::vector<double>& weapon,
           const std::vector<double>& detection, const std::vector<double>& eps) {
            AttackParams p;
            p.maneuverability = maneuverability;
            p.weapon_capabilities = weapon;
            p.detection_capabilities = detection;
            if (eps.size() != 4) throw std::invalid_argument("eps needs 4 entries");
            p.eps1 = eps[0];
            p.eps2 = eps[1];
            p.eps3 = eps[2];
            p.eps4 = eps[3];
            return attack_threat(p);
        },
        py::arg("maneuverability"), py::arg("weapon"), py::arg("detection"),
        py::arg("eps") = std::vector<double>{1, 1, 1, 1});
    m.def(
        "visibility_threat",
        [](double h_i, double h_j, double h_max_between, double t1, double t2) {
            return visibility_threat({h_i, h_j, h_max_between, t1, t2});
        },
        py::arg("h_i"), py::arg("h_j"), py::arg("h_max_between"), py::arg("t1") = 0.0,
        py::arg("t2") = 0.2);
    m.def(
        "environment_threat",
        [](int h1, int h2, int r, const std::vector<double>& weights) {
            if (weights.size() != 3) throw std::invalid_argument("weights needs 3 entries");
            EnvironmentParams p;
            p.w1 = weights[0];
            p.w2 = weights[1];
            p.w3 = weights[2];
            p.h1 = h1;
            p.h2 = h2;
            p.r = r;
            return environment_threat(p);
        },
        py::arg("h1"), py::arg("h2"), py::arg("r"),
        py::arg("weights") = std::vector<double>{3, 2, 1});
    m.def("defense_value",
          [](const std::string& armor) { return defense_value(armor_from_string(armor)); });

    m.def("entropy", [](const std::vector<std::pair<double, double>>& column) {
        std::vector<Ifn> col;
        col.reserve(column.size());
        for (const auto& [mu, nu] : column) col.emplace_back(mu, nu);
        return entropy(col);
    });
    m.def("ifn_similarity", [](std::pair<double, double> a, std::pair<double, double> b) {
        return ifn_similarity(Ifn(a.first, a.second), Ifn(b.first, b.second));
    });
    m.def(
        "assess",
        [](const std::vector<std::vector<std::pair<double, double>>>& rows,
           const std::string& reading) {
            return assessment_to_dict(assess(matrix_from_pairs(rows),
                                             reading_from_string(reading)));
        },
        py::arg("matrix"), py::arg("entropy_reading") = "attribute_count");

    m.def(
        "assess_snapshot",
        [](const std::string& snapshot_path, const std::string& params_path,
           const std::string& out_dir) {
            const AssessOutput out = run_assess(snapshot_path, params_path, out_dir);
            py::dict d = assessment_to_dict(out.assessment);
            d["ranking_string"] = out.ranking_string;
            return d;
        },
        py::arg("snapshot_path"), py::arg("params_path"), py::arg("out_dir") = "");

    py::class_<Action>(m, "Action")
        .def_static("move", &Action::move)
        .def_static("shoot", &Action::shoot)
        .def_static("hold", &Action::hold);

    py::class_<Env>(m, "Env")
        .def(py::init([](const std::string& scenario_path) {
                 return Env(load_scenario(scenario_path));
             }),
             py::arg("scenario_path"))
        .def("reset", [](Env& env, std::uint64_t seed) { env.reset(seed); },
             py::arg("seed"))
        .def("step",
             [](Env& env, const std::vector<Action>& red, const std::vector<Action>& blue) {
                 return env.step(red, blue).to_json_line();
             })
        .def("observe",
             [](const Env& env, const std::string& side) {
                 return env.observe(side_from_string(side));
             })
        .def("rule_policy",
             [](const Env& env, const std::string& side) {
                 return env.rule_policy(side_from_string(side));
             })
        .def("done", [](const Env& env) { return env.state().done; })
        .def("turn", [](const Env& env) { return env.state().turn; })
        .def("winner",
             [](const Env& env) -> py::object {
                 if (!env.state().winner) return py::none();
                 return py::str(side_to_string(*env.state().winner));
             })
        .def("observation_dim", [](const Env& env, const std::string& side) {
            return Env::observation_dim(env.scenario(), side_from_string(side));
        });

    m.def(
        "train",
        [](const std::string& scenario_path, const std::string& algo, std::uint64_t seed,
           long total_steps, int batch_size) {
            TrainConfig cfg;
            cfg.seed = seed;
            cfg.total_steps = total_steps;
            cfg.batch_size = batch_size;
            const TrainResult result =
                train(load_scenario(scenario_path), cfg, algo_from_string(algo));
            py::dict d;
            d["episodes"] = result.episodes.size();
            d["env_steps"] = result.env_steps;
            d["updates"] = result.updates;
            std::vector<double> returns;
            returns.reserve(result.episodes.size());
            for (const auto& e : result.episodes) returns.push_back(e.ret);
            d["returns"] = returns;
            return d;
        },
        py::arg("scenario_path"), py::arg("algo") = "madm-ppo", py::arg("seed") = 1,
        py::arg("total_steps") = 2000, py::arg("batch_size") = 512);

    m.attr("__version__") = "0.1.0";
}
