#include "cyclomon/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace cyclomon {

using nlohmann::json;

namespace {

double finite_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ParseError(field + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(field + ": non-finite number");
    return v;
}

Vector vector_field(const json& j, const std::string& field, int expect_dim = -1) {
    if (!j.is_array()) throw ParseError(field + ": expected an array of numbers");
    Vector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(finite_number(j[i], field + "[" + std::to_string(i) + "]"));
    if (expect_dim >= 0 && static_cast<int>(v.size()) != expect_dim)
        throw ParseError(field + ": expected length " + std::to_string(expect_dim) + ", got " +
                         std::to_string(v.size()));
    return v;
}

}  // namespace

Tolerances tolerances_from_json(const json& j, Tolerances base, const std::string& context) {
    if (!j.is_object()) throw ParseError(context + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "feas_tol")
            base.feas_tol = finite_number(value, context + ".feas_tol");
        else if (key == "num_tol")
            base.num_tol = finite_number(value, context + ".num_tol");
        else if (key == "opt_tol")
            base.opt_tol = finite_number(value, context + ".opt_tol");
        else if (key == "max_iter") {
            if (!value.is_number_integer() || value.get<long long>() <= 0)
                throw ParseError(context + ".max_iter: expected a positive integer");
            base.max_iter = value.get<int>();
        } else {
            throw ParseError(context + "." + key + ": unknown tolerance field");
        }
    }
    try {
        base.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what());
    }
    return base;
}

ExtensionInstance load_instance(const std::string& text, const Tolerances& base_tolerances) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance: expected a JSON object");

    ExtensionInstance inst;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw ParseError("dimension: expected an integer");
    inst.graph.dimension = j["dimension"].get<int>();
    if (inst.graph.dimension <= 0) throw ParseError("dimension: must be positive");
    const int d = inst.graph.dimension;

    if (!j.contains("graph") || !j["graph"].is_array() || j["graph"].empty())
        throw ParseError("graph: expected a nonempty array of [s, s_star] pairs");
    for (std::size_t i = 0; i < j["graph"].size(); ++i) {
        const std::string field = "graph[" + std::to_string(i) + "]";
        const json& entry = j["graph"][i];
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError(field + ": expected a pair [s, s_star]");
        GraphPair p;
        p.s = vector_field(entry[0], field + "[0]", d);
        p.s_star = vector_field(entry[1], field + "[1]", d);
        inst.graph.pairs.push_back(std::move(p));
    }

    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<long long>() < 2)
            throw ParseError("n: expected an integer >= 2");
        inst.n = j["n"].get<int>();
    }

    if (j.contains("B")) {
        const json& bj = j["B"];
        if (!bj.is_array() || static_cast<int>(bj.size()) != d)
            throw ParseError("B: expected a " + std::to_string(d) + "x" + std::to_string(d) +
                             " matrix");
        for (int r = 0; r < d; ++r)
            inst.B.entries.push_back(vector_field(bj[r], "B[" + std::to_string(r) + "]", d));
    } else {
        inst.B = LinearOperator::zero(d);
    }

    inst.w_star = j.contains("w_star") ? vector_field(j["w_star"], "w_star", d) : Vector(d, 0.0);

    inst.tolerances = base_tolerances;
    if (j.contains("tolerances"))
        inst.tolerances = tolerances_from_json(j["tolerances"], base_tolerances, "tolerances");

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "dimension" && key != "graph" && key != "n" && key != "B" &&
            key != "w_star" && key != "tolerances")
            throw ParseError(key + ": unknown instance field");
    }

    inst.graph = inst.graph.deduplicated(&inst.warnings);
    try {
        inst.validate();
    } catch (const std::exception& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    return inst;
}

ExtensionInstance load_instance_file(const std::string& path,
                                     const Tolerances& base_tolerances) {
    std::ifstream in(path);
    if (!in) throw ParseError("instance: cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_instance(ss.str(), base_tolerances);
}

json to_json(const Vector& v) {
    json arr = json::array();
    for (double e : v) arr.push_back(e);
    return arr;
}

std::string write_instance(const ExtensionInstance& instance) {
    json j;
    j["dimension"] = instance.graph.dimension;
    json graph = json::array();
    for (const auto& p : instance.graph.pairs)
        graph.push_back(json::array({to_json(p.s), to_json(p.s_star)}));
    j["graph"] = graph;
    j["n"] = instance.n;
    j["B"] = [&] {
        json rows = json::array();
        for (const auto& row : instance.B.entries) rows.push_back(to_json(row));
        return rows;
    }();
    j["w_star"] = to_json(instance.w_star);
    j["tolerances"] = tolerances_to_json(instance.tolerances);
    return j.dump(2);
}

std::string instance_hash(const ExtensionInstance& instance) {
    const std::string text = write_instance(instance);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

json tolerances_to_json(const Tolerances& tols) {
    return json{{"feas_tol", tols.feas_tol},
                {"num_tol", tols.num_tol},
                {"opt_tol", tols.opt_tol},
                {"max_iter", tols.max_iter}};
}

json monotonicity_to_json(const MonotonicityReport& rep) {
    json cycle = json::array();
    for (int i : rep.worst_cycle) cycle.push_back(i + 1);  // 1-based graph labels
    json j;
    j["n"] = rep.n == 0 ? json("cyclic") : json(rep.n);
    j["is_monotone"] = rep.is_monotone;
    j["worst_cycle"] = cycle;
    j["worst_sum"] = rep.worst_sum;
    j["method"] = rep.method;
    return j;
}

json hypothesis_to_json(const HypothesisReport& rep) {
    json j;
    j["graph_n_monotone"] = rep.graph_n_monotone;
    j["dominance_scan_clean"] = rep.dominance_scan_clean;
    j["dominance_samples"] = rep.dominance_samples;
    j["dominance_seed"] = rep.dominance_seed;
    j["B_monotone"] = rep.B_monotone;
    j["B_strongly_coercive"] = rep.B_strongly_coercive;
    j["condition_graph_feasible"] = rep.condition_graph_feasible;
    j["condition_core_satisfied"] = rep.condition_core_satisfied;
    j["condition_domain_feasible"] = rep.condition_domain_feasible;
    j["applicable_theorems"] = rep.applicable_theorems;
    j["notes"] = rep.notes;
    return j;
}

json extension_to_json(const ExtensionResult& res) {
    json j;
    switch (res.status) {
        case SolveStatus::Certified: j["status"] = "certified"; break;
        case SolveStatus::IterationLimit: j["status"] = "iteration_limit"; break;
        case SolveStatus::CertificationFailed: j["status"] = "certification_failed"; break;
    }
    j["x"] = to_json(res.x);
    j["x_star"] = to_json(res.x_star);
    j["lambda"] = to_json(res.lambda);
    j["phi"] = res.phi_value;
    j["iterations"] = res.iterations;
    j["certificate"] = monotonicity_to_json(res.certificate);
    j["candidate_agrees"] = res.candidate_agrees;
    j["hypotheses"] = hypothesis_to_json(res.hypothesis);
    return j;
}

json potential_to_json(const MaxAffineFunction& f) {
    json pieces = json::array();
    for (const auto& p : f.pieces)
        pieces.push_back(json{{"slope", to_json(p.slope)}, {"intercept", p.intercept}});
    return json{{"pieces", pieces}};
}

json gap_to_json(const DualityGapReport& rep) {
    json j;
    j["dual_value"] = rep.dual_value;
    j["primal_value"] = rep.primal_value;
    j["gap"] = rep.gap;
    j["dual_iterations"] = rep.dual_iterations;
    j["primal_iterations"] = rep.primal_iterations;
    j["pointwise_min"] = rep.pointwise_min;
    j["pointwise_samples"] = rep.pointwise_samples;
    j["pointwise_violations"] = rep.pointwise_violations;
    j["seed"] = rep.seed;
    return j;
}

}  // namespace cyclomon
