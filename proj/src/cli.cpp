#include "cyclomon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cyclomon/json_io.hpp"
#include "cyclomon/sampling.hpp"

namespace cyclomon::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string instance_path;
    std::string n_arg;          // integer or "cyclic" (check)
    int n_override = 0;         // 0 = use the instance's n
    std::string at_arg;         // "[x...],[xstar...]"
    std::string x_arg;          // "[x...]"
    std::string method;         // empty = per-command default
    std::string grid_path;
    int base_index = 0;
    int samples = -1;           // -1 = per-command default
    std::uint64_t seed = 0;
    bool to_optimality = false;
    bool use_dom_condition = false;
};

Tolerances env_tolerances() {
    const char* env = std::getenv(kToleranceEnvVar);
    if (!env || !*env) return Tolerances{};
    json j;
    try {
        j = json::parse(env);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(kToleranceEnvVar) + ": invalid JSON: " + e.what());
    }
    return tolerances_from_json(j, Tolerances{}, kToleranceEnvVar);
}

std::pair<Vector, Vector> parse_point_pair(const std::string& text, int d) {
    json j;
    try {
        j = json::parse("[" + text + "]");
        if (j.size() == 1 && j[0].is_array() && j[0].size() == 2 && j[0][0].is_array())
            j = j[0];  // accept the fully bracketed "[[x],[xstar]]" form too
    } catch (const json::parse_error&) {
        throw ParseError("--at: expected \"[x...],[xstar...]\"");
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array())
        throw ParseError("--at: expected two arrays \"[x...],[xstar...]\"");
    Vector x, xs;
    for (const auto& e : j[0]) x.push_back(e.get<double>());
    for (const auto& e : j[1]) xs.push_back(e.get<double>());
    if (static_cast<int>(x.size()) != d || static_cast<int>(xs.size()) != d)
        throw ParseError("--at: point does not match instance dimension " + std::to_string(d));
    if (!all_finite(x) || !all_finite(xs)) throw ParseError("--at: non-finite entry");
    return {x, xs};
}

Vector parse_point(const std::string& text, int d, const std::string& flag) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        throw ParseError(flag + ": expected a JSON array");
    }
    if (!j.is_array()) throw ParseError(flag + ": expected a JSON array");
    Vector x;
    for (const auto& e : j) x.push_back(e.get<double>());
    if (static_cast<int>(x.size()) != d)
        throw ParseError(flag + ": point does not match instance dimension " + std::to_string(d));
    if (!all_finite(x)) throw ParseError(flag + ": non-finite entry");
    return x;
}

int effective_n(const Options& opt, const ExtensionInstance& inst) {
    return opt.n_override > 0 ? opt.n_override : inst.n;
}

json base_report(const std::string& command, const Options& opt,
                 const ExtensionInstance& inst) {
    json rep;
    rep["command"] = command;
    rep["verdict"] = "";
    rep["witness"] = json::object();
    rep["values"] = json::object();
    rep["iterations"] = 0;
    rep["warnings"] = inst.warnings;
    rep["seed"] = opt.seed;
    rep["tolerances"] = tolerances_to_json(inst.tolerances);
    rep["tool_version"] = kToolVersion;
    rep["instance_hash"] = instance_hash(inst);
    return rep;
}

int run_check(const Options& opt, const ExtensionInstance& inst, bool force_cyclic, json& rep) {
    MonotonicityReport mono;
    if (force_cyclic || opt.n_arg == "cyclic") {
        mono = is_cyclically_monotone(inst.graph, inst.tolerances);
    } else {
        int n = inst.n;
        if (!opt.n_arg.empty()) {
            try {
                n = std::stoi(opt.n_arg);
            } catch (...) {
                throw ParseError("--n: expected an integer >= 2 or \"cyclic\"");
            }
        }
        const std::string name = opt.method.empty() ? "maxplus" : opt.method;
        if (name != "bruteforce" && name != "maxplus")
            throw ParseError("--method: expected bruteforce or maxplus");
        const auto method = name == "bruteforce" ? MonotonicityMethod::Bruteforce
                                                 : MonotonicityMethod::MaxPlus;
        mono = is_n_monotone(inst.graph, n, method, inst.tolerances);
    }
    rep["verdict"] = mono.is_monotone ? "monotone" : "not monotone";
    rep["witness"] = monotonicity_to_json(mono);
    rep["values"]["is_monotone"] = mono.is_monotone;
    rep["values"]["worst_sum"] = mono.worst_sum;
    return 0;
}

int run_fitz(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const auto [x, x_star] = parse_point_pair(opt.at_arg, inst.graph.dimension);
    const std::string name = opt.method.empty() ? "dp" : opt.method;
    if (name != "naive" && name != "dp") throw ParseError("--method: expected naive or dp");
    const auto method = name == "naive" ? FitzMethod::Naive : FitzMethod::Dp;
    const FitzEvaluation fe = eval_fitz(inst.graph, effective_n(opt, inst), x, x_star, method);
    rep["verdict"] = "evaluated";
    json chain = json::array();
    for (int i : fe.argmax_chain) chain.push_back(i + 1);
    rep["witness"]["argmax_chain"] = chain;
    rep["witness"]["slope_x"] = to_json(fe.slope_x);
    rep["witness"]["slope_xstar"] = to_json(fe.slope_xstar);
    rep["values"]["value"] = fe.value;
    rep["values"]["pairing"] = pairing(x_star, x);
    return 0;
}

int run_conj(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const auto [x, x_star] = parse_point_pair(opt.at_arg, inst.graph.dimension);
    const ConjugateValue cv =
        eval_conjugate(inst.graph, effective_n(opt, inst), x_star, x, inst.tolerances);
    rep["verdict"] = cv.finite ? "finite" : "infinite";
    rep["values"]["finite"] = cv.finite;
    rep["values"]["value"] = cv.finite ? json(cv.value) : json();
    rep["witness"]["certificate"] = to_json(cv.certificate);
    rep["iterations"] = cv.lp_iterations;
    return 0;
}

int run_dominance(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const int samples = opt.samples < 0 ? 1000 : opt.samples;
    const auto violations = pairing_dominance_scan(inst.graph, effective_n(opt, inst), samples,
                                                   opt.seed, inst.tolerances);
    rep["verdict"] = violations.empty() ? "clean" : "violations found";
    rep["values"]["num_samples"] = samples;
    rep["values"]["violations"] = violations.size();
    json list = json::array();
    for (std::size_t i = 0; i < violations.size() && i < 8; ++i)
        list.push_back(json{{"x_star", to_json(violations[i].x_star)},
                            {"x", to_json(violations[i].x)},
                            {"pairing", violations[i].pairing_value},
                            {"conjugate", violations[i].conjugate_value}});
    rep["witness"]["violations"] = list;
    rep["warnings"].push_back("the dominance scan is a sampled falsifier, not a certificate");
    return 0;
}

int run_sandwich(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const int samples = opt.samples < 0 ? 500 : opt.samples;
    const SandwichReport sw = domain_sandwich_check(inst.graph, effective_n(opt, inst), samples,
                                                    opt.seed, inst.tolerances);
    rep["verdict"] = sw.failures == 0 ? "all finite" : "failures found";
    rep["values"]["num_samples"] = sw.num_samples;
    rep["values"]["failures"] = sw.failures;
    json list = json::array();
    for (const auto& f : sw.failed_points)
        list.push_back(json{{"x_star", to_json(f.x_star)}, {"x", to_json(f.x)}});
    rep["witness"]["failed_points"] = list;
    return 0;
}

int run_potential(const Options& opt, const ExtensionInstance& inst, json& rep) {
    try {
        const MaxAffineFunction f =
            rockafellar_potential(inst.graph, opt.base_index, inst.tolerances);
        std::vector<Vector> samples = inst.graph.domain_points();
        const auto [lo, hi] = bounding_box(samples);
        SampleRng rng(opt.seed);
        for (int i = 0; i < 64; ++i) samples.push_back(rng.uniform_box(lo, hi));
        const bool ok = verify_potential(inst.graph, f, samples, inst.tolerances);
        rep["verdict"] = "constructed";
        rep["witness"] = potential_to_json(f);
        rep["values"]["base_index"] = opt.base_index;
        rep["values"]["verified"] = ok;
        return ok ? 0 : 3;
    } catch (const NotCyclicallyMonotone& e) {
        rep["verdict"] = "not cyclically monotone";
        json cycle = json::array();
        for (int i : e.cycle) cycle.push_back(i + 1);
        rep["witness"]["cycle"] = cycle;
        rep["witness"]["cycle_sum"] = e.cycle_sum;
        return 2;
    }
}

int run_hypotheses(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const int samples = opt.samples < 0 ? 200 : opt.samples;
    const HypothesisReport hyp =
        check_hypotheses(inst, samples, opt.seed, opt.use_dom_condition);
    std::string verdict;
    for (const auto& t : hyp.applicable_theorems) verdict += (verdict.empty() ? "" : ",") + t;
    rep["verdict"] = verdict.empty() ? "none" : verdict;
    rep["witness"] = hypothesis_to_json(hyp);
    return 0;
}

int run_extend(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const int samples = opt.samples < 0 ? 200 : opt.samples;
    const ExtensionResult res = solve_extension(inst, opt.to_optimality, samples, opt.seed);
    rep["witness"] = extension_to_json(res);
    rep["values"]["phi"] = res.phi_value;
    rep["iterations"] = res.iterations;
    for (const auto& w : res.warnings) rep["warnings"].push_back(w);
    switch (res.status) {
        case SolveStatus::Certified: rep["verdict"] = "certified"; return 0;
        case SolveStatus::CertificationFailed: rep["verdict"] = "certification failed"; return 3;
        case SolveStatus::IterationLimit: rep["verdict"] = "iteration limit"; return 2;
    }
    return 2;
}

int run_certify(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const Vector x = parse_point(opt.x_arg, inst.graph.dimension, "--x");
    bool agrees = true;
    const MonotonicityReport mono = certify_extension(inst, x, &agrees);
    rep["verdict"] = mono.is_monotone ? "monotone" : "not monotone";
    rep["witness"] = monotonicity_to_json(mono);
    rep["values"]["candidate_agrees"] = agrees;
    rep["values"]["worst_sum"] = mono.worst_sum;
    if (!agrees) rep["warnings"].push_back("certificate and candidate test disagree");
    return mono.is_monotone ? 0 : 3;
}

int run_gap(const Options& opt, const ExtensionInstance& inst, json& rep) {
    const int samples = opt.samples < 0 ? 200 : opt.samples;
    const DualityGapReport gap = duality_gap_report(inst, samples, opt.seed);
    rep["verdict"] = "computed";
    rep["values"] = gap_to_json(gap);
    rep["iterations"] = gap.dual_iterations + gap.primal_iterations;
    for (const auto& w : gap.warnings) rep["warnings"].push_back(w);
    return 0;
}

int run_sample_grid(const Options& opt, const ExtensionInstance& inst, json& rep) {
    if (opt.grid_path.empty()) throw ParseError("--grid: output file required for sample-grid");
    const int per_axis = opt.samples < 0 ? 11 : opt.samples;
    if (per_axis < 2) throw ParseError("--samples: at least 2 grid points per axis");
    const int d = inst.graph.dimension;
    double rows_d = 1.0;
    for (int i = 0; i < 2 * d; ++i) rows_d *= per_axis;
    if (rows_d > 1e6) throw BudgetExceeded("sample-grid: more than 1e6 rows requested");

    const auto [xlo, xhi] = bounding_box(inst.graph.domain_points());
    const auto [slo, shi] = bounding_box(inst.graph.range_points());
    const int n = effective_n(opt, inst);

    std::ofstream out(opt.grid_path);
    if (!out) throw ParseError("--grid: cannot open " + opt.grid_path + " for writing");
    for (int i = 0; i < d; ++i) out << "x_" << (i + 1) << ",";
    for (int i = 0; i < d; ++i) out << "xstar_" << (i + 1) << ",";
    out << "value\n";

    // Row-major scan: x* axes vary fastest.
    std::vector<int> idx(2 * d, 0);
    long long rows = 0;
    char buf[32];
    for (;;) {
        Vector x(d), x_star(d);
        for (int i = 0; i < d; ++i)
            x[i] = xlo[i] + (xhi[i] - xlo[i]) * idx[i] / (per_axis - 1);
        for (int i = 0; i < d; ++i)
            x_star[i] = slo[i] + (shi[i] - slo[i]) * idx[d + i] / (per_axis - 1);
        const FitzEvaluation fe = eval_fitz(inst.graph, n, x, x_star);
        for (int i = 0; i < d; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", x[i]);
            out << buf << ",";
        }
        for (int i = 0; i < d; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", x_star[i]);
            out << buf << ",";
        }
        std::snprintf(buf, sizeof buf, "%.17g", fe.value);
        out << buf << "\n";
        ++rows;
        int pos = 2 * d - 1;
        while (pos >= 0 && idx[pos] == per_axis - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    rep["verdict"] = "written";
    rep["values"]["rows"] = rows;
    rep["values"]["file"] = opt.grid_path;
    rep["values"]["per_axis"] = per_axis;
    return 0;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"Fitzpatrick functions, cyclic monotonicity and operator-graph extensions"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "decide n-monotonicity (--n <k|cyclic>)"},
        {"cyclic", "decide cyclic monotonicity"},
        {"fitz", "evaluate the Fitzpatrick function of order n at --at"},
        {"conj", "evaluate its Fenchel conjugate at --at"},
        {"dominance", "scan for pairing-dominance violations"},
        {"sandwich", "check the lower domain inclusions on samples"},
        {"potential", "construct and verify an antiderivative"},
        {"hypotheses", "check the extension theorem hypotheses"},
        {"extend", "hypotheses, extension solve and certification"},
        {"certify", "certify a candidate extension point --x"},
        {"gap", "primal/dual duality-gap audit"},
        {"sample-grid", "write CSV samples of F over a box grid"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--instance", opt.instance_path, "instance JSON file")->required();
        sub->add_option("--seed", opt.seed, "seed for all sampling (default 0)");
        if (name == "check" || name == "fitz" || name == "conj" || name == "dominance" ||
            name == "sandwich" || name == "sample-grid")
            sub->add_option("--n", opt.n_arg, "order override (check also accepts 'cyclic')");
        if (name == "check" || name == "fitz")
            sub->add_option("--method", opt.method, "bruteforce|maxplus (check), naive|dp (fitz)");
        if (name == "fitz" || name == "conj")
            sub->add_option("--at", opt.at_arg, "query point \"[x...],[xstar...]\"")->required();
        if (name == "dominance" || name == "sandwich" || name == "hypotheses" ||
            name == "extend" || name == "gap" || name == "sample-grid")
            sub->add_option("--samples", opt.samples, "sample count (grid: points per axis)");
        if (name == "potential")
            sub->add_option("--base", opt.base_index, "base graph index (0-based, default 0)");
        if (name == "certify")
            sub->add_option("--x", opt.x_arg, "candidate point \"[x...]\"")->required();
        if (name == "extend")
            sub->add_flag("--optimal", opt.to_optimality,
                          "drive the cutting-plane gap below opt_tol instead of stopping at "
                          "the first certified point");
        if (name == "hypotheses")
            sub->add_flag("--use-dom-condition", opt.use_dom_condition,
                          "decide the graph condition over dom(F*^T) via the piece LP");
        if (name == "sample-grid")
            sub->add_option("--grid", opt.grid_path, "output CSV path")->required();
    }

    try {
        std::vector<const char*> argv;
        argv.push_back("cyclomon");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return {0, ""};
        }
        json rep;
        rep["command"] = args.empty() ? "" : args[0];
        rep["verdict"] = "error";
        rep["error"] = e.what();
        rep["tool_version"] = kToolVersion;
        return {64, rep.dump(2)};
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json rep;
    try {
        const ExtensionInstance inst = load_instance_file(opt.instance_path, env_tolerances());
        rep = base_report(command, opt, inst);
        int code = 0;
        if (command == "check")
            code = run_check(opt, inst, false, rep);
        else if (command == "cyclic")
            code = run_check(opt, inst, true, rep);
        else if (command == "fitz")
            code = run_fitz(opt, inst, rep);
        else if (command == "conj")
            code = run_conj(opt, inst, rep);
        else if (command == "dominance")
            code = run_dominance(opt, inst, rep);
        else if (command == "sandwich")
            code = run_sandwich(opt, inst, rep);
        else if (command == "potential")
            code = run_potential(opt, inst, rep);
        else if (command == "hypotheses")
            code = run_hypotheses(opt, inst, rep);
        else if (command == "extend")
            code = run_extend(opt, inst, rep);
        else if (command == "certify")
            code = run_certify(opt, inst, rep);
        else if (command == "gap")
            code = run_gap(opt, inst, rep);
        else if (command == "sample-grid")
            code = run_sample_grid(opt, inst, rep);
        return {code, rep.dump(2)};
    } catch (const ParseError& e) {
        json err;
        err["command"] = command;
        err["verdict"] = "error";
        err["error"] = e.what();
        err["tool_version"] = kToolVersion;
        return {64, err.dump(2)};
    } catch (const std::exception& e) {
        json err;
        err["command"] = command;
        err["verdict"] = "error";
        err["error"] = e.what();
        err["tool_version"] = kToolVersion;
        return {2, err.dump(2)};
    }
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const RunResult res = run(args);
    if (!res.report.empty()) std::cout << res.report << "\n";
    return res.exit_code;
}

}  // namespace cyclomon::cli
