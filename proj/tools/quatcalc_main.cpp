#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatcalc/differential.hpp"
#include "quatcalc/errors.hpp"
#include "quatcalc/function_spec.hpp"
#include "quatcalc/integral.hpp"
#include "quatcalc/json_io.hpp"
#include "quatcalc/verify.hpp"

namespace {

using namespace quatcalc;

Quaternion quat_arg(const std::string& text, const char* flag) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string(flag) + ": " + e.what());
    }
    return quaternion_from_json(j);
}

std::string slurp(const std::string& file) {
    std::ifstream in(file);
    if (!in)
        throw parse_error("cannot read path file '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_diff(const std::string& spec, const std::string& point, const std::string& delta,
             int order) {
    const AnalyticFunction f = parse_spec(spec);
    const Quaternion x = quat_arg(point, "--point");
    const Quaternion d = quat_arg(delta, "--delta");
    const DifferentialResult r = order == 1 ? dcal_result(f, x, d) : dcal2_result(f, x, d);

    nlohmann::ordered_json out;
    out["value"] = quaternion_to_json(r.value);
    out["parallel"] = quaternion_to_json(r.split.parallel);
    out["perp"] = quaternion_to_json(r.split.perp);
    std::cout << out.dump() << '\n';
    return 0;
}

int run_integrate(const std::string& spec, bool have_power, int power, const std::string& mode,
                  const std::string& path_file) {
    const Path path = parse_path(slurp(path_file));

    Quaternion value, endpoint;
    if (mode == "dcal") {
        if (spec.empty())
            throw parse_error("--mode dcal needs --function");
        const AnalyticFunction f = parse_spec(spec);
        value = line_integral_D(f, path);
        endpoint = eval(f, path.end()) - eval(f, path.start());
    } else {
        if (!have_power)
            throw parse_error("--mode symmetric needs --power");
        value = symmetric_integral(power, path);
        const AnalyticFunction ad = AnalyticFunction::pow(power + 1);
        endpoint = (eval(ad, path.end()) - eval(ad, path.start())) * (1.0 / (power + 1));
    }

    nlohmann::ordered_json out;
    out["value"] = quaternion_to_json(value);
    out["endpoint_difference"] = quaternion_to_json(endpoint);
    out["abs_error"] = (value - endpoint).norm();
    std::cout << out.dump() << '\n';
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int cases,
               const std::string& json_file) {
    const SuiteReport report = run_suite(suite, {seed, cases});
    const std::string text = report_to_json(report).dump(2) + "\n";
    std::cout << text;
    if (!json_file.empty()) {
        std::ofstream out(json_file);
        if (!out) {
            std::cerr << "cannot write report to '" << json_file << "'\n";
            return 1;
        }
        out << text;
    }
    return all_passed(report) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic calculus: differentials, line integrals, verification suites"};
    app.require_subcommand(1);

    std::string fn_spec, point, delta;
    int order = 1;
    CLI::App* diff = app.add_subcommand("diff", "first- or second-order differential");
    diff->add_option("--function", fn_spec, "function spec, e.g. exp or pow:3")->required();
    diff->add_option("--point", point, "base point as [q0,q1,q2,q3]")->required();
    diff->add_option("--delta", delta, "displacement as [q0,q1,q2,q3]")->required();
    diff->add_option("--order", order, "expansion order")->check(CLI::IsMember({1, 2}));

    std::string int_spec, mode, path_file;
    int power = 0;
    CLI::App* integrate = app.add_subcommand("integrate", "line integral along a polyline path");
    integrate->add_option("--function", int_spec, "function spec (dcal mode)");
    CLI::Option* power_opt =
        integrate->add_option("--power", power, "power exponent (symmetric mode)");
    integrate->add_option("--mode", mode, "dcal or symmetric")
        ->required()
        ->check(CLI::IsMember({"dcal", "symmetric"}));
    integrate->add_option("--path", path_file, "path description file (JSON)")->required();

    std::string suite, json_file;
    std::uint64_t seed = 1;
    int cases = 0;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--seed", seed, "case generator seed");
    verify->add_option("--cases", cases, "random cases per suite (0: default)");
    verify->add_option("--json", json_file, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (diff->parsed())
            return run_diff(fn_spec, point, delta, order);
        if (integrate->parsed())
            return run_integrate(int_spec, power_opt->count() > 0, power, mode, path_file);
        return run_verify(suite, seed, cases, json_file);
    } catch (const parse_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const unknown_suite_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
