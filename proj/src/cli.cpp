#include "fmethod/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fmethod/parser.hpp"
#include "fmethod/serialize.hpp"

namespace fmethod {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadRequest = 2;
constexpr int kNoSolutions = 3;

struct CommonOpts {
    std::string setting = "rankin_cohen";
    size_t n = 3;
    std::vector<std::string> weights; // name=value pins, exact rationals
    std::string format = "text";
    std::string out;
};

struct SearchOpts {
    int64_t delta = -1; // -1 = sweep
    uint32_t degree_max = 6;
    std::string parity = "all";
    bool no_reduce = false;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--setting", c.setting, "built-in setting name")
        ->check(CLI::IsMember({"rankin_cohen", "juhl"}))
        ->capture_default_str();
    sub->add_option("--n", c.n, "dimension parameter for settings that take one")
        ->capture_default_str();
    sub->add_option("--weights", c.weights,
                    "pin parameters, e.g. --weights k1=2,k2=5/2 (exact rationals)")
        ->delimiter(',');
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the artifact to this file instead of stdout");
}

void add_search(CLI::App* sub, SearchOpts& s) {
    sub->add_option("--delta", s.delta, "solve exactly this degree (default: sweep)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--degree-max", s.degree_max, "highest degree of the sweep")
        ->capture_default_str();
    sub->add_option("--parity", s.parity, "degree filter for the sweep")
        ->check(CLI::IsMember({"all", "even", "odd"}))
        ->capture_default_str();
    sub->add_flag("--no-reduce", s.no_reduce, "skip the invariant-subspace reduction");
}

FSetting make_setting(const CommonOpts& c) {
    FSetting s = builtin_setting(c.setting, c.n);
    if (c.weights.empty()) return s;
    std::map<std::string, BigRat> pins;
    for (const auto& w : c.weights) {
        size_t eq = w.find('=');
        if (eq == std::string::npos)
            throw DomainError(cat("--weights entry '", w, "' is not name=value"));
        pins[w.substr(0, eq)] = BigRat::from_string(w.substr(eq + 1));
    }
    return specialize_setting(s, pins);
}

SolveOptions make_solve_options(const SearchOpts& so) {
    SolveOptions opt;
    if (so.delta >= 0) opt.delta = static_cast<uint32_t>(so.delta);
    opt.degree_max = so.degree_max;
    opt.parity = so.parity == "even" ? Parity::Even
                 : so.parity == "odd" ? Parity::Odd
                                      : Parity::All;
    opt.reduce = !so.no_reduce;
    return opt;
}

void write_artifact(const CommonOpts& c, const std::string& body) {
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw DomainError(cat("cannot open output file '", c.out, "'"));
    f << body;
}

void result_line(const std::string& sub, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cout << "RESULT " << sub;
    for (const auto& [k, v] : kv) std::cout << " " << k << "=" << v;
    std::cout << "\n";
}

int run_solve(const CommonOpts& c, const SearchOpts& so) {
    FSetting s = make_setting(c);
    SolveOptions opt = make_solve_options(so);
    SolveOutcome out = solve_singular_vectors(s, opt);
    std::string body = c.format == "json"  ? dump_json(json_outcome(s, opt, out))
                       : c.format == "latex" ? latex_outcome(s, out)
                                             : text_outcome(s, out);
    write_artifact(c, body);
    bool empty = out.solutions.empty();
    result_line("solve", {{"setting", s.name},
                          {"degrees", std::to_string(out.degrees_searched.size())},
                          {"solutions", std::to_string(out.solutions.size())},
                          {"status", empty ? "empty" : "ok"}});
    return empty ? kNoSolutions : kOk;
}

int run_verify(const CommonOpts& c, const SearchOpts& so, const EquivarianceOptions& eo) {
    FSetting s = make_setting(c);
    SolveOptions opt = make_solve_options(so);
    SolveOutcome out = solve_singular_vectors(s, opt);
    if (out.solutions.empty()) {
        result_line("verify", {{"setting", s.name}, {"status", "empty"}});
        return kNoSolutions;
    }
    size_t failed = 0;
    Json reports = Json::array();
    std::ostringstream text;
    for (const auto& sv : out.solutions) {
        DiffOperator d = emit_operator(s, sv);
        EquivarianceReport rep = verify_equivariance(s, d, eo);
        if (!rep.passed) ++failed;
        Json r;
        r["degree"] = sv.degree;
        r["operator"] = json_operator(d);
        r["equivariance"] = json_equivariance(rep);
        reports.push_back(std::move(r));
        text << "[degree " << sv.degree << "] "
             << (rep.passed ? "pass" : cat("FAIL: ", rep.detail)) << " (checks " << rep.checks
             << ", controls " << rep.controls_failed << "/" << rep.controls_expected << ")\n"
             << text_operator(d);
    }
    if (c.format == "json") {
        Json j;
        j["schema_version"] = 1;
        j["setting"] = s.name;
        j["reports"] = std::move(reports);
        write_artifact(c, dump_json(j));
    } else {
        write_artifact(c, text.str());
    }
    result_line("verify", {{"setting", s.name},
                           {"solutions", std::to_string(out.solutions.size())},
                           {"failed", std::to_string(failed)},
                           {"status", failed ? "fail" : "ok"}});
    return failed ? kCheckFailed : kOk;
}

int run_compare(const CommonOpts& c, const SearchOpts& so) {
    FSetting s = make_setting(c);
    SolveOptions opt = make_solve_options(so);
    SolveOutcome out = solve_singular_vectors(s, opt);
    if (out.solutions.empty()) {
        result_line("compare", {{"setting", s.name}, {"status", "empty"}});
        return kNoSolutions;
    }
    size_t mismatched = 0;
    std::ostringstream text;
    Json reports = Json::array();
    for (const auto& sv : out.solutions) {
        ComparisonReport rep = s.name == "juhl" ? compare_juhl(s, sv) : compare_rankin_cohen(s, sv);
        if (!rep.matched) ++mismatched;
        text << "[degree " << sv.degree << "] "
             << (rep.matched ? "match" : cat("MISMATCH: ", rep.detail)) << "\n";
        Json r;
        r["degree"] = sv.degree;
        r["matched"] = rep.matched;
        r["detail"] = rep.detail;
        reports.push_back(std::move(r));
    }
    if (c.format == "json") {
        Json j;
        j["schema_version"] = 1;
        j["setting"] = s.name;
        j["reports"] = std::move(reports);
        write_artifact(c, dump_json(j));
    } else {
        write_artifact(c, text.str());
    }
    result_line("compare", {{"setting", s.name},
                            {"solutions", std::to_string(out.solutions.size())},
                            {"mismatched", std::to_string(mismatched)},
                            {"status", mismatched ? "fail" : "ok"}});
    return mismatched ? kCheckFailed : kOk;
}

int run_fourier(const CommonOpts& c, const std::string& expr, std::vector<std::string> vars,
                std::vector<std::string> params) {
    WeylElement t = parse_weyl(expr, vars, params);
    WeylElement hat = fourier_hat(t, dual_var_names(vars));
    std::string body;
    if (c.format == "json") {
        Json j;
        j["input"] = json_weyl(t);
        j["transform"] = json_weyl(hat);
        body = dump_json(j);
    } else if (c.format == "latex") {
        body = cat("\\[ ", latex_weyl(t), " \\;\\longmapsto\\; ", latex_weyl(hat), " \\]\n");
    } else {
        body = cat(t.to_string(), "  ->  ", hat.to_string(), "\n");
    }
    write_artifact(c, body);
    result_line("fourier", {{"terms", std::to_string(hat.terms().size())}, {"status", "ok"}});
    return kOk;
}

int run_dump(const CommonOpts& c) {
    FSetting s = make_setting(c);
    write_artifact(c, s.describe_json() + "\n");
    result_line("dump-setting", {{"setting", s.name}, {"status", "ok"}});
    return kOk;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact singular-vector solver and operator verifier"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI file");
    std::string emit_config;
    app.add_option("--emit-config", emit_config, "write the parsed options to this file and run")
        ->configurable(false); // never emitted into or read from config files

    CommonOpts c_solve, c_verify, c_compare, c_fourier, c_dump;
    SearchOpts s_solve, s_verify, s_compare;
    EquivarianceOptions eo;
    std::string expr;
    std::vector<std::string> fvars{"z1", "z2"}, fparams;

    CLI::App* solve = app.add_subcommand("solve", "find singular vectors")->fallthrough();
    add_common(solve, c_solve);
    add_search(solve, s_solve);

    CLI::App* verify = app.add_subcommand("verify", "solve, emit operators, check equivariance")->fallthrough();
    add_common(verify, c_verify);
    add_search(verify, s_verify);
    verify->add_option("--test-degree", eo.test_degree, "test monomials up to this degree on top of the operator order")
        ->capture_default_str();
    verify->add_option("--samples", eo.samples, "rational parameter specializations")
        ->capture_default_str();
    verify->add_option("--seed", eo.seed, "sample generator seed")->capture_default_str();
    bool no_controls = false;
    verify->add_flag("--no-controls", no_controls, "skip the perturbed-operator controls");

    CLI::App* compare = app.add_subcommand("compare", "check solutions against closed formulas")->fallthrough();
    add_common(compare, c_compare);
    add_search(compare, s_compare);

    CLI::App* fourier = app.add_subcommand("fourier", "transform an operator expression")->fallthrough();
    add_common(fourier, c_fourier);
    fourier->add_option("--expr", expr, "operator expression, e.g. 'z1*dz1 + 3*dz2^2'")
        ->required();
    fourier->add_option("--vars", fvars, "position variable names")
        ->delimiter(',')
        ->capture_default_str();
    fourier->add_option("--params", fparams, "symbolic coefficient names")->delimiter(',');

    CLI::App* dump = app.add_subcommand("dump-setting", "print a setting's full description")->fallthrough();
    add_common(dump, c_dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadRequest;
    }

    if (!emit_config.empty()) {
        std::ofstream f(emit_config, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open config file '" << emit_config << "'\n";
            return kBadRequest;
        }
        f << app.config_to_str(false, false);
    }

    try {
        if (solve->parsed()) return run_solve(c_solve, s_solve);
        if (verify->parsed()) {
            eo.negative_controls = !no_controls;
            return run_verify(c_verify, s_verify, eo);
        }
        if (compare->parsed()) return run_compare(c_compare, s_compare);
        if (fourier->parsed()) return run_fourier(c_fourier, expr, fvars, fparams);
        if (dump->parsed()) return run_dump(c_dump);
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        result_line("error", {{"status", "unsupported"}});
        return kBadRequest;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        result_line("error", {{"status", "bad-input"}});
        return kBadRequest;
    } catch (const DomainError& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        result_line("error", {{"status", "bad-input"}});
        return kBadRequest;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        result_line("error", {{"status", "internal-failure"}});
        return kCheckFailed;
    }
    return kBadRequest;
}

} // namespace fmethod
