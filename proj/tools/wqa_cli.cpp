#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wqa/wqa.h"

namespace {

enum Exit { Pass = 0, CheckFailure = 1, Usage = 2, Internal = 3 };

struct Options {
    std::string mode = "generic";
    int d = 0;
    std::string flavor = "w";
    long degree_bound = 4;
    std::string output = "text";
    std::vector<std::string> checks;
    bool no_timing = false;
    std::string report_file;
    std::vector<std::string> exprs;
    bool all = false;
    bool with_rhat = false;
};

// Failure from the C API.
struct ApiError {
    int status;
    std::string message;
};

void check(int status) {
    if (status != WQA_OK) throw ApiError{status, wqa_last_error()};
}

int exit_for(int status) {
    switch (status) {
    case WQA_SINGULAR:
    case WQA_ALPHA_NOT_INVERTIBLE:
    case WQA_NULL_ARGUMENT:
    case WQA_INTERNAL_ERROR: return Internal;
    default: return Usage;
    }
}

std::string take(char* s) {
    std::string out = s ? s : "";
    wqa_string_free(s);
    return out;
}

class Context {
public:
    explicit Context(const Options& o) {
        check(wqa_context_create(o.mode == "cyclotomic" ? o.d : 0, o.flavor == "v", &ctx_));
    }
    ~Context() { wqa_context_destroy(ctx_); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
    wqa_context* get() const { return ctx_; }

private:
    wqa_context* ctx_ = nullptr;
};

class Quotient {
public:
    explicit Quotient(int d) { check(wqa_quotient_create(d, &q_)); }
    ~Quotient() { wqa_quotient_destroy(q_); }
    Quotient(const Quotient&) = delete;
    Quotient& operator=(const Quotient&) = delete;
    wqa_quotient* get() const { return q_; }

private:
    wqa_quotient* q_ = nullptr;
};

void emit(const Options& o, std::string text) {
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (o.report_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.report_file, std::ios::binary);
    if (!f) throw ApiError{WQA_INVALID_ARGUMENT, "cannot write " + o.report_file};
    f << text;
}

std::vector<std::string> split_csv(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& s : items) {
        std::stringstream ss(s);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

void validate(const Options& o, bool has_d, bool quotient_command) {
    if (o.mode == "cyclotomic" && !has_d) throw CLI::ValidationError("--d", "required with --mode cyclotomic");
    if (!quotient_command && o.mode == "generic" && has_d)
        throw CLI::ValidationError("--d", "only valid with --mode cyclotomic");
}

using Fn = int (*)(const wqa_context*, const char*, char**);

int map_exprs(const Options& o, Fn fn, const char* field) {
    Context ctx(o);
    if (o.output == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : o.exprs) {
            char* s = nullptr;
            check(fn(ctx.get(), e.c_str(), &s));
            arr.push_back({{"input", e}, {field, take(s)}});
        }
        emit(o, arr.dump(2));
    } else {
        std::string text;
        for (const auto& e : o.exprs) {
            char* s = nullptr;
            check(fn(ctx.get(), e.c_str(), &s));
            text += take(s) + "\n";
        }
        emit(o, text);
    }
    return Pass;
}

int run_suites(const Options& o, const std::vector<std::string>& names) {
    Context ctx(o);
    bool all_pass = true;
    std::string text;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& n : names) {
        int passed = 0;
        char* s = nullptr;
        check(wqa_run_suite(ctx.get(), n.c_str(), o.degree_bound, o.output == "json", &passed, &s));
        all_pass = all_pass && passed;
        if (o.output == "json")
            reports.push_back(nlohmann::ordered_json::parse(take(s)));
        else
            text += take(s);
    }
    if (o.output == "json") {
        if (reports.size() == 1)
            emit(o, reports[0].dump(2));
        else
            emit(o, nlohmann::ordered_json{{"pass", all_pass}, {"reports", reports}}.dump(2));
    } else {
        if (names.size() > 1) text += std::string("overall: ") + (all_pass ? "PASS" : "FAIL") + "\n";
        emit(o, text);
    }
    return all_pass ? Pass : CheckFailure;
}

std::vector<std::string> all_suites() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < wqa_suite_count(); ++i) out.push_back(wqa_suite_name(i));
    return out;
}

int quotient_order(const Options& o, bool has_d) { return has_d ? o.d : 3; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the weak quantum algebras wsl_q(2) and vsl_q(2)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(wqa_version()));

    Options o;
    app.add_option("--mode", o.mode, "Coefficient field: generic q or a cyclotomic root of unity")
        ->check(CLI::IsMember({"generic", "cyclotomic"}))
        ->capture_default_str();
    auto* d_opt = app.add_option("--d", o.d, "Order of the root of unity (odd, > 1)");
    app.add_option("--flavor", o.flavor, "Algebra: w or the sandwiched v")
        ->check(CLI::IsMember({"w", "v"}))
        ->capture_default_str();
    app.add_option("--degree-bound", o.degree_bound, "Total degree bound for basis enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output,--format", o.output, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--checks", o.checks, "Comma separated check or suite names")->delimiter(',');
    app.add_flag("--no-timing", o.no_timing, "Write elapsed_ms as 0 for byte-identical reports");
    app.add_option("--report-file", o.report_file, "Write the report to a file instead of stdout");

    auto* normalize = app.add_subcommand("normalize", "Normal form of expressions");
    normalize->add_option("expr", o.exprs, "Expressions")->required();
    auto* coproduct = app.add_subcommand("coproduct", "Coproduct of expressions");
    coproduct->add_option("expr", o.exprs, "Expressions")->required();
    app.add_subcommand("antipode-check", "Weak antipode axioms and T^2 on basis monomials");
    app.add_subcommand("grouplike", "Group-like elements and the regular monoid identities");
    app.add_subcommand("ore-check", "Iterated Ore extension against the normal-form engine");
    auto* rmatrix = app.add_subcommand("rmatrix", "R-matrix of the root-of-unity quotient");
    rmatrix->require_subcommand(1);
    rmatrix->fallthrough();
    auto* build = rmatrix->add_subcommand("build", "Export R (and R-hat)");
    build->add_flag("--with-rhat", o.with_rhat, "Include the inverse relative to J (x) J");
    auto* verify = rmatrix->add_subcommand("verify", "Verify qybe, regular, intertwine, quasitriangular, rho");
    auto* axioms = app.add_subcommand("axioms", "Run check suites");
    axioms->add_flag("--all", o.all, "Run every registered suite");
    bool list = false;
    axioms->add_flag("--list", list, "List the registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Pass : Usage;
    }

    try {
        validate(o, d_opt->count() > 0, rmatrix->parsed());
        if (normalize->parsed()) return map_exprs(o, wqa_normalize, "normal_form");
        if (coproduct->parsed()) return map_exprs(o, wqa_coproduct, "coproduct");
        if (app.got_subcommand("antipode-check")) return run_suites(o, {"weak-antipode", "antipode-square"});
        if (app.got_subcommand("grouplike")) return run_suites(o, {"grouplike"});
        if (app.got_subcommand("ore-check")) return run_suites(o, {"ore"});
        if (axioms->parsed() && list) {
            std::string text;
            for (std::size_t i = 0; i < wqa_suite_count(); ++i)
                text += std::string(wqa_suite_name(i)) + "  " + wqa_suite_summary(i) + "\n";
            emit(o, text);
            return Pass;
        }
        if (build->parsed()) {
            Quotient q(quotient_order(o, d_opt->count() > 0));
            char* s = nullptr;
            check(wqa_rmatrix_export(q.get(), o.output.c_str(), o.with_rhat, &s));
            emit(o, take(s));
            return Pass;
        }
        if (verify->parsed()) {
            Quotient q(quotient_order(o, d_opt->count() > 0));
            std::string csv;
            for (const auto& c : split_csv(o.checks)) csv += (csv.empty() ? "" : ",") + c;
            int passed = 0;
            char* s = nullptr;
            check(wqa_rmatrix_verify(q.get(), csv.c_str(), o.output.c_str(), !o.no_timing, &passed, &s));
            emit(o, take(s));
            return passed ? Pass : CheckFailure;
        }
        if (axioms->parsed()) {
            const auto names = split_csv(o.checks);
            if (o.all && !names.empty()) throw CLI::ValidationError("--all", "cannot be combined with --checks");
            if (!o.all && names.empty()) throw CLI::ValidationError("axioms", "give --all or --checks");
            return run_suites(o, o.all ? all_suites() : names);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const ApiError& e) {
        std::cerr << "error: " << wqa_status_name(e.status) << ": " << e.message << "\n";
        return exit_for(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Internal;
    }
    return Usage;
}
