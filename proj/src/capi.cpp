#include "wqa/wqa.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "wqa/hopf.hpp"
#include "wqa/quotient.hpp"
#include "wqa/suites.hpp"

using namespace wqa;

struct wqa_context {
    int d = 0;
    bool v = false;
    std::variant<Hopf<RationalFunctionField>, Hopf<CyclotomicField>> hopf;
};

struct wqa_quotient {
    explicit wqa_quotient(int d) : q(d) {}
    QuotientAlgebra q;
    std::once_flag r_once, rhat_once;
    std::optional<QTensor> r, rhat;

    const QTensor& R() {
        std::call_once(r_once, [this] { r.emplace(build_R(q)); });
        return *r;
    }
    const QTensor& Rhat() {
        const QTensor& base = R();
        std::call_once(rhat_once, [this, &base] { rhat.emplace(compute_Rhat(q, base)); });
        return *rhat;
    }
};

namespace {

thread_local std::string last_error;

int fail(int status, const std::string& msg) {
    last_error = msg;
    return status;
}

template <class F>
int guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return WQA_OK;
    } catch (const Error& e) {
        return fail(static_cast<int>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(WQA_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(WQA_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(WQA_INTERNAL_ERROR, "unknown exception");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

#define WQA_REQUIRE(ptr)                                                                                             \
    do {                                                                                                             \
        if (!(ptr)) return fail(WQA_NULL_ARGUMENT, #ptr " is null");                                                 \
    } while (0)

template <class F>
int with_hopf(const wqa_context* ctx, F&& body) {
    return guarded([&] { std::visit([&](const auto& h) { body(h); }, ctx->hopf); });
}

RunConfig config_of(const wqa_context* ctx, long bound) {
    RunConfig cfg;
    cfg.mode = ctx->d ? Mode::Cyclotomic : Mode::Generic;
    cfg.d = ctx->d ? ctx->d : 3;
    cfg.v_flavor = ctx->v;
    cfg.degree_bound = bound;
    return cfg;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"rho", "regular", "intertwine", "quasitriangular", "qybe"};
    return names;
}

} // namespace

extern "C" {

const char* wqa_version(void) { return "1.0.0"; }

const char* wqa_status_name(int status) {
    switch (status) {
    case WQA_OK: return "Ok";
    case WQA_NULL_ARGUMENT: return "NullArgument";
    case WQA_INTERNAL_ERROR: return "InternalError";
    default: break;
    }
    if (status >= WQA_SYNTAX_ERROR && status <= WQA_MODE_MISMATCH) return error_code_name(static_cast<ErrorCode>(status));
    return "UnknownStatus";
}

const char* wqa_last_error(void) { return last_error.c_str(); }

void wqa_string_free(char* s) { std::free(s); }

int wqa_context_create(int cyclotomic_d, int v_flavor, wqa_context** out) {
    WQA_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        const Flavor fl = v_flavor ? Flavor::V : Flavor::W;
        if (cyclotomic_d == 0) {
            *out = new wqa_context{0, v_flavor != 0, Hopf<RationalFunctionField>(Algebra<RationalFunctionField>(RationalFunctionField(), fl))};
        } else {
            *out = new wqa_context{cyclotomic_d, v_flavor != 0,
                                   Hopf<CyclotomicField>(Algebra<CyclotomicField>(CyclotomicField(cyclotomic_d), fl))};
        }
    });
}

void wqa_context_destroy(wqa_context* ctx) { delete ctx; }

int wqa_normalize(const wqa_context* ctx, const char* expr, char** out) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(expr);
    WQA_REQUIRE(out);
    return with_hopf(ctx, [&](const auto& h) {
        const auto& a = h.algebra();
        *out = dup(a.to_string(a.eval(expr)));
    });
}

int wqa_coproduct(const wqa_context* ctx, const char* expr, char** out) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(expr);
    WQA_REQUIRE(out);
    return with_hopf(ctx, [&](const auto& h) { *out = dup(h.to_string(h.coproduct(h.algebra().eval(expr)))); });
}

int wqa_counit(const wqa_context* ctx, const char* expr, char** out) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(expr);
    WQA_REQUIRE(out);
    return with_hopf(ctx, [&](const auto& h) { *out = dup(h.counit(h.algebra().eval(expr)).to_string()); });
}

int wqa_antipode(const wqa_context* ctx, const char* expr, char** out) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(expr);
    WQA_REQUIRE(out);
    return with_hopf(ctx, [&](const auto& h) {
        const auto& a = h.algebra();
        *out = dup(a.to_string(h.antipode(a.eval(expr))));
    });
}

int wqa_grouplike_check(const wqa_context* ctx, long i, long j, int* result) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(result);
    return with_hopf(ctx, [&](const auto& h) { *result = grouplike_check(h, i, j) ? 1 : 0; });
}

int wqa_grouplike_set(const wqa_context* ctx, long bound, char** out) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(out);
    return with_hopf(ctx, [&](const auto& h) {
        std::string s;
        for (const auto& m : grouplike_set(h, bound)) {
            const std::string name = h.algebra().to_string(m);
            s += (s.empty() ? "" : ", ") + (name.empty() ? std::string("1") : name);
        }
        *out = dup(s);
    });
}

size_t wqa_suite_count(void) { return suites().size(); }

const char* wqa_suite_name(size_t index) { return index < suites().size() ? suites()[index].name.c_str() : nullptr; }

const char* wqa_suite_summary(size_t index) {
    return index < suites().size() ? suites()[index].summary.c_str() : nullptr;
}

int wqa_run_suite(const wqa_context* ctx, const char* name, long degree_bound, int json, int* passed, char** out) {
    WQA_REQUIRE(ctx);
    WQA_REQUIRE(name);
    WQA_REQUIRE(passed);
    WQA_REQUIRE(out);
    return guarded([&] {
        const Report r = run_suite(name, config_of(ctx, degree_bound));
        *passed = r.passed() ? 1 : 0;
        *out = dup(json ? r.to_json() : r.to_text());
    });
}

int wqa_quotient_create(int d, wqa_quotient** out) {
    WQA_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new wqa_quotient(d); });
}

void wqa_quotient_destroy(wqa_quotient* q) { delete q; }

int wqa_quotient_dim(const wqa_quotient* q, size_t* dim) {
    WQA_REQUIRE(q);
    WQA_REQUIRE(dim);
    *dim = q->q.dim();
    return WQA_OK;
}

int wqa_rmatrix_export(wqa_quotient* q, const char* format, int with_rhat, char** out) {
    WQA_REQUIRE(q);
    WQA_REQUIRE(format);
    WQA_REQUIRE(out);
    return guarded([&] {
        const std::string fmt = format;
        if (fmt != "json" && fmt != "text") throw Error(ErrorCode::UnsupportedFormat, "unknown format '" + fmt + "'");
        *out = dup(export_R(q->q, q->R(), fmt, with_rhat ? &q->Rhat() : nullptr));
    });
}

int wqa_rmatrix_verify(wqa_quotient* q, const char* checks, const char* format, int timing, int* passed, char** out) {
    WQA_REQUIRE(q);
    WQA_REQUIRE(format);
    WQA_REQUIRE(passed);
    WQA_REQUIRE(out);
    return guarded([&] {
        const std::string fmt = format;
        if (fmt != "json" && fmt != "text") throw Error(ErrorCode::UnsupportedFormat, "unknown format '" + fmt + "'");
        std::set<std::string> wanted;
        std::stringstream ss(checks ? checks : "");
        for (std::string item; std::getline(ss, item, ',');) {
            if (item.empty()) continue;
            bool known = false;
            for (const auto& n : check_names()) known = known || n == item;
            if (!known)
                throw Error(ErrorCode::InvalidArgument,
                            "unknown check '" + item + "' (expected qybe, regular, intertwine, quasitriangular, rho)");
            wanted.insert(item);
        }
        if (wanted.empty()) wanted.insert(check_names().begin(), check_names().end());

        const auto& qa = q->q;
        const QTensor& r = q->R();
        std::vector<TensorCheck> out_checks;
        auto append = [&](std::vector<TensorCheck> v) {
            for (auto& c : v) out_checks.push_back(std::move(c));
        };
        for (const auto& n : check_names()) {
            if (!wanted.count(n)) continue;
            if (n == "rho")
                out_checks.push_back(compare_tensors(qa.d(), "rho(R-tilde) = R", build_R_tilde(qa), r, 0));
            else if (n == "regular")
                append(check_regularity(qa, r, q->Rhat()));
            else if (n == "intertwine")
                append(check_intertwine(qa, r));
            else if (n == "quasitriangular")
                append(check_quasitriangular(qa, r));
            else
                out_checks.push_back(check_qybe(qa, r));
        }
        bool ok = true;
        for (const auto& c : out_checks) ok = ok && c.pass();
        *passed = ok ? 1 : 0;
        *out = dup(fmt == "json" ? check_json(out_checks, timing != 0) : check_text(out_checks, timing != 0));
    });
}

} // extern "C"
