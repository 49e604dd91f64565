#include <doctest.h>

#include <json.hpp>

#include <string>

#include "wqa/wqa.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    wqa_string_free(s);
    return out;
}

struct Ctx {
    explicit Ctx(int d = 0, int v = 0) { REQUIRE(wqa_context_create(d, v, &p) == WQA_OK); }
    ~Ctx() { wqa_context_destroy(p); }
    wqa_context* p = nullptr;
};

std::string call(int (*fn)(const wqa_context*, const char*, char**), const wqa_context* c, const char* e) {
    char* s = nullptr;
    REQUIRE(fn(c, e, &s) == WQA_OK);
    return take(s);
}

} // namespace

TEST_CASE("context and expression calls") {
    Ctx w;
    CHECK(call(wqa_normalize, w.p, "K*E - q^2*E*K") == "0");
    CHECK(call(wqa_normalize, w.p, "1") == "1");
    CHECK(call(wqa_normalize, w.p, "K*Kb") == "J");
    CHECK(call(wqa_coproduct, w.p, "E") == "1 ⊗ E + E ⊗ K");
    CHECK(call(wqa_counit, w.p, "K + 2*E") == "1");
    CHECK(call(wqa_antipode, w.p, "E") == "-E*Kb");

    Ctx v(0, 1);
    CHECK(call(wqa_coproduct, v.p, "Eh") == "J ⊗ Eh + Eh ⊗ K");

    Ctx c3(3);
    CHECK(call(wqa_normalize, c3.p, "q^3") == "1");

    int g = -1;
    CHECK(wqa_grouplike_check(w.p, 2, 1, &g) == WQA_OK);
    CHECK(g == 1);
    char* s = nullptr;
    REQUIRE(wqa_grouplike_set(w.p, 1, &s) == WQA_OK);
    CHECK(take(s) == "1, J, K, Kb");
}

TEST_CASE("error codes") {
    wqa_context* bad = nullptr;
    CHECK(wqa_context_create(4, 0, &bad) == WQA_INVALID_ORDER);
    CHECK(bad == nullptr);
    CHECK(std::string(wqa_last_error()).size() > 0);
    CHECK(std::string(wqa_status_name(WQA_INVALID_ORDER)) == "InvalidOrder");
    CHECK(std::string(wqa_status_name(WQA_OK)) == "Ok");
    CHECK(wqa_context_create(0, 0, nullptr) == WQA_NULL_ARGUMENT);

    Ctx w;
    char* s = nullptr;
    CHECK(wqa_normalize(w.p, "E +* F", &s) == WQA_SYNTAX_ERROR);
    CHECK(s == nullptr);
    CHECK(wqa_normalize(w.p, "X", &s) == WQA_UNKNOWN_SYMBOL);
    CHECK(wqa_normalize(w.p, nullptr, &s) == WQA_NULL_ARGUMENT);
    Ctx v(0, 1);
    CHECK(wqa_normalize(v.p, "E", &s) == WQA_UNSUPPORTED_WORD);
    // a successful call clears the message
    CHECK(wqa_normalize(w.p, "E", &s) == WQA_OK);
    take(s);
    CHECK(std::string(wqa_last_error()).empty());
    int g = 0;
    CHECK(wqa_grouplike_check(w.p, -1, 0, &g) == WQA_INDEX_OUT_OF_RANGE);
}

TEST_CASE("suites through the C API") {
    REQUIRE(wqa_suite_count() == 10);
    CHECK(std::string(wqa_suite_name(0)) == "weak-antipode");
    CHECK(wqa_suite_name(99) == nullptr);
    Ctx w;
    int passed = 0;
    char* s = nullptr;
    REQUIRE(wqa_run_suite(w.p, "grouplike", 3, 1, &passed, &s) == WQA_OK);
    CHECK(passed == 1);
    const auto doc = nlohmann::json::parse(take(s));
    CHECK(doc["pass"] == true);
    CHECK(wqa_run_suite(w.p, "nope", 3, 1, &passed, &s) == WQA_INVALID_ARGUMENT);
    CHECK(wqa_run_suite(w.p, "grouplike", 0, 1, &passed, &s) == WQA_INVALID_ARGUMENT);
}

TEST_CASE("quotient handle") {
    wqa_quotient* q = nullptr;
    CHECK(wqa_quotient_create(2, &q) == WQA_INVALID_ORDER);
    REQUIRE(wqa_quotient_create(3, &q) == WQA_OK);
    size_t dim = 0;
    CHECK(wqa_quotient_dim(q, &dim) == WQA_OK);
    CHECK(dim == 36);

    char* s = nullptr;
    REQUIRE(wqa_rmatrix_export(q, "json", 1, &s) == WQA_OK);
    const auto doc = nlohmann::json::parse(take(s));
    CHECK(doc["R"].size() == 27);
    CHECK(doc["Rhat"].size() == 27);
    CHECK(wqa_rmatrix_export(q, "yaml", 0, &s) == WQA_UNSUPPORTED_FORMAT);

    int passed = 0;
    REQUIRE(wqa_rmatrix_verify(q, "qybe", "json", 0, &passed, &s) == WQA_OK);
    CHECK(passed == 1);
    const auto checks = nlohmann::json::parse(take(s));
    REQUIRE(checks.size() == 1);
    CHECK(checks[0]["check"] == "R12 R13 R23 = R23 R13 R12");
    CHECK(checks[0]["equal"] == true);
    CHECK(checks[0]["elapsed_ms"] == 0);

    REQUIRE(wqa_rmatrix_verify(q, nullptr, "text", 1, &passed, &s) == WQA_OK);
    const std::string text = take(s);
    CHECK(passed == 1);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("equal: true") != std::string::npos);
    CHECK(wqa_rmatrix_verify(q, "qybe,bogus", "text", 1, &passed, &s) == WQA_INVALID_ARGUMENT);
    wqa_quotient_destroy(q);
}
