#include <json.hpp>

#include "wqa/report.hpp"

namespace wqa {

void Report::merge(const Report& other) {
    for (const auto& it : other.items) {
        ReportItem copy = it;
        copy.input = other.name + ": " + it.input;
        items.push_back(std::move(copy));
    }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& it : items)
        if (!it.pass && !it.informational) ++n;
    return n;
}

std::string Report::to_json(int indent) const {
    nlohmann::ordered_json items_json = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        nlohmann::ordered_json j;
        j["input"] = it.input;
        j["expected"] = it.expected;
        j["got"] = it.got;
        j["pass"] = it.pass;
        if (it.informational) j["informational"] = true;
        items_json.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["name"] = name;
    doc["pass"] = passed();
    doc["failures"] = failures();
    doc["items"] = std::move(items_json);
    return doc.dump(indent);
}

std::string Report::to_text() const {
    std::string out = name + ": " + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(items.size()) +
                      " items, " + std::to_string(failures()) + " failures)\n";
    for (const auto& it : items) {
        const char* tag = it.pass ? "ok  " : it.informational ? "note" : "FAIL";
        out += std::string("  [") + tag + "] " + it.input;
        if (!it.pass) out += "\n         expected: " + it.expected + "\n         got:      " + it.got;
        out += "\n";
    }
    return out;
}

} // namespace wqa
