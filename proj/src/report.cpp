#include "bca/report.hpp"

#include <json.hpp>

namespace bca {

std::string render_text(const AxiomReport& report) {
    std::string out;
    for (const Check& c : report.checks) {
        out += c.axiom;
        out += c.pass ? ": pass" : ": fail";
        if (c.witness) out += " (witness " + *c.witness + ")";
        if (c.cases) out += " [" + std::to_string(*c.cases) + " cases]";
        out += "\n";
    }
    for (const std::string& note : report.footnotes) out += "note: " + note + "\n";
    return out;
}

std::string render_json(const AxiomReport& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        nlohmann::ordered_json obj;
        obj["axiom"] = c.axiom;
        obj["verdict"] = c.pass ? "pass" : "fail";
        if (c.witness) obj["witness"] = *c.witness;
        if (c.cases) obj["cases"] = *c.cases;
        arr.push_back(obj);
    }
    if (!report.footnotes.empty()) {
        nlohmann::ordered_json notes = nlohmann::ordered_json::array();
        for (const std::string& note : report.footnotes) notes.push_back(note);
        nlohmann::ordered_json wrapper;
        wrapper["verdicts"] = arr;
        wrapper["notes"] = notes;
        return wrapper.dump(2) + "\n";
    }
    return arr.dump(2) + "\n";
}

}  // namespace bca
