#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bca {

/// One verdict line. Exhaustive passes carry the number of cases examined;
/// failures always carry a witness.
struct Check {
    std::string axiom;
    bool pass = false;
    std::optional<std::string> witness;
    std::optional<std::uint64_t> cases;

    static Check passed(std::string axiom, std::uint64_t cases) {
        Check c;
        c.axiom = std::move(axiom);
        c.pass = true;
        c.cases = cases;
        return c;
    }
    static Check failed(std::string axiom, std::string witness) {
        Check c;
        c.axiom = std::move(axiom);
        c.witness = std::move(witness);
        return c;
    }
};

struct AxiomReport {
    std::vector<Check> checks;
    std::vector<std::string> footnotes;

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* find(const std::string& axiom) const {
        for (const Check& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
};

/// Semi-decision verdict for countable carriers.
struct Verdict {
    enum class Status { Holds, Fails, HoldsToDepth };
    Status status = Status::Holds;
    std::optional<int> depth;       // HoldsToDepth
    std::optional<std::string> witness;  // Fails
    std::string detail;

    static Verdict holds(std::string detail = "") {
        Verdict v;
        v.status = Status::Holds;
        v.detail = std::move(detail);
        return v;
    }
    static Verdict fails(std::string witness, std::string detail = "") {
        Verdict v;
        v.status = Status::Fails;
        v.witness = std::move(witness);
        v.detail = std::move(detail);
        return v;
    }
    static Verdict holds_to_depth(int d, std::string detail = "") {
        Verdict v;
        v.status = Status::HoldsToDepth;
        v.depth = d;
        v.detail = std::move(detail);
        return v;
    }

    bool ok() const { return status != Status::Fails; }
    std::string status_str() const {
        switch (status) {
            case Status::Holds: return "holds";
            case Status::Fails: return "fails";
            default: return "holds-to-depth";
        }
    }
};

std::string render_text(const AxiomReport& report);
std::string render_json(const AxiomReport& report);

}  // namespace bca
