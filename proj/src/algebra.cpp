#include "bca/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bca {

BooleanAlgebra BooleanAlgebra::make(std::vector<std::string> atom_names) {
    if (atom_names.empty()) throw std::invalid_argument("at least one atom required");
    if (atom_names.size() > kMaxAtoms)
        throw std::invalid_argument("at most 24 atoms supported, got " +
                                    std::to_string(atom_names.size()));
    std::set<std::string> seen;
    for (const std::string& name : atom_names)
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate atom name: " + name);
    BooleanAlgebra b;
    b.names_ = std::move(atom_names);
    b.n_ = static_cast<int>(b.names_.size());
    return b;
}

void BooleanAlgebra::require_element(Element x) const {
    if (!is_element(x))
        throw std::invalid_argument("value " + std::to_string(x) +
                                    " is not an element of this algebra");
}

int BooleanAlgebra::atom_index(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("unknown atom name: " + name);
}

Element BooleanAlgebra::element_of(const std::vector<std::string>& atoms) const {
    Element x = 0;
    for (const std::string& name : atoms) x |= atom(atom_index(name));
    return x;
}

std::string BooleanAlgebra::format(Element x) const {
    if (x == 0) return "0";
    if (x == unit()) return "1";
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        if (!(x & atom(i))) continue;
        if (!first) out += ",";
        out += names_[i];
        first = false;
    }
    return out + "}";
}

std::vector<Filter> enumerate_ultrafilters(const BooleanAlgebra& b) {
    std::vector<Filter> out;
    for (int i = 0; i < b.atom_count(); ++i) out.push_back(Filter{&b, b.atom(i)});
    return out;
}

std::vector<Filter> enumerate_filters(const BooleanAlgebra& b) {
    std::vector<Filter> out;
    for (Element g = 1; g <= b.unit(); ++g) out.push_back(Filter{&b, g});
    return out;
}

Filter extend_fip_family(const BooleanAlgebra& b, const std::vector<Element>& family) {
    Element m = b.unit();
    std::vector<Element> taken;
    for (Element x : family) {
        b.require_element(x);
        taken.push_back(x);
        m = b.meet(m, x);
        if (m == 0) {
            std::string parts;
            for (Element t : taken) {
                if (!parts.empty()) parts += " . ";
                parts += b.format(t);
            }
            throw std::invalid_argument("family violates FIP: " + parts + " = 0");
        }
    }
    for (int i = 0; i < b.atom_count(); ++i)
        if (b.leq(b.atom(i), m)) return Filter{&b, b.atom(i)};
    throw std::logic_error("nonzero element with no atom below");
}

AxiomReport check_ultrafilter_characterization(const BooleanAlgebra& b) {
    AxiomReport report;
    std::uint64_t filters = 0;
    std::optional<std::string> witness;
    for (const Filter& f : enumerate_filters(b)) {
        ++filters;
        bool cond = true;
        Element wx = 0, wy = 0;
        for (Element x = 0; x <= b.unit() && cond; ++x)
            for (Element y = 0; y <= b.unit(); ++y) {
                if (!b.incompatible(x, y)) continue;
                if (f.contains(b.complement_of(x)) || f.contains(b.complement_of(y)))
                    continue;
                cond = false;
                wx = x;
                wy = y;
                break;
            }
        if (cond != f.is_ultrafilter()) {
            witness = "filter " + b.format(f.generator);
            if (!f.is_ultrafilter() && cond) *witness += " satisfies the condition";
            if (f.is_ultrafilter() && !cond)
                *witness += " fails at x=" + b.format(wx) + " y=" + b.format(wy);
            break;
        }
    }
    if (witness)
        report.checks.push_back(Check::failed("ultrafilter-condition-iff-ultrafilter",
                                              *witness));
    else
        report.checks.push_back(
            Check::passed("ultrafilter-condition-iff-ultrafilter", filters));
    return report;
}

}  // namespace bca
