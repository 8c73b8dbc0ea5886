#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bca/report.hpp"

namespace bca {

/// Element of a finite powerset algebra: bit i set means atom i is included.
using Element = std::uint32_t;

/// Finite Boolean algebra presented as the powerset lattice over named
/// atoms. At most 24 atoms so elements live in one machine word.
class BooleanAlgebra {
public:
    static constexpr int kMaxAtoms = 24;

    /// Throws std::invalid_argument on empty, oversized or duplicate names.
    static BooleanAlgebra make(std::vector<std::string> atom_names);

    int atom_count() const { return n_; }
    std::uint32_t element_count() const { return 1u << n_; }
    const std::vector<std::string>& atom_names() const { return names_; }

    Element zero() const { return 0; }
    Element unit() const { return (1u << n_) - 1; }
    Element atom(int i) const { return 1u << i; }

    bool is_element(Element x) const { return x <= unit(); }
    void require_element(Element x) const;

    Element meet(Element x, Element y) const { return x & y; }
    Element join(Element x, Element y) const { return x | y; }
    Element complement_of(Element x) const { return unit() & ~x; }
    bool leq(Element x, Element y) const { return (x & y) == x; }
    bool less(Element x, Element y) const { return x != y && leq(x, y); }
    bool overlap(Element x, Element y) const { return (x & y) != 0; }
    bool incompatible(Element x, Element y) const { return (x & y) == 0; }
    bool is_atom(Element x) const { return x != 0 && (x & (x - 1)) == 0; }

    /// Index of an atom name; throws on unknown names.
    int atom_index(const std::string& name) const;
    /// Element from a list of atom names.
    Element element_of(const std::vector<std::string>& atoms) const;

    /// Renders as "{a,b}" ("0" for zero, "1" for the unit).
    std::string format(Element x) const;

    friend bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    int n_ = 0;
};

/// Principal filter of a finite Boolean algebra: every filter at this scale
/// is the up-set of its generator, so the generator is a lossless
/// representation.
struct Filter {
    const BooleanAlgebra* algebra = nullptr;
    Element generator = 0;

    bool contains(Element x) const { return algebra->leq(generator, x); }
    bool is_proper() const { return generator != 0; }
    /// Ultrafilters of a finite algebra are exactly the up-sets of atoms.
    bool is_ultrafilter() const { return algebra->is_atom(generator); }

    friend bool operator==(const Filter& a, const Filter& b) {
        return a.generator == b.generator;
    }
    friend bool operator<(const Filter& a, const Filter& b) {
        return a.generator < b.generator;
    }
};

std::vector<Filter> enumerate_ultrafilters(const BooleanAlgebra& b);

/// All proper filters, i.e. up-sets of the nonzero elements.
std::vector<Filter> enumerate_filters(const BooleanAlgebra& b);

/// Finite-scale ultrafilter lemma: extends a family with the finite
/// intersection property to an ultrafilter containing it (tie-break: the
/// least-index atom below the family meet). Throws std::invalid_argument
/// naming the offending sub-family when some finite meet is zero.
Filter extend_fip_family(const BooleanAlgebra& b, const std::vector<Element>& family);

/// Verifies over every proper filter that being an ultrafilter is
/// equivalent to: x.y = 0 implies -x or -y belongs to the filter.
AxiomReport check_ultrafilter_characterization(const BooleanAlgebra& b);

}  // namespace bca
