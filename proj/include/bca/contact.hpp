#pragma once

#include <array>
#include <optional>
#include <utility>

#include "bca/algebra.hpp"

namespace bca {

/// Finite contact structure: a powerset algebra plus a reflexive symmetric
/// relation on its atoms. The induced contact is x C y iff both are nonzero
/// and related atoms p <= x, q <= y exist; this always satisfies C0-C4.
class ContactStructure {
public:
    /// Loops-only relation: contact is overlap and << coincides with <=.
    static ContactStructure overlap_contact(BooleanAlgebra algebra);

    /// Symmetric closure of the given atom edges plus all loops. Edge
    /// endpoints must be atom names of the algebra.
    static ContactStructure from_atom_graph(
        BooleanAlgebra algebra,
        const std::vector<std::pair<std::string, std::string>>& edges);

    /// Same, with adjacency given as atom index pairs.
    static ContactStructure from_edge_indices(
        BooleanAlgebra algebra, const std::vector<std::pair<int, int>>& edges);

    const BooleanAlgebra& algebra() const { return algebra_; }

    /// All atoms adjacent to some atom of x.
    Element neighborhood(Element x) const;

    bool contact(Element x, Element y) const;
    bool well_inside(Element x, Element y) const;  // x << y iff not x C -y

    bool atoms_adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }

    /// Connectivity of the atom graph (loops ignored).
    bool graph_connected() const;
    int graph_component_count() const;

    friend bool operator==(const ContactStructure& a, const ContactStructure& b) {
        return a.algebra_ == b.algebra_ && a.adj_ == b.adj_;
    }

private:
    BooleanAlgebra algebra_{BooleanAlgebra::make({"a"})};
    std::array<Element, BooleanAlgebra::kMaxAtoms> adj_{};
};

/// Checks every first-order contact axiom on the structure: C0-C4, C5,
/// C5*, DV1-DV7 for the induced well-inside relation, the product lemma,
/// atomlessness, and the meta equivalences "C5 iff C5*" and "C4 follows
/// from C0-C3". Witnesses are the lexicographically least counterexamples.
AxiomReport check_contact_axioms(const ContactStructure& s);

/// Separated non-tangential split of x: a pair (u, z) with u << x, z <= x,
/// u not in contact with z, both nonzero -- least such pair, if any.
/// Throws std::invalid_argument for x = 0.
std::optional<std::pair<Element, Element>> split_separated(const ContactStructure& s,
                                                           Element x);

}  // namespace bca
