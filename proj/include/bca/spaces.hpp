#pragma once

#include <set>

#include "bca/points.hpp"

namespace bca {

enum class PointKind { Stone, End, Grz };

/// Finite topological space generated by the Stone-style basis over a point
/// enumeration (ultrafilters, ends or G-points). Point sets are bitmasks
/// over the point list.
struct TopSpace {
    ContactStructure structure;
    PointKind kind = PointKind::Stone;
    std::vector<Element> point_generators;       // filter generators
    std::vector<std::string> point_labels;
    std::vector<std::uint32_t> basis;            // per algebra element
    std::vector<std::uint32_t> opens;            // sorted, includes 0 and all
    bool flagged_empty = false;
    std::string flag_reason;

    int point_count() const { return static_cast<int>(point_generators.size()); }
    std::uint32_t all_points() const {
        return point_count() == 32 ? ~0u : (1u << point_count()) - 1;
    }
    bool is_open(std::uint32_t set) const;

    std::uint32_t interior(std::uint32_t set) const;
    std::uint32_t closure(std::uint32_t set) const;
    bool regular_open(std::uint32_t set) const {
        return is_open(set) && interior(closure(set)) == set;
    }
    std::vector<std::uint32_t> regular_opens() const;
    std::vector<std::uint32_t> clopens() const;
    /// Atoms of the clopen algebra, i.e. the components of the space.
    std::vector<std::uint32_t> components() const;

    std::string format_point_set(std::uint32_t set) const;
};

/// Builds the space of the chosen point kind; validates that the basis
/// covers the points and is closed under intersection. A Grz space with no
/// points is flagged, not an error.
TopSpace point_space(const ContactStructure& s, PointKind kind);

/// T1, Hausdorff, connectivity, zero-dimensionality, total disconnectedness,
/// discreteness, compactness (with an executed finite-subcover check) and
/// concentricity.
AxiomReport check_space_properties(const TopSpace& x);

/// The clopen algebra of a finite space, presented over its components.
BooleanAlgebra clopen_algebra(const TopSpace& x);

struct DualityReport {
    AxiomReport checks;
    std::vector<std::pair<std::string, std::string>> forward;  // element -> point set
    std::vector<std::pair<std::string, std::string>> backward;
};

/// Verifies that x -> U(x) is a Boolean isomorphism between the algebra and
/// the clopen algebra of its ultrafilter space.
DualityReport verify_stone_duality(const BooleanAlgebra& b);

/// Verifies the end-space assignment x -> E(x): operation preservation, the
/// well-inside biconditional, density among the regular opens of the end
/// space, injectivity and surjectivity.
DualityReport verify_de_vries_embedding(const ContactStructure& s);

/// Maximum antichain sizes (pairwise incompatible regions, pairwise disjoint
/// nonempty opens) and, when G1 holds, the equivalence between
/// incompatibility and disjointness of the basic G-point sets.
AxiomReport ccc_report(const ContactStructure& s);

/// Basis inclusion dump for inspection (one line per algebra element).
std::string basis_dump(const TopSpace& x);

}  // namespace bca
