#pragma once

#include "bca/contact.hpp"

namespace bca {

/// Members of the principal filter, ascending by mask.
std::vector<Element> filter_members(const BooleanAlgebra& b, Element generator);

/// A principal filter is round iff its generator is well inside itself.
bool is_round_filter(const ContactStructure& s, const Filter& f);

std::vector<Filter> enumerate_round_filters(const ContactStructure& s);

/// Ends: the maximal round filters.
std::vector<Filter> enumerate_ends(const ContactStructure& s);

/// x is in contact with every member of the filter.
bool contacts_filter(const ContactStructure& s, Element x, const Filter& f);

/// Four equivalences, each exhaustively quantified:
///  - over round filters, the end condition (x and y separated implies -x or
///    -y in the filter) holds iff the filter is maximal round;
///  - over round filters, the end condition holds iff every two regions in
///    contact with the whole filter are in contact with each other;
///  - over round filters, membership of x is equivalent to some member being
///    separated from -x;
///  - over all filters, the ultrafilter condition characterizes ultrafilters.
AxiomReport check_end_characterizations(const ContactStructure& s);

/// Exact check of r0-r3 for a finite region set; failures carry the least
/// violating tuple. Throws std::invalid_argument on an empty set.
Verdict is_g_representative(const ContactStructure& s, const std::vector<Element>& q);

/// Admissible G-point generator: g is well inside itself and any two
/// regions overlapping g are in contact.
bool is_g_point_generator(const ContactStructure& s, Element g);

/// Filters generated by G-representatives. A finite G-representative is a
/// well-inside chain; overlap with its minimum forces overlap with every
/// larger member, so the generated filters are exactly the up-sets of the
/// admissible minima.
std::vector<Filter> enumerate_g_points(const ContactStructure& s);

/// Does some G-representative contain x?
bool has_g_representative_through(const ContactStructure& s, Element x);

AxiomReport check_g1_g2(const ContactStructure& s);

/// Whitehead covering for finite region sets: every member of a has a
/// member of b below it.
bool covers_finite(const BooleanAlgebra& b, const std::vector<Element>& a,
                   const std::vector<Element>& bs);

/// Abstractive for finite sets: r0, well-inside comparability, and no
/// minimum -- never satisfiable in a finite algebra, where every chain has
/// a least element.
Verdict is_abstractive_finite(const ContactStructure& s, const std::vector<Element>& a);

/// Whitehead representative check on a finite structure: exact but vacuous,
/// since no finite set is abstractive.
Verdict is_w_representative_finite(const ContactStructure& s,
                                   const std::vector<Element>& a);

struct SimilarityQuotient {
    std::vector<std::vector<int>> classes;  // indices into the input reps
    std::vector<Filter> class_filters;      // generated filter per class
    bool injective = false;
    bool onto_g_points = false;
};

/// Partitions G-representatives by mutual covering and maps each class to
/// its generated filter. Throws if some input fails r0-r3.
SimilarityQuotient quotient_by_similarity(const ContactStructure& s,
                                          const std::vector<std::vector<Element>>& reps);

}  // namespace bca
