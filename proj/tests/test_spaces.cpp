#include <doctest.h>

#include "bca/spaces.hpp"
#include "helpers.hpp"

using namespace bca;
using namespace bca::testing;

namespace {

ContactStructure path3() {
    return ContactStructure::from_atom_graph(BooleanAlgebra::make({"a", "b", "c"}),
                                             {{"a", "b"}, {"b", "c"}});
}

ContactStructure overlap_n(int n) {
    return ContactStructure::overlap_contact(BooleanAlgebra::make(atom_names(n)));
}

}  // namespace

TEST_CASE("stone space of a three-atom algebra is discrete") {
    TopSpace x = point_space(overlap_n(3), PointKind::Stone);
    CHECK(x.point_count() == 3);
    CHECK(x.opens.size() == 8);  // all subsets
    AxiomReport report = check_space_properties(x);
    CHECK(report.find("hausdorff")->pass);
    CHECK(report.find("zero-dimensional")->pass);
    CHECK(report.find("totally-disconnected")->pass);
    CHECK(report.find("discrete")->pass);
    CHECK(report.find("T1")->pass);
    CHECK(report.find("compact")->pass);
    CHECK_FALSE(report.find("connected")->pass);
    CHECK(*report.find("connected")->cases == 3);
}

TEST_CASE("end space of the path has one point and two opens") {
    TopSpace x = point_space(path3(), PointKind::End);
    CHECK(x.point_count() == 1);
    CHECK(x.opens.size() == 2);
    AxiomReport report = check_space_properties(x);
    CHECK(report.find("connected")->pass);
    CHECK(*report.find("connected")->cases == 1);
}

TEST_CASE("end-space components match graph components") {
    ContactStructure two = ContactStructure::from_atom_graph(
        BooleanAlgebra::make({"a", "b", "c"}), {{"a", "b"}});
    TopSpace x = point_space(two, PointKind::End);
    CHECK(x.point_count() == 2);
    CHECK(*check_space_properties(x).find("connected")->cases == 2);
    CHECK_FALSE(check_contact_axioms(two).find("C5")->pass);
}

TEST_CASE("grz space of the path is empty and flagged") {
    TopSpace x = point_space(path3(), PointKind::Grz);
    CHECK(x.point_count() == 0);
    CHECK(x.flagged_empty);
    CHECK(x.flag_reason.find("G1") != std::string::npos);
}

TEST_CASE("grz spaces of overlap structures are discrete and concentric") {
    for (int n = 1; n <= 4; ++n) {
        TopSpace x = point_space(overlap_n(n), PointKind::Grz);
        CHECK(x.point_count() == n);
        AxiomReport report = check_space_properties(x);
        CHECK(report.find("T1")->pass);
        CHECK(report.find("discrete")->pass);
        CHECK(report.find("concentric")->pass);
    }
}

TEST_CASE("stone duality is an isomorphism up to five atoms") {
    for (int n = 1; n <= 5; ++n) {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(n));
        DualityReport report = verify_stone_duality(b);
        CHECK(report.checks.find("stone-isomorphism")->pass);
        CHECK(report.forward.size() == b.element_count());
    }
    // the two-atom clopen algebra has four elements
    TopSpace x = point_space(overlap_n(2), PointKind::Stone);
    CHECK(x.clopens().size() == 4);
    CHECK(clopen_algebra(x).element_count() == 4);
}

TEST_CASE("de vries embedding on the overlap structure is an isomorphism") {
    DualityReport report = verify_de_vries_embedding(overlap_n(3));
    CHECK(report.checks.find("preserves-operations")->pass);
    CHECK(report.checks.find("image-regular-open")->pass);
    CHECK(report.checks.find("well-inside-biconditional")->pass);
    CHECK(report.checks.find("dense")->pass);
    CHECK(report.checks.find("embedding")->pass);
    CHECK(report.checks.find("isomorphism")->pass);
}

TEST_CASE("de vries embedding on the path collapses") {
    DualityReport report = verify_de_vries_embedding(path3());
    CHECK_FALSE(report.checks.find("embedding")->pass);
    CHECK_FALSE(report.checks.find("isomorphism")->pass);
}

TEST_CASE("de vries embedding on one atom is trivially an isomorphism") {
    DualityReport report = verify_de_vries_embedding(overlap_n(1));
    CHECK(report.checks.find("embedding")->pass);
    CHECK(report.checks.find("isomorphism")->pass);
}

TEST_CASE("ccc report") {
    {
        AxiomReport report = ccc_report(overlap_n(3));
        CHECK(*report.find("max-antichain-algebra")->cases == 3);
        const Check* equiv = report.find("incompatible-iff-disjoint-basic-opens");
        REQUIRE(equiv != nullptr);
        CHECK(equiv->pass);
        CHECK(*equiv->cases == 64);
    }
    {
        AxiomReport report = ccc_report(path3());
        CHECK(*report.find("max-antichain-algebra")->cases == 3);
        CHECK(report.find("incompatible-iff-disjoint-basic-opens") == nullptr);
        REQUIRE(!report.footnotes.empty());
    }
    {
        AxiomReport report = ccc_report(overlap_n(1));
        CHECK(*report.find("max-antichain-algebra")->cases == 1);
    }
}

TEST_CASE("basis dump") {
    TopSpace x = point_space(overlap_n(2), PointKind::Stone);
    std::string dump = basis_dump(x);
    CHECK(dump.find("{a} -> {{a}}") != std::string::npos);
}

TEST_CASE("end spaces track graph components across all small structures") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& edges : all_atom_relations(n)) {
            ContactStructure s = ContactStructure::from_edge_indices(
                BooleanAlgebra::make(atom_names(n)), edges);
            TopSpace x = point_space(s, PointKind::End);
            CHECK(x.point_count() == s.graph_component_count());
            AxiomReport props = check_space_properties(x);
            CHECK(*props.find("connected")->cases ==
                  static_cast<std::uint64_t>(s.graph_component_count()));
            CHECK(props.find("connected")->pass ==
                  check_contact_axioms(s).find("C5")->pass);
        }
}
