#include <doctest.h>

#include <algorithm>
#include <set>

#include "bca/points.hpp"
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

ContactStructure edge_plus_isolated() {
    return ContactStructure::from_atom_graph(BooleanAlgebra::make({"a", "b", "c"}),
                                             {{"a", "b"}});
}

std::set<Element> generators(const std::vector<Filter>& fs) {
    std::set<Element> out;
    for (const Filter& f : fs) out.insert(f.generator);
    return out;
}

}  // namespace

TEST_CASE("round filters") {
    ContactStructure s = path3();
    const BooleanAlgebra& b = s.algebra();
    CHECK(is_round_filter(s, Filter{&b, b.unit()}));
    CHECK_FALSE(is_round_filter(s, Filter{&b, b.element_of({"a"})}));
    ContactStructure t = edge_plus_isolated();
    CHECK(is_round_filter(t, Filter{&t.algebra(), t.algebra().element_of({"c"})}));
    // round iff every member has a well-inside member (definition check)
    for (const Filter& f : enumerate_filters(s.algebra())) {
        bool def = true;
        for (Element x : filter_members(b, f.generator)) {
            bool found = false;
            for (Element y : filter_members(b, f.generator))
                if (s.well_inside(y, x)) { found = true; break; }
            if (!found) { def = false; break; }
        }
        CHECK(def == is_round_filter(s, f));
    }
}

TEST_CASE("ends") {
    CHECK(generators(enumerate_ends(path3())) ==
          std::set<Element>{path3().algebra().unit()});
    ContactStructure t = edge_plus_isolated();
    CHECK(generators(enumerate_ends(t)) ==
          std::set<Element>{t.algebra().element_of({"a", "b"}),
                            t.algebra().element_of({"c"})});
    // under overlap, ends are exactly the ultrafilters
    for (int n = 1; n <= 5; ++n) {
        ContactStructure s = overlap_n(n);
        CHECK(generators(enumerate_ends(s)) ==
              generators(enumerate_ultrafilters(s.algebra())));
    }
}

TEST_CASE("end characterizations over all three-atom structures") {
    for (const auto& edges : all_atom_relations(3)) {
        ContactStructure s =
            ContactStructure::from_edge_indices(BooleanAlgebra::make(atom_names(3)), edges);
        AxiomReport report = check_end_characterizations(s);
        CHECK(report.all_pass());
        CHECK(report.checks.size() == 4);
    }
}

TEST_CASE("the path's single end fails both the end and pair-contact conditions") {
    // The up-set of 1 is the unique end, yet every nonzero region is in
    // contact with it, so the pair-contact condition fails at the separated
    // pair ({a},{c}); the end condition fails there as well. The two
    // conditions stay equivalent, which is the theorem; the converse
    // "maximal implies end condition" needs DV7 and the path lacks it.
    ContactStructure s = path3();
    const BooleanAlgebra& b = s.algebra();
    Filter top{&b, b.unit()};
    std::uint64_t pairs = 0;
    std::optional<std::pair<Element, Element>> violating;
    for (Element x = 1; x <= b.unit(); ++x)
        for (Element y = 1; y <= b.unit(); ++y) {
            ++pairs;
            if (!violating && contacts_filter(s, x, top) && contacts_filter(s, y, top) &&
                !s.contact(x, y))
                violating = {x, y};
        }
    CHECK(pairs == 49);
    REQUIRE(violating.has_value());
    CHECK(violating->first == b.element_of({"a"}));
    CHECK(violating->second == b.element_of({"c"}));
    // the end condition fails at the same structure
    CHECK_FALSE(s.contact(b.element_of({"a"}), b.element_of({"c"})));
    CHECK_FALSE(top.contains(b.complement_of(b.element_of({"a"}))));
    CHECK_FALSE(top.contains(b.complement_of(b.element_of({"c"}))));
    // yet the characterization report passes: the converse direction is
    // vacuous without DV7, and the footnote records the restriction
    AxiomReport report = check_end_characterizations(s);
    CHECK(report.all_pass());
    REQUIRE(!report.footnotes.empty());
    CHECK(report.footnotes[0].find("DV7") != std::string::npos);
}

TEST_CASE("G-representative checks") {
    ContactStructure s = overlap_n(3);
    const BooleanAlgebra& b = s.algebra();
    CHECK(is_g_representative(s, {b.element_of({"a"})}).status == Verdict::Status::Holds);
    {
        Verdict v = is_g_representative(s, {b.element_of({"a", "b"})});
        CHECK(v.status == Verdict::Status::Fails);
        CHECK(v.detail == "r3");
        CHECK(*v.witness == "x={a} y={b}");
    }
    {
        Verdict v = is_g_representative(path3(), {path3().algebra().element_of({"b"})});
        CHECK(v.status == Verdict::Status::Fails);
        CHECK(v.detail == "r2");
    }
    CHECK(is_g_representative(s, {b.element_of({"a", "b"}), b.element_of({"a"})}).status ==
          Verdict::Status::Holds);
    CHECK_THROWS_AS(is_g_representative(s, {}), std::invalid_argument);
}

TEST_CASE("G-point enumeration") {
    CHECK(generators(enumerate_g_points(overlap_n(3))) ==
          generators(enumerate_ultrafilters(overlap_n(3).algebra())));
    CHECK(enumerate_g_points(path3()).empty());
    CHECK(generators(enumerate_g_points(overlap_n(1))) ==
          std::set<Element>{overlap_n(1).algebra().unit()});
}

TEST_CASE("G-point enumeration agrees with exhaustive chain search") {
    // oracle: every well-inside chain (subset with pairwise comparability)
    // that passes r0-r3 generates the up-set of its minimum
    for (const auto& edges : all_atom_relations(3)) {
        ContactStructure s =
            ContactStructure::from_edge_indices(BooleanAlgebra::make(atom_names(3)), edges);
        const BooleanAlgebra& b = s.algebra();
        std::set<Element> oracle;
        std::vector<Element> nonzero;
        for (Element x = 1; x <= b.unit(); ++x) nonzero.push_back(x);
        for (std::uint32_t pick = 1; pick < (1u << nonzero.size()); ++pick) {
            std::vector<Element> q;
            for (std::size_t k = 0; k < nonzero.size(); ++k)
                if (pick & (1u << k)) q.push_back(nonzero[k]);
            if (is_g_representative(s, q).status != Verdict::Status::Holds) continue;
            Element least = b.unit();
            for (Element x : q) least = b.meet(least, x);
            oracle.insert(least);
        }
        CHECK(oracle == generators(enumerate_g_points(s)));
    }
}

TEST_CASE("G1 and G2") {
    CHECK(check_g1_g2(overlap_n(3)).all_pass());
    CHECK(check_g1_g2(overlap_n(1)).all_pass());
    AxiomReport report = check_g1_g2(path3());
    const Check* g1 = report.find("G1");
    CHECK_FALSE(g1->pass);
    // lexicographically least unwitnessed region; {b} is a witness as well
    CHECK(*g1->witness == "x={a}");
    CHECK_FALSE(has_g_representative_through(path3(), path3().algebra().element_of({"b"})));
}

TEST_CASE("finite covering and similarity quotient") {
    ContactStructure s = overlap_n(3);
    const BooleanAlgebra& b = s.algebra();
    Element a = b.element_of({"a"}), ab = b.element_of({"a", "b"}), bb = b.element_of({"b"});

    CHECK(covers_finite(b, {ab, a}, {a}));
    CHECK(covers_finite(b, {a}, {ab, a}));  // mutual

    SimilarityQuotient q = quotient_by_similarity(s, {{a}, {ab, a}, {bb}});
    CHECK(q.classes.size() == 2);
    CHECK(q.classes[0] == std::vector<int>{0, 1});
    CHECK(q.classes[1] == std::vector<int>{2});
    CHECK(q.class_filters[0].generator == a);
    CHECK(q.class_filters[1].generator == bb);
    CHECK(q.injective);
    CHECK_FALSE(q.onto_g_points);  // {c} has no representative in the input

    SimilarityQuotient full = quotient_by_similarity(
        s, {{a}, {bb}, {b.element_of({"c"})}});
    CHECK(full.injective);
    CHECK(full.onto_g_points);
    CHECK(full.classes.size() == 3);

    SimilarityQuotient single = quotient_by_similarity(s, {{a}});
    CHECK(single.classes.size() == 1);
    CHECK(single.class_filters[0].generator == a);

    CHECK_THROWS_AS(quotient_by_similarity(s, {{ab}}), std::invalid_argument);
}

TEST_CASE("similarity is an equivalence on G-representatives") {
    // mutual covering of G-representatives coincides with equality of the
    // generated filters, and covering one way forces the other
    for (const auto& edges : all_atom_relations(3)) {
        ContactStructure s =
            ContactStructure::from_edge_indices(BooleanAlgebra::make(atom_names(3)), edges);
        const BooleanAlgebra& b = s.algebra();
        std::vector<std::vector<Element>> reps;
        std::vector<Element> nonzero;
        for (Element x = 1; x <= b.unit(); ++x) nonzero.push_back(x);
        for (std::uint32_t pick = 1; pick < (1u << nonzero.size()); ++pick) {
            std::vector<Element> q;
            for (std::size_t k = 0; k < nonzero.size(); ++k)
                if (pick & (1u << k)) q.push_back(nonzero[k]);
            if (is_g_representative(s, q).status == Verdict::Status::Holds)
                reps.push_back(q);
        }
        for (const auto& q1 : reps)
            for (const auto& q2 : reps)
                if (covers_finite(b, q1, q2)) CHECK(covers_finite(b, q2, q1));
    }
}

TEST_CASE("finite abstractive sets do not exist") {
    ContactStructure s = overlap_n(3);
    const BooleanAlgebra& b = s.algebra();
    Verdict v = is_abstractive_finite(s, {b.element_of({"a", "b"}), b.element_of({"a"})});
    CHECK(v.status == Verdict::Status::Fails);
    CHECK(v.detail == "no-minimum");
    Verdict w = is_w_representative_finite(s, {b.element_of({"a"})});
    CHECK(w.status == Verdict::Status::Fails);
    CHECK(w.detail == "not abstractive");
}

TEST_CASE("G-points are ends") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& edges : all_atom_relations(n)) {
            ContactStructure s =
                ContactStructure::from_edge_indices(BooleanAlgebra::make(atom_names(n)), edges);
            std::set<Element> ends = generators(enumerate_ends(s));
            for (const Filter& g : enumerate_g_points(s))
                CHECK(ends.count(g.generator));
        }
}

TEST_CASE("mutual covering facts for G-representatives") {
    // non-covering yields a separated pair; covering forces pairwise
    // compatibility; covering is reflexive and transitive
    for (const auto& edges : all_atom_relations(3)) {
        ContactStructure s =
            ContactStructure::from_edge_indices(BooleanAlgebra::make(atom_names(3)), edges);
        const BooleanAlgebra& b = s.algebra();
        std::vector<std::vector<Element>> reps;
        std::vector<Element> nonzero;
        for (Element x = 1; x <= b.unit(); ++x) nonzero.push_back(x);
        for (std::uint32_t pick = 1; pick < (1u << nonzero.size()); ++pick) {
            std::vector<Element> q;
            for (std::size_t k = 0; k < nonzero.size(); ++k)
                if (pick & (1u << k)) q.push_back(nonzero[k]);
            if (is_g_representative(s, q).status == Verdict::Status::Holds)
                reps.push_back(q);
        }
        for (const auto& q1 : reps) {
            CHECK(covers_finite(b, q1, q1));  // reflexive
            for (const auto& q2 : reps) {
                if (!covers_finite(b, q1, q2)) {
                    bool separated = false;
                    for (Element x : q1)
                        for (Element y : q2)
                            if (!s.contact(x, y)) separated = true;
                    CHECK(separated);
                } else {
                    for (Element x : q1)
                        for (Element y : q2) CHECK(b.overlap(x, y));
                    for (const auto& q3 : reps)  // transitive
                        if (covers_finite(b, q2, q3)) CHECK(covers_finite(b, q1, q3));
                }
            }
        }
    }
}
