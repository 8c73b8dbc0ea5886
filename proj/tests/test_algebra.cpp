#include <doctest.h>

#include <set>

#include "bca/algebra.hpp"
#include "helpers.hpp"

using namespace bca;
using namespace bca::testing;

TEST_CASE("powerset construction") {
    BooleanAlgebra b = BooleanAlgebra::make({"a", "b", "c"});
    CHECK(b.element_count() == 8);
    CHECK(b.atom(0) == b.element_of({"a"}));
    CHECK(b.format(b.element_of({"a", "b"})) == "{a,b}");
    CHECK(b.format(b.zero()) == "0");
    CHECK(b.format(b.unit()) == "1");

    BooleanAlgebra two = BooleanAlgebra::make({"a"});
    CHECK(two.element_count() == 2);

    CHECK_THROWS_AS(BooleanAlgebra::make({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(BooleanAlgebra::make({}), std::invalid_argument);
    CHECK_THROWS_AS(BooleanAlgebra::make(atom_names(25)), std::invalid_argument);
}

TEST_CASE("element membership guard") {
    BooleanAlgebra b = BooleanAlgebra::make({"a", "b"});
    CHECK(b.is_element(3));
    CHECK_FALSE(b.is_element(4));
    CHECK_THROWS_AS(b.require_element(4), std::invalid_argument);
    CHECK_THROWS_AS(extend_fip_family(b, {8}), std::invalid_argument);
    CHECK_THROWS_AS(b.atom_index("z"), std::invalid_argument);
}

TEST_CASE("lattice laws hold exhaustively up to four atoms") {
    for (int n = 1; n <= 4; ++n) {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(n));
        for (Element x = 0; x <= b.unit(); ++x) {
            CHECK(b.complement_of(b.complement_of(x)) == x);
            for (Element y = 0; y <= b.unit(); ++y) {
                CHECK(b.meet(x, y) == b.meet(y, x));
                CHECK(b.join(x, y) == b.join(y, x));
                CHECK(b.meet(x, b.join(x, y)) == x);  // absorption
                CHECK(b.join(x, b.meet(x, y)) == x);
                CHECK(b.complement_of(b.meet(x, y)) ==
                      b.join(b.complement_of(x), b.complement_of(y)));
                CHECK(b.leq(x, y) == (b.meet(x, y) == x));
                for (Element z = 0; z <= b.unit(); ++z) {
                    CHECK(b.meet(x, b.meet(y, z)) == b.meet(b.meet(x, y), z));
                    CHECK(b.meet(x, b.join(y, z)) ==
                          b.join(b.meet(x, y), b.meet(x, z)));
                }
            }
        }
    }
}

namespace {

// Oracle: enumerate every subset of the algebra and keep those satisfying
// the filter axioms verbatim (nonempty, zero-free, upward closed, closed
// under meet).
std::vector<std::set<Element>> brute_force_filters(const BooleanAlgebra& b) {
    std::vector<std::set<Element>> out;
    std::uint32_t universe = b.element_count();
    for (std::uint64_t pick = 1; pick < (1ull << universe); ++pick) {
        std::set<Element> f;
        for (Element x = 0; x < universe; ++x)
            if (pick & (1ull << x)) f.insert(x);
        if (f.count(b.zero())) continue;
        bool ok = true;
        for (Element x : f) {
            for (Element y = 0; y <= b.unit() && ok; ++y)
                if (b.leq(x, y) && !f.count(y)) ok = false;
            for (Element y : f)
                if (!f.count(b.meet(x, y))) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

TEST_CASE("every filter of a small algebra is principal; ultrafilters sit at atoms") {
    for (int n = 1; n <= 3; ++n) {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(n));
        std::vector<std::set<Element>> filters = brute_force_filters(b);
        CHECK(filters.size() == b.element_count() - 1);  // one per nonzero generator
        int ultra = 0;
        for (const std::set<Element>& f : filters) {
            Element least = b.unit();
            for (Element x : f) least = b.meet(least, x);
            CHECK(f.count(least));  // principal: the meet is a member
            std::set<Element> up;
            for (Element y = 0; y <= b.unit(); ++y)
                if (b.leq(least, y)) up.insert(y);
            CHECK(up == f);
            bool maximal = true;
            for (const std::set<Element>& g : filters)
                if (g != f && std::includes(g.begin(), g.end(), f.begin(), f.end()))
                    maximal = false;
            if (maximal) {
                ++ultra;
                CHECK(b.is_atom(least));
            }
        }
        CHECK(ultra == n);
        CHECK(enumerate_ultrafilters(b).size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("ultrafilter enumeration size up to five atoms") {
    for (int n = 1; n <= 5; ++n) {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(n));
        std::vector<Filter> ultra = enumerate_ultrafilters(b);
        CHECK(ultra.size() == static_cast<std::size_t>(n));
        // maximality against the full principal enumeration
        for (const Filter& u : ultra)
            for (const Filter& f : enumerate_filters(b))
                CHECK_FALSE(b.less(f.generator, u.generator));
    }
}

TEST_CASE("FIP extension") {
    BooleanAlgebra b = BooleanAlgebra::make({"a", "b", "c"});
    Element ab = b.element_of({"a", "b"});
    Element bc = b.element_of({"b", "c"});

    Filter f = extend_fip_family(b, {ab, bc});
    CHECK(f.generator == b.element_of({"b"}));
    CHECK(f.contains(ab));
    CHECK(f.contains(bc));

    Filter empty_case = extend_fip_family(b, {});
    CHECK(empty_case.generator == b.element_of({"a"}));  // least atom under 1

    CHECK_THROWS_WITH_AS(extend_fip_family(b, {b.element_of({"a"}), b.element_of({"b"})}),
                         "family violates FIP: {a} . {b} = 0", std::invalid_argument);
}

TEST_CASE("ultrafilter characterization report") {
    {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(2));
        AxiomReport report = check_ultrafilter_characterization(b);
        REQUIRE(report.checks.size() == 1);
        CHECK(report.checks[0].pass);
        CHECK(*report.checks[0].cases == 3);  // three proper filters
    }
    {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(3));
        AxiomReport report = check_ultrafilter_characterization(b);
        CHECK(report.checks[0].pass);
        CHECK(*report.checks[0].cases == 7);
    }
    {
        // the up-set of 1 in a two-atom algebra is not an ultrafilter, and
        // the incompatibility condition fails there at x={a}, y={b}
        BooleanAlgebra b = BooleanAlgebra::make({"a", "b"});
        Filter top{&b, b.unit()};
        CHECK_FALSE(top.is_ultrafilter());
        Element x = b.element_of({"a"}), y = b.element_of({"b"});
        CHECK(b.incompatible(x, y));
        CHECK_FALSE(top.contains(b.complement_of(x)));
        CHECK_FALSE(top.contains(b.complement_of(y)));
    }
    for (int n = 1; n <= 5; ++n) {
        BooleanAlgebra b = BooleanAlgebra::make(atom_names(n));
        CHECK(check_ultrafilter_characterization(b).all_pass());
    }
}
