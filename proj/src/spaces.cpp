#include "bca/spaces.hpp"

#include <algorithm>
#include <map>

namespace bca {

bool TopSpace::is_open(std::uint32_t set) const {
    return std::binary_search(opens.begin(), opens.end(), set);
}

std::uint32_t TopSpace::interior(std::uint32_t set) const {
    std::uint32_t out = 0;
    for (std::uint32_t o : opens)
        if ((o & set) == o) out |= o;
    return out;
}

std::uint32_t TopSpace::closure(std::uint32_t set) const {
    // complement of the union of opens disjoint from the set
    std::uint32_t away = 0;
    for (std::uint32_t o : opens)
        if ((o & set) == 0) away |= o;
    return all_points() & ~away;
}

std::vector<std::uint32_t> TopSpace::regular_opens() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t o : opens)
        if (interior(closure(o)) == o) out.push_back(o);
    return out;
}

std::vector<std::uint32_t> TopSpace::clopens() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t o : opens)
        if (is_open(all_points() & ~o)) out.push_back(o);
    return out;
}

std::vector<std::uint32_t> TopSpace::components() const {
    std::vector<std::uint32_t> cl = clopens();
    std::vector<std::uint32_t> out;
    for (std::uint32_t c : cl) {
        if (c == 0) continue;
        bool minimal = true;
        for (std::uint32_t d : cl)
            if (d != 0 && d != c && (d & c) == d) { minimal = false; break; }
        if (minimal) out.push_back(c);
    }
    return out;
}

std::string TopSpace::format_point_set(std::uint32_t set) const {
    if (set == 0) return "{}";
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < point_count(); ++i) {
        if (!(set & (1u << i))) continue;
        if (!first) out += ",";
        out += point_labels[i];
        first = false;
    }
    return out + "}";
}

TopSpace point_space(const ContactStructure& s, PointKind kind) {
    const BooleanAlgebra& b = s.algebra();
    TopSpace x;
    x.structure = s;
    x.kind = kind;
    std::vector<Filter> points;
    switch (kind) {
        case PointKind::Stone: points = enumerate_ultrafilters(b); break;
        case PointKind::End: points = enumerate_ends(s); break;
        case PointKind::Grz: points = enumerate_g_points(s); break;
    }
    for (const Filter& f : points) {
        x.point_generators.push_back(f.generator);
        x.point_labels.push_back(b.format(f.generator));
    }
    if (points.empty()) {
        x.flagged_empty = true;
        x.flag_reason = "no points of the requested kind (G1 fails)";
    }
    x.basis.assign(b.element_count(), 0);
    for (Element e = 0; e <= b.unit(); ++e)
        for (int p = 0; p < x.point_count(); ++p)
            if (b.leq(x.point_generators[p], e)) x.basis[e] |= 1u << p;

    // basis conditions: covers the points, intersections are unions of
    // basis sets (here an intersection is itself basic)
    if (x.basis[b.unit()] != x.all_points())
        throw std::logic_error("basis does not cover the point set");
    for (Element e1 = 0; e1 <= b.unit(); ++e1)
        for (Element e2 = 0; e2 <= b.unit(); ++e2)
            if ((x.basis[e1] & x.basis[e2]) != x.basis[b.meet(e1, e2)])
                throw std::logic_error("basis not closed under intersection");

    std::set<std::uint32_t> opens{0};
    std::set<std::uint32_t> frontier{0};
    for (Element e = 0; e <= b.unit(); ++e) opens.insert(x.basis[e]);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> current(opens.begin(), opens.end());
        for (std::uint32_t a : current)
            for (std::uint32_t c : current)
                if (opens.insert(a | c).second) grew = true;
    }
    x.opens.assign(opens.begin(), opens.end());
    return x;
}

AxiomReport check_space_properties(const TopSpace& x) {
    AxiomReport report;
    int n = x.point_count();
    std::uint32_t all = x.all_points();

    {
        std::optional<std::string> witness;
        for (int p = 0; p < n && !witness; ++p)
            for (int q = 0; q < n; ++q) {
                if (p == q) continue;
                bool found = false;
                for (std::uint32_t o : x.opens)
                    if ((o & (1u << p)) && !(o & (1u << q))) { found = true; break; }
                if (!found) {
                    witness = x.point_labels[p] + " inseparable from " + x.point_labels[q];
                    break;
                }
            }
        if (witness)
            report.checks.push_back(Check::failed("T1", *witness));
        else
            report.checks.push_back(Check::passed("T1", std::uint64_t(n) * n));
    }
    {
        std::optional<std::string> witness;
        for (int p = 0; p < n && !witness; ++p)
            for (int q = p + 1; q < n; ++q) {
                bool found = false;
                for (std::uint32_t o1 : x.opens) {
                    if (!(o1 & (1u << p))) continue;
                    for (std::uint32_t o2 : x.opens)
                        if ((o2 & (1u << q)) && (o1 & o2) == 0) { found = true; break; }
                    if (found) break;
                }
                if (!found) {
                    witness = x.point_labels[p] + " / " + x.point_labels[q];
                    break;
                }
            }
        if (witness)
            report.checks.push_back(Check::failed("hausdorff", *witness));
        else
            report.checks.push_back(Check::passed("hausdorff", std::uint64_t(n) * n));
    }
    {
        std::vector<std::uint32_t> comps = x.components();
        bool connected = comps.size() <= 1;
        Check c;
        c.axiom = "connected";
        c.pass = connected;
        c.cases = comps.size();  // component count
        if (!connected) c.witness = "components: " + std::to_string(comps.size());
        report.checks.push_back(c);
    }
    {
        std::vector<std::uint32_t> cl = x.clopens();
        std::optional<std::string> witness;
        for (std::uint32_t o : x.opens) {
            std::uint32_t covered = 0;
            for (std::uint32_t c : cl)
                if ((c & o) == c) covered |= c;
            if (covered != o) {
                witness = x.format_point_set(o);
                break;
            }
        }
        if (witness)
            report.checks.push_back(Check::failed("zero-dimensional", *witness));
        else
            report.checks.push_back(Check::passed("zero-dimensional", x.opens.size()));
    }
    {
        std::vector<std::uint32_t> comps = x.components();
        std::optional<std::string> witness;
        for (std::uint32_t c : comps)
            if ((c & (c - 1)) != 0) { witness = x.format_point_set(c); break; }
        if (witness)
            report.checks.push_back(Check::failed("totally-disconnected", *witness));
        else
            report.checks.push_back(Check::passed("totally-disconnected", comps.size()));
    }
    {
        std::optional<std::string> witness;
        for (int p = 0; p < n; ++p)
            if (!x.is_open(1u << p)) { witness = x.point_labels[p]; break; }
        if (witness)
            report.checks.push_back(Check::failed("discrete", *witness));
        else
            report.checks.push_back(Check::passed("discrete", n));
    }
    {
        // finite spaces are compact; execute the finite-subcover extraction
        // on the basis cover anyway
        std::uint32_t covered = 0;
        std::uint64_t used = 0;
        for (Element e = 0; e <= x.structure.algebra().unit() && covered != all; ++e) {
            if ((x.basis[e] & ~covered) != 0) {
                covered |= x.basis[e];
                ++used;
            }
        }
        if (covered == all)
            report.checks.push_back(Check::passed("compact", used));
        else
            report.checks.push_back(Check::failed("compact", "basis does not cover"));
        report.footnotes.push_back(
            "compactness is automatic for finite spaces; the algebraic content at "
            "this scale is the FIP-to-ultrafilter extension checked in the Stone suite");
    }
    {
        const Check* t1 = report.find("T1");
        std::optional<std::string> witness;
        if (!t1->pass) witness = "not T1";
        for (int p = 0; p < n && !witness; ++p) {
            // minimal open neighbourhood
            std::uint32_t min_open = all;
            for (std::uint32_t o : x.opens)
                if (o & (1u << p)) min_open &= o;
            bool found = false;
            for (std::uint32_t u : x.regular_opens())
                if ((u & (1u << p)) && (u & ~min_open) == 0) { found = true; break; }
            if (!found) witness = "no regular-open local basis at " + x.point_labels[p];
        }
        if (witness)
            report.checks.push_back(Check::failed("concentric", *witness));
        else
            report.checks.push_back(Check::passed("concentric", n));
    }
    if (x.flagged_empty) report.footnotes.push_back("space flagged: " + x.flag_reason);
    if (x.kind == PointKind::Grz)
        report.footnotes.push_back(
            "open: which property of this point space corresponds to the "
            "interpolation axiom is not settled; no verdict is computed for it");
    return report;
}

BooleanAlgebra clopen_algebra(const TopSpace& x) {
    std::vector<std::uint32_t> comps = x.components();
    std::vector<std::string> names;
    for (std::uint32_t c : comps) names.push_back(x.format_point_set(c));
    if (names.empty()) names.push_back("{}");  // degenerate: empty space
    return BooleanAlgebra::make(names);
}

DualityReport verify_stone_duality(const BooleanAlgebra& b) {
    ContactStructure s = ContactStructure::overlap_contact(b);
    TopSpace x = point_space(s, PointKind::Stone);
    DualityReport out;

    std::vector<std::uint32_t> clopen = x.clopens();
    std::uint64_t cases = 0;
    std::optional<std::string> witness;

    std::map<std::uint32_t, Element> inverse;
    for (Element e = 0; e <= b.unit(); ++e) {
        std::uint32_t image = x.basis[e];
        out.forward.emplace_back(b.format(e), x.format_point_set(image));
        if (inverse.count(image)) {
            witness = "not injective at " + b.format(e);
            break;
        }
        inverse[image] = e;
        if (std::find(clopen.begin(), clopen.end(), image) == clopen.end()) {
            witness = "image of " + b.format(e) + " is not clopen";
            break;
        }
        ++cases;
    }
    if (!witness && inverse.size() != clopen.size())
        witness = "not surjective onto the clopen algebra";
    if (!witness) {
        for (const auto& [set, e] : inverse)
            out.backward.emplace_back(x.format_point_set(set), b.format(e));
        for (Element e1 = 0; e1 <= b.unit() && !witness; ++e1)
            for (Element e2 = 0; e2 <= b.unit(); ++e2) {
                ++cases;
                if (x.basis[b.meet(e1, e2)] != (x.basis[e1] & x.basis[e2])) {
                    witness = "meet not preserved at " + b.format(e1) + "," + b.format(e2);
                    break;
                }
                if (x.basis[b.join(e1, e2)] != (x.basis[e1] | x.basis[e2])) {
                    witness = "join not preserved at " + b.format(e1) + "," + b.format(e2);
                    break;
                }
            }
        for (Element e = 0; e <= b.unit() && !witness; ++e)
            if (x.basis[b.complement_of(e)] != (x.all_points() & ~x.basis[e]))
                witness = "complement not preserved at " + b.format(e);
    }
    if (witness)
        out.checks.checks.push_back(Check::failed("stone-isomorphism", *witness));
    else
        out.checks.checks.push_back(Check::passed("stone-isomorphism", cases));
    return out;
}

DualityReport verify_de_vries_embedding(const ContactStructure& s) {
    const BooleanAlgebra& b = s.algebra();
    TopSpace x = point_space(s, PointKind::End);
    DualityReport out;
    std::vector<std::uint32_t> ro = x.regular_opens();

    for (Element e = 0; e <= b.unit(); ++e)
        out.forward.emplace_back(b.format(e), x.format_point_set(x.basis[e]));

    {
        std::optional<std::string> witness;
        if (x.basis[0] != 0) witness = "zero not preserved";
        if (!witness && x.basis[b.unit()] != x.all_points()) witness = "unit not preserved";
        std::uint64_t cases = 0;
        for (Element e1 = 0; e1 <= b.unit() && !witness; ++e1)
            for (Element e2 = 0; e2 <= b.unit(); ++e2) {
                ++cases;
                if (x.basis[b.meet(e1, e2)] != (x.basis[e1] & x.basis[e2])) {
                    witness = "meet not preserved at " + b.format(e1) + "," + b.format(e2);
                    break;
                }
            }
        if (witness)
            out.checks.checks.push_back(Check::failed("preserves-operations", *witness));
        else
            out.checks.checks.push_back(Check::passed("preserves-operations", cases));
    }
    {
        std::optional<std::string> witness;
        std::uint64_t cases = 0;
        for (Element e = 0; e <= b.unit(); ++e) {
            ++cases;
            if (std::find(ro.begin(), ro.end(), x.basis[e]) == ro.end()) {
                witness = "image of " + b.format(e) + " is not regular open";
                break;
            }
        }
        if (witness)
            out.checks.checks.push_back(Check::failed("image-regular-open", *witness));
        else
            out.checks.checks.push_back(Check::passed("image-regular-open", cases));
    }
    {
        std::optional<std::string> witness;
        std::uint64_t cases = 0;
        for (Element e1 = 0; e1 <= b.unit() && !witness; ++e1)
            for (Element e2 = 0; e2 <= b.unit(); ++e2) {
                ++cases;
                bool algebra_side = s.well_inside(e1, e2);
                bool space_side = (x.closure(x.basis[e1]) & ~x.basis[e2]) == 0;
                if (algebra_side != space_side) {
                    witness = "x=" + b.format(e1) + " y=" + b.format(e2);
                    break;
                }
            }
        if (witness)
            out.checks.checks.push_back(Check::failed("well-inside-biconditional", *witness));
        else
            out.checks.checks.push_back(Check::passed("well-inside-biconditional", cases));
    }
    {
        // density: U << V among regular opens admits an interpolating image
        std::optional<std::string> witness;
        std::uint64_t cases = 0;
        for (std::uint32_t u : ro)
            for (std::uint32_t v : ro) {
                if ((x.closure(u) & ~v) != 0) continue;
                ++cases;
                bool found = false;
                for (Element e = 0; e <= b.unit(); ++e) {
                    std::uint32_t img = x.basis[e];
                    if ((x.closure(u) & ~img) == 0 && (x.closure(img) & ~v) == 0) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    witness = "U=" + x.format_point_set(u) + " V=" + x.format_point_set(v);
                    break;
                }
            }
        if (witness)
            out.checks.checks.push_back(Check::failed("dense", *witness));
        else
            out.checks.checks.push_back(Check::passed("dense", cases));
    }
    {
        std::optional<std::string> witness;
        for (Element e1 = 0; e1 <= b.unit() && !witness; ++e1)
            for (Element e2 = e1 + 1; e2 <= b.unit(); ++e2)
                if (x.basis[e1] == x.basis[e2]) {
                    witness = b.format(e1) + " and " + b.format(e2) + " collapse to " +
                              x.format_point_set(x.basis[e1]);
                    break;
                }
        if (witness)
            out.checks.checks.push_back(Check::failed("embedding", *witness));
        else
            out.checks.checks.push_back(
                Check::passed("embedding", b.element_count()));
    }
    {
        std::optional<std::string> witness;
        for (std::uint32_t u : ro) {
            bool hit = false;
            for (Element e = 0; e <= b.unit(); ++e)
                if (x.basis[e] == u) { hit = true; break; }
            if (!hit) {
                witness = "regular open " + x.format_point_set(u) + " not in the image";
                break;
            }
        }
        bool injective = out.checks.find("embedding")->pass;
        if (!witness && injective)
            out.checks.checks.push_back(Check::passed("isomorphism", ro.size()));
        else
            out.checks.checks.push_back(Check::failed(
                "isomorphism", witness.value_or("not injective")));
    }
    for (const auto& u : ro)
        out.backward.emplace_back(x.format_point_set(u), "regular open");
    return out;
}

namespace {

int max_antichain_masks(const std::vector<std::uint32_t>& candidates, std::uint32_t avail,
                        std::map<std::uint32_t, int>& memo) {
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (std::uint32_t c : candidates)
        if (c != 0 && (c & avail) == c)
            best = std::max(best, 1 + max_antichain_masks(candidates, avail & ~c, memo));
    memo[avail] = best;
    return best;
}

}  // namespace

AxiomReport ccc_report(const ContactStructure& s) {
    const BooleanAlgebra& b = s.algebra();
    AxiomReport report;
    {
        std::vector<std::uint32_t> elements;
        for (Element e = 1; e <= b.unit(); ++e) elements.push_back(e);
        std::map<std::uint32_t, int> memo;
        int size = max_antichain_masks(elements, b.unit(), memo);
        Check c;
        c.axiom = "max-antichain-algebra";
        c.pass = true;
        c.cases = size;
        report.checks.push_back(c);
    }
    TopSpace grz = point_space(s, PointKind::Grz);
    {
        std::map<std::uint32_t, int> memo;
        int size = max_antichain_masks(grz.opens, grz.all_points(), memo);
        Check c;
        c.axiom = "max-antichain-space";
        c.pass = true;
        c.cases = size;
        report.checks.push_back(c);
    }
    if (check_g1_g2(s).find("G1")->pass) {
        std::optional<std::string> witness;
        std::uint64_t cases = 0;
        for (Element e1 = 0; e1 <= b.unit() && !witness; ++e1)
            for (Element e2 = 0; e2 <= b.unit(); ++e2) {
                ++cases;
                bool incompatible = b.incompatible(e1, e2);
                bool disjoint = (grz.basis[e1] & grz.basis[e2]) == 0;
                if (incompatible != disjoint) {
                    witness = "x=" + b.format(e1) + " y=" + b.format(e2);
                    break;
                }
            }
        if (witness)
            report.checks.push_back(
                Check::failed("incompatible-iff-disjoint-basic-opens", *witness));
        else
            report.checks.push_back(
                Check::passed("incompatible-iff-disjoint-basic-opens", cases));
    } else {
        report.footnotes.push_back(
            "incompatibility/disjointness equivalence skipped: G1 fails");
    }
    return report;
}

std::string basis_dump(const TopSpace& x) {
    std::string out;
    const BooleanAlgebra& b = x.structure.algebra();
    for (Element e = 0; e <= b.unit(); ++e)
        out += b.format(e) + " -> " + x.format_point_set(x.basis[e]) + "\n";
    return out;
}

}  // namespace bca
