#include "bca/chains.hpp"

#include <stdexcept>

namespace bca {

const Region& RegionChain::at(int i) const {
    if (i < 0) throw std::out_of_range("chain index");
    auto it = cache_->find(i);
    if (it == cache_->end()) it = cache_->emplace(i, gen_(i)).first;
    return it->second;
}

std::vector<Region> RegionChain::prefix(int depth) const {
    std::vector<Region> out;
    for (int i = 0; i <= depth; ++i) out.push_back(at(i));
    return out;
}

RegionChain RegionChain::explicit_chain(std::string name, std::vector<Region> elems) {
    auto shared = std::make_shared<std::vector<Region>>(std::move(elems));
    RegionChain chain(std::move(name), [shared](int i) -> Region {
        if (i < 0 || static_cast<std::size_t>(i) >= shared->size())
            throw std::out_of_range("explicit chain index " + std::to_string(i));
        return (*shared)[i];
    });
    chain.max_index_ = static_cast<int>(shared->size()) - 1;
    return chain;
}

RegionChain origin_family(const Rat& center) {
    Rat c = center;
    return RegionChain("origin(" + c.str() + ")", [c](int i) {
        Rat r(1, i + 1);
        return Region::interval(c - r, c + r);
    });
}

RegionChain tails_family() {
    return RegionChain("tails", [](int i) {
        return Region::interval(Rat(i), Rat::pos_inf());
    });
}

RegionChain de_vries_not_end_family() {
    return RegionChain("deVriesNotEnd", [](int i) {
        Rat r(1, i + 1);
        return Region::interval(Rat(-1) - r, Rat(1) + r);
    });
}

std::pair<Region, Region> stripes4() {
    Region u = Region::from_raw(
        IntervalSet::empty(), std::nullopt,
        Tail{Rat(0), Rat(4), IntervalSet(Interval(Rat(0), Rat(1)))});
    Region v = Region::from_raw(
        IntervalSet::empty(), std::nullopt,
        Tail{Rat(0), Rat(4), IntervalSet(Interval(Rat(2), Rat(3)))});
    return {u, v};
}

std::optional<int> first_descent_violation(const RegionChain& chain, int depth) {
    for (int i = 0; i < depth; ++i)
        if (!well_inside(chain.at(i + 1), chain.at(i))) return i;
    return std::nullopt;
}

Catalog build_catalog(const RegionChain& chain, int depth, bool include_periodic) {
    Catalog out;
    out.periodic = include_periodic;
    const Region& first = chain.at(0);

    // span of the whole chain: hull of x_0 (everything descends into it)
    Rat span_lo = Rat::pos_inf(), span_hi = Rat::neg_inf();
    for (const Interval& iv : first.core().parts()) {
        span_lo = rat_min(span_lo, iv.lo);
        span_hi = rat_max(span_hi, iv.hi);
    }
    if (first.right_tail()) span_hi = Rat::pos_inf();
    if (first.left_tail()) span_lo = Rat::neg_inf();

    if (span_lo < span_hi) {
        Rat glo = span_lo.is_finite() ? span_lo
                  : (span_hi.is_finite() ? span_hi - Rat(2) : Rat(-2));
        Rat ghi = span_hi.is_finite() ? span_hi
                  : (span_lo.is_finite() ? span_lo + Rat(2) : Rat(2));
        Rat step(1, depth > 0 ? depth : 1);
        std::vector<Rat> grid;
        for (Rat g = glo; g <= ghi; g = g + step) grid.push_back(g);
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = i + 1; j < grid.size(); ++j)
                out.entries.push_back(Region::interval(grid[i], grid[j]));
        if (!span_hi.is_finite())
            for (const Rat& g : grid)
                out.entries.push_back(Region::interval(g, Rat::pos_inf()));
        if (!span_lo.is_finite())
            for (const Rat& g : grid)
                out.entries.push_back(Region::interval(Rat::neg_inf(), g));
    }

    if (include_periodic) {
        for (int p = 1; p <= 8; ++p)
            for (unsigned mask = 1; mask < (1u << p); ++mask) {
                std::vector<Interval> parts;
                for (int i = 0; i < p; ++i)
                    if (mask & (1u << i)) parts.emplace_back(Rat(i), Rat(i + 1));
                out.entries.push_back(Region::from_raw(
                    IntervalSet::empty(), std::nullopt,
                    Tail{Rat(0), Rat(p), IntervalSet::from_parts(std::move(parts))}));
            }
    }
    return out;
}

namespace {

bool closed_lists_meet(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (rat_max(a[i].lo, b[j].lo) <= rat_min(a[i].hi, b[j].hi)) return true;
        if (a[i].hi < b[j].hi) ++i; else ++j;
    }
    return false;
}

}  // namespace

FalsifyResult g_rep_falsify(const RegionChain& chain, int depth, const Catalog& catalog) {
    if (auto bad = first_descent_violation(chain, depth))
        throw std::invalid_argument("chain is not descending at index " +
                                    std::to_string(*bad));
    std::vector<Region> xs = chain.prefix(depth);
    std::vector<const Region*> survivors;
    for (const Region& e : catalog.entries) {
        bool all = true;
        for (const Region& x : xs)
            if (!overlap(e, x)) { all = false; break; }
        if (all) survivors.push_back(&e);
    }
    // contact decisions fold into one window wide enough for every pair, so
    // each survivor's closure is materialized once
    Rat w(2), pl(1), pr(1);
    for (const Region* e : survivors) {
        w = rat_max(w, e->content_bound());
        if (e->left_tail()) pl = rat_lcm(pl, e->left_tail()->period);
        if (e->right_tail()) pr = rat_lcm(pr, e->right_tail()->period);
    }
    w = w + pl + pr + Rat(3);
    std::vector<std::vector<Interval>> closures;
    closures.reserve(survivors.size());
    for (const Region* e : survivors) closures.push_back(closure_parts(e->trace(-w, w)));

    for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = i + 1; j < survivors.size(); ++j)
            if (!closed_lists_meet(closures[i], closures[j])) {
                FalsifyResult res;
                res.witness = std::make_pair(*survivors[i], *survivors[j]);
                res.verdict = Verdict::fails(
                    "x=" + survivors[i]->str() + " y=" + survivors[j]->str(),
                    "r3 fails: separated pair overlapping the whole chain");
                return res;
            }
    FalsifyResult res;
    res.verdict = Verdict::holds_to_depth(
        depth, "no separated witness pair in a catalog of " +
                   std::to_string(catalog.entries.size()) + " regions");
    return res;
}

Verdict is_abstractive(const RegionChain& chain, int depth) {
    for (int i = 0; i <= depth; ++i)
        if (chain.at(i).is_zero())
            return Verdict::fails("index " + std::to_string(i), "r0");
    if (auto bad = first_descent_violation(chain, depth))
        return Verdict::fails("index " + std::to_string(*bad), "descent (r1/r2)");
    for (int i = 0; i < depth; ++i) {
        const Region& next = chain.at(i + 1);
        const Region& cur = chain.at(i);
        if (next == cur)
            return Verdict::fails("index " + std::to_string(i),
                                  "stationary step: no proper part within depth");
    }
    return Verdict::holds_to_depth(depth);
}

Verdict chain_covers(const RegionChain& a, const RegionChain& b, int depth) {
    int top_i = a.clamp_index(depth);
    int top_j = b.clamp_index(2 * depth + 8);
    for (int i = 0; i <= top_i; ++i) {
        bool found = false;
        for (int j = 0; j <= top_j; ++j)
            if (leq(b.at(j), a.at(i))) { found = true; break; }
        if (!found)
            return Verdict::fails("index " + std::to_string(i),
                                  "no covering member within the index budget");
    }
    return Verdict::holds_to_depth(depth);
}

namespace {

// A candidate witnesses a Whitehead failure only when no chain member lies
// below any of its members: index-shifted covering would reappear at larger
// depths, a totally absent one cannot.
bool never_covers_back(const RegionChain& cand, const std::vector<Region>& xs,
                       int depth) {
    for (int i = 0; i <= depth; ++i)
        for (const Region& x : xs)
            if (leq(x, cand.at(i))) return false;
    return true;
}

}  // namespace

WRepResult is_w_representative(const RegionChain& chain, int depth,
                               const Catalog& catalog) {
    Verdict abstractive = is_abstractive(chain, depth);
    if (!abstractive.ok())
        throw std::invalid_argument("chain is not abstractive: " + abstractive.detail +
                                    " at " + abstractive.witness.value_or(""));
    std::vector<Region> xs = chain.prefix(depth);

    // An r3 witness pair yields a covered abstractive chain that never
    // covers back.
    FalsifyResult falsify = g_rep_falsify(chain, depth, catalog);
    if (falsify.witness) {
        CounterexampleSequence seq = build_counterexample_sequence(
            chain, falsify.witness->first, falsify.witness->second, depth);
        if (seq.covered_by_input.ok() && !seq.covers_back.ok()) {
            WRepResult out;
            out.witness_chain = seq.chain;
            out.verdict = Verdict::fails(
                "covered chain from separated pair x=" + falsify.witness->first.str() +
                    " y=" + falsify.witness->second.str(),
                "a covered abstractive chain never covers back");
            return out;
        }
    }

    // Shrinking families anchored on the catalog grid.
    const Region& first = chain.at(0);
    std::vector<Rat> anchors;
    {
        Rat lo = Rat::pos_inf(), hi = Rat::neg_inf();
        for (const Interval& iv : first.core().parts()) {
            lo = rat_min(lo, iv.lo);
            hi = rat_max(hi, iv.hi);
        }
        if (first.right_tail()) hi = Rat::pos_inf();
        if (first.left_tail()) lo = Rat::neg_inf();
        if (lo < hi) {
            Rat glo = lo.is_finite() ? lo : (hi.is_finite() ? hi - Rat(2) : Rat(-2));
            Rat ghi = hi.is_finite() ? hi : (lo.is_finite() ? lo + Rat(2) : Rat(2));
            Rat step(1, depth > 0 ? depth : 1);
            for (Rat g = glo; g <= ghi; g = g + step) anchors.push_back(g);
        }
    }
    std::vector<std::pair<Rat, Rat>> scales = {
        {Rat(1), Rat(1)}, {Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1)}, {Rat(1, 2), Rat(1, 2)}};
    const Region& last = chain.at(depth);
    for (const Rat& t : anchors) {
        if (!last.contains_point(t)) continue;  // cannot be covered otherwise
        for (const auto& [alpha, beta] : scales) {
            Rat a = alpha, bscale = beta, anchor = t;
            RegionChain cand(
                "shrink(" + t.str() + ")", [anchor, a, bscale](int i) {
                    Rat d(i + 1);
                    return Region::interval(anchor - a / d, anchor + bscale / d);
                });
            if (!is_abstractive(cand, depth).ok()) continue;
            if (!chain_covers(chain, cand, depth).ok()) continue;
            if (never_covers_back(cand, xs, depth)) {
                WRepResult out;
                out.witness_chain = cand;
                out.verdict = Verdict::fails(
                    "covered shrinking chain at " + t.str(),
                    "a covered abstractive chain never covers back");
                return out;
            }
        }
    }
    if (first.right_tail() || (!first.core().parts().empty() &&
                               first.core().parts().back().hi.is_pos_inf())) {
        // span is right-unbounded: shifted tail chains are candidate covers
        RegionChain cand("shifted-tails", [](int i) {
            return Region::interval(Rat(i + 1), Rat::pos_inf());
        });
        if (is_abstractive(cand, depth).ok() && chain_covers(chain, cand, depth).ok() &&
            never_covers_back(cand, xs, depth)) {
            WRepResult out;
            out.witness_chain = cand;
            out.verdict = Verdict::fails("covered shifted tail chain",
                                         "a covered abstractive chain never covers back");
            return out;
        }
    }
    WRepResult out;
    out.verdict = Verdict::holds_to_depth(
        depth, "every covered catalog chain covers back");
    return out;
}

CounterexampleSequence build_counterexample_sequence(const RegionChain& x,
                                                     const Region& u, const Region& v,
                                                     int depth) {
    if (u.is_zero() || v.is_zero())
        throw std::invalid_argument("counterexample sequence: u and v must be nonzero");
    if (contact(u, v))
        throw std::invalid_argument("counterexample sequence: u and v are not separated");
    std::vector<Region> xs = x.prefix(depth);
    for (int i = 0; i <= depth; ++i) {
        if (!overlap(u, xs[i]))
            throw std::invalid_argument("counterexample sequence: u misses chain index " +
                                        std::to_string(i));
        if (!overlap(v, xs[i]))
            throw std::invalid_argument("counterexample sequence: v misses chain index " +
                                        std::to_string(i));
    }

    CounterexampleSequence out{.interpolants = {},
                               .chain = RegionChain("", nullptr),
                               .nonzero = Verdict::holds(),
                               .descending = Verdict::holds(),
                               .covered_by_input = Verdict::holds(),
                               .covers_back = Verdict::holds()};
    out.interpolants.push_back(complement(v));  // u_0 = -v
    for (int i = 1; i <= depth; ++i)
        out.interpolants.push_back(interpolate(u, out.interpolants.back()));

    std::vector<Region> elems;
    for (int i = 0; i <= depth; ++i) elems.push_back(meet(out.interpolants[i], xs[i]));
    out.chain = RegionChain::explicit_chain("counterexample", elems);

    out.nonzero = Verdict::holds_to_depth(depth);
    for (int i = 0; i <= depth; ++i)
        if (elems[i].is_zero()) {
            out.nonzero = Verdict::fails("index " + std::to_string(i), "zero member");
            break;
        }
    out.descending = Verdict::holds_to_depth(depth);
    for (int i = 0; i < depth; ++i)
        if (!well_inside(elems[i + 1], elems[i])) {
            out.descending = Verdict::fails("index " + std::to_string(i),
                                            "descent violation");
            break;
        }
    out.covered_by_input = chain_covers(x, out.chain, depth);
    // covers-back should fail at every index
    std::optional<int> covered_index;
    for (int i = 0; i <= depth && !covered_index; ++i)
        for (int j = 0; j <= depth; ++j)
            if (leq(xs[j], elems[i])) { covered_index = i; break; }
    if (covered_index)
        out.covers_back = Verdict::holds_to_depth(
            depth, "input chain member below counterexample index " +
                       std::to_string(*covered_index));
    else
        out.covers_back =
            Verdict::fails("every index 0.." + std::to_string(depth),
                           "no input chain member below any counterexample member");
    return out;
}

}  // namespace bca
