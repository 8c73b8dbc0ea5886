#pragma once

#include <functional>
#include <map>
#include <memory>

#include "bca/region.hpp"
#include "bca/report.hpp"

namespace bca {

/// Lazily indexed descending chain of regions on the interval carrier.
class RegionChain {
public:
    RegionChain(std::string name, std::function<Region(int)> gen)
        : name_(std::move(name)), gen_(std::move(gen)),
          cache_(std::make_shared<std::map<int, Region>>()) {}

    static RegionChain explicit_chain(std::string name, std::vector<Region> elems);

    const std::string& name() const { return name_; }
    const Region& at(int i) const;
    std::vector<Region> prefix(int depth) const;  // elements 0..depth

    /// Largest valid index for finite chains.
    std::optional<int> max_index() const { return max_index_; }
    int clamp_index(int i) const {
        return max_index_ && i > *max_index_ ? *max_index_ : i;
    }

private:
    std::string name_;
    std::function<Region(int)> gen_;
    std::shared_ptr<std::map<int, Region>> cache_;  // node-stable references
    std::optional<int> max_index_;
};

// Canonical families.
RegionChain origin_family(const Rat& center);   // (c - 1/(i+1), c + 1/(i+1))
RegionChain tails_family();                     // (i, inf)
RegionChain de_vries_not_end_family();          // (-1 - 1/(i+1), 1 + 1/(i+1))
std::pair<Region, Region> stripes4();           // U(4k,4k+1), U(4k+2,4k+3)

/// Index of the first i < depth with x_{i+1} not well inside x_i, if any.
std::optional<int> first_descent_violation(const RegionChain& chain, int depth);

/// Deterministic witness catalog: single intervals with endpoints on the
/// 1/depth grid over the chain span (rays replace unbounded span ends),
/// optionally followed by periodic unit-interval patterns of period <= 8.
struct Catalog {
    std::vector<Region> entries;
    bool periodic = false;
};
Catalog build_catalog(const RegionChain& chain, int depth, bool include_periodic);

struct FalsifyResult {
    Verdict verdict;
    std::optional<std::pair<Region, Region>> witness;
};

/// Searches the catalog for a separated pair overlapping every chain element
/// up to the given depth (an r3 counterexample). Witnesses are the least
/// pair in catalog order. Throws when the chain prefix is not descending.
FalsifyResult g_rep_falsify(const RegionChain& chain, int depth, const Catalog& catalog);

/// r0 plus strict well-inside descent over the examined prefix.
Verdict is_abstractive(const RegionChain& chain, int depth);

/// Whitehead covering checked index by index: every a_i with i <= depth
/// must have some b_j below it; the covering index j is searched up to
/// 2*depth + 8 (clamped for finite chains), so index-shifted covers are
/// found within the examined prefix.
Verdict chain_covers(const RegionChain& a, const RegionChain& b, int depth);

struct WRepResult {
    Verdict verdict;
    std::optional<RegionChain> witness_chain;
};

/// Semi-decision of Whitehead maximality: searches covered abstractive
/// chains (catalog-derived shrinking families, plus the counterexample
/// sequence when the catalog falsifies r3) for one that fails to cover
/// back. Throws when the chain is not abstractive to the given depth.
WRepResult is_w_representative(const RegionChain& chain, int depth,
                               const Catalog& catalog);

struct CounterexampleSequence {
    std::vector<Region> interpolants;  // u_i, descending from the complement of v
    RegionChain chain;                 // i -> u_i * x_i
    Verdict nonzero;
    Verdict descending;
    Verdict covered_by_input;
    Verdict covers_back;  // fails at every index by construction
};

/// Builds the interpolating sequence u << ... << u_1 << u_0 = -v and the
/// chain (u_i * x_i). Requires u, v separated and both overlapping
/// x_0..x_depth; throws naming the violated precondition otherwise.
CounterexampleSequence build_counterexample_sequence(const RegionChain& x,
                                                     const Region& u, const Region& v,
                                                     int depth);

}  // namespace bca
