#pragma once

#include <random>

#include "bca/chains.hpp"
#include "bca/contact.hpp"
#include "bca/region.hpp"

namespace bca::testing {

inline Region iv(std::int64_t a, std::int64_t b) { return Region::interval(Rat(a), Rat(b)); }

inline Region ray_from(std::int64_t a) { return Region::interval(Rat(a), Rat::pos_inf()); }

inline Region ray_to(std::int64_t b) { return Region::interval(Rat::neg_inf(), Rat(b)); }

/// Brute-force contact straight from the induced-relation definition:
/// related atoms below each side.
inline bool contact_oracle(const ContactStructure& s, Element x, Element y) {
    if (x == 0 || y == 0) return false;
    const BooleanAlgebra& b = s.algebra();
    for (int p = 0; p < b.atom_count(); ++p)
        for (int q = 0; q < b.atom_count(); ++q)
            if ((x & b.atom(p)) && (y & b.atom(q)) && s.atoms_adjacent(p, q)) return true;
    return false;
}

/// All reflexive symmetric atom relations on n atoms, as edge lists.
inline std::vector<std::vector<std::pair<int, int>>> all_atom_relations(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask & (1u << k)) edges.push_back(slots[k]);
        out.push_back(std::move(edges));
    }
    return out;
}

inline std::vector<std::string> atom_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    return names;
}

/// Deterministic random regions over small rationals; regularized so the
/// values live in the regular-open algebra. Roughly a third carry tails.
class RegionGen {
public:
    explicit RegionGen(std::uint32_t seed) : rng_(seed) {}

    Rat rational() {
        std::int64_t num = std::uniform_int_distribution<std::int64_t>(-24, 24)(rng_);
        std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 4)(rng_);
        return Rat(num, den);
    }

    IntervalSet interval_set(int max_parts, const Rat& lo, const Rat& hi) {
        int count = std::uniform_int_distribution<int>(0, max_parts)(rng_);
        std::vector<Interval> parts;
        for (int i = 0; i < count; ++i) {
            Rat a = lo + (hi - lo) * Rat(std::uniform_int_distribution<int>(0, 23)(rng_), 24);
            Rat b = lo + (hi - lo) * Rat(std::uniform_int_distribution<int>(0, 23)(rng_), 24);
            if (a == b) continue;
            parts.emplace_back(rat_min(a, b), rat_max(a, b));
        }
        return IntervalSet::from_parts(std::move(parts));
    }

    Region plain_region() {
        IntervalSet core = interval_set(3, Rat(-12), Rat(12));
        if (flip(6)) {  // occasionally unbounded
            std::vector<Interval> parts = core.parts();
            if (flip(2))
                parts.emplace_back(Rat(10), Rat::pos_inf());
            else
                parts.emplace_back(Rat::neg_inf(), Rat(-10));
            core = IntervalSet::from_parts(std::move(parts));
        }
        return Region::plain(core);
    }

    std::optional<Tail> tail() {
        Rat period(std::uniform_int_distribution<int>(1, 4)(rng_));
        IntervalSet pattern = interval_set(2, Rat(0), period);
        if (pattern.is_empty()) return std::nullopt;
        Rat start(std::uniform_int_distribution<int>(-6, 6)(rng_));
        return Tail{start, period, pattern};
    }

    Region region() {
        if (flip(3)) {
            std::optional<Tail> right = flip(2) ? tail() : std::nullopt;
            std::optional<Tail> left = (!right || flip(2)) ? tail() : std::nullopt;
            Region raw = Region::from_raw(interval_set(2, Rat(-8), Rat(8)), left, right);
            return join(raw, Region::zero());  // regularize
        }
        return join(plain_region(), Region::zero());
    }

    bool flip(int one_in) {
        return std::uniform_int_distribution<int>(1, one_in)(rng_) == 1;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace bca::testing
