#pragma once

#include <cmi/ideal.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace cmi {

// Graded Betti numbers over a field of the tagged characteristic (0 or a
// prime). Only nonzero entries are stored; key = (homological index i,
// internal degree j).
struct BettiTable {
    long long characteristic = 0;
    std::map<std::pair<long long, long long>, unsigned long long> entries;

    void add(long long i, long long j, unsigned long long count) {
        if (count) entries[{i, j}] += count;
    }
    unsigned long long at(long long i, long long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    // Ungraded beta_i: row sum over internal degrees.
    unsigned long long total(long long i) const {
        unsigned long long s = 0;
        for (const auto& [key, v] : entries)
            if (key.first == i) s += v;
        return s;
    }

    bool operator==(const BettiTable& other) const = default;
};

// Text grid: rows are homological indices, columns internal degrees, zero
// entries shown as dots.
std::string format_betti(const BettiTable& t);

// Combine the Betti numbers of a constructible step: i1, i2 must share a
// single generator degree q and meet in single degree q+1; then
// beta_{i,j}(i1+i2) = beta_{i,j}(i1) + beta_{i,j}(i2) + beta_{i-1,j}(meet).
// The source callback supplies the ingredient tables (oracle, Prop-5.2
// formula, or a recursive call).
BettiTable betti_recursion(const MonomialIdeal& i1, const MonomialIdeal& i2,
                           const std::function<BettiTable(const MonomialIdeal&)>& source);

} // namespace cmi
