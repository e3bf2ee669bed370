#include <cmi/betti.hpp>

#include <cmi/errors.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace cmi {

std::string format_betti(const BettiTable& t) {
    std::ostringstream out;
    out << "characteristic " << t.characteristic << "\n";
    if (t.entries.empty()) {
        out << "(empty)\n";
        return out.str();
    }
    long long imin = 0, imax = 0, jmin = 0, jmax = 0;
    bool first = true;
    for (const auto& [key, v] : t.entries) {
        (void)v;
        if (first) {
            imin = imax = key.first;
            jmin = jmax = key.second;
            first = false;
        } else {
            imin = std::min(imin, key.first);
            imax = std::max(imax, key.first);
            jmin = std::min(jmin, key.second);
            jmax = std::max(jmax, key.second);
        }
    }
    imin = std::min(imin, 0LL);
    std::vector<std::size_t> width;
    for (long long j = jmin; j <= jmax; ++j) {
        std::size_t w = std::to_string(j).size();
        for (long long i = imin; i <= imax; ++i)
            if (auto v = t.at(i, j)) w = std::max(w, std::to_string(v).size());
        width.push_back(w);
    }
    auto pad = [&out](const std::string& s, std::size_t w) {
        for (std::size_t k = s.size(); k < w; ++k) out << ' ';
        out << s;
    };
    std::size_t rowlab = std::to_string(imax).size() + 1;
    pad("i\\j", rowlab + 2);
    for (long long j = jmin; j <= jmax; ++j) {
        out << "  ";
        pad(std::to_string(j), width[static_cast<std::size_t>(j - jmin)]);
    }
    out << "\n";
    for (long long i = imin; i <= imax; ++i) {
        pad(std::to_string(i), rowlab + 2);
        for (long long j = jmin; j <= jmax; ++j) {
            out << "  ";
            auto v = t.at(i, j);
            pad(v ? std::to_string(v) : ".", width[static_cast<std::size_t>(j - jmin)]);
        }
        out << "\n";
    }
    return out.str();
}

BettiTable betti_recursion(const MonomialIdeal& i1, const MonomialIdeal& i2,
                           const std::function<BettiTable(const MonomialIdeal&)>& source) {
    if (i1.is_zero() || i2.is_zero() || i1.is_unit() || i2.is_unit())
        throw input_error("betti_recursion needs proper nonzero parts");
    auto q1 = generated_in_degree(i1);
    auto q2 = generated_in_degree(i2);
    if (!q1 || !q2 || *q1 != *q2)
        throw input_error("parts must be generated in one common degree");
    MonomialIdeal meet = ideal_intersection(i1, i2);
    auto qm = generated_in_degree(meet);
    if (!qm || *qm != *q1 + 1)
        throw input_error("intersection must be generated in degree q+1");
    BettiTable b1 = source(i1);
    BettiTable b2 = source(i2);
    BettiTable bm = source(meet);
    if (b1.characteristic != b2.characteristic || b1.characteristic != bm.characteristic)
        throw input_error("mixed characteristics in betti_recursion sources");
    BettiTable out;
    out.characteristic = b1.characteristic;
    for (const auto& [key, v] : b1.entries) out.add(key.first, key.second, v);
    for (const auto& [key, v] : b2.entries) out.add(key.first, key.second, v);
    // The meet contributes with homological index shifted up by one; the
    // internal degree is already aligned (i-1 + (q+1) = i + q).
    for (const auto& [key, v] : bm.entries) out.add(key.first + 1, key.second, v);
    return out;
}

} // namespace cmi
