#include <cmi/shelling.hpp>

#include <cmi/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmi {

std::uint64_t search_budget_from_env() {
    const char* s = std::getenv("CMI_BUDGET");
    if (!s || !*s) return default_search_budget;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || v < 1)
        throw input_error("CMI_BUDGET must be a positive number");
    if (v > 1.8e19) return UINT64_MAX;
    return static_cast<std::uint64_t>(v);
}

namespace {

// Maximal elements of {f cap p : p in prior} must all have |f|-1 vertices;
// equivalently some intersection has that size and every intersection sits
// inside one that does. For vertices (|f| = 1) the empty intersection is
// itself maximal of size 0, so the step always holds.
bool step_ok_masks(std::uint64_t f, int fsize, const std::vector<std::uint64_t>& prior_masks) {
    if (fsize <= 1) return true;
    bool any = false;
    for (std::uint64_t p : prior_masks) {
        if (std::popcount(f & p) == fsize - 1) {
            any = true;
            break;
        }
    }
    if (!any) return false;
    for (std::uint64_t p : prior_masks) {
        std::uint64_t x = f & p;
        bool covered = false;
        for (std::uint64_t q : prior_masks) {
            std::uint64_t y = f & q;
            if (std::popcount(y) == fsize - 1 && (x & ~y) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

std::uint64_t face_mask(const Face& f) {
    std::uint64_t m = 0;
    for (int v : f.v) m |= std::uint64_t{1} << v;
    return m;
}

} // namespace

bool shelling_step_ok(const Face& f, const std::vector<Face>& prior) {
    std::vector<std::uint64_t> masks;
    masks.reserve(prior.size());
    for (const Face& p : prior) masks.push_back(face_mask(p));
    return step_ok_masks(face_mask(f), static_cast<int>(f.size()), masks);
}

ShellingCheck verify_shelling(const SimplicialComplex& c, const std::vector<Face>& order) {
    if (c.is_void()) throw input_error("void complex has no shelling");
    if (!c.pure()) throw input_error("shellings are defined for pure complexes only");
    if (c.n() > 64) throw input_error("shelling checks support at most 64 vertices");
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets())
        throw input_error("order is not a permutation of the facets");
    std::vector<std::uint64_t> prior;
    prior.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint64_t m = face_mask(order[i]);
        if (i > 0 && !step_ok_masks(m, static_cast<int>(order[i].size()), prior)) {
            ShellingCheck bad;
            bad.ok = false;
            bad.failing_index = i + 1;
            bad.reason = "attachment of facet " + std::to_string(i + 1) +
                         " is not pure of codimension one";
            return bad;
        }
        prior.push_back(m);
    }
    return {};
}

namespace {

// Tri-state subset memo: 0 unknown, 1 yes, 2 no, 3 cut (budget ran out under
// this subset, so "no" cannot be concluded).
class SubsetMemo {
public:
    SubsetMemo(std::size_t m) {
        if (m <= 24) dense_.assign(std::size_t{1} << m, 0);
    }
    std::uint8_t get(std::uint64_t key) const {
        if (!dense_.empty()) return dense_[key];
        auto it = sparse_.find(key);
        return it == sparse_.end() ? 0 : it->second;
    }
    void set(std::uint64_t key, std::uint8_t val) {
        if (!dense_.empty()) dense_[key] = val;
        else sparse_[key] = val;
    }

private:
    std::vector<std::uint8_t> dense_;
    std::unordered_map<std::uint64_t, std::uint8_t> sparse_;
};

struct ShellSearcher {
    const std::vector<std::uint64_t>& fmask; // facet vertex masks
    int fsize;                               // common facet size
    std::uint64_t budget;
    SubsetMemo memo;
    std::unordered_map<std::uint64_t, int> last_choice;
    SearchStats stats;

    ShellSearcher(const std::vector<std::uint64_t>& fm, int fs, std::uint64_t b)
        : fmask(fm), fsize(fs), budget(b), memo(fm.size()) {}

    bool step_ok(std::uint64_t rest, int i) {
        ++stats.steps;
        std::uint64_t f = fmask[static_cast<std::size_t>(i)];
        if (fsize == 1) return true;
        bool any = false;
        for (std::uint64_t s = rest; s; s &= s - 1) {
            int j = std::countr_zero(s);
            if (std::popcount(f & fmask[static_cast<std::size_t>(j)]) == fsize - 1) {
                any = true;
                break;
            }
        }
        if (!any) return false;
        for (std::uint64_t s = rest; s; s &= s - 1) {
            int j = std::countr_zero(s);
            std::uint64_t x = f & fmask[static_cast<std::size_t>(j)];
            bool covered = false;
            for (std::uint64_t t = rest; t; t &= t - 1) {
                int k = std::countr_zero(t);
                std::uint64_t y = f & fmask[static_cast<std::size_t>(k)];
                if (std::popcount(y) == fsize - 1 && (x & ~y) == 0) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }

    // 1 = shellable, 2 = not, 3 = undecided under budget.
    std::uint8_t solve(std::uint64_t set) {
        if (std::popcount(set) == 1) return 1;
        std::uint8_t known = memo.get(set);
        if (known) return known;
        bool saw_cut = false;
        std::uint8_t verdict = 2;
        for (std::uint64_t s = set; s; s &= s - 1) {
            int i = std::countr_zero(s);
            if (stats.steps >= budget) {
                saw_cut = true;
                break;
            }
            std::uint64_t rest = set & ~(std::uint64_t{1} << i);
            if (!step_ok(rest, i)) continue;
            std::uint8_t sub = solve(rest);
            if (sub == 1) {
                verdict = 1;
                last_choice[set] = i;
                break;
            }
            if (sub == 3) saw_cut = true;
        }
        if (verdict != 1 && saw_cut) verdict = 3;
        memo.set(set, verdict);
        ++stats.memo_states;
        return verdict;
    }
};

} // namespace

ShellingResult find_shelling(const SimplicialComplex& c, std::uint64_t budget) {
    if (c.is_void()) throw input_error("void complex has no shelling");
    if (!c.pure()) throw input_error("shelling search needs a pure complex");
    if (c.n() > 64) throw input_error("shelling search supports at most 64 vertices");
    const std::size_t m = c.facets().size();
    if (m > 63) throw input_error("shelling search supports at most 63 facets");

    ShellingResult out;
    if (m == 1) {
        out.status = SearchStatus::Found;
        out.order = c.facets();
        return out;
    }
    std::vector<std::uint64_t> fmask;
    fmask.reserve(m);
    for (const Face& f : c.facets()) fmask.push_back(face_mask(f));
    ShellSearcher search(fmask, static_cast<int>(c.facets().front().size()), budget);
    std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::uint8_t verdict = search.solve(full);
    out.stats = search.stats;
    if (verdict == 1) {
        out.status = SearchStatus::Found;
        std::vector<int> rev;
        std::uint64_t set = full;
        while (std::popcount(set) > 1) {
            int i = search.last_choice.at(set);
            rev.push_back(i);
            set &= ~(std::uint64_t{1} << i);
        }
        rev.push_back(std::countr_zero(set));
        out.order.reserve(m);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            out.order.push_back(c.facets()[static_cast<std::size_t>(*it)]);
    } else if (verdict == 2) {
        out.status = SearchStatus::Refuted;
    } else {
        out.status = SearchStatus::BudgetExceeded;
    }
    return out;
}

} // namespace cmi
