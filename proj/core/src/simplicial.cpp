#include <cmi/simplicial.hpp>

#include <cmi/errors.hpp>
#include <cmi/text.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <utility>

namespace cmi {

namespace {

std::vector<int> normalized(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

} // namespace

Face::Face(std::initializer_list<int> init) : v(normalized(std::vector<int>(init))) {}
Face::Face(std::vector<int> verts) : v(normalized(std::move(verts))) {}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.v.begin(), other.v.end(), v.begin(), v.end());
}

Face face_intersection(const Face& a, const Face& b) {
    std::vector<int> out;
    std::set_intersection(a.v.begin(), a.v.end(), b.v.begin(), b.v.end(),
                          std::back_inserter(out));
    return Face(std::move(out));
}

Face face_complement(const Face& f, int n) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - f.size());
    auto it = f.v.begin();
    for (int i = 0; i < n; ++i) {
        if (it != f.v.end() && *it == i) {
            ++it;
        } else {
            out.push_back(i);
        }
    }
    return Face(std::move(out));
}

namespace {

// Keep inclusion-maximal faces, deduplicated, in canonical (lex) order.
std::vector<Face> maximalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> kept;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& g : kept) {
            if (f.subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

SimplicialComplex::SimplicialComplex(VarsPtr labels, std::vector<Face> faces)
    : labels_(std::move(labels)) {
    if (!labels_) throw input_error("complex needs a vertex label set");
    if (faces.empty()) throw input_error("complex needs at least one face");
    const int nn = n();
    for (const Face& f : faces) {
        for (int v : f.v) {
            if (v < 0 || v >= nn)
                throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                                  std::to_string(nn) + ")");
        }
    }
    facets_ = maximalize(std::move(faces));
}

SimplicialComplex SimplicialComplex::void_complex(VarsPtr labels) {
    SimplicialComplex c(std::move(labels), {Face{}});
    c.facets_.clear();
    return c;
}

SimplicialComplex SimplicialComplex::full_simplex(VarsPtr labels) {
    std::vector<int> all(labels->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return SimplicialComplex(std::move(labels), {Face(std::move(all))});
}

int SimplicialComplex::dim() const {
    if (is_void()) throw input_error("void complex has no dimension");
    std::size_t best = 0;
    for (const Face& f : facets_) best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

bool SimplicialComplex::pure() const {
    if (is_void()) throw input_error("void complex has no dimension");
    for (const Face& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

bool SimplicialComplex::is_full_simplex() const {
    return facets_.size() == 1 && facets_.front().size() == static_cast<std::size_t>(n());
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const Face& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return same_vars(labels_, other.labels_) && facets_ == other.facets_;
}

namespace {

void require_same_ambient(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (!same_vars(a.labels(), b.labels()))
        throw input_error("complexes over different vertex sets");
}

} // namespace

SimplicialComplex complement_complex(const SimplicialComplex& c) {
    if (c.is_void()) return SimplicialComplex::void_complex(c.labels());
    std::vector<Face> faces;
    faces.reserve(c.facets().size());
    for (const Face& f : c.facets()) faces.push_back(face_complement(f, c.n()));
    return SimplicialComplex(c.labels(), std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    require_same_ambient(a, b);
    if (a.is_void()) return b;
    if (b.is_void()) return a;
    std::vector<Face> faces = a.facets();
    faces.insert(faces.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex(a.labels(), std::move(faces));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    require_same_ambient(a, b);
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.labels());
    std::vector<Face> faces;
    faces.reserve(a.facets().size() * b.facets().size());
    for (const Face& f : a.facets())
        for (const Face& g : b.facets()) faces.push_back(face_intersection(f, g));
    return SimplicialComplex(a.labels(), std::move(faces));
}

namespace {

VarsPtr dual_variables(const VariableSet& labels) {
    std::vector<std::string> names;
    names.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) names.push_back("x" + labels.name(i));
    return std::make_shared<const VariableSet>(std::move(names));
}

Monomial squarefree_on(std::size_t nvars, const std::vector<int>& verts) {
    std::vector<Int> exps(nvars, 0);
    for (int v : verts) exps[static_cast<std::size_t>(v)] = 1;
    return Monomial(std::move(exps));
}

} // namespace

MonomialIdeal alexander_dual_ideal(const SimplicialComplex& c) {
    if (c.is_full_simplex())
        throw input_error("the full simplex has zero dual ideal; rejected");
    VarsPtr vars = dual_variables(*c.labels());
    if (c.is_void()) return MonomialIdeal::zero(vars);
    std::vector<Monomial> gens;
    gens.reserve(c.facets().size());
    for (const Face& f : c.facets())
        gens.push_back(squarefree_on(vars->size(), face_complement(f, c.n()).v));
    return MonomialIdeal(vars, std::move(gens));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
    const int n = c.n();
    if (n > 24) throw input_error("minimal nonface enumeration supports at most 24 vertices");
    VarsPtr vars = dual_variables(*c.labels());
    std::vector<Face> min_nonfaces;
    std::vector<int> cand;
    // Levelwise: a candidate is a minimal nonface iff it is not a face and no
    // smaller minimal nonface sits inside it.
    for (int s = 0; s <= n; ++s) {
        cand.assign(static_cast<std::size_t>(s), 0);
        auto rec = [&](auto&& self, int pos, int next) -> void {
            if (pos == s) {
                Face f(cand);
                for (const Face& m : min_nonfaces)
                    if (m.subset_of(f)) return;
                if (!c.contains(f)) min_nonfaces.push_back(f);
                return;
            }
            for (int v = next; v <= n - (s - pos); ++v) {
                cand[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    }
    if (min_nonfaces.empty()) return MonomialIdeal::zero(vars);
    std::vector<Monomial> gens;
    gens.reserve(min_nonfaces.size());
    for (const Face& f : min_nonfaces) gens.push_back(squarefree_on(vars->size(), f.v));
    return MonomialIdeal(vars, std::move(gens));
}

namespace {

VarsPtr vertex_labels_from_vars(const VariableSet& vars) {
    bool all_x = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string& nm = vars.name(i);
        if (nm.size() < 2 || nm[0] != 'x') {
            all_x = false;
            break;
        }
    }
    std::vector<std::string> labels;
    labels.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
        labels.push_back(all_x ? vars.name(i).substr(1) : vars.name(i));
    return std::make_shared<const VariableSet>(std::move(labels));
}

// Minimal transversals of a set system given as bitmasks, by incremental
// edge insertion keeping the family an antichain.
std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& edges) {
    std::vector<std::uint64_t> trans{0};
    for (std::uint64_t e : edges) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t t : trans) {
            if (t & e) {
                next.push_back(t);
            } else {
                for (std::uint64_t bits = e; bits; bits &= bits - 1)
                    next.push_back(t | (bits & ~(bits - 1)));
            }
        }
        std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<std::uint64_t> kept;
        for (std::uint64_t t : next) {
            bool dominated = false;
            for (std::uint64_t s : kept) {
                if ((s & ~t) == 0) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(t);
        }
        trans = std::move(kept);
    }
    return trans;
}

} // namespace

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw input_error("the unit ideal is not a Stanley-Reisner ideal");
    if (!ideal.squarefree()) throw input_error("non-squarefree generator");
    const int n = static_cast<int>(ideal.nvars());
    if (n > 64) throw input_error("complex recovery supports at most 64 variables");
    VarsPtr labels = vertex_labels_from_vars(*ideal.vars());
    std::vector<std::uint64_t> edges;
    edges.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) {
        std::uint64_t m = 0;
        for (std::size_t i : g.support()) m |= std::uint64_t{1} << i;
        edges.push_back(m);
    }
    // Faces avoid every generator support; facets are complements of the
    // minimal transversals of the support system.
    std::vector<Face> facets;
    for (std::uint64_t t : minimal_transversals(edges)) {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (!(t >> i & 1)) verts.push_back(i);
        facets.push_back(Face(std::move(verts)));
    }
    return SimplicialComplex(labels, std::move(facets));
}

MonomialIdeal alexander_dual_of_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw input_error("the zero ideal has no Alexander dual here");
    if (ideal.is_unit()) throw input_error("the unit ideal has no Alexander dual here");
    SimplicialComplex c = complex_from_squarefree_ideal(ideal);
    std::vector<Monomial> gens;
    gens.reserve(c.facets().size());
    for (const Face& f : c.facets())
        gens.push_back(squarefree_on(ideal.nvars(), face_complement(f, c.n()).v));
    return MonomialIdeal(ideal.vars(), std::move(gens));
}

namespace {

std::string trimmed(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

SimplicialComplex parse_complex_text(std::string_view text) {
    std::string body(text);
    VarsPtr labels;
    // Optional header "vertices: ..." before the first '{'; required when
    // labels are not small nonnegative integers.
    std::size_t brace = body.find('{');
    std::string head = trimmed(brace == std::string::npos ? body : body.substr(0, brace));
    if (!head.empty()) {
        if (head.rfind("vertices:", 0) != 0)
            throw input_error("expected 'vertices:' header or a facet list");
        labels = parse_vars_decl(trimmed(head.substr(9)));
        body = brace == std::string::npos ? std::string() : body.substr(brace);
    }
    std::vector<std::vector<std::string>> raw;
    std::size_t pos = 0;
    while (pos < body.size()) {
        char ch = body[pos];
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == ',') {
            ++pos;
            continue;
        }
        if (ch != '{') throw input_error("expected '{' at position " + std::to_string(pos));
        std::size_t close = body.find('}', pos);
        if (close == std::string::npos) throw input_error("unterminated facet: missing '}'");
        std::string inner = trimmed(body.substr(pos + 1, close - pos - 1));
        std::vector<std::string> verts;
        if (!inner.empty()) {
            std::size_t p = 0;
            while (true) {
                std::size_t comma = inner.find(',', p);
                std::string tok = trimmed(comma == std::string::npos
                                              ? inner.substr(p)
                                              : inner.substr(p, comma - p));
                if (tok.empty()) throw input_error("empty vertex entry in facet");
                verts.push_back(std::move(tok));
                if (comma == std::string::npos) break;
                p = comma + 1;
            }
        }
        raw.push_back(std::move(verts));
        pos = close + 1;
    }
    if (raw.empty()) throw input_error("no facets given");
    if (!labels) {
        // No header: labels must be nonnegative integers; ambient is 0..max.
        long long mx = -1;
        for (const auto& f : raw)
            for (const std::string& t : f) {
                if (t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
                    throw input_error("vertex label '" + t +
                                      "' needs a 'vertices:' header");
                mx = std::max(mx, std::stoll(t));
            }
        if (mx < 0) mx = 0;
        std::vector<std::string> names;
        for (long long i = 0; i <= mx; ++i) names.push_back(std::to_string(i));
        labels = std::make_shared<const VariableSet>(std::move(names));
    }
    std::vector<Face> faces;
    faces.reserve(raw.size());
    for (const auto& f : raw) {
        std::vector<int> verts;
        verts.reserve(f.size());
        for (const std::string& t : f) {
            auto idx = labels->index_of(t);
            if (!idx) throw input_error("unknown vertex label '" + t + "'");
            verts.push_back(static_cast<int>(*idx));
        }
        faces.push_back(Face(std::move(verts)));
    }
    return SimplicialComplex(labels, std::move(faces));
}

std::string format_complex(const SimplicialComplex& c) {
    std::ostringstream out;
    out << "vertices: ";
    bool consecutive = c.labels()->size() > 1;
    long long lo = 0, hi = 0;
    for (std::size_t i = 0; i < c.labels()->size() && consecutive; ++i) {
        const std::string& nm = c.labels()->name(i);
        if (nm.empty() || nm.size() > 9 ||
            nm.find_first_not_of("0123456789") != std::string::npos) {
            consecutive = false;
            break;
        }
        long long val = std::stoll(nm);
        if (i == 0) lo = hi = val;
        else if (val == hi + 1) hi = val;
        else consecutive = false;
    }
    if (consecutive) {
        out << lo << ".." << hi;
    } else {
        for (std::size_t i = 0; i < c.labels()->size(); ++i) {
            if (i) out << ",";
            out << c.labels()->name(i);
        }
    }
    out << "\n";
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
        if (i) out << ", ";
        out << "{";
        const Face& f = c.facets()[i];
        for (std::size_t j = 0; j < f.v.size(); ++j) {
            if (j) out << ",";
            out << c.labels()->name(static_cast<std::size_t>(f.v[j]));
        }
        out << "}";
    }
    out << "\n";
    return out.str();
}

} // namespace cmi
