#include <cmi/text.hpp>

#include <cmi/errors.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cmi {

namespace {

[[noreturn]] void fail_at(std::string_view text, std::size_t pos, const std::string& why) {
    std::ostringstream os;
    os << "syntax error at position " << pos << ": " << why << " in \"" << text << "\"";
    throw input_error(os.str());
}

bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

std::string_view read_label(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && is_label_char(s[i]))
        ++i;
    return s.substr(start, i - start);
}

Int read_posint(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == start)
        fail_at(s, start, "expected a positive integer exponent");
    Int value(std::string(s.substr(start, i - start)));
    if (value <= 0)
        fail_at(s, start, "exponent must be positive");
    return value;
}

// Splits on a separator at the top level (no nesting in these formats).
std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

// Collects the variable labels a monomial/ideal text mentions, in order of
// first appearance, skipping the literals "0" and "1".
std::vector<std::string> collect_labels(std::string_view text) {
    std::vector<std::string> labels;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (is_label_char(c)) {
            std::string_view lab = read_label(text, i);
            // A bare integer token is a unit/zero literal or an exponent.
            bool all_digits = std::all_of(lab.begin(), lab.end(), [](char ch) {
                return std::isdigit(static_cast<unsigned char>(ch));
            });
            if (!all_digits && std::find(labels.begin(), labels.end(), lab) == labels.end())
                labels.emplace_back(lab);
        } else {
            ++i;
        }
    }
    return labels;
}

// prefix+integer split, e.g. "x12" -> ("x", 12). Empty prefix rejected.
std::optional<std::pair<std::string, long long>> split_numbered(std::string_view label) {
    std::size_t d = label.size();
    while (d > 0 && std::isdigit(static_cast<unsigned char>(label[d - 1])))
        --d;
    if (d == 0 || d == label.size() || label.size() - d > 9)
        return std::nullopt;
    return std::make_pair(std::string(label.substr(0, d)),
                          std::stoll(std::string(label.substr(d))));
}

} // namespace

Monomial parse_monomial(const VariableSet& vars, std::string_view text) {
    std::vector<Int> exps(vars.size(), 0);
    std::size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size())
        fail_at(text, i, "empty monomial");

    bool expect_term = true;
    bool unit_literal_seen = false;
    while (i < text.size()) {
        skip_ws(text, i);
        if (i >= text.size())
            break;
        if (expect_term) {
            std::size_t term_pos = i;
            if (text[i] == '1' && (i + 1 >= text.size() || !is_label_char(text[i + 1]))) {
                ++i;
                unit_literal_seen = true;
            } else if (is_label_char(text[i])) {
                std::string_view lab = read_label(text, i);
                auto idx = vars.index_of(lab);
                if (!idx)
                    fail_at(text, term_pos, "unknown variable '" + std::string(lab) + "'");
                Int power = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws(text, i);
                    power = read_posint(text, i);
                }
                exps[*idx] += power;
            } else {
                fail_at(text, i, "expected a variable");
            }
            expect_term = false;
        } else {
            if (text[i] != '*')
                fail_at(text, i, "expected '*'");
            ++i;
            expect_term = true;
        }
    }
    if (expect_term)
        fail_at(text, text.size(), "dangling '*'");
    (void)unit_literal_seen;
    return Monomial(std::move(exps));
}

std::string format_monomial(const VariableSet& vars, const Monomial& m) {
    if (m.arity() != vars.size())
        throw input_error("monomial arity does not match the variable set");
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m.exp(i) == 0)
            continue;
        if (!first)
            os << '*';
        os << vars.name(i);
        if (m.exp(i) > 1)
            os << '^' << m.exp(i);
        first = false;
    }
    return os.str();
}

MonomialIdeal parse_ideal(VarsPtr vars, std::string_view text) {
    std::string_view body = trim(text);
    if (body == "0")
        return MonomialIdeal::zero(std::move(vars));
    if (body.empty())
        throw input_error("empty ideal text (use \"0\" for the zero ideal)");
    std::vector<Monomial> gens;
    for (std::string_view part : split(body, ',')) {
        part = trim(part);
        if (part.empty())
            throw input_error("empty generator in ideal text");
        gens.push_back(parse_monomial(*vars, part));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
        if (i)
            os << ", ";
        os << format_monomial(*ideal.vars(), ideal.gens()[i]);
    }
    return os.str();
}

VarsPtr parse_vars_decl(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty())
        throw input_error("empty variable declaration");
    auto dots = body.find("..");
    if (dots != std::string_view::npos && body.find(',') == std::string_view::npos) {
        std::string_view lo_text = trim(body.substr(0, dots));
        std::string_view hi_text = trim(body.substr(dots + 2));
        auto all_digits = [](std::string_view s) {
            return !s.empty() && s.size() <= 9 &&
                   s.find_first_not_of("0123456789") == std::string_view::npos;
        };
        // Bare numeric ranges ("0..7") name vertices; prefixed ranges
        // ("x1..x9") name polynomial variables.
        if (all_digits(lo_text) && all_digits(hi_text)) {
            long long lo = std::stoll(std::string(lo_text));
            long long hi = std::stoll(std::string(hi_text));
            if (hi < lo)
                throw input_error("bad variable range '" + std::string(body) + "'");
            return VariableSet::numbered("", lo, static_cast<std::size_t>(hi - lo + 1));
        }
        auto lo = split_numbered(lo_text);
        auto hi = split_numbered(hi_text);
        if (!lo || !hi || lo->first != hi->first || hi->second < lo->second)
            throw input_error("bad variable range '" + std::string(body) + "'");
        return VariableSet::numbered(lo->first, lo->second,
                                     static_cast<std::size_t>(hi->second - lo->second + 1));
    }
    std::vector<std::string> names;
    for (std::string_view part : split(body, ','))
        names.emplace_back(trim(part));
    return std::make_shared<VariableSet>(std::move(names));
}

MonomialIdeal parse_ideal_text(std::string_view text) {
    // Optional header line: "vars: ...".
    std::string_view body = text;
    std::string_view header;
    std::string_view probe = trim(body);
    if (probe.substr(0, 5) == "vars:") {
        auto nl = probe.find('\n');
        header = probe.substr(5, nl == std::string_view::npos ? probe.size() - 5 : nl - 5);
        body = nl == std::string_view::npos ? std::string_view{} : probe.substr(nl + 1);
        if (trim(body).empty())
            throw input_error("ideal text has a vars header but no generators");
        return parse_ideal(parse_vars_decl(header), body);
    }

    std::vector<std::string> labels = collect_labels(body);
    if (labels.empty()) {
        // "0" or "1" with no variables mentioned: a one-variable ambient.
        return parse_ideal(VariableSet::numbered("x", 1, 1), body);
    }
    // All labels share one prefix+integer shape: use the full range.
    std::vector<std::pair<std::string, long long>> numbered;
    bool uniform = true;
    for (const std::string& lab : labels) {
        auto pn = split_numbered(lab);
        if (!pn || (!numbered.empty() && pn->first != numbered.front().first)) {
            uniform = false;
            break;
        }
        numbered.push_back(*pn);
    }
    VarsPtr vars;
    if (uniform) {
        long long lo = numbered.front().second, hi = lo;
        for (auto& [p, k] : numbered) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
        // Start the range at 1 (or 0 if a zero index appears) so that e.g.
        // "x2*x3" still lives in x1..x3.
        long long first = lo <= 0 ? lo : 1;
        vars = VariableSet::numbered(numbered.front().first, first,
                                     static_cast<std::size_t>(hi - first + 1));
    } else {
        vars = std::make_shared<VariableSet>(labels);
    }
    return parse_ideal(std::move(vars), body);
}

} // namespace cmi
