#include <cmi/json_io.hpp>

#include <cmi/errors.hpp>
#include <cmi/variables.hpp>

#include <limits>
#include <string>
#include <vector>

namespace cmi {

namespace {

long long exp_to_ll(const Int& e) {
    if (e < 0 || e > std::numeric_limits<long long>::max())
        throw input_error("exponent out of serializable range");
    return static_cast<long long>(e);
}

std::vector<Int> exps_from_json(const nlohmann::json& j, std::size_t nvars) {
    if (!j.is_array())
        throw input_error("exponent vector must be an array");
    if (nvars != 0 && j.size() != nvars)
        throw input_error("exponent vector has arity " + std::to_string(j.size()) +
                          ", expected " + std::to_string(nvars));
    std::vector<Int> exps;
    exps.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw input_error("exponents must be nonnegative integers");
        exps.emplace_back(e.get<long long>());
    }
    return exps;
}

} // namespace

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (std::size_t i = 0; i < ideal.nvars(); ++i)
        j["vars"].push_back(ideal.vars()->name(i));
    j["gens"] = nlohmann::json::array();
    for (const Monomial& g : ideal.gens()) {
        nlohmann::json exps = nlohmann::json::array();
        for (const Int& e : g.exps())
            exps.push_back(exp_to_ll(e));
        j["gens"].push_back(std::move(exps));
    }
    return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
        throw input_error("ideal object needs \"vars\" and \"gens\"");
    std::vector<std::string> names;
    for (const auto& v : j["vars"]) {
        if (!v.is_string())
            throw input_error("variable labels must be strings");
        names.push_back(v.get<std::string>());
    }
    auto vars = std::make_shared<const VariableSet>(names);
    std::vector<Monomial> gens;
    for (const auto& g : j["gens"])
        gens.emplace_back(exps_from_json(g, names.size()));
    return MonomialIdeal(vars, gens);
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < c.labels()->size(); ++i)
        j["vertices"].push_back(c.labels()->name(i));
    j["facets"] = nlohmann::json::array();
    for (const Face& f : c.facets()) {
        nlohmann::json verts = nlohmann::json::array();
        for (int v : f.v)
            verts.push_back(c.labels()->name(static_cast<std::size_t>(v)));
        j["facets"].push_back(std::move(verts));
    }
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw input_error("complex object needs \"facets\"");
    std::vector<std::string> names;
    if (j.contains("vertices")) {
        for (const auto& v : j["vertices"])
            names.push_back(v.is_string() ? v.get<std::string>()
                                          : std::to_string(v.get<long long>()));
    } else if (j.contains("n")) {
        long long n = j["n"].get<long long>();
        if (n < 0)
            throw input_error("vertex count must be nonnegative");
        for (long long i = 0; i < n; ++i)
            names.push_back(std::to_string(i));
    } else {
        throw input_error("complex object needs \"vertices\" or \"n\"");
    }
    auto labels = std::make_shared<const VariableSet>(names);

    std::vector<Face> faces;
    for (const auto& fj : j["facets"]) {
        if (!fj.is_array())
            throw input_error("each facet must be an array of vertices");
        std::vector<int> verts;
        for (const auto& vj : fj) {
            std::string label = vj.is_string() ? vj.get<std::string>()
                                               : std::to_string(vj.get<long long>());
            auto idx = labels->index_of(label);
            if (!idx)
                throw input_error("unknown vertex label \"" + label + "\"");
            verts.push_back(static_cast<int>(*idx));
        }
        faces.emplace_back(verts);
    }
    return SimplicialComplex(labels, faces);
}

nlohmann::json certificate_to_json(const CertPtr& cert) {
    if (!cert)
        throw input_error("null certificate");
    nlohmann::json j;
    if (cert->is_leaf()) {
        nlohmann::json exps = nlohmann::json::array();
        for (const Int& e : cert->leaf_monomial().exps())
            exps.push_back(exp_to_ll(e));
        j["leaf"] = std::move(exps);
    } else {
        j["left"] = certificate_to_json(cert->left());
        j["right"] = certificate_to_json(cert->right());
        j["meet"] = certificate_to_json(cert->meet());
    }
    return j;
}

CertPtr certificate_from_json(const nlohmann::json& j, std::size_t nvars) {
    if (!j.is_object())
        throw input_error("certificate node must be an object");
    if (j.contains("leaf"))
        return Certificate::leaf(Monomial(exps_from_json(j["leaf"], nvars)));
    if (j.contains("left") && j.contains("right") && j.contains("meet"))
        return Certificate::node(certificate_from_json(j["left"], nvars),
                                 certificate_from_json(j["right"], nvars),
                                 certificate_from_json(j["meet"], nvars));
    throw input_error("certificate node needs \"leaf\" or \"left\"/\"right\"/\"meet\"");
}

nlohmann::json betti_to_json(const BettiTable& table) {
    nlohmann::json j;
    j["characteristic"] = table.characteristic;
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, value] : table.entries) {
        nlohmann::json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["value"] = value;
        j["entries"].push_back(std::move(e));
    }
    return j;
}

} // namespace cmi
