#include <cmi/certificate.hpp>

#include <cmi/errors.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace cmi {

CertPtr Certificate::leaf(Monomial u) {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->leaf_ = std::move(u);
    return c;
}

CertPtr Certificate::node(CertPtr left, CertPtr right, CertPtr meet) {
    if (!left || !right || !meet) throw input_error("certificate node needs three subtrees");
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->left_ = std::move(left);
    c->right_ = std::move(right);
    c->meet_ = std::move(meet);
    return c;
}

const Monomial& Certificate::leaf_monomial() const {
    if (!is_leaf()) throw input_error("not a leaf certificate");
    return leaf_;
}

const CertPtr& Certificate::left() const {
    if (is_leaf()) throw input_error("leaf certificate has no subtrees");
    return left_;
}
const CertPtr& Certificate::right() const {
    if (is_leaf()) throw input_error("leaf certificate has no subtrees");
    return right_;
}
const CertPtr& Certificate::meet() const {
    if (is_leaf()) throw input_error("leaf certificate has no subtrees");
    return meet_;
}

namespace {

void collect_leaves(const Certificate& cert, std::vector<Monomial>& out) {
    if (cert.is_leaf()) {
        out.push_back(cert.leaf_monomial());
        return;
    }
    collect_leaves(*cert.left(), out);
    collect_leaves(*cert.right(), out);
}

} // namespace

MonomialIdeal certified_ideal(VarsPtr vars, const Certificate& cert) {
    std::vector<Monomial> leaves;
    collect_leaves(cert, leaves);
    return MonomialIdeal(std::move(vars), std::move(leaves));
}

namespace {

struct Verifier {
    const VarsPtr& vars;
    const std::optional<Monomial>& bound;
    Int bound_degree;
    CertCheck result;

    bool fail(const std::string& path, const std::string& reason) {
        if (result.ok) {
            result.ok = false;
            result.path = path;
            result.reason = reason;
        }
        return false;
    }

    bool check(const MonomialIdeal& claimed, const Certificate& cert, const std::string& path) {
        if (cert.is_leaf()) {
            const Monomial& u = cert.leaf_monomial();
            if (u.arity() != vars->size())
                return fail(path, "leaf monomial arity mismatch");
            if (bound && !divides(u, *bound))
                return fail(path, "leaf exceeds the bound vector");
            if (claimed != MonomialIdeal(vars, {u}))
                return fail(path, "leaf does not generate the claimed ideal");
            return true;
        }
        MonomialIdeal lhs = certified_ideal(vars, *cert.left());
        MonomialIdeal rhs = certified_ideal(vars, *cert.right());
        if (ideal_sum(lhs, rhs) != claimed) return fail(path, "left + right != claimed ideal");
        if (lhs.is_zero() || rhs.is_zero() || lhs.is_unit() || rhs.is_unit())
            return fail(path, "parts must be proper nonzero ideals");
        auto ql = generated_in_degree(lhs);
        auto qr = generated_in_degree(rhs);
        if (!ql || !qr) return fail(path, "a part is generated in mixed degrees");
        if (*ql != *qr) return fail(path, "left and right degrees differ");
        if (bound && !(*ql < bound_degree))
            return fail(path, "node degree must stay below the bound total");
        MonomialIdeal meet = ideal_intersection(lhs, rhs);
        auto qm = generated_in_degree(meet);
        if (!qm || *qm != *ql + 1)
            return fail(path, "intersection is not generated in degree q+1");
        // Derived partition property: equal-degree parts of a valid node
        // split the parent's generators. Checked, not assumed.
        std::vector<Monomial> merged = lhs.gens();
        merged.insert(merged.end(), rhs.gens().begin(), rhs.gens().end());
        std::sort(merged.begin(), merged.end(), canonical_less);
        if (merged != claimed.gens())
            return fail(path, "left/right generators do not partition the parent");
        return check(lhs, *cert.left(), path + ".left") &&
               check(rhs, *cert.right(), path + ".right") &&
               check(meet, *cert.meet(), path + ".meet");
    }
};

} // namespace

CertCheck verify_certificate(const MonomialIdeal& ideal, const Certificate& cert,
                             const std::optional<Monomial>& bound) {
    Verifier v{ideal.vars(), bound, 0, {}};
    if (bound) {
        if (bound->arity() != ideal.nvars())
            throw input_error("bound vector arity mismatch");
        v.bound_degree = bound->degree();
    }
    v.check(ideal, cert, "root");
    return v.result;
}

} // namespace cmi
