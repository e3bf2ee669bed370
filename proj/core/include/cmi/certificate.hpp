#pragma once

#include <cmi/ideal.hpp>

#include <memory>
#include <optional>
#include <string>

namespace cmi {

class Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

// Construction tree. A leaf certifies a principal ideal; a node certifies
// the sum of its left and right ideals, with the meet subtree certifying
// their intersection one degree up. Immutable; subtrees may be shared.
class Certificate {
public:
    static CertPtr leaf(Monomial u);
    static CertPtr node(CertPtr left, CertPtr right, CertPtr meet);

    bool is_leaf() const { return !left_; }
    const Monomial& leaf_monomial() const;
    const CertPtr& left() const;
    const CertPtr& right() const;
    const CertPtr& meet() const;

private:
    Certificate() = default;
    Monomial leaf_;
    CertPtr left_, right_, meet_;
};

// The ideal a certificate claims: the sum of its leaf principal ideals
// (left/right skeleton; meets certify intersections, not summands).
MonomialIdeal certified_ideal(VarsPtr vars, const Certificate& cert);

struct CertCheck {
    bool ok = true;
    std::string path; // first failing node, e.g. "root.left.meet"
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Recursive validation against the claimed ideal: a leaf must equal the
// principal ideal of its monomial; a node needs left + right = claimed,
// both parts in one common degree q, meet = left cap right generated in
// degree exactly q+1, and all three subtrees valid. After those checks the
// generator sets of left and right necessarily partition the parent's; this
// derived fact is asserted, and a violation reported, not assumed. With a
// bound vector, leaves must divide x^bound and every node degree q must
// satisfy q < |bound| (the bounded form of constructibility).
CertCheck verify_certificate(const MonomialIdeal& ideal, const Certificate& cert,
                             const std::optional<Monomial>& bound = std::nullopt);

} // namespace cmi
