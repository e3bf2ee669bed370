#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmi {

// An ordered set of distinct labels. Serves both as the variable set of a
// polynomial ring and as the vertex label set of a simplicial complex; the
// position of a label is its canonical index, and the order is total and
// fixed for the lifetime of the set.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    // Labels prefix+first, prefix+(first+1), ..., count of them ("x1".."xn").
    static std::shared_ptr<const VariableSet>
    numbered(const std::string& prefix, long long first, std::size_t count);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }
    bool operator!=(const VariableSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

// Ambient-compatibility test used by all binary ideal operations: pointers
// may differ as long as the label sequences agree.
bool same_vars(const VarsPtr& a, const VarsPtr& b);

} // namespace cmi
