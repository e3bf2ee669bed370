#include <cmi/variables.hpp>

#include <cmi/errors.hpp>

namespace cmi {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw input_error("variable set must not be empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw input_error("variable label must not be empty");
        if (!index_.emplace(names_[i], i).second)
            throw input_error("duplicate variable label '" + names_[i] + "'");
    }
}

std::shared_ptr<const VariableSet>
VariableSet::numbered(const std::string& prefix, long long first, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(first + static_cast<long long>(i)));
    return std::make_shared<VariableSet>(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

} // namespace cmi
