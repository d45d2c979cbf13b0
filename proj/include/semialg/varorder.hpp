#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace semialg {

// An ordered sequence of distinct variable names.  The sequence fixes the
// monomial order (graded lex with earlier names ranked higher) and, for
// semi-algebraic systems, the unknowns-before-parameters split.
class VarOrder {
public:
    explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw error(errc::bad_input, "empty variable name");
            auto [it, fresh] = index_.emplace(names_[i], i);
            (void)it;
            if (!fresh)
                throw error(errc::bad_input, "duplicate variable '" + names_[i] + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require(const std::string& name) const {
        auto idx = index_of(name);
        if (!idx)
            throw error(errc::unknown_variable, "'" + name + "' is not a ring variable");
        return *idx;
    }

    bool operator==(const VarOrder& o) const { return names_ == o.names_; }
    bool operator!=(const VarOrder& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

inline VarOrderPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const VarOrder>(std::move(names));
}

inline bool same_ring(const VarOrderPtr& a, const VarOrderPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace semialg
