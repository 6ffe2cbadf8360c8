#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace psatz {

// Variables are interned symbols; the id doubles as the tie-break order in
// the canonical monomial order. Namespaces are carried in the name prefix
// (input vars "x"/"u", roots "t", complex parts "a"/"b", inverses "l"/"lp",
// coefficients "c") so freshness of auxiliary variables is checkable.
using var = std::uint32_t;

var intern(const std::string& name);
const std::string& var_name(var v);
bool is_interned(const std::string& name);

// Fresh symbol "<prefix><n>" with n past every interned index of that prefix.
var fresh_var(const std::string& prefix);

// Ordered, disjoint set of variables; the degree-accounting unit.
struct var_group {
    std::set<var> members;

    var_group() = default;
    var_group(std::initializer_list<var> vs) : members(vs) {}
    explicit var_group(const std::set<var>& vs) : members(vs) {}

    bool contains(var v) const { return members.count(v) != 0; }
    bool empty() const { return members.empty(); }
    void add(var v) { members.insert(v); }
};

} // namespace psatz
