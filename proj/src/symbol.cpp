#include "psatz/symbol.hpp"

#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace psatz {

namespace {
struct table {
    std::mutex mu;
    std::unordered_map<std::string, var> by_name;
    std::vector<std::string> names;
};
table& tab() {
    static table t;
    return t;
}
} // namespace

var intern(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    auto& t = tab();
    std::lock_guard<std::mutex> lk(t.mu);
    auto it = t.by_name.find(name);
    if (it != t.by_name.end()) return it->second;
    var v = static_cast<var>(t.names.size());
    t.names.push_back(name);
    t.by_name.emplace(name, v);
    return v;
}

bool is_interned(const std::string& name) {
    auto& t = tab();
    std::lock_guard<std::mutex> lk(t.mu);
    return t.by_name.count(name) != 0;
}

const std::string& var_name(var v) {
    auto& t = tab();
    std::lock_guard<std::mutex> lk(t.mu);
    if (v >= t.names.size()) throw std::out_of_range("unknown variable id");
    return t.names[v];
}

var fresh_var(const std::string& prefix) {
    auto& t = tab();
    std::lock_guard<std::mutex> lk(t.mu);
    unsigned long hi = 0;
    for (const auto& [name, v] : t.by_name) {
        (void)v;
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) continue;
        const char* p = name.c_str() + prefix.size();
        char* end = nullptr;
        unsigned long n = std::strtoul(p, &end, 10);
        if (end && *end == '\0' && n + 1 > hi) hi = n + 1;
    }
    std::string name = prefix + std::to_string(hi);
    var v = static_cast<var>(t.names.size());
    t.names.push_back(name);
    t.by_name.emplace(name, v);
    return v;
}

} // namespace psatz
