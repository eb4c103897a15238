#include "fairclear/var.hpp"

#include <mutex>
#include <unordered_map>

namespace fairclear {

namespace {

struct InternTable {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

InternTable& table() {
    static InternTable t;
    return t;
}

}  // namespace

Var internVar(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return Var{it->second};
    auto id = static_cast<std::uint32_t>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return Var{id};
}

const std::string& varName(Var v) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(v.id);
}

bool isInterned(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.ids.count(name) != 0;
}

}  // namespace fairclear
