#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fairclear {

// Real-valued variable, interned process-wide.  Identity is the intern id;
// ids are assigned in first-intern order and never reused.
struct Var {
    std::uint32_t id = 0;

    friend bool operator==(Var a, Var b) { return a.id == b.id; }
    friend bool operator!=(Var a, Var b) { return a.id != b.id; }
    friend bool operator<(Var a, Var b) { return a.id < b.id; }
};

Var internVar(const std::string& name);
const std::string& varName(Var v);
bool isInterned(const std::string& name);

}  // namespace fairclear
