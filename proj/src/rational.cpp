#include "fairclear/rational.hpp"

namespace fairclear {

std::optional<Rational> ratFromString(const std::string& s) {
    auto parseInt = [](const std::string& part) -> std::optional<Integer> {
        if (part.empty()) return std::nullopt;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return std::nullopt;
        for (std::size_t j = i; j < part.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(part[j])))
                return std::nullopt;
        return Integer(part);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto n = parseInt(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parseInt(s.substr(0, slash));
    auto d = parseInt(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace fairclear
