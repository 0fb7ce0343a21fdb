#pragma once

// Surgery slopes p/q and full surgery specifications (link model + one
// reduced finite slope per component).

#include <string>
#include <vector>

#include "surgelens/alexander.hpp"
#include "surgelens/errors.hpp"

namespace surgelens {

// Reduced finite slope: gcd(p, q) = 1, q > 0 after normalization (p/q and
// (-p)/(-q) are the same slope).
struct SurgerySlope {
    long long p = 0;
    long long q = 1;

    static SurgerySlope make(long long p, long long q);
    bool operator==(const SurgerySlope& o) const = default;
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

SurgerySlope parse_slope(const std::string& text);
std::vector<SurgerySlope> parse_slopes(const std::string& comma_separated);

struct SurgerySpec {
    LinkModel link;
    std::vector<SurgerySlope> slopes;

    SurgerySpec(LinkModel l, std::vector<SurgerySlope> s);
    int components() const { return link.components(); }
};

}  // namespace surgelens
