#include <charconv>

#include "planarlab/graph.hpp"

namespace planarlab {

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

[[noreturn]] void malformed(std::string_view s, const std::string& why) {
    throw Error(Errc::MalformedEncoding, "'" + std::string(s) + "': " + why);
}

}  // namespace

std::string encode(const LabeledGraph& g) {
    const int n = g.order();
    const std::size_t bits = pair_count(n);
    std::string out = std::to_string(n);
    out.push_back(':');
    out.reserve(out.size() + (bits + 3) / 4);
    int nibble = 0;
    int filled = 0;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            nibble = (nibble << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 4) {
                out.push_back(kHexDigits[nibble]);
                nibble = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(kHexDigits[nibble << (4 - filled)]);
    return out;
}

LabeledGraph decode(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) malformed(s, "missing ':'");
    const std::string_view head = s.substr(0, colon);
    const std::string_view hex = s.substr(colon + 1);
    if (head.empty() || (head.size() > 1 && head.front() == '0')) malformed(s, "vertex count is not canonical decimal");
    int n = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (ec != std::errc{} || ptr != head.data() + head.size()) malformed(s, "vertex count is not a decimal integer");
    if (n < 1) malformed(s, "vertex count must be positive");

    const std::size_t bits = pair_count(n);
    if (hex.size() != (bits + 3) / 4)
        malformed(s, "expected " + std::to_string((bits + 3) / 4) + " hex digits, got " + std::to_string(hex.size()));

    GraphBuilder b(n);
    std::size_t slot = 0;
    int u = 1;
    int v = 2;
    for (char c : hex) {
        const int value = hex_value(c);
        if (value < 0) malformed(s, std::string("bad hex digit '") + c + "'");
        for (int k = 3; k >= 0; --k) {
            const bool on = (value >> k) & 1;
            if (slot < bits) {
                if (on) b.add(u, v);
                if (++v > n) {
                    ++u;
                    v = u + 1;
                }
            } else if (on) {
                malformed(s, "nonzero padding bits");
            }
            ++slot;
        }
    }
    return b.take();
}

}  // namespace planarlab
