#include "turanlab/graph6.hpp"

#include "turanlab/error.hpp"

#include <cstddef>
#include <string>

namespace turanlab {

namespace {

// Bit positions follow the format spec: upper triangle, column by column,
// x(0,1), x(0,2), x(1,2), x(0,3), ...
int triangle_bits(int n) { return n * (n - 1) / 2; }

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // long form: '~' then 18-bit n, big-endian, 6 bits per byte
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw DecodeError("graph6: empty input");

    auto value_at = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw DecodeError("graph6: byte " + std::to_string(i) + " out of range (0x" +
                              [](unsigned char b) {
                                  const char* hex = "0123456789abcdef";
                                  return std::string{hex[b >> 4], hex[b & 15]};
                              }(c) + ")");
        return c - 63;
    };

    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw DecodeError("graph6: orders above 258047 are not supported (byte 1)");
        if (text.size() < 4) throw DecodeError("graph6: truncated long-form order");
        n = (static_cast<long>(value_at(1)) << 12) | (value_at(2) << 6) | value_at(3);
        pos = 4;
    } else {
        n = value_at(0);
        pos = 1;
    }
    if (n > vertex_cap())
        throw CapacityError("graph6: order " + std::to_string(n) + " exceeds vertex cap " +
                            std::to_string(vertex_cap()));

    const int bits = triangle_bits(static_cast<int>(n));
    const std::size_t body = (static_cast<std::size_t>(bits) + 5) / 6;
    if (text.size() < pos + body)
        throw DecodeError("graph6: truncated body at byte " + std::to_string(text.size()) +
                          " (need " + std::to_string(pos + body) + " bytes)");
    if (text.size() > pos + body)
        throw DecodeError("graph6: trailing data at byte " + std::to_string(pos + body));

    Graph g(static_cast<int>(n));
    int row = 0, col = 1;
    for (std::size_t i = 0; i < body; ++i) {
        int v = value_at(pos + i);
        for (int b = 5; b >= 0; --b) {
            if (col >= n) {
                // padding bits must be zero
                if ((v >> b) & 1)
                    throw DecodeError("graph6: nonzero padding in byte " +
                                      std::to_string(pos + i));
                continue;
            }
            if ((v >> b) & 1) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

} // namespace turanlab
