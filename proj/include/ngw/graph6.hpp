#pragma once

#include <ngw/graph.hpp>

#include <algorithm>
#include <string>
#include <string_view>

namespace ngw {

// Standard graph6: one size byte n+63 (n <= 62), then the upper triangle in
// column-major order (x(0,1) x(0,2) x(1,2) x(0,3) ...), six bits per byte,
// most significant bit first, each byte offset by 63, zero-padded.
template <int Capacity>
std::string graph6_emit(const BasicGraph<Capacity>& g)
{
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

template <int Capacity = kDefaultCapacity>
BasicGraph<Capacity> graph6_parse(std::string_view text)
{
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty graph6 string", 0);

    const auto size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte < 63 || size_byte > 126)
        throw ParseError("size byte outside printable graph6 range", 0);
    if (size_byte == 126)
        throw CapacityError("graph6 multi-byte sizes exceed the vertex capacity");
    const int n = size_byte - 63;
    if (n == 0)
        throw ParseError("graph6 graph has no vertices", 0);
    if (n > Capacity)
        throw CapacityError("graph6 graph has " + std::to_string(n) + " vertices, capacity is " +
                            std::to_string(Capacity));

    const int bits = pair_count(n);
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " bytes for n=" +
                             std::to_string(n) + ", got " + std::to_string(text.size()),
                         std::min(text.size(), expected));

    BasicGraph<Capacity> g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t offset = 1 + static_cast<std::size_t>(k / 6);
            const auto byte = static_cast<unsigned char>(text[offset]);
            if (byte < 63 || byte > 126)
                throw ParseError("byte outside printable graph6 range", offset);
            if (((byte - 63) >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    for (std::size_t offset = 1; offset < text.size(); ++offset) {
        const auto byte = static_cast<unsigned char>(text[offset]);
        if (byte < 63 || byte > 126)
            throw ParseError("byte outside printable graph6 range", offset);
    }
    const int padding = static_cast<int>(expected - 1) * 6 - bits;
    if (padding > 0) {
        const auto last = static_cast<unsigned char>(text.back()) - 63;
        if (last & ((1 << padding) - 1))
            throw ParseError("nonzero padding bits", text.size() - 1);
    }
    return g;
}

} // namespace ngw
