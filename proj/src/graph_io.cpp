#include "retract/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace retract {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<long long> parse_ints(std::string_view line, int lineno) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
            throw ParseError("malformed line '" + std::string(line) + "'", lineno);
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    int lineno = 0;
    long long n = -1;
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        auto nums = parse_ints(line, lineno);
        if (n < 0) {
            if (nums.size() != 1 || nums[0] < 1) throw ParseError("expected vertex count n >= 1", lineno);
            n = nums[0];
            continue;
        }
        if (nums.size() != 2) throw ParseError("expected 'u v'", lineno);
        auto [u, v] = std::pair{nums[0], nums[1]};
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex out of range 0.." + std::to_string(n - 1), lineno);
        if (u == v) throw ParseError("self-loop at " + std::to_string(u), lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("empty edge list", 0);
    return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", 0);
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 4 && text[1] != 126) {
        n = ((text[1] - 63LL) << 12) | ((text[2] - 63LL) << 6) | (text[3] - 63LL);
        pos = 4;
    } else if (text.size() >= 8) {
        for (int i = 2; i < 8; ++i) n = (n << 6) | (text[i] - 63LL);
        pos = 8;
    } else {
        throw ParseError("graph6: truncated header", 0);
    }
    const long long bits = n * (n - 1) / 2;
    const long long need = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != need) throw ParseError("graph6: bad length", 0);
    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    if (need > 0) {
        const int last = text.back() - 63;
        const int pad = static_cast<int>(need * 6 - bits);
        if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding", 0);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace retract
