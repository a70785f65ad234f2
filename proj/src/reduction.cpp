#include "retract/reduction.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "retract/graph_io.hpp"

namespace retract {

std::vector<std::string> validate(const ThreePartitionInstance& inst) {
    std::vector<std::string> bad;
    if (inst.m <= 0) bad.push_back("m must be positive");
    if (inst.B <= 0) bad.push_back("B must be positive");
    if (static_cast<long long>(inst.items.size()) != 3LL * inst.m)
        bad.push_back("expected " + std::to_string(3LL * inst.m) + " items, got " + std::to_string(inst.items.size()));
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const int a = inst.items[i];
        if (a <= 0)
            bad.push_back("item " + std::to_string(i) + " = " + std::to_string(a) + " is not positive");
        else if (4LL * a <= inst.B || 2LL * a >= inst.B)
            bad.push_back("item " + std::to_string(i) + " = " + std::to_string(a) + " is not strictly between B/4 and B/2");
    }
    const long long sum = std::accumulate(inst.items.begin(), inst.items.end(), 0LL);
    if (sum != 1LL * inst.m * inst.B)
        bad.push_back("items sum to " + std::to_string(sum) + ", not mB = " + std::to_string(1LL * inst.m * inst.B));
    return bad;
}

namespace {

class Builder {
public:
    Cotree leaf() { return Cotree::leaf(next_++); }

    // A single leaf next to a clique of size a.
    Cotree gadget(int a) {
        std::vector<Cotree> clique;
        for (int i = 0; i < a; ++i) clique.push_back(leaf());
        std::vector<Cotree> parts;
        parts.push_back(leaf());
        parts.push_back(Cotree::make(NodeKind::Join, std::move(clique)));
        return Cotree::make(NodeKind::Union, std::move(parts));
    }

private:
    Vertex next_ = 0;
};

std::vector<IndexTriple> summing_triples(const ThreePartitionInstance& inst) {
    std::vector<IndexTriple> out;
    const int n = static_cast<int>(inst.items.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (inst.items[i] + inst.items[j] + inst.items[k] == inst.B) out.push_back({i, j, k});
    return out;
}

}  // namespace

EncodedPair encode(const ThreePartitionInstance& inst, bool force) {
    if (auto bad = validate(inst); !bad.empty() && !force) throw std::invalid_argument("invalid 3-partition instance: " + bad.front());
    if (inst.m <= 0 || static_cast<long long>(inst.items.size()) != 3LL * inst.m)
        throw std::invalid_argument("instance needs m > 0 and 3m items");
    EncodedPair out;
    const auto triples = summing_triples(inst);
    out.triples = static_cast<int>(triples.size());
    if (triples.empty()) {
        out.degenerate = true;
        out.g = parse_cotree("U(0,1)");
        out.h = parse_cotree("J(0,1)");
        return out;
    }
    Builder hb;
    std::vector<Cotree> hparts;
    for (int a : inst.items) hparts.push_back(hb.gadget(a));
    out.h = normalize(Cotree::make(NodeKind::Join, std::move(hparts)));

    Builder gb;
    std::vector<Cotree> copies;
    for (int c = 0; c < inst.m; ++c) {
        std::vector<Cotree> branches;
        for (const auto& tr : triples) {
            std::vector<Cotree> three;
            for (int i : tr) three.push_back(gb.gadget(inst.items[i]));
            branches.push_back(Cotree::make(NodeKind::Join, std::move(three)));
        }
        copies.push_back(Cotree::make(NodeKind::Union, std::move(branches)));
    }
    out.g = normalize(Cotree::make(NodeKind::Join, std::move(copies)));
    return out;
}

std::optional<std::vector<IndexTriple>> brute_3partition(const ThreePartitionInstance& inst) {
    const int n = static_cast<int>(inst.items.size());
    if (inst.m <= 0 || n != 3 * inst.m) return std::nullopt;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<IndexTriple> chosen;
    auto rec = [&](auto&& self) -> bool {
        int i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) return true;
        used[i] = 1;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            for (int k = j + 1; k < n; ++k) {
                if (used[k] || inst.items[i] + inst.items[j] + inst.items[k] != inst.B) continue;
                used[k] = 1;
                chosen.push_back({i, j, k});
                if (self(self)) return true;
                chosen.pop_back();
                used[k] = 0;
            }
            used[j] = 0;
        }
        used[i] = 0;
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return chosen;
}

ThreePartitionInstance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    ThreePartitionInstance inst;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] != '#')
                return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("missing 'm B' header", lineno);
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> inst.m >> inst.B) || (hdr >> extra)) throw ParseError("header must be 'm B'", lineno);
    }
    while (next_line()) {
        std::istringstream body(line);
        std::string tok;
        while (body >> tok) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                inst.items.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad item '" + tok + "'", lineno);
            }
        }
    }
    return inst;
}

std::string format_instance(const ThreePartitionInstance& inst) {
    std::ostringstream out;
    out << inst.m << ' ' << inst.B << '\n';
    for (std::size_t i = 0; i < inst.items.size(); ++i) out << (i ? " " : "") << inst.items[i];
    out << '\n';
    return out.str();
}

}  // namespace retract
