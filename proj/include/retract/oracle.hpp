#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

#include "retract/certificate.hpp"
#include "retract/folding.hpp"
#include "retract/graph.hpp"

namespace retract {

// Caps for the exhaustive searches. Exceeding any cap raises
// BudgetExceeded; no search ever answers from a truncated run.
struct SearchBudget {
    int max_vertices = 8;
    long long max_states = 10'000'000;
    double max_seconds = 0.0;  // 0 = no wall-clock cap

    static SearchBudget retract_default() { return {8, 10'000'000, 0.0}; }
    static SearchBudget folding_default() { return {8, 10'000'000, 0.0}; }
    static SearchBudget achromatic_default() { return {9, 10'000'000, 0.0}; }
    // Applies RETRACT_ORACLE_BUDGET ("states" or "vertices:states") if set.
    SearchBudget with_env_override() const;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Per-call counter enforcing a SearchBudget.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b);
    void check_size(int vertices, const char* what) const;
    void tick();
    long long states() const { return states_; }

private:
    SearchBudget budget_;
    long long states_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// Exact retract search: injective induced embeddings gamma of H into G,
// then backtracking extensions rho with rho(gamma(y)) = y.
RetractResult brute_retract(const Graph& g, const Graph& h, const SearchBudget& budget = SearchBudget::retract_default());

// Same, with gamma fixed to the inclusion of hset (H's vertex i is hset[i]).
RetractResult brute_retract_fixing(const Graph& g, const VertexList& hset,
                                   const SearchBudget& budget = SearchBudget::retract_default());

std::optional<VertexMap> brute_hom(const Graph& g, const Graph& h, const SearchBudget& budget = SearchBudget::retract_default());

struct AchromaticResult {
    int value;
    CompleteColoring coloring;
};
AchromaticResult brute_achromatic(const Graph& g, const SearchBudget& budget = SearchBudget::achromatic_default());

struct FoldingResult {
    int value;
    FoldSequence sequence;
};
// Explores all quotients reachable by simple folds, deduplicated up to
// isomorphism; the maximum over components for disconnected graphs.
FoldingResult brute_folding_number(const Graph& g, const SearchBudget& budget = SearchBudget::folding_default());

// Exact clique / chromatic numbers for graphs of at most 64 vertices.
int brute_clique(const Graph& g);
int brute_chromatic(const Graph& g);

}  // namespace retract
