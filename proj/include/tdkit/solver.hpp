#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdkit/rewrite.hpp"
#include "tdkit/strings.hpp"

namespace tdkit {

struct SearchConfig {
    /// Budget of distinct states; exceeding it yields BudgetExhausted, never a
    /// silent negative answer.
    std::size_t max_visited = 5'000'000;
    /// Optional cap on the number of contractions explored.
    std::optional<std::size_t> max_depth;
    bool collect_trace = false;
    /// Worker count for frontier expansion. Results are bit-identical to the
    /// single-threaded run for every value.
    unsigned threads = 1;
};

enum class Verdict { Reachable, Unreachable, BudgetExhausted };

struct SearchResult {
    Verdict verdict = Verdict::Unreachable;
    std::optional<std::size_t> distance;
    std::size_t visited_count = 0;
    /// Contractions from t down to s; reverse_trace turns it into the
    /// duplication sequence from s.
    std::optional<RewriteTrace> trace;
    /// True when an Unreachable verdict was limited by max_depth and so only
    /// rules out solutions within that depth.
    bool depth_capped = false;
};

/// Is t reachable from s by duplications? Exhaustive contraction search from
/// t toward s; every move strictly shortens the string, so the search space
/// is finite. Strings must share one alphabet.
SearchResult oracle_exists(const TDString& s, const TDString& t, const SearchConfig& cfg = {});

/// Exact minimal duplication count via breadth-first layers; ties between
/// shortest traces resolve to the lexicographically smallest op sequence.
SearchResult oracle_distance(const TDString& s, const TDString& t, const SearchConfig& cfg = {});

struct ClosureResult {
    std::vector<TDString> states;  // discovery order; states[0] is the start
    bool complete = true;          // false when a budget or depth cap cut the walk
    std::size_t visited_count = 0;
};

/// All strings reachable from t by contractions, t included.
ClosureResult contraction_closure(const TDString& t, const SearchConfig& cfg = {});

/// The square-free members of the contraction closure of t.
ClosureResult compute_roots(const TDString& t, const SearchConfig& cfg = {});

}  // namespace tdkit
