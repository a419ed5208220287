#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdkit/rewrite.hpp"
#include "tdkit/strings.hpp"

namespace tdkit {

enum class AltReason {
    None,
    NotAlternating,
    AlphabetMismatch,
    BoundaryMismatch,
    ResidueMismatch,
    WindowFailure,
    GapFailure,
};

const char* alt_reason_code(AltReason r);

/// Window assignment from the decider. Window i covers runs i..i+q-2 of s and
/// is mapped onto runs f[i]..f[i]+q-2 of t. For q = 5, every jump
/// f(i+1) > f(i)+1 carries a witness run position p in t.
struct RunMapping {
    std::size_t q = 0;
    std::vector<std::size_t> f;  // f[i-1] is f(i), i = 1..n-q+2
    std::vector<std::pair<std::size_t, std::size_t>> gap_witnesses;  // (left window i, p)
};

struct AltDecision {
    bool yes = false;
    AltReason reason = AltReason::None;
    std::optional<RunMapping> mapping;
    std::string message;
};

/// Decide whether t is duplication-reachable from s for purely alternating
/// strings over alphabets of up to five symbols. Both inputs are jointly
/// relabeled by first-appearance order of s before the run-length scan; the
/// scan runs in O(|s| + |t|).
AltDecision alt_decide(const TDString& s, const TDString& t);

/// Build an explicit duplication trace from s to t realizing a yes decision.
/// Every emitted op is a normal duplication (group insertions first, then
/// single-character run extensions); the replay equals t exactly.
RewriteTrace synthesize_witness(const TDString& s, const TDString& t, const RunMapping& mapping);

/// Replace one arbitrary duplication on a purely alternating string (q <= 5)
/// by a trace of normal duplications whose replay equals the duplication's
/// result. Requires |RLE(X)| mod q <= 1, which holds for every duplication
/// with a purely alternating result.
RewriteTrace simulate_duplication_normally(const TDString& s, const RewriteOp& op);

/// True iff some sequence of at most max_ops normal duplications turns x into
/// a string matching xx run-wise. Exhaustive search.
bool normal_simulation_exists(const TDString& x, std::size_t max_ops);

/// Exhaustively confirms that for the 6-ary string
/// x = 0^2 1 2^2 3 4^2 5 0 1^2 2 3^2 4 5^2 no pair of normal duplications
/// produces a string matching xx. Returns true when the claim holds.
bool check_sixary_counterexample();

/// The 6-ary string used by check_sixary_counterexample.
TDString sixary_counterexample_string();

}  // namespace tdkit
