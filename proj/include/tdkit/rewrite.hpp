#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tdkit/strings.hpp"

namespace tdkit {

enum class RewriteKind { Duplication, Contraction };

/// One rewrite step. `start` is the 1-based index of the first character of
/// the duplicated substring X (for duplications) or of the square XX (for
/// contractions); `length` is |X|.
struct RewriteOp {
    RewriteKind kind;
    std::size_t start;
    std::size_t length;

    friend bool operator==(const RewriteOp&, const RewriteOp&) = default;
    friend auto operator<=>(const RewriteOp&, const RewriteOp&) = default;
};

RewriteOp duplication(std::size_t start, std::size_t length);
RewriteOp contraction(std::size_t start, std::size_t length);

/// Replace X with XX at op.start.
TDString apply_duplication(const TDString& s, const RewriteOp& op);
/// Delete the right copy of the square XX at op.start.
TDString apply_contraction(const TDString& s, const RewriteOp& op);
TDString apply_op(const TDString& s, const RewriteOp& op);

/// All contraction moves of s, ordered by (start ascending, length ascending).
std::vector<RewriteOp> enumerate_contractions(const TDString& s);

/// All duplication moves whose result stays within max_result_len, same order.
std::vector<RewriteOp> enumerate_duplications(const TDString& s, std::size_t max_result_len);

/// A duplication is normal when X is a single character, or X spans exactly q
/// runs of s and takes exactly one character from the first and last spanned
/// runs. s must be purely alternating over q symbols.
bool is_normal_duplication(const TDString& s, const RewriteOp& op, std::size_t q);

/// All normal duplications applicable to a purely alternating string, ordered
/// by (start, length).
std::vector<RewriteOp> enumerate_normal_duplications(const TDString& s, std::size_t q);

/// A replayable op sequence starting from `source`.
struct RewriteTrace {
    TDString source;
    std::vector<RewriteOp> ops;
};

struct TraceValidation {
    bool ok = false;
    std::size_t failed_step = 0;  // 1-based index of the first failing op; 0 when ok
    TDString final_string;        // string reached before the failure, or the replay result
    std::string message;
};

/// Replay every op from the source; valid iff each op applies and the final
/// string equals expected_target.
TraceValidation validate_trace(const RewriteTrace& trace, const TDString& expected_target);

/// The strings after each op (trace.ops.size() entries). Throws on a bad op.
std::vector<TDString> trace_intermediates(const RewriteTrace& trace);

/// Turn a contraction trace t ->> s into the duplication trace s =>* t (same
/// sites, reverse order), and vice versa.
RewriteTrace reverse_trace(const RewriteTrace& trace);

}  // namespace tdkit
