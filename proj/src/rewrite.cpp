#include "tdkit/rewrite.hpp"

#include <algorithm>

namespace tdkit {

RewriteOp duplication(std::size_t start, std::size_t length) {
    return RewriteOp{RewriteKind::Duplication, start, length};
}

RewriteOp contraction(std::size_t start, std::size_t length) {
    return RewriteOp{RewriteKind::Contraction, start, length};
}

namespace {

void check_bounds(const TDString& s, const RewriteOp& op) {
    if (op.start < 1 || op.length < 1) throw InputError("rewrite op indices are 1-based and positive");
    const std::size_t span = (op.kind == RewriteKind::Duplication) ? op.length : 2 * op.length;
    if (op.start + span - 1 > s.size())
        throw InputError("rewrite op out of bounds: start=" + std::to_string(op.start) +
                         " len=" + std::to_string(op.length) + " |s|=" + std::to_string(s.size()));
}

}  // namespace

TDString apply_duplication(const TDString& s, const RewriteOp& op) {
    if (op.kind != RewriteKind::Duplication) throw InputError("expected a duplication op");
    check_bounds(s, op);
    std::string out = s.data();
    out.insert(op.start - 1 + op.length, s.data(), op.start - 1, op.length);
    return TDString(s.alphabet(), std::move(out));
}

TDString apply_contraction(const TDString& s, const RewriteOp& op) {
    if (op.kind != RewriteKind::Contraction) throw InputError("expected a contraction op");
    check_bounds(s, op);
    const std::string& d = s.data();
    if (d.compare(op.start - 1, op.length, d, op.start - 1 + op.length, op.length) != 0)
        throw NotASquareError("substring at start=" + std::to_string(op.start) +
                              " len=" + std::to_string(op.length) + " is not a square");
    std::string out = d;
    out.erase(op.start - 1 + op.length, op.length);
    return TDString(s.alphabet(), std::move(out));
}

TDString apply_op(const TDString& s, const RewriteOp& op) {
    return op.kind == RewriteKind::Duplication ? apply_duplication(s, op)
                                               : apply_contraction(s, op);
}

std::vector<RewriteOp> enumerate_contractions(const TDString& s) {
    std::vector<RewriteOp> ops;
    for (const SquarePos& sq : find_squares(s))
        ops.push_back(contraction(sq.start, sq.half_len));
    // find_squares is sorted by (start, half_len) already
    return ops;
}

std::vector<RewriteOp> enumerate_duplications(const TDString& s, std::size_t max_result_len) {
    if (max_result_len < s.size())
        throw InputError("max_result_len must be at least the current length");
    std::vector<RewriteOp> ops;
    const std::size_t dmax = max_result_len - s.size();
    for (std::size_t start = 1; start <= s.size(); ++start)
        for (std::size_t d = 1; d <= dmax && start + d - 1 <= s.size(); ++d)
            ops.push_back(duplication(start, d));
    return ops;
}

bool is_normal_duplication(const TDString& s, const RewriteOp& op, std::size_t q) {
    if (op.kind != RewriteKind::Duplication) throw InputError("expected a duplication op");
    check_bounds(s, op);
    auto pa = purely_alternating_form(s);
    if (!pa || pa->alphabet().size() != q)
        throw InputError("is_normal_duplication requires a purely alternating subject over q symbols");
    if (op.length == 1) return true;

    RunLengthEncoding enc = rle(s);
    // run index and end offset for every position
    const std::size_t lo = op.start, hi = op.start + op.length - 1;
    std::size_t pos = 0, first_run = 0, last_run = 0, first_run_end = 0, last_run_begin = 0;
    for (std::size_t r = 0; r < enc.run_count(); ++r) {
        std::size_t begin = pos + 1, end = pos + enc.runs[r].length;
        if (lo >= begin && lo <= end) {
            first_run = r;
            first_run_end = end;
        }
        if (hi >= begin && hi <= end) {
            last_run = r;
            last_run_begin = begin;
        }
        pos = end;
    }
    if (last_run - first_run + 1 != q) return false;
    return lo == first_run_end && hi == last_run_begin;
}

std::vector<RewriteOp> enumerate_normal_duplications(const TDString& s, std::size_t q) {
    auto pa = purely_alternating_form(s);
    if (!pa || pa->alphabet().size() != q)
        throw InputError("enumerate_normal_duplications requires a purely alternating subject");
    std::vector<RewriteOp> ops;
    for (std::size_t i = 1; i <= s.size(); ++i) ops.push_back(duplication(i, 1));
    RunLengthEncoding enc = rle(s);
    if (enc.run_count() >= q) {
        std::size_t prefix = 0;  // chars before run r
        std::vector<std::size_t> run_begin(enc.run_count());
        for (std::size_t r = 0; r < enc.run_count(); ++r) {
            run_begin[r] = prefix + 1;
            prefix += enc.runs[r].length;
        }
        for (std::size_t r = 0; r + q <= enc.run_count(); ++r) {
            // span runs r..r+q-1, one char from each end run
            std::size_t start = run_begin[r] + enc.runs[r].length - 1;
            std::size_t end = run_begin[r + q - 1];
            ops.push_back(duplication(start, end - start + 1));
        }
    }
    std::sort(ops.begin(), ops.end());
    return ops;
}

TraceValidation validate_trace(const RewriteTrace& trace, const TDString& expected_target) {
    TDString cur = trace.source;
    for (std::size_t i = 0; i < trace.ops.size(); ++i) {
        try {
            cur = apply_op(cur, trace.ops[i]);
        } catch (const InputError& e) {
            return TraceValidation{false, i + 1, cur, e.what()};
        }
    }
    if (cur != expected_target)
        return TraceValidation{false, 0, cur, "replay result differs from the expected target"};
    return TraceValidation{true, 0, cur, ""};
}

std::vector<TDString> trace_intermediates(const RewriteTrace& trace) {
    std::vector<TDString> out;
    out.reserve(trace.ops.size());
    TDString cur = trace.source;
    for (const RewriteOp& op : trace.ops) {
        cur = apply_op(cur, op);
        out.push_back(cur);
    }
    return out;
}

RewriteTrace reverse_trace(const RewriteTrace& trace) {
    TDString cur = trace.source;
    for (const RewriteOp& op : trace.ops) cur = apply_op(cur, op);
    RewriteTrace out{cur, {}};
    out.ops.reserve(trace.ops.size());
    for (auto it = trace.ops.rbegin(); it != trace.ops.rend(); ++it) {
        RewriteOp mirrored = *it;
        mirrored.kind = (it->kind == RewriteKind::Duplication) ? RewriteKind::Contraction
                                                               : RewriteKind::Duplication;
        out.ops.push_back(mirrored);
    }
    return out;
}

}  // namespace tdkit
