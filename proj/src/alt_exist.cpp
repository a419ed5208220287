#include "tdkit/alt_exist.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tdkit {

const char* alt_reason_code(AltReason r) {
    switch (r) {
        case AltReason::None: return "none";
        case AltReason::NotAlternating: return "not-alternating";
        case AltReason::AlphabetMismatch: return "alphabet-mismatch";
        case AltReason::BoundaryMismatch: return "boundary-mismatch";
        case AltReason::ResidueMismatch: return "residue-mismatch";
        case AltReason::WindowFailure: return "window-failure";
        case AltReason::GapFailure: return "gap-failure";
    }
    return "unknown";
}

namespace {

// Run lengths padded so that L[i] is the length of run i (1-based).
using Lengths = std::vector<std::size_t>;

struct NormalizedPair {
    bool ok = false;
    AltReason reason = AltReason::None;
    std::string message;
    std::size_t q = 0;
    Lengths s_len, t_len;
};

Lengths run_lengths(const TDString& s) {
    Lengths out{0};
    for (const Run& r : rle(s).runs) out.push_back(r.length);
    return out;
}

// Relabel both strings by the first-appearance order of s and check that both
// cycle through the same q symbols, starting with the same one.
NormalizedPair normalize_pair(const TDString& s, const TDString& t) {
    NormalizedPair np;
    if (s.empty() || t.empty()) {
        np.reason = AltReason::NotAlternating;
        np.message = "empty string";
        return np;
    }
    std::array<int, kMaxSymbol + 1> rank;
    rank.fill(-1);
    int q = 0;
    for (unsigned char c : s.data())
        if (rank[c] < 0) rank[c] = q++;

    const RunLengthEncoding se = rle(s);
    for (std::size_t i = 0; i < se.run_count(); ++i)
        if (rank[se.runs[i].symbol] != int(i % std::size_t(q))) {
            np.reason = AltReason::NotAlternating;
            np.message = "source string is not purely alternating";
            return np;
        }

    std::array<bool, kMaxSymbol + 1> in_t{};
    int t_symbols = 0;
    for (unsigned char c : t.data())
        if (!in_t[c]) {
            in_t[c] = true;
            ++t_symbols;
        }
    if (t_symbols != q) {
        np.reason = AltReason::AlphabetMismatch;
        np.message = "strings use different symbol sets";
        return np;
    }
    for (std::size_t c = 0; c <= kMaxSymbol; ++c)
        if (in_t[c] && rank[c] < 0) {
            np.reason = AltReason::AlphabetMismatch;
            np.message = "strings use different symbol sets";
            return np;
        }

    const RunLengthEncoding te = rle(t);
    const int r0 = rank[te.runs[0].symbol];
    for (std::size_t j = 0; j < te.run_count(); ++j)
        if (rank[te.runs[j].symbol] != int((std::size_t(r0) + j) % std::size_t(q))) {
            np.reason = AltReason::NotAlternating;
            np.message = "target string is not purely alternating under the shared symbol order";
            return np;
        }
    if (r0 != 0) {
        np.reason = AltReason::BoundaryMismatch;
        np.message = "strings start with different symbols";
        return np;
    }

    np.ok = true;
    np.q = std::size_t(q);
    np.s_len = run_lengths(s);
    np.t_len = run_lengths(t);
    return np;
}

// Window condition: runs i..i+q-2 of s fit under runs j..j+q-2 of t.
bool window_ok(const Lengths& L, const Lengths& Lp, std::size_t q, std::size_t i, std::size_t j) {
    for (std::size_t u = 0; u + 1 < q; ++u)
        if (L[i + u] > Lp[j + u]) return false;
    return true;
}

// Gap witness condition at position p of t, for the jump out of window i:
// after the group insertion the runs (l_{i+3}, 1, 1, l_{i+1}) land at
// p..p+3, so t must dominate exactly those two lengths there.
bool gap_witness_ok(const Lengths& L, const Lengths& Lp, std::size_t i, std::size_t p) {
    return L[i + 3] <= Lp[p] && L[i + 1] <= Lp[p + 3];
}

struct CoreDecision {
    bool yes = false;
    AltReason reason = AltReason::None;
    std::string message;
    RunMapping mapping;
};

CoreDecision decide_core(std::size_t q, const Lengths& L, const Lengths& Lp) {
    CoreDecision d;
    d.mapping.q = q;
    const std::size_t n = L.size() - 1, m = Lp.size() - 1;

    if (q == 1) {
        if (L[1] <= Lp[1]) {
            d.yes = true;
            d.mapping.f = {1};
        } else {
            d.reason = AltReason::WindowFailure;
            d.message = "single run of s is longer than the run of t";
        }
        return d;
    }

    if (n > m) {
        d.reason = AltReason::WindowFailure;
        d.message = "s has more runs than t";
        return d;
    }
    if ((m - n) % q != 0) {
        d.reason = AltReason::ResidueMismatch;
        d.message = "run counts differ by a non-multiple of q";
        return d;
    }
    const std::size_t ns = n - q + 2, ms = m - q + 2;  // last window indices
    if (!window_ok(L, Lp, q, 1, 1)) {
        d.reason = AltReason::WindowFailure;
        d.message = "leading runs of s do not fit under t";
        return d;
    }
    if (!window_ok(L, Lp, q, ns, ms)) {
        d.reason = AltReason::WindowFailure;
        d.message = "trailing runs of s do not fit under t";
        return d;
    }

    std::vector<std::size_t>& f = d.mapping.f;
    f.assign(ns, 0);
    f[0] = 1;
    for (std::size_t i = 2; i <= ns; ++i) {
        const std::size_t jprev = f[i - 2];
        std::size_t j = 0;
        if (i == ns) {
            if (ms <= jprev) {
                d.reason = AltReason::WindowFailure;
                d.message = "no room left for the final window";
                return d;
            }
            j = ms;
        } else if (window_ok(L, Lp, q, i, jprev + 1)) {
            j = jprev + 1;
        } else if (q != 5) {
            // jump a whole number of groups to the smallest fitting window
            std::size_t cand = jprev + 1 + q;
            while (cand <= ms && !window_ok(L, Lp, q, i, cand)) cand += q;
            if (cand > ms) {
                d.reason = AltReason::WindowFailure;
                d.message = "no window of t fits run " + std::to_string(i) + " of s";
                return d;
            }
            j = cand;
        } else {
            // a jump needs a witness position; take the smallest valid p,
            // then the smallest fitting window at p+3 or beyond
            std::size_t p = jprev + 3;
            while (p + 3 <= ms && !gap_witness_ok(L, Lp, i - 1, p)) p += q;
            if (p + 3 > ms) {
                d.reason = AltReason::GapFailure;
                d.message = "no witness position justifies a group insertion before window " +
                            std::to_string(i);
                return d;
            }
            std::size_t cand = p + 3;
            while (cand <= ms && !window_ok(L, Lp, q, i, cand)) cand += q;
            if (cand > ms) {
                d.reason = AltReason::WindowFailure;
                d.message = "no window of t fits run " + std::to_string(i) + " of s";
                return d;
            }
            j = cand;
            d.mapping.gap_witnesses.emplace_back(i - 1, p);
        }

        if (i == ns && j != jprev + 1 && q == 5) {
            std::size_t p = jprev + 3;
            while (p + 3 <= j && !gap_witness_ok(L, Lp, i - 1, p)) p += q;
            if (p + 3 > j) {
                d.reason = AltReason::GapFailure;
                d.message = "no witness position justifies the final group insertion";
                return d;
            }
            d.mapping.gap_witnesses.emplace_back(i - 1, p);
        }
        f[i - 1] = j;
    }
    d.yes = true;
    return d;
}

}  // namespace

AltDecision alt_decide(const TDString& s, const TDString& t) {
    AltDecision out;
    NormalizedPair np = normalize_pair(s, t);
    if (!np.ok) {
        out.reason = np.reason;
        out.message = np.message;
        return out;
    }
    CoreDecision core = decide_core(np.q, np.s_len, np.t_len);
    out.yes = core.yes;
    out.reason = core.reason;
    out.message = core.message;
    if (core.yes) out.mapping = std::move(core.mapping);
    return out;
}

namespace {

// --- witness construction -------------------------------------------------
//
// All group insertions are "type 1" normal duplications: the duplicated
// substring takes the last character of run a, runs a+1..a+q-2 whole, and the
// first character of run a+q-1. On the run-length list this inserts the block
// (1, 1, l_{a+1}, ..., l_{a+q-2}) right after position a+q-2.

std::size_t prefix_chars(const Lengths& L, std::size_t upto) {
    std::size_t n = 0;
    for (std::size_t k = 1; k <= upto; ++k) n += L[k];
    return n;
}

RewriteOp type1_op(const Lengths& L, std::size_t a, std::size_t q) {
    std::size_t len = 2;
    for (std::size_t k = a + 1; k + 1 <= a + q - 1; ++k) len += L[k];
    return duplication(prefix_chars(L, a), len);
}

void type1_update(Lengths& L, std::size_t a, std::size_t q) {
    Lengths block;
    block.push_back(1);
    block.push_back(1);
    for (std::size_t k = a + 1; k <= a + q - 2; ++k) block.push_back(L[k]);
    L.insert(L.begin() + std::ptrdiff_t(a + q - 1), block.begin(), block.end());
}

void emit_type1(TDString& cur, Lengths& L, std::vector<RewriteOp>& ops, std::size_t a,
                std::size_t q) {
    RewriteOp op = type1_op(L, a, q);
    cur = apply_duplication(cur, op);
    type1_update(L, a, q);
    ops.push_back(op);
}

// Extend run k of cur until it reaches `want` characters, one single-character
// duplication at a time.
void emit_extensions(TDString& cur, Lengths& L, std::vector<RewriteOp>& ops, std::size_t k,
                     std::size_t want) {
    while (L[k] < want) {
        RewriteOp op = duplication(prefix_chars(L, k - 1) + 1, 1);
        cur = apply_duplication(cur, op);
        ++L[k];
        ops.push_back(op);
    }
}

void validate_mapping_or_throw(const NormalizedPair& np, const RunMapping& mapping) {
    const Lengths &L = np.s_len, &Lp = np.t_len;
    const std::size_t q = np.q, n = L.size() - 1, m = Lp.size() - 1;
    if (mapping.q != q) throw InputError("mapping was built for a different alphabet size");
    if (q == 1) {
        if (L[1] > Lp[1]) throw InputError("mapping invalid: run of s longer than run of t");
        return;
    }
    if (n > m || (m - n) % q != 0) throw InputError("mapping invalid: incompatible run counts");
    const std::size_t ns = n - q + 2, ms = m - q + 2;
    const auto& f = mapping.f;
    if (f.size() != ns || f.front() != 1 || f.back() != ms)
        throw InputError("mapping invalid: endpoint conditions violated");
    for (std::size_t i = 1; i <= ns; ++i) {
        if (i > 1 && f[i - 1] <= f[i - 2])
            throw InputError("mapping invalid: not strictly increasing");
        if ((f[i - 1] % q) != (i % q))
            throw InputError("mapping invalid: window symbol mismatch");
        if (!window_ok(L, Lp, q, i, f[i - 1]))
            throw InputError("mapping invalid: window condition fails at " + std::to_string(i));
    }
    if (q == 5) {
        for (std::size_t i = 1; i < ns; ++i) {
            if (f[i] == f[i - 1] + 1) continue;
            std::size_t p = f[i - 1] + 3;
            while (p + 3 <= f[i] && !gap_witness_ok(L, Lp, i, p)) p += q;
            if (p + 3 > f[i])
                throw InputError("mapping invalid: jump without witness at window " +
                                 std::to_string(i));
        }
    }
}

}  // namespace

RewriteTrace synthesize_witness(const TDString& s, const TDString& t, const RunMapping& mapping) {
    NormalizedPair np = normalize_pair(s, t);
    if (!np.ok) throw InputError("witness synthesis requires a jointly alternating pair: " + np.message);
    validate_mapping_or_throw(np, mapping);

    const std::size_t q = np.q;
    const Lengths& Lp = np.t_len;
    Lengths L = np.s_len;
    TDString cur = s;
    RewriteTrace trace{s, {}};

    if (q >= 2) {
        // close every jump left to right; each pass fixes the smallest one
        for (;;) {
            CoreDecision d = decide_core(q, L, Lp);
            if (!d.yes) throw std::logic_error("witness synthesis lost feasibility");
            const auto& f = d.mapping.f;
            std::size_t gap = 0;
            for (std::size_t i = 1; i < f.size(); ++i)
                if (f[i] > f[i - 1] + 1) {
                    gap = i;  // window index of the left side
                    break;
                }
            if (gap == 0) break;
            const std::size_t i = gap;      // left window of the smallest jump
            if (f[i - 1] != i) throw std::logic_error("prefix before the first jump must be identity");
            const std::size_t jn = f[gap];  // f(i+1)
            const std::size_t u = (jn - i - 1) / q;
            if (q < 5) {
                emit_type1(cur, L, trace.ops, i, q);
                continue;
            }
            // route the insertion through the witness position p
            std::size_t p = i + 3;
            while (p + 3 <= jn && !gap_witness_ok(L, Lp, i, p)) p += q;
            if (p + 3 > jn) throw std::logic_error("witness synthesis lost its gap witness");
            const std::size_t v = (p - (i + 3)) / q;
            std::vector<std::size_t> idxs;
            if (v == 0) {
                idxs.push_back(i);
                if (u >= 2) idxs.push_back(i + 3);
                for (std::size_t w = 2; w < u; ++w) idxs.push_back(i + 6);
            } else if (v == u - 1) {
                idxs.push_back(i);
                idxs.push_back(i + 2);
                for (std::size_t w = 2; w < u; ++w) idxs.push_back(i + 3);
            } else {
                idxs.push_back(i);
                idxs.push_back(i + 3);
                idxs.push_back(i + 2);
                for (std::size_t w = 1; w < v; ++w) idxs.push_back(i + 4);
                for (std::size_t w = 0; w + v + 2 < u; ++w) idxs.push_back(i + 5 * v + 6);
            }
            for (std::size_t a : idxs) emit_type1(cur, L, trace.ops, a, q);
        }
    }

    if (L.size() != Lp.size()) throw std::logic_error("witness synthesis mismatched run counts");
    for (std::size_t k = 1; k < Lp.size(); ++k) {
        if (L[k] > Lp[k]) throw std::logic_error("witness synthesis produced an oversized run");
        emit_extensions(cur, L, trace.ops, k, Lp[k]);
    }
    if (!(cur == t)) throw std::logic_error("witness synthesis did not reproduce the target");
    return trace;
}

RewriteTrace simulate_duplication_normally(const TDString& s, const RewriteOp& op) {
    if (op.kind != RewriteKind::Duplication) throw InputError("expected a duplication op");
    auto pa = purely_alternating_form(s);
    if (!pa) throw InputError("subject must be purely alternating");
    const std::size_t q = pa->alphabet().size();
    if (q > 5) throw InputError("simulation is only available for alphabets of up to 5 symbols");
    const TDString target = apply_duplication(s, op);

    Lengths L = run_lengths(s);
    const std::size_t n = L.size() - 1;
    // locate the runs spanned by X
    std::vector<std::size_t> run_begin(n + 2);
    run_begin[1] = 1;
    for (std::size_t k = 1; k <= n; ++k) run_begin[k + 1] = run_begin[k] + L[k];
    const std::size_t lo = op.start, hi = op.start + op.length - 1;
    std::size_t ra = 0, rb = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (lo >= run_begin[k] && lo < run_begin[k + 1]) ra = k;
        if (hi >= run_begin[k] && hi < run_begin[k + 1]) rb = k;
    }
    std::size_t k_runs = rb - ra + 1;
    if (k_runs % q > 1)
        throw InputError("duplication cannot be simulated: |RLE(X)| mod q exceeds 1");

    TDString cur = s;
    RewriteTrace trace{s, {}};
    if (k_runs > 1) {
        if (k_runs % q == 1) --rb, k_runs -= 1;  // drop the trailing run of X
        const std::size_t r = k_runs / q;
        std::size_t g = 1;
        if (q == 5 && r >= 2) {
            auto fourth = [&](std::size_t grp) { return L[ra + (grp - 1) * q + 3]; };
            if (fourth(1) <= fourth(r)) {
                g = 1;
            } else {
                g = 0;
                for (std::size_t cand = 2; cand <= r; ++cand)
                    if (fourth(cand) <= fourth(cand - 1)) {
                        g = cand;
                        break;
                    }
                if (g == 0) throw std::logic_error("no feasible simulation group");
            }
        }
        const std::size_t a = ra + (g - 1) * q;
        if (r == 1) {
            emit_type1(cur, L, trace.ops, a, q);
        } else {
            emit_type1(cur, L, trace.ops, a, q);
            emit_type1(cur, L, trace.ops, a + 2, q);
            for (std::size_t w = 2; w < r; ++w) emit_type1(cur, L, trace.ops, a + q - 1, q);
        }
    }

    if (!matches(cur, target)) throw std::logic_error("simulation result does not match the target");
    Lengths Lt = run_lengths(target);
    for (std::size_t k = 1; k < Lt.size(); ++k) emit_extensions(cur, L, trace.ops, k, Lt[k]);
    if (!(cur == target)) throw std::logic_error("simulation did not reproduce the target");
    return trace;
}

bool normal_simulation_exists(const TDString& x, std::size_t max_ops) {
    auto pa = purely_alternating_form(x);
    if (!pa) throw InputError("subject must be purely alternating");
    const std::size_t q = pa->alphabet().size();
    const TDString target = apply_duplication(x, duplication(1, x.size()));
    const std::size_t target_runs = rle(target).run_count();

    std::set<std::string> seen{x.data()};
    std::vector<TDString> frontier{x};
    for (std::size_t depth = 0; depth < max_ops; ++depth) {
        std::vector<TDString> next;
        for (const TDString& u : frontier) {
            for (const RewriteOp& op : enumerate_normal_duplications(u, q)) {
                TDString v = apply_duplication(u, op);
                if (v.size() > target.size()) continue;
                if (!seen.insert(v.data()).second) continue;
                if (rle(v).run_count() == target_runs && matches(v, target)) return true;
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

TDString sixary_counterexample_string() {
    RunLengthEncoding enc;
    const std::size_t lens[] = {2, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 2};
    for (std::size_t i = 0; i < 12; ++i) enc.runs.push_back(Run{Symbol(i % 6), lens[i]});
    return enc.decode(Alphabet::range(6));
}

bool check_sixary_counterexample() {
    return !normal_simulation_exists(sixary_counterexample_string(), 2);
}

}  // namespace tdkit
