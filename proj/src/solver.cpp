#include "tdkit/solver.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

namespace tdkit {

namespace {

struct StatePool {
    std::vector<std::string> states;
    std::vector<std::int64_t> parent;
    std::vector<RewriteOp> via;
    std::unordered_map<std::string, std::size_t> index;

    std::size_t add(std::string s, std::int64_t par, RewriteOp op) {
        std::size_t id = states.size();
        index.emplace(s, id);
        states.push_back(std::move(s));
        parent.push_back(par);
        via.push_back(op);
        return id;
    }
    bool known(const std::string& s) const { return index.count(s) != 0; }
};

std::vector<RewriteOp> contraction_moves(const std::string& codes) {
    std::vector<RewriteOp> ops;
    for (const SquarePos& sq : find_squares(std::string_view(codes)))
        ops.push_back(contraction(sq.start, sq.half_len));
    return ops;
}

std::string contract_raw(const std::string& s, const RewriteOp& op) {
    std::string out = s;
    out.erase(op.start - 1 + op.length, op.length);
    return out;
}

RewriteTrace build_trace(const StatePool& pool, const Alphabet& alphabet, std::size_t target_id) {
    std::vector<RewriteOp> ops;
    for (std::int64_t id = std::int64_t(target_id); pool.parent[std::size_t(id)] >= 0;
         id = pool.parent[std::size_t(id)])
        ops.push_back(pool.via[std::size_t(id)]);
    std::reverse(ops.begin(), ops.end());
    return RewriteTrace{TDString(alphabet, pool.states[0]), std::move(ops)};
}

struct Generated {
    std::size_t parent;
    RewriteOp op;
    std::string child;
};

// Core layer-synchronous contraction search. When `target` is set, states that
// cannot reach it (too short, or missing it as a subsequence) are pruned and
// the walk stops at the first discovery, which by generation order carries the
// lexicographically smallest shortest trace.
SearchResult run_search(const TDString& start, const std::optional<TDString>& target,
                        const SearchConfig& cfg, ClosureResult* closure_out) {
    if (target && !(start.alphabet() == target->alphabet()))
        throw InputError("oracle requires both strings over the same alphabet");
    if (cfg.max_visited < 1) throw InputError("max_visited must be at least 1");

    SearchResult res;
    StatePool pool;
    pool.add(start.data(), -1, contraction(0, 0));
    res.visited_count = 1;

    if (target && start.data() == target->data()) {
        res.verdict = Verdict::Reachable;
        res.distance = 0;
        if (cfg.collect_trace) res.trace = RewriteTrace{start, {}};
        return res;
    }

    const std::string* goal = target ? &target->data() : nullptr;
    auto viable = [&](const std::string& s) {
        if (!goal) return true;
        return s.size() >= goal->size() && is_subsequence(*goal, s);
    };
    if (goal && !viable(pool.states[0])) {
        res.verdict = Verdict::Unreachable;
        if (closure_out) {
            closure_out->states.push_back(start);
            closure_out->visited_count = 1;
        }
        return res;
    }

    std::vector<std::size_t> frontier{0};
    std::size_t depth = 0;
    bool budget_hit = false;
    bool depth_hit = false;

    while (!frontier.empty()) {
        if (cfg.max_depth && depth >= *cfg.max_depth) {
            depth_hit = true;
            break;
        }
        // Generate children in frontier order; workers only split the
        // generation, the merge below re-imposes the sequential order.
        std::vector<Generated> generated;
        const unsigned workers =
            std::max(1u, std::min<unsigned>(cfg.threads, unsigned(frontier.size())));
        if (workers == 1) {
            for (std::size_t fid : frontier) {
                const std::string& u = pool.states[fid];
                for (const RewriteOp& op : contraction_moves(u)) {
                    std::string v = contract_raw(u, op);
                    if (!viable(v)) continue;
                    generated.push_back(Generated{fid, op, std::move(v)});
                }
            }
        } else {
            std::vector<std::future<std::vector<Generated>>> parts(workers);
            const std::size_t chunk = (frontier.size() + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(frontier.size(), lo + chunk);
                parts[w] = std::async(std::launch::async, [&, lo, hi] {
                    std::vector<Generated> local;
                    for (std::size_t k = lo; k < hi; ++k) {
                        const std::string& u = pool.states[frontier[k]];
                        for (const RewriteOp& op : contraction_moves(u)) {
                            std::string v = contract_raw(u, op);
                            if (!viable(v)) continue;
                            local.push_back(Generated{frontier[k], op, std::move(v)});
                        }
                    }
                    return local;
                });
            }
            for (auto& f : parts) {
                auto local = f.get();
                generated.insert(generated.end(), std::make_move_iterator(local.begin()),
                                 std::make_move_iterator(local.end()));
            }
        }

        std::vector<std::size_t> next;
        for (Generated& g : generated) {
            if (pool.known(g.child)) continue;
            if (res.visited_count + 1 > cfg.max_visited) {
                budget_hit = true;
                break;
            }
            std::size_t id = pool.add(std::move(g.child), std::int64_t(g.parent), g.op);
            ++res.visited_count;
            if (goal && pool.states[id] == *goal) {
                res.verdict = Verdict::Reachable;
                res.distance = depth + 1;
                if (cfg.collect_trace) res.trace = build_trace(pool, start.alphabet(), id);
                return res;
            }
            next.push_back(id);
        }
        if (budget_hit) break;
        frontier = std::move(next);
        ++depth;
    }

    if (budget_hit) {
        res.verdict = Verdict::BudgetExhausted;
    } else {
        res.verdict = Verdict::Unreachable;
        res.depth_capped = depth_hit;
    }
    if (closure_out) {
        closure_out->states.reserve(pool.states.size());
        for (const std::string& s : pool.states)
            closure_out->states.emplace_back(start.alphabet(), s);
        closure_out->complete = !budget_hit && !depth_hit;
        closure_out->visited_count = res.visited_count;
    }
    return res;
}

}  // namespace

SearchResult oracle_exists(const TDString& s, const TDString& t, const SearchConfig& cfg) {
    return run_search(t, s, cfg, nullptr);
}

SearchResult oracle_distance(const TDString& s, const TDString& t, const SearchConfig& cfg) {
    return run_search(t, s, cfg, nullptr);
}

ClosureResult contraction_closure(const TDString& t, const SearchConfig& cfg) {
    ClosureResult closure;
    run_search(t, std::nullopt, cfg, &closure);
    return closure;
}

ClosureResult compute_roots(const TDString& t, const SearchConfig& cfg) {
    ClosureResult closure = contraction_closure(t, cfg);
    ClosureResult roots;
    roots.complete = closure.complete;
    roots.visited_count = closure.visited_count;
    for (const TDString& s : closure.states)
        if (is_square_free(s)) roots.states.push_back(s);
    return roots;
}

}  // namespace tdkit
