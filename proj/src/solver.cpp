#include "strongdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace strongdom {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Bits in [start, 64).
constexpr std::uint64_t suffix_mask(int start) {
    return start >= 64 ? 0 : ~std::uint64_t{0} << start;
}

enum class Kind { plain, strong, weak };

bool may_dominate(Kind kind, int deg_dominator, int deg_dominated) {
    switch (kind) {
        case Kind::plain: return true;
        case Kind::strong: return deg_dominator >= deg_dominated;
        case Kind::weak: return deg_dominator <= deg_dominated;
    }
    return false;
}

void check_members(const Graph& g, VertexSet d) {
    check_set_capacity(g);
    if (!d.subset_of(VertexSet::full(g.vertex_count())))
        throw Error(Errc::invalid_vertex, "set member out of range [0," +
                                              std::to_string(g.vertex_count()) + ")");
}

// Definition-direct validity check; deliberately does not share the mask
// machinery of the branch-and-bound path.
bool dominates_all(const Graph& g, VertexSet d, Kind kind) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        if (d.contains(x)) continue;
        bool covered = false;
        for (VertexId y : g.adjacent(x)) {
            if (d.contains(y) && may_dominate(kind, g.degree(y), g.degree(x))) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

VertexSet forced_for_kind(const Graph& g, Kind kind) {
    VertexSet f;
    for (int x = 0; x < g.vertex_count(); ++x) {
        bool dominatable = false;
        for (VertexId y : g.adjacent(x)) {
            if (may_dominate(kind, g.degree(y), g.degree(x))) {
                dominatable = true;
                break;
            }
        }
        if (!dominatable) f.add(x);
    }
    return f;
}

bool next_combination(std::vector<int>& idx, int item_count) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < item_count - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Subsets in increasing cardinality, forced vertices fixed, remaining
// vertices enumerated as lexicographic combinations, so the first valid set
// is optimal and the lexicographically smallest such.
SolveResult brute_force(const Graph& g, Kind kind, std::optional<int> size_cap,
                        int oracle_limit) {
    check_set_capacity(g);
    int n = g.vertex_count();
    if (n > oracle_limit)
        throw Error(Errc::oracle_too_large, "n = " + std::to_string(n) +
                                                " exceeds oracle limit " +
                                                std::to_string(oracle_limit));

    VertexSet forced = forced_for_kind(g, kind);
    std::vector<int> free_ids;
    for (int v = 0; v < n; ++v)
        if (!forced.contains(v)) free_ids.push_back(v);

    int base = forced.count();
    std::uint64_t nodes = 0;
    for (int k = 0; k <= static_cast<int>(free_ids.size()); ++k) {
        if (size_cap && base + k > *size_cap)
            throw Error(Errc::no_set_within_cap,
                        "no dominating set of size <= " + std::to_string(*size_cap));
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            VertexSet d = forced;
            for (int i : idx) d.add(free_ids[static_cast<std::size_t>(i)]);
            ++nodes;
            if (dominates_all(g, d, kind))
                return SolveResult{base + k, d, nodes, SolveMethod::brute_force};
        } while (next_combination(idx, static_cast<int>(free_ids.size())));
    }
    // The full vertex set is always valid, so the loop cannot fall through.
    throw std::logic_error("brute force exhausted without finding the full set");
}

constexpr int kInfeasible = 1000;

struct Bnb {
    int n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> cand;   // cand[x]: neighbors able to cover x
    std::vector<std::uint64_t> covers; // covers[c]: {c} plus everything c covers
    int best = 0;
    std::uint64_t nodes = 0;
    std::uint64_t witness = 0;

    explicit Bnb(const Graph& g) {
        n = g.vertex_count();
        all = VertexSet::full(n).bits;
        cand.assign(static_cast<std::size_t>(n), 0);
        covers.assign(static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x) {
            covers[static_cast<std::size_t>(x)] |= bit(x);
            for (VertexId y : g.adjacent(x)) {
                if (g.degree(y) >= g.degree(x)) {
                    cand[static_cast<std::size_t>(x)] |= bit(y);
                    covers[static_cast<std::size_t>(y)] |= bit(x);
                }
            }
        }
    }

    // Greedy maximal packing of uncovered vertices whose closed dominator
    // sets ({x} plus cand[x], reduced to still-allowed picks) are pairwise
    // disjoint. Each packed vertex needs its own future pick.
    int packing_lb(std::uint64_t covered, std::uint64_t allowed) const {
        struct Claim {
            int size;
            int x;
            std::uint64_t mask;
        };
        Claim claims[VertexSet::max_vertices];
        int cnt = 0;
        for (std::uint64_t rest = all & ~covered; rest != 0; rest &= rest - 1) {
            int x = std::countr_zero(rest);
            std::uint64_t reduced = (bit(x) | cand[static_cast<std::size_t>(x)]) & allowed;
            if (reduced == 0) return kInfeasible;
            claims[cnt++] = {std::popcount(reduced), x, reduced};
        }
        std::sort(claims, claims + cnt, [](const Claim& a, const Claim& b) {
            return a.size != b.size ? a.size < b.size : a.x < b.x;
        });
        std::uint64_t used = 0;
        int lb = 0;
        for (int i = 0; i < cnt; ++i) {
            if ((claims[i].mask & used) == 0) {
                used |= claims[i].mask;
                ++lb;
            }
        }
        return lb;
    }

    // Phase 1: optimum size only.
    void search(std::uint64_t chosen, std::uint64_t excluded, std::uint64_t covered) {
        ++nodes;
        if (covered == all) {
            best = std::min(best, std::popcount(chosen));
            return;
        }
        std::uint64_t allowed = all & ~(chosen | excluded);
        int lb = packing_lb(covered, allowed);
        if (std::popcount(chosen) + lb >= best) return;

        // Branch on the uncovered vertex with the fewest remaining options.
        int pick_cnt = VertexSet::max_vertices + 1;
        std::uint64_t pick_opts = 0;
        for (std::uint64_t rest = all & ~covered; rest != 0; rest &= rest - 1) {
            int x = std::countr_zero(rest);
            std::uint64_t opts = (bit(x) | cand[static_cast<std::size_t>(x)]) & allowed;
            int c = std::popcount(opts);
            if (c < pick_cnt) {
                pick_cnt = c;
                pick_opts = opts;
                if (c == 1) break;
            }
        }
        for (std::uint64_t rest = pick_opts; rest != 0; rest &= rest - 1) {
            int c = std::countr_zero(rest);
            search(chosen | bit(c), excluded, covered | covers[static_cast<std::size_t>(c)]);
            excluded |= bit(c);
        }
    }

    // Phase 2: first (hence lexicographically smallest) witness of exactly
    // the optimum size, scanning candidate ids in ascending order.
    bool lex_witness(std::uint64_t chosen, std::uint64_t covered, int budget, int start) {
        ++nodes;
        if (covered == all) {
            witness = chosen;
            return true;
        }
        if (budget == 0) return false;
        std::uint64_t allowed = suffix_mask(start) & all & ~chosen;
        if (packing_lb(covered, allowed) > budget) return false;
        for (int c = start; c < n; ++c) {
            if ((chosen >> c) & 1) continue;
            if ((covers[static_cast<std::size_t>(c)] & ~covered) == 0) continue;
            if (lex_witness(chosen | bit(c), covered | covers[static_cast<std::size_t>(c)],
                            budget - 1, c + 1))
                return true;
        }
        return false;
    }
};

} // namespace

bool is_dominating(const Graph& g, VertexSet d) {
    check_members(g, d);
    return dominates_all(g, d, Kind::plain);
}

bool is_strong_dominating(const Graph& g, VertexSet d) {
    check_members(g, d);
    return dominates_all(g, d, Kind::strong);
}

bool is_weak_dominating(const Graph& g, VertexSet d) {
    check_members(g, d);
    return dominates_all(g, d, Kind::weak);
}

VertexSet forced_vertices(const Graph& g) {
    check_set_capacity(g);
    return forced_for_kind(g, Kind::strong);
}

SolveResult gamma_st_bruteforce(const Graph& g, std::optional<int> size_cap, int oracle_limit) {
    return brute_force(g, Kind::strong, size_cap, oracle_limit);
}

SolveResult gamma_plain(const Graph& g, int oracle_limit) {
    return brute_force(g, Kind::plain, {}, oracle_limit);
}

SolveResult gamma_w(const Graph& g, int oracle_limit) {
    return brute_force(g, Kind::weak, {}, oracle_limit);
}

VertexSet greedy_upper_bound(const Graph& g) {
    check_set_capacity(g);
    int n = g.vertex_count();
    Bnb ctx(g);
    std::uint64_t covered = 0;
    std::uint64_t chosen = 0;
    while (covered != ctx.all) {
        int best_c = -1;
        int best_gain = 0;
        int best_deg = -1;
        for (int c = 0; c < n; ++c) {
            if ((chosen >> c) & 1) continue;
            int gain = std::popcount(ctx.covers[static_cast<std::size_t>(c)] & ~covered);
            if (gain > best_gain || (gain == best_gain && g.degree(c) > best_deg)) {
                best_c = c;
                best_gain = gain;
                best_deg = g.degree(c);
            }
        }
        chosen |= bit(best_c);
        covered |= ctx.covers[static_cast<std::size_t>(best_c)];
    }
    return VertexSet(chosen);
}

SolveResult gamma_st_exact(const Graph& g) {
    check_set_capacity(g);
    Bnb ctx(g);

    std::uint64_t forced = 0;
    std::uint64_t covered = 0;
    for (int x = 0; x < ctx.n; ++x) {
        if (ctx.cand[static_cast<std::size_t>(x)] == 0) {
            forced |= bit(x);
            covered |= ctx.covers[static_cast<std::size_t>(x)];
        }
    }

    ctx.best = greedy_upper_bound(g).count();
    ctx.search(forced, 0, covered);

    int optimum = ctx.best;
    if (!ctx.lex_witness(forced, covered, optimum - std::popcount(forced), 0))
        throw std::logic_error("witness reconstruction failed at the proven optimum");

    return SolveResult{optimum, VertexSet(ctx.witness), ctx.nodes,
                       SolveMethod::branch_and_bound};
}

} // namespace strongdom
