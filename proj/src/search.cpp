#include "cubepal/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "cubepal/verify.hpp"

namespace cubepal {

const char* to_string(Status s) {
    switch (s) {
    case Status::Feasible: return "Feasible";
    case Status::Infeasible: return "Infeasible";
    case Status::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Walk { Found, Exhausted, Aborted };

struct Ticker {
    const Budget budget;
    const Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;

    // One node per committed assignment. Returns false when a limit is hit.
    bool tick() {
        ++nodes;
        if (budget.max_nodes && nodes > budget.max_nodes) return false;
        if (budget.max_millis && (nodes & 0xFFF) == 0) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start);
            if (static_cast<std::uint64_t>(ms.count()) > budget.max_millis) return false;
        }
        return true;
    }

    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    }
};

void check_search_args(int n, int k) {
    if (n < 2 || n > kMaxDimension)
        throw RangeError("search requires 2 <= n <= " + std::to_string(kMaxDimension) +
                         ", got " + std::to_string(n));
    if (k < 1 || k > 63)
        throw RangeError("search supports 1 <= k <= 63 colors, got " + std::to_string(k));
}

Coloring checked_witness(int n, int k, Mode mode, std::vector<Color> colors) {
    Coloring witness = make_coloring(n, k, mode, std::move(colors));
    if (!distinguishes(witness).ok)
        throw std::logic_error("internal: search witness fails distinctness");
    if (mode == Mode::Proper && !is_proper(witness).ok)
        throw std::logic_error("internal: search witness fails properness");
    return witness;
}

// ---------------------------------------------------------------------------
// Edge-branching search (general mode, and proper mode with k != n).
// ---------------------------------------------------------------------------

struct EdgeSearch {
    int n;
    int k;
    Mode mode;
    SearchOptions options;
    Ticker ticker;

    std::vector<EdgeIndex> order;                       // branching order
    std::vector<std::pair<Vertex, Vertex>> endpoints;   // by branching position
    std::vector<int> edge_dim;                          // by branching position
    std::vector<Color> colors;                          // by EdgeIndex
    std::vector<std::uint64_t> used_at;                 // color bitmask per vertex
    std::vector<int> colored_count;                     // per vertex
    std::set<Palette> completed;                        // palettes of finished vertices
    std::array<std::array<int, 65>, 25> class_count{};  // [dimension][color]
    bool class_pruning = false;
    std::optional<std::vector<Color>> found;

    EdgeSearch(int n_, int k_, Mode mode_, const Budget& budget, const SearchOptions& opts)
        : n(n_), k(k_), mode(mode_), options(opts), ticker{budget} {
        const std::uint64_t edge_count = make_hypercube(n).edge_count;
        const std::size_t vertices = std::size_t{1} << n;
        colors.assign(edge_count, 0);
        used_at.assign(vertices, 0);
        colored_count.assign(vertices, 0);
        class_pruning = options.parallel_class_pruning && mode == Mode::Proper &&
                        n == 4 && k == 4;

        // General mode branches in plain index order. Proper mode completes
        // one vertex at a time so palette collisions surface early; with a
        // deterministic witness requested, index order makes the first
        // solution the lexicographically smallest one.
        if (mode == Mode::General || options.deterministic_witness) {
            order.resize(edge_count);
            for (std::uint64_t i = 0; i < edge_count; ++i) order[i] = i;
        } else {
            std::vector<bool> listed(edge_count, false);
            order.reserve(edge_count);
            for (Vertex v : bfs_vertex_order(n))
                for (int i = 1; i <= n; ++i) {
                    const EdgeIndex e = edge_index(n, v, i);
                    if (!listed[e]) {
                        listed[e] = true;
                        order.push_back(e);
                    }
                }
        }
        endpoints.reserve(order.size());
        edge_dim.reserve(order.size());
        for (EdgeIndex e : order) {
            const EdgeRef ref = edge_from_index(n, e);
            endpoints.emplace_back(ref.canonical_vertex, other_endpoint(ref));
            edge_dim.push_back(ref.dimension);
        }
    }

    Palette palette_of(Vertex v) const {
        Palette p(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) p[i - 1] = colors[edge_index(n, v, i)];
        return p;
    }

    Walk run() { return extend(0, 0); }

    Walk extend(std::size_t pos, int max_used) {
        if (pos == order.size()) {
            found = colors;
            return Walk::Found;
        }
        const auto [u, w] = endpoints[pos];
        const int dim = edge_dim[pos];
        const int limit = options.symmetry_breaking ? std::min(k, max_used + 1) : k;
        for (int c = 1; c <= limit; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (mode == Mode::Proper && ((used_at[u] | used_at[w]) & bit)) continue;
            if (class_pruning && class_count[dim][c] >= 2) continue;
            if (!ticker.tick()) return Walk::Aborted;

            colors[order[pos]] = static_cast<Color>(c);
            used_at[u] |= bit;
            used_at[w] |= bit;
            ++colored_count[u];
            ++colored_count[w];
            ++class_count[dim][c];

            bool viable = true;
            std::array<const Palette*, 2> inserted{nullptr, nullptr};
            Palette pu, pw;
            if (colored_count[u] == n) {
                pu = palette_of(u);
                if (!completed.insert(pu).second) viable = false;
                else inserted[0] = &pu;
            }
            if (viable && colored_count[w] == n) {
                pw = palette_of(w);
                if (!completed.insert(pw).second) viable = false;
                else inserted[1] = &pw;
            }

            Walk result = Walk::Exhausted;
            if (viable) result = extend(pos + 1, std::max(max_used, c));

            if (result != Walk::Found) {
                if (inserted[1]) completed.erase(*inserted[1]);
                if (inserted[0]) completed.erase(*inserted[0]);
                --class_count[dim][c];
                --colored_count[u];
                --colored_count[w];
                used_at[u] &= ~bit;
                used_at[w] &= ~bit;
                colors[order[pos]] = 0;
            }
            if (result != Walk::Exhausted) return result;
        }
        return Walk::Exhausted;
    }
};

SearchOutcome run_edge_search(int n, Mode mode, int k, const Budget& budget,
                              const SearchOptions& options) {
    EdgeSearch search(n, k, mode, budget, options);
    const Walk walk = search.run();
    SearchOutcome outcome;
    outcome.nodes_explored = search.ticker.nodes;
    outcome.elapsed = search.ticker.elapsed();
    outcome.budget = budget;
    switch (walk) {
    case Walk::Found:
        outcome.status = Status::Feasible;
        outcome.witness = checked_witness(n, k, mode, std::move(*search.found));
        break;
    case Walk::Exhausted:
        outcome.status = Status::Infeasible;
        break;
    case Walk::Aborted:
        outcome.status = Status::Unknown;
        break;
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// Permutation assignment search (proper mode with exactly n colors).
// ---------------------------------------------------------------------------

constexpr std::size_t kMaxPermWords = 12;  // 6! = 720 bits
using PermSet = std::array<std::uint64_t, kMaxPermWords>;

PermSet set_and(const PermSet& a, const PermSet& b) {
    PermSet out;
    for (std::size_t i = 0; i < kMaxPermWords; ++i) out[i] = a[i] & b[i];
    return out;
}

struct PermutationSearch {
    int n;
    SearchOptions options;
    Ticker ticker;

    std::vector<Palette> perms;                 // lexicographic; identity first
    std::vector<std::array<PermSet, 6>> match;  // match[color-1][position-1]
    PermSet all{};
    std::vector<Vertex> order;
    std::vector<int> assigned;  // vertex -> perm id, -1 if open
    PermSet used{};
    std::array<std::array<int, 7>, 7> class_count{};  // [dimension][color]
    bool class_pruning = false;
    std::optional<std::vector<int>> found;

    PermutationSearch(int n_, const Budget& budget, const SearchOptions& opts)
        : n(n_), options(opts), ticker{budget} {
        Palette p(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) p[i - 1] = static_cast<Color>(i);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));

        match.assign(static_cast<std::size_t>(n), {});
        for (std::size_t id = 0; id < perms.size(); ++id) {
            all[id / 64] |= std::uint64_t{1} << (id % 64);
            for (int pos = 1; pos <= n; ++pos) {
                const Color c = perms[id][pos - 1];
                match[c - 1][pos - 1][id / 64] |= std::uint64_t{1} << (id % 64);
            }
        }
        order = bfs_vertex_order(n);
        assigned.assign(std::size_t{1} << n, -1);
        class_pruning = options.parallel_class_pruning && n == 4;
    }

    Walk run() { return extend(0); }

    Walk extend(std::size_t pos) {
        if (pos == order.size()) {
            found = assigned;
            return Walk::Found;
        }
        const Vertex v = order[pos];
        PermSet candidates = all;
        for (std::size_t i = 0; i < kMaxPermWords; ++i) candidates[i] &= ~used[i];
        for (int i = 1; i <= n; ++i) {
            const Vertex w = v ^ (Vertex{1} << (i - 1));
            if (assigned[w] >= 0)
                candidates = set_and(candidates, match[perms[assigned[w]][i - 1] - 1][i - 1]);
        }
        if (v == 0 && options.symmetry_breaking) {
            // restrict to the identity permutation (perm id 0)
            PermSet identity{};
            identity[0] = 1;
            candidates = set_and(candidates, identity);
        }

        for (std::size_t word = 0; word < kMaxPermWords; ++word) {
            std::uint64_t bits = candidates[word];
            while (bits) {
                const int offset = std::countr_zero(bits);
                bits &= bits - 1;
                const std::size_t id = word * 64 + static_cast<std::size_t>(offset);

                // Count each edge once, at its first assigned endpoint.
                bool class_ok = true;
                int bumped = 0;
                if (class_pruning) {
                    for (int i = 1; i <= n && class_ok; ++i) {
                        const Vertex w = v ^ (Vertex{1} << (i - 1));
                        if (assigned[w] >= 0) continue;
                        const Color c = perms[id][i - 1];
                        if (++class_count[i][c] > 2) class_ok = false;
                        ++bumped;
                    }
                    if (!class_ok) {
                        undo_class_counts(v, id, bumped);
                        continue;
                    }
                }

                if (!ticker.tick()) {
                    if (class_pruning) undo_class_counts(v, id, bumped);
                    return Walk::Aborted;
                }
                assigned[v] = static_cast<int>(id);
                used[word] |= std::uint64_t{1} << offset;

                const Walk result = extend(pos + 1);
                if (result == Walk::Found) return result;

                used[word] &= ~(std::uint64_t{1} << offset);
                assigned[v] = -1;
                if (class_pruning) undo_class_counts(v, id, bumped);
                if (result == Walk::Aborted) return result;
            }
        }
        return Walk::Exhausted;
    }

    void undo_class_counts(Vertex v, std::size_t id, int bumped) {
        for (int i = 1; i <= n && bumped > 0; ++i) {
            const Vertex w = v ^ (Vertex{1} << (i - 1));
            if (assigned[w] >= 0) continue;
            --class_count[i][perms[id][i - 1]];
            --bumped;
        }
    }
};

} // namespace

SearchOutcome permutation_csp(int n, const Budget& budget, const SearchOptions& options) {
    if (n < 2 || n > 6)
        throw RangeError("permutation search supports 2 <= n <= 6, got " + std::to_string(n));
    PermutationSearch search(n, budget, options);
    const Walk walk = search.run();
    SearchOutcome outcome;
    outcome.nodes_explored = search.ticker.nodes;
    outcome.elapsed = search.ticker.elapsed();
    outcome.budget = budget;
    switch (walk) {
    case Walk::Found: {
        std::vector<Color> colors(make_hypercube(n).edge_count, 0);
        const std::size_t vertices = std::size_t{1} << n;
        for (std::size_t v = 0; v < vertices; ++v)
            for (int i = 1; i <= n; ++i)
                colors[edge_index(n, static_cast<Vertex>(v), i)] =
                    search.perms[(*search.found)[v]][i - 1];
        outcome.status = Status::Feasible;
        outcome.witness = checked_witness(n, n, Mode::Proper, std::move(colors));
        break;
    }
    case Walk::Exhausted:
        outcome.status = Status::Infeasible;
        break;
    case Walk::Aborted:
        outcome.status = Status::Unknown;
        break;
    }
    return outcome;
}

SearchOutcome feasible(int n, Mode mode, int k, const Budget& budget,
                       const SearchOptions& options) {
    check_search_args(n, k);
    if (mode == Mode::Proper && k == n && n <= 6)
        return permutation_csp(n, budget, options);
    return run_edge_search(n, mode, k, budget, options);
}

MinColorsOutcome min_colors(int n, Mode mode, int k_max, const Budget& budget,
                            const SearchOptions& options) {
    if (n < 2 || n > kMaxDimension)
        throw RangeError("search requires 2 <= n <= " + std::to_string(kMaxDimension));
    if (k_max == 0) k_max = (mode == Mode::Proper) ? std::max(n, 4) + 1 : 3;

    MinColorsOutcome result;
    const int floor = (mode == Mode::Proper) ? n : 2;
    const Clock::time_point start = Clock::now();
    Budget remaining = budget;  // both limits are drawn down across probes
    for (int k = floor; k <= k_max; ++k) {
        const SearchOutcome probe = feasible(n, mode, k, remaining, options);
        result.nodes_explored += probe.nodes_explored;
        result.probes.emplace_back(k, probe.status);
        if (probe.status == Status::Unknown) {
            result.status = Status::Unknown;
            return result;
        }
        if (probe.status == Status::Feasible) {
            result.status = Status::Feasible;
            result.k_min = k;
            result.witness = probe.witness;
            return result;
        }
        if (budget.max_nodes) {
            if (probe.nodes_explored >= remaining.max_nodes) {
                result.status = Status::Unknown;
                return result;
            }
            remaining.max_nodes -= probe.nodes_explored;
        }
        if (budget.max_millis) {
            const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start);
            if (static_cast<std::uint64_t>(spent.count()) >= budget.max_millis) {
                result.status = Status::Unknown;
                return result;
            }
            remaining.max_millis = budget.max_millis - spent.count();
        }
    }
    result.status = Status::Infeasible;
    return result;
}

SearchOutcome brute_force_oracle(int n, Mode mode, int k) {
    if (n < 1 || n > kMaxDimension)
        throw RangeError("oracle requires 1 <= n <= " + std::to_string(kMaxDimension));
    if (k < 1 || k > kMaxColorCount)
        throw RangeError("oracle requires k >= 1");
    const std::uint64_t edge_count = make_hypercube(n).edge_count;
    constexpr std::uint64_t kCap = std::uint64_t{1} << 28;
    std::uint64_t total = 1;
    for (std::uint64_t e = 0; e < edge_count; ++e) {
        total *= static_cast<std::uint64_t>(k);
        if (total > kCap)
            throw RangeError("oracle state space k^" + std::to_string(edge_count) +
                             " exceeds 2^28");
    }

    const std::size_t vertices = std::size_t{1} << n;
    const Clock::time_point start = Clock::now();
    std::vector<Color> colors(edge_count, 1);
    std::vector<Palette> pals(vertices);
    std::uint64_t tested = 0;

    auto accepts = [&]() {
        for (std::size_t v = 0; v < vertices; ++v) {
            Palette& p = pals[v];
            p.resize(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i)
                p[i - 1] = colors[edge_index(n, static_cast<Vertex>(v), i)];
            if (mode == Mode::Proper)
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (p[i] == p[j]) return false;
        }
        std::vector<Palette> sorted = pals;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    };

    SearchOutcome outcome;
    for (;;) {
        ++tested;
        if (accepts()) {
            outcome.status = Status::Feasible;
            outcome.witness = checked_witness(n, k, mode, colors);
            break;
        }
        // odometer step
        std::size_t pos = 0;
        while (pos < colors.size() && colors[pos] == k) colors[pos++] = 1;
        if (pos == colors.size()) {
            outcome.status = Status::Infeasible;
            break;
        }
        ++colors[pos];
    }
    outcome.nodes_explored = tested;
    outcome.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return outcome;
}

} // namespace cubepal
