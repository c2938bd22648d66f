#include "cubepal/seqirr.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace cubepal {

namespace {

std::vector<std::vector<int>> incidence_by_rank(const EdgeOrderedGraph& g) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.num_vertices));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        inc[g.edges[e].first].push_back(static_cast<int>(e));
        inc[g.edges[e].second].push_back(static_cast<int>(e));
    }
    for (auto& list : inc)
        std::sort(list.begin(), list.end(),
                  [&](int a, int b) { return g.order[a] < g.order[b]; });
    return inc;
}

std::vector<int> degrees(const EdgeOrderedGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices), 0);
    for (const auto& [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

void check_distinguishable(const EdgeOrderedGraph& g) {
    const std::vector<int> deg = degrees(g);
    for (int d : deg)
        if (d == 0)
            throw DomainError("graph has an isolated vertex; empty sequences cannot "
                              "be distinguished");
    // components of exactly two vertices are single edges whose endpoints
    // always share their sequence
    std::vector<int> root(deg.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges) root[find(u)] = find(v);
    std::vector<int> size(deg.size(), 0);
    for (std::size_t v = 0; v < deg.size(); ++v) ++size[find(static_cast<int>(v))];
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (size[find(static_cast<int>(v))] == 2)
            throw DomainError("graph has a two-vertex component; its endpoints always "
                              "share their sequence");
}

} // namespace

EdgeOrderedGraph make_edge_ordered_graph(int num_vertices,
                                         std::vector<std::pair<int, int>> edges,
                                         std::vector<int> order) {
    if (num_vertices < 0) throw DomainError("vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("loops are not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw DomainError("parallel edges are not allowed");
    }
    if (order.empty()) {
        order.resize(edges.size());
        std::iota(order.begin(), order.end(), 0);
    }
    if (order.size() != edges.size())
        throw DomainError("ordering must rank every edge exactly once");
    std::vector<bool> hit(edges.size(), false);
    for (int r : order) {
        if (r < 0 || static_cast<std::size_t>(r) >= edges.size() || hit[r])
            throw DomainError("ordering is not a bijection onto 0..|E|-1");
        hit[r] = true;
    }
    return EdgeOrderedGraph{num_vertices, std::move(edges), std::move(order)};
}

EdgeOrderedGraph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> ranked;  // edge positions by increasing rank
    bool have_order = false;
    int max_vertex = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "order:") {
            if (have_order)
                throw FormatError("line " + std::to_string(lineno) + ": duplicate order line");
            have_order = true;
            int idx;
            while (ls >> idx) ranked.push_back(idx);
            if (!ls.eof())
                throw FormatError("line " + std::to_string(lineno) +
                                  ": order line must list integers");
            continue;
        }
        int u, v;
        std::istringstream pair_stream(line);
        std::string trailing;
        if (!(pair_stream >> u >> v) || (pair_stream >> trailing))
            throw FormatError("line " + std::to_string(lineno) +
                              ": expected 'u v' vertex pair, got '" + line + "'");
        if (u < 0 || v < 0)
            throw FormatError("line " + std::to_string(lineno) + ": vertices are 0-based");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }

    std::vector<int> order;
    if (have_order) {
        if (ranked.size() != edges.size())
            throw FormatError("order line ranks " + std::to_string(ranked.size()) +
                              " edges, file lists " + std::to_string(edges.size()));
        order.assign(edges.size(), -1);
        for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
            const int e = ranked[rank];
            if (e < 0 || static_cast<std::size_t>(e) >= edges.size() || order[e] != -1)
                throw FormatError("order line is not a permutation of 0.." +
                                  std::to_string(edges.size() - 1));
            order[e] = static_cast<int>(rank);
        }
    }
    try {
        return make_edge_ordered_graph(max_vertex + 1, std::move(edges), std::move(order));
    } catch (const DomainError& err) {
        throw FormatError(err.what());
    }
}

EdgeOrderedGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    return parse_edge_list(in);
}

std::vector<Color> global_palette(const EdgeOrderedGraph& g, std::span<const Color> coloring,
                                  int v) {
    if (v < 0 || v >= g.num_vertices) throw RangeError("vertex out of range");
    if (coloring.size() != g.edges.size())
        throw DomainError("coloring must assign a color to every edge");
    std::vector<Color> out;
    const auto inc = incidence_by_rank(g);
    out.reserve(inc[v].size());
    for (int e : inc[v]) out.push_back(coloring[e]);
    return out;
}

int mg_bound(const EdgeOrderedGraph& g) {
    if (g.num_vertices == 0) throw DomainError("bound requires a nonempty graph");
    const std::vector<int> deg = degrees(g);
    std::vector<std::uint64_t> count;
    for (int d : deg) {
        if (d == 0)
            throw DomainError("graph has an isolated vertex; empty sequences cannot "
                              "be distinguished");
        if (static_cast<std::size_t>(d) >= count.size()) count.resize(d + 1, 0);
        ++count[d];
    }

    // smallest k with k^i >= n_i, by binary search over exact integer powers
    auto power_reaches = [](std::uint64_t k, int i, std::uint64_t target) {
        std::uint64_t p = 1;
        for (int t = 0; t < i; ++t) {
            p *= k;
            if (p >= target) return true;
        }
        return p >= target;
    };
    int best = 1;
    for (int i = 1; i < static_cast<int>(count.size()); ++i) {
        if (count[i] == 0) continue;
        std::uint64_t lo = 1, hi = count[i];
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (power_reaches(mid, i, count[i])) hi = mid;
            else lo = mid + 1;
        }
        best = std::max<int>(best, static_cast<int>(lo));
    }
    return best;
}

namespace {

using Clock = std::chrono::steady_clock;

struct OrderingSearch {
    const EdgeOrderedGraph& g;
    int k;
    Budget budget;
    Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;

    std::vector<int> by_rank;                // edge at each rank
    std::vector<std::vector<int>> inc;       // incident edges by rank, per vertex
    std::vector<Color> colors;               // by edge id
    std::vector<int> remaining;              // uncolored incident edges per vertex
    std::set<std::vector<Color>> completed;  // sequences of finished vertices
    bool aborted = false;

    OrderingSearch(const EdgeOrderedGraph& graph, int colors_k, const Budget& b)
        : g(graph), k(colors_k), budget(b) {
        by_rank.assign(g.edges.size(), 0);
        for (std::size_t e = 0; e < g.edges.size(); ++e) by_rank[g.order[e]] = static_cast<int>(e);
        inc = incidence_by_rank(g);
        colors.assign(g.edges.size(), 0);
        remaining.assign(static_cast<std::size_t>(g.num_vertices), 0);
        for (std::size_t v = 0; v < remaining.size(); ++v)
            remaining[v] = static_cast<int>(inc[v].size());
    }

    std::vector<Color> sequence_of(int v) const {
        std::vector<Color> s;
        s.reserve(inc[v].size());
        for (int e : inc[v]) s.push_back(colors[e]);
        return s;
    }

    bool tick() {
        ++nodes;
        if (budget.max_nodes && nodes > budget.max_nodes) return false;
        if (budget.max_millis && (nodes & 0x3FF) == 0) {
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (static_cast<std::uint64_t>(ms.count()) > budget.max_millis) return false;
        }
        return true;
    }

    bool extend(std::size_t rank) {
        if (rank == by_rank.size()) return true;
        const int e = by_rank[rank];
        const auto [u, w] = g.edges[e];
        for (int c = 1; c <= k; ++c) {
            if (!tick()) {
                aborted = true;
                return false;
            }
            colors[e] = static_cast<Color>(c);
            --remaining[u];
            --remaining[w];
            bool viable = true;
            bool inserted_u = false, inserted_w = false;
            std::vector<Color> su, sw;
            if (remaining[u] == 0) {
                su = sequence_of(u);
                inserted_u = completed.insert(su).second;
                viable = inserted_u;
            }
            if (viable && remaining[w] == 0) {
                sw = sequence_of(w);
                inserted_w = completed.insert(sw).second;
                viable = inserted_w;
            }
            if (viable && extend(rank + 1)) return true;
            if (inserted_w) completed.erase(sw);
            if (inserted_u) completed.erase(su);
            ++remaining[u];
            ++remaining[w];
            colors[e] = 0;
            if (aborted) return false;
        }
        return false;
    }
};

} // namespace

GraphSearchOutcome feasible_for_ordering(const EdgeOrderedGraph& g, int k,
                                         const Budget& budget) {
    if (g.edges.size() > 20)
        throw RangeError("ordering feasibility supports at most 20 edges");
    if (k < 1 || k > kMaxColorCount) throw RangeError("color count must be >= 1");

    GraphSearchOutcome outcome;
    if (g.edges.empty()) {
        // no edges: every vertex has the empty sequence
        outcome.status = (g.num_vertices <= 1) ? Status::Feasible : Status::Infeasible;
        if (outcome.status == Status::Feasible) outcome.witness = std::vector<Color>{};
        return outcome;
    }

    OrderingSearch search(g, k, budget);
    const bool found = search.extend(0);
    outcome.nodes_explored = search.nodes;
    if (found) {
        outcome.status = Status::Feasible;
        // verifier check before returning the witness
        std::set<std::vector<Color>> all;
        for (int v = 0; v < g.num_vertices; ++v)
            if (!all.insert(global_palette(g, search.colors, v)).second)
                throw std::logic_error("internal: ordering witness fails distinctness");
        outcome.witness = search.colors;
    } else if (search.aborted) {
        outcome.status = Status::Unknown;
    } else {
        outcome.status = Status::Infeasible;
    }
    return outcome;
}

OrderingCensus census_for_ordering(const EdgeOrderedGraph& g, int k) {
    if (k < 1) throw RangeError("color count must be >= 1");
    const std::size_t m = g.edges.size();
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < m; ++e) {
        total *= static_cast<std::uint64_t>(k);
        if (total > (std::uint64_t{1} << 24))
            throw RangeError("census state space exceeds 2^24 colorings");
    }

    OrderingCensus census;
    census.total = total;
    const auto inc = incidence_by_rank(g);
    std::vector<Color> colors(m, 1);
    for (std::uint64_t step = 0; step < total; ++step) {
        std::set<std::vector<Color>> seen;
        bool ok = true;
        for (int v = 0; v < g.num_vertices && ok; ++v) {
            std::vector<Color> s;
            s.reserve(inc[v].size());
            for (int e : inc[v]) s.push_back(colors[e]);
            ok = seen.insert(std::move(s)).second;
        }
        if (ok) {
            ++census.distinguishing;
            if (!census.first_witness) census.first_witness = colors;
        }
        std::size_t pos = 0;
        while (pos < m && colors[pos] == k) colors[pos++] = 1;
        if (pos < m) ++colors[pos];
    }
    return census;
}

namespace {

// Smallest element of an ordering's orbit under the supplied edge
// automorphisms determines the canonical representative.
bool is_canonical(const std::vector<int>& by_rank,
                  std::span<const std::vector<int>> automorphisms) {
    std::vector<int> image(by_rank.size());
    for (const auto& phi : automorphisms) {
        for (std::size_t r = 0; r < by_rank.size(); ++r) image[r] = phi[by_rank[r]];
        if (image < by_rank) return false;
    }
    return true;
}

StrengthOutcome strength_search(const EdgeOrderedGraph& g, int k_max, const Budget& budget,
                                std::span<const std::vector<int>> automorphisms,
                                bool require_all) {
    if (g.edges.size() > 8)
        throw RangeError("strength search supports at most 8 edges");
    check_distinguishable(g);
    for (const auto& phi : automorphisms)
        if (phi.size() != g.edges.size())
            throw DomainError("automorphism must permute the edge set");

    StrengthOutcome outcome;
    const Clock::time_point start = Clock::now();
    Budget remaining = budget;
    for (int k = mg_bound(g); k <= k_max; ++k) {
        bool all_feasible = true;
        bool some_feasible = false;
        std::vector<int> by_rank(g.edges.size());
        std::iota(by_rank.begin(), by_rank.end(), 0);
        do {
            if (!automorphisms.empty() && !is_canonical(by_rank, automorphisms)) continue;
            std::vector<int> order(g.edges.size());
            for (std::size_t r = 0; r < by_rank.size(); ++r) order[by_rank[r]] = static_cast<int>(r);
            EdgeOrderedGraph candidate{g.num_vertices, g.edges, std::move(order)};

            const GraphSearchOutcome probe = feasible_for_ordering(candidate, k, remaining);
            outcome.nodes_explored += probe.nodes_explored;
            if (probe.status == Status::Unknown) {
                outcome.status = Status::Unknown;
                return outcome;
            }
            if (remaining.max_nodes) {
                if (probe.nodes_explored >= remaining.max_nodes) {
                    outcome.status = Status::Unknown;
                    return outcome;
                }
                remaining.max_nodes -= probe.nodes_explored;
            }
            if (budget.max_millis) {
                const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
                    Clock::now() - start);
                if (static_cast<std::uint64_t>(spent.count()) >= budget.max_millis) {
                    outcome.status = Status::Unknown;
                    return outcome;
                }
                remaining.max_millis = budget.max_millis - spent.count();
            }
            if (probe.status == Status::Feasible) some_feasible = true;
            else all_feasible = false;
            if (!require_all && some_feasible) break;
            if (require_all && !all_feasible) break;
        } while (std::next_permutation(by_rank.begin(), by_rank.end()));

        const bool hit = require_all ? all_feasible : some_feasible;
        if (hit) {
            outcome.status = Status::Feasible;
            outcome.k = k;
            return outcome;
        }
    }
    outcome.status = Status::Unknown;  // k_max exhausted without a decision
    return outcome;
}

} // namespace

StrengthOutcome specific_strength(const EdgeOrderedGraph& g, int k_max, const Budget& budget,
                                  std::span<const std::vector<int>> automorphisms) {
    return strength_search(g, k_max, budget, automorphisms, /*require_all=*/false);
}

StrengthOutcome general_strength(const EdgeOrderedGraph& g, int k_max, const Budget& budget,
                                 std::span<const std::vector<int>> automorphisms) {
    return strength_search(g, k_max, budget, automorphisms, /*require_all=*/true);
}

std::vector<std::vector<int>> edge_automorphism_group(const EdgeOrderedGraph& g) {
    if (g.num_vertices > 8)
        throw RangeError("automorphism search supports at most 8 vertices");
    std::set<std::pair<int, int>> edge_set(g.edges.begin(), g.edges.end());
    std::vector<int> perm(static_cast<std::size_t>(g.num_vertices));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> unique_maps;
    do {
        bool preserves = true;
        std::vector<int> edge_map(g.edges.size());
        for (std::size_t e = 0; e < g.edges.size() && preserves; ++e) {
            int u = perm[g.edges[e].first];
            int v = perm[g.edges[e].second];
            if (u > v) std::swap(u, v);
            const auto it = edge_set.find({u, v});
            if (it == edge_set.end()) {
                preserves = false;
                break;
            }
            edge_map[e] = static_cast<int>(
                std::find(g.edges.begin(), g.edges.end(), std::pair<int, int>{u, v}) -
                g.edges.begin());
        }
        if (preserves) unique_maps.insert(std::move(edge_map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {unique_maps.begin(), unique_maps.end()};
}

EdgeOrderedGraph hypercube_ordering(int n) {
    if (n < 1 || n > 10)
        throw RangeError("explicit hypercube edge lists support 1 <= n <= 10");
    const Hypercube cube = make_hypercube(n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(cube.edge_count);
    for (EdgeIndex idx = 0; idx < cube.edge_count; ++idx) {
        const EdgeRef e = edge_from_index(n, idx);
        edges.emplace_back(static_cast<int>(e.canonical_vertex),
                           static_cast<int>(other_endpoint(e)));
    }
    return make_edge_ordered_graph(static_cast<int>(cube.vertex_count), std::move(edges));
}

EdgeOrderedGraph h2_counterexample_ordering() {
    // vertices encode coordinates as bits: 00 -> 0, 10 -> 1, 01 -> 2, 11 -> 3
    return make_edge_ordered_graph(4, {{0, 2}, {0, 1}, {1, 3}, {2, 3}});
}

H2ClaimReport h2_claim_report() {
    H2ClaimReport report;
    report.census = census_for_ordering(h2_counterexample_ordering(), 2);
    report.claim_holds = report.census.distinguishing == 0;
    return report;
}

} // namespace cubepal
