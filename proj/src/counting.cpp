#include "udlab/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>

namespace udlab {

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 x)
{
    BigInt hi = static_cast<std::uint64_t>(x >> 64);
    BigInt lo = static_cast<std::uint64_t>(x);
    return (hi << 64) | lo;
}

// Runs task(i) for i in [0, tasks) on a worker pool; the sum does not depend
// on the schedule.
BigInt parallel_sum(std::size_t tasks, unsigned threads, const std::function<u128(std::size_t)>& task)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
    std::vector<u128> partial(tasks, 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks;)
            partial[i] = task(i);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    BigInt total = 0;
    for (auto x : partial)
        total += to_big(x);
    return total;
}

// Indices strictly above i, built word-wise.
void fill_above(VertexSet& s, std::size_t i)
{
    auto* w = s.words();
    const std::size_t n = s.size();
    for (std::size_t k = 0; k < s.word_count(); ++k)
        w[k] = 0;
    std::size_t first = i + 1;
    if (first >= n)
        return;
    std::size_t wi = first >> 6;
    w[wi] = ~std::uint64_t{0} << (first & 63);
    for (std::size_t k = wi + 1; k < s.word_count(); ++k)
        w[k] = ~std::uint64_t{0};
    if (n % 64)
        w[s.word_count() - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
}

// dst = a & ~b
inline void and_not(VertexSet& dst, const VertexSet& a, const VertexSet& b)
{
    auto* d = dst.words();
    const auto* x = a.words();
    const auto* y = b.words();
    for (std::size_t i = 0; i < dst.word_count(); ++i)
        d[i] = x[i] & ~y[i];
}

inline std::size_t count_and_not(const VertexSet& a, const VertexSet& b)
{
    std::size_t c = 0;
    const auto* x = a.words();
    const auto* y = b.words();
    for (std::size_t i = 0; i < a.word_count(); ++i)
        c += std::popcount(x[i] & ~y[i]);
    return c;
}

inline std::size_t count_and_and_not(const VertexSet& a, const VertexSet& b, const VertexSet& m)
{
    std::size_t c = 0;
    const auto* x = a.words();
    const auto* y = b.words();
    const auto* z = m.words();
    for (std::size_t i = 0; i < a.word_count(); ++i)
        c += std::popcount(x[i] & y[i] & ~z[i]);
    return c;
}

void require_k(int k, std::size_t n, int min_k)
{
    if (k < min_k)
        throw Error("k must be at least " + std::to_string(min_k) + ", got " + std::to_string(k));
    (void)n;
}

// ---- naive engine: plain DFS over neighbour lists ----

struct NaiveWalker {
    const UnitDistanceGraph& g;
    int k;
    std::vector<char> used;
    std::vector<std::size_t> seq;

    NaiveWalker(const UnitDistanceGraph& graph, int kk) : g(graph), k(kk), used(graph.vertex_count(), 0) {}

    // Calls leaf(seq) on every ordered path from `start`.
    template <typename Leaf>
    u128 walk(std::size_t start, Leaf&& leaf)
    {
        seq.assign(1, start);
        used[start] = 1;
        u128 c = rec(leaf);
        used[start] = 0;
        return c;
    }

    template <typename Leaf>
    u128 rec(Leaf& leaf)
    {
        if (static_cast<int>(seq.size()) == k)
            return leaf(seq) ? 1 : 0;
        u128 c = 0;
        for (std::size_t w : g.neighbor_list(seq.back())) {
            if (used[w])
                continue;
            used[w] = 1;
            seq.push_back(w);
            c += rec(leaf);
            seq.pop_back();
            used[w] = 0;
        }
        return c;
    }
};

bool antipodal_free(const UnitDistanceGraph& g, const std::vector<std::size_t>& s)
{
    for (std::size_t i = 0; i + 2 < s.size(); ++i)
        if (g.antipode(s[i]) == static_cast<long>(s[i + 2]))
            return false;
    return true;
}

BigInt naive_ordered(const UnitDistanceGraph& g, int k, unsigned threads, bool af)
{
    return parallel_sum(g.vertex_count(), threads, [&](std::size_t s) {
        NaiveWalker w(g, k);
        return w.walk(s, [&](const std::vector<std::size_t>& seq) { return !af || antipodal_free(g, seq); });
    });
}

BigInt naive_cycles(const UnitDistanceGraph& g, int k, unsigned threads)
{
    BigInt closed = parallel_sum(g.vertex_count(), threads, [&](std::size_t s) {
        NaiveWalker w(g, k);
        return w.walk(s, [&](const std::vector<std::size_t>& seq) { return g.adjacent(seq.back(), seq.front()); });
    });
    return closed / (2 * k);
}

// ---- optimized engine: bit-set DFS, popcount at the last level ----

struct BitWalker {
    const UnitDistanceGraph& g;
    int k;
    bool af;
    VertexSet visited;
    std::vector<VertexSet> cand;
    std::vector<std::size_t> path;

    BitWalker(const UnitDistanceGraph& graph, int kk, bool antipodal_filter)
        : g(graph), k(kk), af(antipodal_filter), visited(graph.vertex_count()),
          cand(std::max(kk, 1), VertexSet(graph.vertex_count()))
    {
    }

    u128 from(std::size_t s)
    {
        if (k == 1)
            return 1;
        visited.set(s);
        path.assign(1, s);
        u128 c = rec(s, -1, 1);
        visited.reset(s);
        return c;
    }

    // `depth` vertices placed, last one v, the one before it prev.
    u128 rec(std::size_t v, long prev, int depth)
    {
        long banned = af && prev >= 0 ? g.antipode(static_cast<std::size_t>(prev)) : -1;
        if (depth == k - 1) {
            std::size_t c = count_and_not(g.neighbors(v), visited);
            if (banned >= 0 && g.adjacent(v, banned) && !visited.test(banned))
                --c;
            return c;
        }
        VertexSet& cs = cand[depth];
        and_not(cs, g.neighbors(v), visited);
        if (banned >= 0)
            cs.reset(banned);
        if (depth == k - 2)
            return last_two(v, cs);
        u128 c = 0;
        cs.for_each([&](std::size_t w) {
            visited.set(w);
            path.push_back(w);
            c += rec(w, static_cast<long>(v), depth + 1);
            path.pop_back();
            visited.reset(w);
        });
        return c;
    }

    // Sum over w in C of |N(w) \ (visited + w)|, minus the antipode of v when
    // filtering: sum of degrees less the edges from the path into C.
    u128 last_two(std::size_t v, const VertexSet& cs)
    {
        u128 c = 0;
        cs.for_each([&](std::size_t w) { c += g.degree(w); });
        for (std::size_t u : path)
            c -= intersection_count(g.neighbors(u), cs);
        if (af) {
            long a = g.antipode(v);
            if (a >= 0 && !visited.test(static_cast<std::size_t>(a)))
                c -= intersection_count(g.neighbors(static_cast<std::size_t>(a)), cs);
        }
        return c;
    }
};

BigInt optimized_ordered(const UnitDistanceGraph& g, int k, unsigned threads, bool af)
{
    return parallel_sum(g.vertex_count(), threads, [&](std::size_t s) {
        BitWalker w(g, k, af);
        return w.from(s);
    });
}

// Relabels vertices by decreasing degree, so that hubs become cycle start
// vertices early and are excluded from the later searches.
UnitDistanceGraph degree_ordered(const UnitDistanceGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r)
        rank[order[r]] = r;
    UnitDistanceGraph h(n, g.source());
    for (auto [u, v] : g.edges())
        h.add_edge(rank[u], rank[v]);
    return h;
}

struct CycleWalker {
    const UnitDistanceGraph& g;
    int k;
    VertexSet visited, above_start, closing;
    std::vector<VertexSet> cand;

    CycleWalker(const UnitDistanceGraph& graph, int kk)
        : g(graph), k(kk), visited(graph.vertex_count()), above_start(graph.vertex_count()),
          closing(graph.vertex_count()), cand(kk, VertexSet(graph.vertex_count()))
    {
    }

    // Cycles whose smallest vertex is s, with p_2 < p_k.
    u128 from(std::size_t s)
    {
        fill_above(above_start, s);
        // visited doubles as the exclusion mask: everything <= s is out.
        visited.fill();
        visited.subtract(above_start);
        VertexSet firsts = g.neighbors(s);
        firsts &= above_start;
        u128 c = 0;
        firsts.for_each([&](std::size_t p2) {
            fill_above(closing, p2);
            closing &= g.neighbors(s);
            visited.set(p2);
            c += rec(p2, 2);
            visited.reset(p2);
        });
        return c;
    }

    u128 rec(std::size_t v, int depth)
    {
        if (depth == k - 1)
            return count_and_and_not(g.neighbors(v), closing, visited);
        VertexSet& cs = cand[depth];
        and_not(cs, g.neighbors(v), visited);
        if (depth == k - 2) {
            // Each unvisited closing vertex x closes through every w in C adjacent to it.
            u128 c = 0;
            const auto* cw = closing.words();
            const auto* vw = visited.words();
            for (std::size_t i = 0; i < closing.word_count(); ++i) {
                std::uint64_t x = cw[i] & ~vw[i];
                while (x) {
                    std::size_t u = i * 64 + static_cast<std::size_t>(std::countr_zero(x));
                    c += intersection_count(g.neighbors(u), cs);
                    x &= x - 1;
                }
            }
            return c;
        }
        u128 c = 0;
        cs.for_each([&](std::size_t w) {
            visited.set(w);
            c += rec(w, depth + 1);
            visited.reset(w);
        });
        return c;
    }
};

BigInt optimized_cycles(const UnitDistanceGraph& g, int k, unsigned threads)
{
    UnitDistanceGraph h = degree_ordered(g);
    return parallel_sum(h.vertex_count(), threads, [&](std::size_t s) {
        CycleWalker w(h, k);
        return w.from(s);
    });
}

}  // namespace

std::string to_string(Engine e)
{
    return e == Engine::Naive ? "naive" : "optimized";
}

Engine parse_engine(const std::string& s)
{
    if (s == "naive")
        return Engine::Naive;
    if (s == "optimized")
        return Engine::Optimized;
    throw Error("unknown engine '" + s + "'");
}

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("UDLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

BigInt count_antipodal_free_paths(const UnitDistanceGraph& g, int k, const CountOptions& opts)
{
    require_k(k, g.vertex_count(), 1);
    if (!g.has_antipodal_data())
        throw Error("graph carries no antipodal data");
    unsigned t = resolve_threads(opts.threads);
    BigInt ordered = opts.engine == Engine::Naive ? naive_ordered(g, k, t, true) : optimized_ordered(g, k, t, true);
    return k >= 2 ? BigInt(ordered / 2) : ordered;
}

BigInt count_cycles(const UnitDistanceGraph& g, int k, const CountOptions& opts)
{
    require_k(k, g.vertex_count(), 3);
    unsigned t = resolve_threads(opts.threads);
    return opts.engine == Engine::Naive ? naive_cycles(g, k, t) : optimized_cycles(g, k, t);
}

CountReport count_paths(const UnitDistanceGraph& g, int k, const CountOptions& opts)
{
    require_k(k, g.vertex_count(), 1);
    unsigned t = resolve_threads(opts.threads);
    CountReport r;
    r.k = k;
    r.engine = opts.engine;
    r.ordered_paths =
        opts.engine == Engine::Naive ? naive_ordered(g, k, t, false) : optimized_ordered(g, k, t, false);
    r.unordered_paths = k >= 2 ? BigInt(r.ordered_paths / 2) : r.ordered_paths;
    if (opts.with_antipodal_free && g.has_antipodal_data())
        r.antipodal_free_unordered = count_antipodal_free_paths(g, k, opts);
    if (opts.with_cycles && k >= 3)
        r.cycles_dihedral = count_cycles(g, k, opts);
    return r;
}

// ---- designated patterns ----

BigInt count_pattern_paths(const SphereConfig& config, int k)
{
    return count_pattern_paths(config, build_sphere_graph(config), k);
}

BigInt count_pattern_paths(const SphereConfig& config, const UnitDistanceGraph& g, int k)
{
    if (!config.pattern)
        throw Error("configuration carries no designated pattern");
    const Pattern& pat = *config.pattern;
    if (static_cast<int>(pat.slots.size()) != k)
        throw Error("pattern has " + std::to_string(pat.slots.size()) + " slots, asked for k = " +
                    std::to_string(k));
    if (g.vertex_count() != config.size())
        throw Error("graph does not match configuration");
    const std::size_t n = config.size();

    using Role = PatternSlot::Role;
    std::vector<VertexSet> pool(k, VertexSet(n));
    for (int i = 0; i < k; ++i) {
        const auto& s = pat.slots[i];
        LabelKind kind = LabelKind::Q;
        switch (s.role) {
        case Role::FreeQ:
        case Role::ChainQ:
            kind = LabelKind::Q;
            break;
        case Role::North:
            kind = LabelKind::North;
            break;
        case Role::South:
            kind = LabelKind::South;
            break;
        case Role::RichFree:
        case Role::RichAdj:
            kind = LabelKind::Rich;
            break;
        case Role::Closure:
            kind = s.closure_in_q ? LabelKind::Q : LabelKind::Closure;
            break;
        }
        for (auto v : config.indices_with(kind, kind == LabelKind::Rich ? -1 : s.circle))
            pool[i].set(v);
    }

    VertexSet used(n);
    std::vector<VertexSet> cand(k, VertexSet(n));
    std::vector<std::size_t> seq(k);
    std::function<u128(int)> rec = [&](int i) -> u128 {
        if (i == k)
            return 1;
        VertexSet& cs = cand[i];
        cs = pool[i];
        cs.subtract(used);
        if (i > 0)
            cs &= g.neighbors(seq[i - 1]);
        if (pat.closed && i == k - 1 && k > 2)
            cs &= g.neighbors(seq[0]);
        if (pat.slots[i].role == Role::ChainQ || pat.slots[i].role == Role::Closure) {
            auto d = pat.slots[i].role == Role::ChainQ ? config.designated.at(seq[i - 1]) : config.closing.at(seq[0]);
            bool ok = d && cs.test(*d);
            cs = VertexSet(n);
            if (ok)
                cs.set(*d);
        }
        u128 c = 0;
        cs.for_each([&](std::size_t v) {
            seq[i] = v;
            used.set(v);
            c += rec(i + 1);
            used.reset(v);
        });
        return c;
    };
    return to_big(rec(0));
}

BigInt falling_factorial(long n, long r)
{
    BigInt out = 1;
    for (long i = 0; i < r; ++i) {
        if (n - i <= 0)
            return 0;
        out *= n - i;
    }
    return out;
}

BigInt closed_form_pattern_count(const Pattern& pattern, const std::vector<std::size_t>& q_sizes,
                                 const std::optional<BigInt>& rich_pairs)
{
    using Role = PatternSlot::Role;
    std::vector<long> forced(q_sizes.size(), 0), free(q_sizes.size(), 0);
    for (const auto& s : pattern.slots) {
        bool in_q = s.role == Role::FreeQ || s.role == Role::ChainQ || (s.role == Role::Closure && s.closure_in_q);
        if (!in_q)
            continue;
        if (s.circle < 0 || static_cast<std::size_t>(s.circle) >= q_sizes.size())
            throw Error("pattern uses circle " + std::to_string(s.circle) + " beyond the given sizes");
        (s.role == Role::FreeQ ? free : forced)[s.circle]++;
    }
    BigInt out = 1;
    for (std::size_t c = 0; c < q_sizes.size(); ++c)
        out *= falling_factorial(static_cast<long>(q_sizes[c]) - forced[c], free[c]);
    if (pattern.has_rich_prefix()) {
        if (!rich_pairs)
            throw Error("pattern has a rich prefix but no orthogonal-pair count was given");
        out *= 2 * *rich_pairs;
    }
    return out;
}

BigInt closed_form_pattern_count(int k, long q, const std::optional<BigInt>& rich_pairs)
{
    Pattern p = rich_pairs ? enhanced_path_pattern(k) : path_pattern(k);
    std::vector<std::size_t> sizes(p.circles_used(), static_cast<std::size_t>(q));
    return closed_form_pattern_count(p, sizes, rich_pairs);
}

BigInt leading_pattern_term(const Pattern& pattern, long q, const std::optional<BigInt>& rich_pairs)
{
    BigInt out = pow(BigInt(q), static_cast<unsigned>(pattern.free_slots()));
    if (pattern.has_rich_prefix())
        out *= rich_pairs.value_or(1);
    return out;
}

// ---- fixed pattern graphs ----

namespace {

struct EmbedPlan {
    std::vector<int> order;                 // G vertices in placement order
    std::vector<std::vector<int>> back;     // earlier positions adjacent in G
    std::vector<std::vector<int>> nonback;  // earlier positions not adjacent
};

EmbedPlan plan_for(const RegularGraphSpec& G)
{
    std::vector<std::vector<char>> adj(G.k, std::vector<char>(G.k, 0));
    for (auto [u, v] : G.edges)
        adj[u][v] = adj[v][u] = 1;
    EmbedPlan p;
    std::vector<char> placed(G.k, 0);
    for (int step = 0; step < G.k; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < G.k; ++v) {
            if (placed[v])
                continue;
            int links = 0;
            for (int u : p.order)
                links += adj[u][v];
            if (links > best_links) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = 1;
        std::vector<int> b, nb;
        for (std::size_t pos = 0; pos < p.order.size(); ++pos)
            (adj[p.order[pos]][best] ? b : nb).push_back(static_cast<int>(pos));
        p.order.push_back(best);
        p.back.push_back(std::move(b));
        p.nonback.push_back(std::move(nb));
    }
    return p;
}

}  // namespace

BigInt count_embeddings(const UnitDistanceGraph& g, const RegularGraphSpec& G, bool induced, unsigned threads)
{
    if (!G.is_simple())
        throw Error("pattern graph is not simple");
    const std::size_t n = g.vertex_count();
    if (G.k == 0)
        return 1;
    if (static_cast<std::size_t>(G.k) > n)
        return 0;
    EmbedPlan plan = plan_for(G);
    const int k = G.k;
    return parallel_sum(n, resolve_threads(threads), [&](std::size_t s) -> u128 {
        VertexSet used(n);
        std::vector<VertexSet> cand(k, VertexSet(n));
        std::vector<std::size_t> img(k);
        std::function<u128(int)> rec = [&](int i) -> u128 {
            if (i == k)
                return 1;
            VertexSet& cs = cand[i];
            cs.fill();
            cs.subtract(used);
            for (int pos : plan.back[i])
                cs &= g.neighbors(img[pos]);
            if (induced)
                for (int pos : plan.nonback[i])
                    cs.subtract(g.neighbors(img[pos]));
            if (i == k - 1)
                return cs.count();
            u128 c = 0;
            cs.for_each([&](std::size_t v) {
                img[i] = v;
                used.set(v);
                c += rec(i + 1);
                used.reset(v);
            });
            return c;
        };
        img[0] = s;
        used.set(s);
        return rec(1);
    });
}

BigInt automorphism_count(const RegularGraphSpec& G)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (auto [u, v] : G.edges)
        e.emplace_back(u, v);
    return count_embeddings(UnitDistanceGraph::from_edges(G.k, e), G, true, 1);
}

BigInt count_subgraph_copies(const UnitDistanceGraph& g, const RegularGraphSpec& G, bool induced, unsigned threads)
{
    return count_embeddings(g, G, induced, threads) / automorphism_count(G);
}

BigInt count_prescribed_copies(const UnitDistanceGraph& mg, const RegularGraphSpec& G, unsigned threads)
{
    if (!G.is_simple())
        throw Error("pattern graph is not simple");
    if (!mg.part_assignment())
        throw Error("graph has no part assignment");
    if (mg.part_count() != static_cast<std::size_t>(G.k))
        throw Error("graph has " + std::to_string(mg.part_count()) + " parts, pattern has " +
                    std::to_string(G.k) + " vertices");
    const std::size_t n = mg.vertex_count();
    std::vector<VertexSet> part(G.k, VertexSet(n));
    std::size_t max_id = 0;
    for (std::size_t v = 0; v < n; ++v) {
        part[(*mg.part_assignment())[v]].set(v);
        max_id = std::max(max_id, mg.point_id(v));
    }
    EmbedPlan plan = plan_for(G);
    const int k = G.k;
    std::vector<std::size_t> roots = part[plan.order[0]].to_vector();
    return parallel_sum(roots.size(), resolve_threads(threads), [&](std::size_t r) -> u128 {
        std::vector<char> id_used(max_id + 1, 0);
        std::vector<VertexSet> cand(k, VertexSet(n));
        std::vector<std::size_t> img(k);
        std::function<u128(int)> rec = [&](int i) -> u128 {
            if (i == k)
                return 1;
            VertexSet& cs = cand[i];
            cs = part[plan.order[i]];
            for (int pos : plan.back[i])
                cs &= mg.neighbors(img[pos]);
            u128 c = 0;
            cs.for_each([&](std::size_t v) {
                std::size_t id = mg.point_id(v);
                if (id_used[id])
                    return;
                img[i] = v;
                id_used[id] = 1;
                c += rec(i + 1);
                id_used[id] = 0;
            });
            return c;
        };
        img[0] = roots[r];
        id_used[mg.point_id(roots[r])] = 1;
        return rec(1);
    });
}

}  // namespace udlab
