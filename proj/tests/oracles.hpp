#pragma once

// Brute-force reference implementations. They deliberately share no code
// with the library: adjacency is recomputed from raw coordinates and every
// count enumerates tuples directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "udlab/constructions.hpp"
#include "udlab/udgraph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<char>>;

inline Adj sphere_adjacency(const std::vector<udlab::Direction>& pts)
{
    const std::size_t n = pts.size();
    Adj a(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            udlab::BigInt d = pts[i].a() * pts[j].a() + pts[i].b() * pts[j].b() + pts[i].c() * pts[j].c();
            a[i][j] = d == 0;
        }
    return a;
}

inline Adj adjacency_of(const udlab::UnitDistanceGraph& g)
{
    const std::size_t n = g.vertex_count();
    Adj a(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = 1;
    return a;
}

inline Adj random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Adj a(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            a[i][j] = a[j][i] = coin(rng);
    return a;
}

inline udlab::UnitDistanceGraph to_graph(const Adj& a)
{
    udlab::UnitDistanceGraph g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i][j])
                g.add_edge(i, j);
    return g;
}

// Visits every sequence of k distinct vertices (no adjacency pruning).
inline void for_each_tuple(std::size_t n, int k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> t;
    std::vector<char> used(n, 0);
    std::function<void()> rec = [&] {
        if (static_cast<int>(t.size()) == k) {
            f(t);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            t.push_back(v);
            rec();
            t.pop_back();
            used[v] = 0;
        }
    };
    rec();
}

inline bool is_path(const Adj& a, const std::vector<std::size_t>& t)
{
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (!a[t[i]][t[i + 1]])
            return false;
    return true;
}

inline std::uint64_t ordered_paths(const Adj& a, int k)
{
    std::uint64_t c = 0;
    for_each_tuple(a.size(), k, [&](const auto& t) { c += is_path(a, t); });
    return c;
}

inline std::uint64_t antipodal_free_unordered(const Adj& a, const std::vector<long>& antipode, int k)
{
    std::uint64_t c = 0;
    for_each_tuple(a.size(), k, [&](const auto& t) {
        if (!is_path(a, t))
            return;
        for (std::size_t i = 0; i + 2 < t.size(); ++i)
            if (antipode[t[i]] == static_cast<long>(t[i + 2]))
                return;
        ++c;
    });
    return k >= 2 ? c / 2 : c;
}

// Cycles as vertex subsets with a Hamiltonian cyclic order, up to dihedral symmetry.
inline std::uint64_t cycles(const Adj& a, int k)
{
    std::uint64_t closed = 0;
    for_each_tuple(a.size(), k, [&](const auto& t) { closed += is_path(a, t) && a[t.back()][t.front()]; });
    return closed / (2 * k);
}

// Labelled embeddings of the pattern (edge list on k vertices).
inline std::uint64_t embeddings(const Adj& a, int k, const std::vector<std::pair<int, int>>& edges, bool induced)
{
    std::vector<std::vector<char>> pe(k, std::vector<char>(k, 0));
    for (auto [u, v] : edges)
        pe[u][v] = pe[v][u] = 1;
    std::uint64_t c = 0;
    for_each_tuple(a.size(), k, [&](const auto& t) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool ge = pe[i][j], he = a[t[i]][t[j]];
                if ((ge && !he) || (induced && !ge && he))
                    return;
            }
        ++c;
    });
    return c;
}

// Tuples following the pattern of a sphere configuration, checked slot by
// slot against labels and designated successors.
inline std::uint64_t pattern_paths(const udlab::SphereConfig& cfg)
{
    using Role = udlab::PatternSlot::Role;
    using udlab::LabelKind;
    const auto& pat = *cfg.pattern;
    Adj a = sphere_adjacency(cfg.points);
    const int k = static_cast<int>(pat.slots.size());
    auto fits = [&](std::size_t v, const udlab::PatternSlot& s) {
        const auto& l = cfg.labels[v];
        switch (s.role) {
        case Role::FreeQ:
        case Role::ChainQ:
            return l.kind == LabelKind::Q && l.circle == s.circle;
        case Role::North:
            return l.kind == LabelKind::North && l.circle == s.circle;
        case Role::South:
            return l.kind == LabelKind::South && l.circle == s.circle;
        case Role::RichFree:
        case Role::RichAdj:
            return l.kind == LabelKind::Rich;
        case Role::Closure:
            return l.kind == (s.closure_in_q ? LabelKind::Q : LabelKind::Closure) && l.circle == s.circle;
        }
        return false;
    };
    // Slot-by-slot scan over all vertices; constraints checked as each slot is filled.
    std::vector<std::size_t> t;
    std::vector<char> used(cfg.size(), 0);
    std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
        const int i = static_cast<int>(t.size());
        if (i == k)
            return !pat.closed || a[t.back()][t.front()];
        std::uint64_t c = 0;
        for (std::size_t v = 0; v < cfg.size(); ++v) {
            if (used[v] || !fits(v, pat.slots[i]))
                continue;
            if (i > 0 && !a[t[i - 1]][v])
                continue;
            if (pat.slots[i].role == Role::ChainQ && cfg.designated[t[i - 1]] != v)
                continue;
            if (pat.slots[i].role == Role::Closure && cfg.closing[t[0]] != v)
                continue;
            used[v] = 1;
            t.push_back(v);
            c += rec();
            t.pop_back();
            used[v] = 0;
        }
        return c;
    };
    return rec();
}

// Minimum of c.x over {A x >= b, x >= 0} by trying every choice of n tight
// constraints among the m rows and the n bounds. Empty if infeasible.
inline std::optional<udlab::Rational> lp_min_by_vertices(const std::vector<std::vector<udlab::Rational>>& A,
                                                         const std::vector<udlab::Rational>& b,
                                                         const std::vector<udlab::Rational>& c)
{
    using udlab::Rational;
    const std::size_t n = c.size(), m = A.size();
    // constraint t < m is row t, otherwise x_{t-m} >= 0
    auto coeff = [&](std::size_t t, std::size_t j) -> Rational {
        return t < m ? A[t][j] : Rational(t - m == j ? 1 : 0);
    };
    std::optional<Rational> best;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == n) {
            std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t j = 0; j < n; ++j)
                    M[r][j] = coeff(pick[r], j);
                M[r][n] = pick[r] < m ? b[pick[r]] : Rational(0);
            }
            for (std::size_t col = 0; col < n; ++col) {
                std::size_t p = col;
                while (p < n && M[p][col] == 0)
                    ++p;
                if (p == n)
                    return;  // singular
                std::swap(M[p], M[col]);
                for (std::size_t r = 0; r < n; ++r)
                    if (r != col && M[r][col] != 0) {
                        Rational f = M[r][col] / M[col][col];
                        for (std::size_t j = col; j <= n; ++j)
                            M[r][j] -= f * M[col][j];
                    }
            }
            std::vector<Rational> x(n);
            for (std::size_t j = 0; j < n; ++j) {
                x[j] = M[j][n] / M[j][j];
                if (x[j] < 0)
                    return;
            }
            for (std::size_t r = 0; r < m; ++r) {
                Rational lhs = 0;
                for (std::size_t j = 0; j < n; ++j)
                    lhs += A[r][j] * x[j];
                if (lhs < b[r])
                    return;
            }
            Rational v = 0;
            for (std::size_t j = 0; j < n; ++j)
                v += c[j] * x[j];
            if (!best || v < *best)
                best = v;
            return;
        }
        for (std::size_t t = from; t < m + n; ++t) {
            pick.push_back(t);
            rec(t + 1);
            pick.pop_back();
        }
    };
    if (n == 0)
        return Rational(0);
    rec(0);
    return best;
}

// The five realizability observations, checked edge by edge.
inline bool realizable(int k, const std::vector<std::pair<int, int>>& edges, std::uint32_t H,
                       const std::vector<int>& lambda)
{
    std::vector<int> deg(k, 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (H >> e & 1u) {
            ++deg[edges[e].first];
            ++deg[edges[e].second];
        }
    for (int i = 0; i < k; ++i) {
        if (lambda[i] == 3 && deg[i] != 0)
            return false;
        if (lambda[i] == 2 && deg[i] != 1)
            return false;
        if (lambda[i] == 0 && deg[i] != 3)
            return false;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        for (int t = 0; t < 2; ++t, std::swap(u, v)) {
            if (H >> e & 1u) {
                if ((lambda[u] == 1 || lambda[u] == 2) && lambda[v] != 0)
                    return false;
            } else if (deg[u] == 0 && lambda[v] == 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace oracle
