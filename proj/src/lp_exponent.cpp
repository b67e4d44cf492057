#include "udlab/lp_exponent.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "udlab/counting.hpp"

namespace udlab {

// ---------------------------------------------------------------------------
// Simplex

LPSolution solve_covering_lp(const CoveringLP& lp)
{
    const std::size_t m = lp.A.size();   // primal rows = dual variables
    const std::size_t n = lp.c.size();   // primal variables = dual rows
    if (lp.b.size() != m)
        throw Error("covering LP: b has the wrong length");
    for (const auto& row : lp.A)
        if (row.size() != n)
            throw Error("covering LP: ragged constraint matrix");
    for (const auto& c : lp.c)
        if (c < 0)
            throw Error("covering LP: negative cost");

    // Dual: maximize b.y s.t. A^T y + s = c, y, s >= 0.
    const std::size_t cols = m + n;
    std::vector<std::vector<Rational>> T(n, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            T[j][i] = lp.A[i][j];
        T[j][m + j] = 1;
        T[j][cols] = lp.c[j];
        basis[j] = m + j;
    }
    std::vector<Rational> obj(cols + 1);
    for (std::size_t i = 0; i < m; ++i)
        obj[i] = -lp.b[i];

    LPSolution sol;
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t col = 0; col < cols; ++col)
            if (obj[col] < 0) {
                enter = col;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = n;
        Rational best;
        for (std::size_t r = 0; r < n; ++r) {
            if (T[r][enter] <= 0)
                continue;
            Rational ratio = T[r][cols] / T[r][enter];
            if (leave == n || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == n) {
            // dual unbounded: the primal row `enter` can never be covered
            sol.feasible = false;
            if (enter < m)
                sol.infeasible_row = enter;
            return sol;
        }
        Rational piv = T[leave][enter];
        for (auto& v : T[leave])
            v /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == leave || T[r][enter] == 0)
                continue;
            Rational f = T[r][enter];
            for (std::size_t col = 0; col <= cols; ++col)
                T[r][col] -= f * T[leave][col];
        }
        if (obj[enter] != 0) {
            Rational f = obj[enter];
            for (std::size_t col = 0; col <= cols; ++col)
                obj[col] -= f * T[leave][col];
        }
        basis[leave] = enter;
    }
    sol.feasible = true;
    sol.value = obj[cols];
    sol.y.assign(m, 0);
    for (std::size_t r = 0; r < n; ++r)
        if (basis[r] < m)
            sol.y[basis[r]] = T[r][cols];
    sol.x.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        sol.x[j] = obj[m + j];
    return sol;
}

bool verify_certificate(const CoveringLP& lp, const LPSolution& sol, std::string* why)
{
    auto fail = [&](const std::string& s) {
        if (why)
            *why = s;
        return false;
    };
    if (!sol.feasible)
        return fail("no optimum to certify");
    const std::size_t m = lp.A.size(), n = lp.c.size();
    if (sol.x.size() != n || sol.y.size() != m)
        return fail("certificate has the wrong dimensions");
    Rational cx = 0, by = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sol.x[j] < 0)
            return fail("x_" + std::to_string(j) + " is negative");
        cx += lp.c[j] * sol.x[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j)
            lhs += lp.A[i][j] * sol.x[j];
        if (lhs < lp.b[i])
            return fail("primal row " + std::to_string(i) + " violated");
        if (sol.y[i] < 0)
            return fail("y_" + std::to_string(i) + " is negative");
        by += lp.b[i] * sol.y[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < m; ++i)
            lhs += lp.A[i][j] * sol.y[i];
        if (lhs > lp.c[j])
            return fail("dual row " + std::to_string(j) + " violated");
    }
    if (cx != by || cx != sol.value)
        return fail("primal and dual objectives differ");
    return true;
}

// ---------------------------------------------------------------------------
// Type pairs

std::vector<int> TypePair::h_degrees() const
{
    std::vector<int> d(G.k, 0);
    for (std::size_t e = 0; e < G.edges.size(); ++e)
        if (in_h(e)) {
            ++d[G.edges[e].first];
            ++d[G.edges[e].second];
        }
    return d;
}

std::string TypePair::h_string() const
{
    std::string s = "[";
    bool first = true;
    for (std::size_t e = 0; e < G.edges.size(); ++e)
        if (in_h(e)) {
            if (!first)
                s += ',';
            first = false;
            s += '[' + std::to_string(G.edges[e].first) + ',' + std::to_string(G.edges[e].second) + ']';
        }
    return s + ']';
}

std::string TypePair::lambda_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(lambda[i]);
    }
    return s + ')';
}

namespace {

std::vector<std::vector<int>> neighbours(const RegularGraphSpec& G, std::uint32_t mask, bool in_h)
{
    std::vector<std::vector<int>> nb(G.k);
    for (std::size_t e = 0; e < G.edges.size(); ++e)
        if ((((mask >> e) & 1u) != 0) == in_h) {
            nb[G.edges[e].first].push_back(G.edges[e].second);
            nb[G.edges[e].second].push_back(G.edges[e].first);
        }
    return nb;
}

}  // namespace

Realizability is_realizable(const TypePair& tp)
{
    Realizability r;
    auto bad = [&](char rule, int v, std::string detail) {
        r.ok = false;
        r.violations.push_back({rule, v, std::move(detail)});
    };
    const int k = tp.G.k;
    if (static_cast<int>(tp.lambda.size()) != k) {
        bad('w', -1, "lambda has " + std::to_string(tp.lambda.size()) + " entries for " + std::to_string(k) + " vertices");
        return r;
    }
    if (tp.G.edges.size() > 32 || (tp.G.edges.size() < 32 && (tp.H >> tp.G.edges.size()) != 0))
        bad('w', -1, "H is not a subset of E(G)");
    for (int i = 0; i < k; ++i)
        if (tp.lambda[i] < 0 || tp.lambda[i] > 3)
            bad('w', i, "lambda entry outside {0,1,2,3}");
    if (!r.ok)
        return r;

    auto hn = neighbours(tp.G, tp.H, true);
    auto gn = neighbours(tp.G, ~0u, true);
    for (int i = 0; i < k; ++i) {
        const int l = tp.lambda[i];
        const int d = static_cast<int>(hn[i].size());
        if (l == 3 && d != 0)
            bad('1', i, "lambda 3 but H-degree " + std::to_string(d));
        if (l == 2) {
            if (d != 1)
                bad('2', i, "lambda 2 needs exactly one H-neighbour, has " + std::to_string(d));
            else if (tp.lambda[hn[i][0]] != 0)
                bad('2', i, "H-neighbour " + std::to_string(hn[i][0]) + " has lambda " +
                                std::to_string(tp.lambda[hn[i][0]]));
        }
        if (l == 1)
            for (int j : hn[i])
                if (tp.lambda[j] != 0)
                    bad('3', i, "H-neighbour " + std::to_string(j) + " has lambda " + std::to_string(tp.lambda[j]));
        if (d == 0)
            for (int j : gn[i])
                if (tp.lambda[j] < 1)
                    bad('4', i, "isolated in H but G-neighbour " + std::to_string(j) + " has lambda 0");
        if (l == 0 && d != 3)
            bad('5', i, "lambda 0 but H-degree " + std::to_string(d));
    }
    return r;
}

bool realizable(const TypePair& tp)
{
    const int k = tp.G.k;
    if (static_cast<int>(tp.lambda.size()) != k || k > 32 || tp.G.edges.size() > 32 ||
        (tp.G.edges.size() < 32 && (tp.H >> tp.G.edges.size()) != 0))
        return false;
    int deg[32] = {};
    for (std::size_t e = 0; e < tp.G.edges.size(); ++e)
        if (tp.in_h(e)) {
            ++deg[tp.G.edges[e].first];
            ++deg[tp.G.edges[e].second];
        }
    for (int i = 0; i < k; ++i) {
        const int l = tp.lambda[i];
        if (l < 0 || l > 3 || (l == 3 && deg[i] != 0) || (l == 2 && deg[i] != 1) || (l == 0 && deg[i] != 3))
            return false;
    }
    for (std::size_t e = 0; e < tp.G.edges.size(); ++e) {
        const int u = tp.G.edges[e].first, v = tp.G.edges[e].second;
        if (tp.in_h(e)) {
            // (ii), (iii): H-neighbours of lambda 1 or 2 vertices have lambda 0
            if ((tp.lambda[u] == 1 || tp.lambda[u] == 2) && tp.lambda[v] != 0)
                return false;
            if ((tp.lambda[v] == 1 || tp.lambda[v] == 2) && tp.lambda[u] != 0)
                return false;
        } else if ((deg[u] == 0 && tp.lambda[v] == 0) || (deg[v] == 0 && tp.lambda[u] == 0)) {
            return false;
        }
    }
    return true;
}

CoveringLP xi_program(const TypePair& tp)
{
    const int k = tp.G.k;
    CoveringLP lp;
    lp.c.resize(k);
    for (int i = 0; i < k; ++i)
        lp.c[i] = tp.lambda[i];
    auto rest = neighbours(tp.G, tp.H, false);
    for (int i = 0; i < k; ++i) {
        if (tp.lambda[i] == 0)
            continue;  // waived: a lambda-0 part is a single point
        std::vector<Rational> row(k);
        row[i] += tp.lambda[i];
        for (int j : rest[i])
            row[j] += 1;
        lp.A.push_back(std::move(row));
        lp.b.push_back(1);
    }
    return lp;
}

std::vector<Rational> closed_form_x(const TypePair& tp)
{
    auto d = tp.h_degrees();
    std::vector<Rational> x(tp.G.k);
    for (int i = 0; i < tp.G.k; ++i) {
        const int l = tp.lambda[i];
        if (l == 0)
            x[i] = 0;
        else if (d[i] == 0)
            x[i] = Rational(1, 2 * l);
        else
            x[i] = (1 - Rational(3 - d[i], 6)) / l;
    }
    return x;
}

ClassCounts class_counts(const TypePair& tp)
{
    ClassCounts c;
    auto d = tp.h_degrees();
    for (int i = 0; i < tp.G.k; ++i) {
        const int l = tp.lambda[i];
        if (l == 0)
            ++c.k[5];
        if (d[i] == 0)
            ++c.k[0];
        else if (d[i] == 1 && l == 2)
            ++c.k[1];
        else if (d[i] == 3 && l == 1)
            ++c.k[2];
        else if (d[i] == 1 && l == 1)
            ++c.k[3];
        else if (d[i] == 2 && l == 1)
            ++c.k[4];
    }
    const auto& k = c.k;
    c.double_count_identity = 3 * k[5] == k[1] + 3 * k[2] + k[3] + 2 * k[4];
    c.size_identity = 3 * tp.G.k == 3 * k[0] + 4 * k[1] + 6 * k[2] + 4 * k[3] + 5 * k[4];
    c.identities_expected = true;
    for (std::size_t e = 0; e < tp.G.edges.size(); ++e)
        if (tp.in_h(e)) {
            const int zeros = (tp.lambda[tp.G.edges[e].first] == 0) + (tp.lambda[tp.G.edges[e].second] == 0);
            if (zeros != 1)
                c.identities_expected = false;
        }
    c.stated_objective =
        Rational(k[0], 2) + Rational(k[1], 3) + k[2] + Rational(2 * k[3], 3) + Rational(5 * k[4], 6);
    c.derived_objective =
        Rational(k[0], 2) + Rational(2 * k[1], 3) + k[2] + Rational(2 * k[3], 3) + Rational(5 * k[4], 6);
    return c;
}

LPOutcome solve_xi(const TypePair& tp)
{
    LPOutcome out;
    CoveringLP lp = xi_program(tp);
    LPSolution sol = solve_covering_lp(lp);
    out.feasible = sol.feasible;
    if (sol.feasible) {
        out.xi = sol.value;
        out.x_witness = sol.x;
        out.dual = sol.y;
        out.certified = verify_certificate(lp, sol);
    } else if (sol.infeasible_row) {
        // map the LP row back to its vertex
        int row = 0;
        for (int i = 0; i < tp.G.k; ++i)
            if (tp.lambda[i] != 0 && row++ == static_cast<int>(*sol.infeasible_row))
                out.infeasible_vertex = i;
    }
    out.closed_form_x = closed_form_x(tp);
    out.closed_form_feasible = true;
    for (std::size_t r = 0; r < lp.A.size(); ++r) {
        Rational lhs = 0;
        for (int j = 0; j < tp.G.k; ++j)
            lhs += lp.A[r][j] * out.closed_form_x[j];
        if (lhs < lp.b[r])
            out.closed_form_feasible = false;
    }
    out.closed_form_objective = 0;
    for (int i = 0; i < tp.G.k; ++i)
        out.closed_form_objective += tp.lambda[i] * out.closed_form_x[i];
    out.counts = class_counts(tp);
    return out;
}

// ---------------------------------------------------------------------------
// Sweep

bool XiSweepReport::ok() const
{
    return all_within_bound && all_certified && closed_form_always_feasible && closed_form_within_bound &&
           identity_findings.empty() && !counterexample;
}

namespace {

constexpr std::size_t kNoteCap = 20;

std::uint64_t lambda_code(const std::vector<int>& l)
{
    std::uint64_t c = 0;
    for (int v : l)
        c = c * 4 + static_cast<std::uint64_t>(v);
    return c;
}

// true if (xi, h, l) beats the incumbent: larger xi, then smaller H, then larger lambda code
bool better(const Rational& xi, std::uint32_t h, const std::vector<int>& l, const XiSweepReport& r, bool have)
{
    if (!have)
        return true;
    if (xi != r.max_xi)
        return xi > r.max_xi;
    if (h != r.argmax_h)
        return h < r.argmax_h;
    return lambda_code(l) > lambda_code(r.argmax_lambda);
}

struct Partial {
    XiSweepReport r;
    bool have = false;
};

void sweep_h(const RegularGraphSpec& G, std::uint32_t h, Partial& p)
{
    static const std::vector<int> allowed[4] = {{1, 3}, {1, 2}, {1}, {0, 1}};
    TypePair tp{G, h, std::vector<int>(G.k, 0)};
    const auto deg = tp.h_degrees();
    const Rational bound(G.k, 2);
    auto& r = p.r;

    // per-vertex rules first, then the neighbour rules on the full vector
    std::vector<std::size_t> pick(G.k, 0);
    for (;;) {
        for (int i = 0; i < G.k; ++i)
            tp.lambda[i] = allowed[deg[i]][pick[i]];
        if (realizable(tp)) {
            ++r.pairs_realizable;
            LPOutcome o = solve_xi(tp);
            ++r.lp_solved;
            if (!o.feasible || !o.certified)
                r.all_certified = false;
            if (o.feasible) {
                if (o.xi > bound) {
                    r.all_within_bound = false;
                    if (!r.counterexample || h < r.counterexample->H ||
                        (h == r.counterexample->H && lambda_code(tp.lambda) < lambda_code(r.counterexample->lambda)))
                        r.counterexample = tp;
                }
                if (o.xi == o.closed_form_objective)
                    ++r.closed_form_equal;
                if (better(o.xi, h, tp.lambda, r, p.have)) {
                    p.have = true;
                    r.max_xi = o.xi;
                    r.argmax_h = h;
                    r.argmax_lambda = tp.lambda;
                }
            }
            if (!o.closed_form_feasible)
                r.closed_form_always_feasible = false;
            if (o.closed_form_objective > bound)
                r.closed_form_within_bound = false;
            if (o.closed_form_objective != o.counts.stated_objective)
                ++r.stated_objective_mismatch;
            if (o.closed_form_objective != o.counts.derived_objective)
                ++r.derived_objective_mismatch;
            const auto& c = o.counts;
            if (!c.double_count_identity || !c.size_identity) {
                std::string detail = std::string(c.double_count_identity ? "" : "3k_5 != k_1+3k_2+k_3+2k_4 ") +
                                     (c.size_identity ? "" : "k != k_0+4/3k_1+2k_2+4/3k_3+5/3k_4");
                IdentityFinding f{tp.h_string(), tp.lambda_string(), detail};
                if (c.identities_expected)
                    r.identity_findings.push_back(f);
                else {
                    // capped only after the merge so the kept notes do not depend on the worker split
                    r.identity_notes.push_back(f);
                    ++r.identity_notes_total;
                }
            }
        }
        int i = G.k - 1;
        while (i >= 0 && ++pick[i] == allowed[deg[i]].size())
            pick[i--] = 0;
        if (i < 0)
            break;
    }
}

void merge(Partial& into, Partial&& from)
{
    auto& a = into.r;
    auto& b = from.r;
    a.pairs_realizable += b.pairs_realizable;
    a.lp_solved += b.lp_solved;
    a.closed_form_equal += b.closed_form_equal;
    a.stated_objective_mismatch += b.stated_objective_mismatch;
    a.derived_objective_mismatch += b.derived_objective_mismatch;
    a.all_within_bound &= b.all_within_bound;
    a.all_certified &= b.all_certified;
    a.closed_form_always_feasible &= b.closed_form_always_feasible;
    a.closed_form_within_bound &= b.closed_form_within_bound;
    a.identity_findings.insert(a.identity_findings.end(), b.identity_findings.begin(), b.identity_findings.end());
    a.identity_notes.insert(a.identity_notes.end(), b.identity_notes.begin(), b.identity_notes.end());
    a.identity_notes_total += b.identity_notes_total;
    if (b.counterexample &&
        (!a.counterexample || b.counterexample->H < a.counterexample->H ||
         (b.counterexample->H == a.counterexample->H &&
          lambda_code(b.counterexample->lambda) < lambda_code(a.counterexample->lambda))))
        a.counterexample = b.counterexample;
    if (from.have && better(b.max_xi, b.argmax_h, b.argmax_lambda, a, into.have)) {
        into.have = true;
        a.max_xi = b.max_xi;
        a.argmax_h = b.argmax_h;
        a.argmax_lambda = b.argmax_lambda;
    }
}

}  // namespace

XiSweepReport verify_xi_bound(const RegularGraphSpec& G, unsigned threads)
{
    if (!G.is_simple() || !G.is_regular(3))
        throw Error("the sweep needs a simple 3-regular graph");
    if (G.k > 10)
        throw Error("the sweep is limited to 10 vertices, got " + std::to_string(G.k));

    const std::uint32_t subsets = 1u << G.edges.size();
    const unsigned workers = std::min<unsigned>(resolve_threads(threads), subsets);
    std::atomic<std::uint32_t> next{0};
    std::vector<Partial> parts(workers);
    auto work = [&](Partial& p) {
        for (std::uint32_t h; (h = next.fetch_add(1)) < subsets;)
            sweep_h(G, h, p);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work, std::ref(parts[t]));
    work(parts[0]);
    for (auto& t : pool)
        t.join();

    Partial all;
    for (auto& p : parts)
        merge(all, std::move(p));
    XiSweepReport r = std::move(all.r);
    r.k = G.k;
    r.bound = Rational(G.k, 2);
    r.h_subsets = subsets;
    // order-independent output
    auto key = [](const IdentityFinding& f) { return std::tie(f.H, f.lambda); };
    auto by_key = [&](const IdentityFinding& a, const IdentityFinding& b) { return key(a) < key(b); };
    std::sort(r.identity_findings.begin(), r.identity_findings.end(), by_key);
    std::sort(r.identity_notes.begin(), r.identity_notes.end(), by_key);
    if (r.identity_notes.size() > kNoteCap)
        r.identity_notes.resize(kNoteCap);
    r.argmax_h_string = TypePair{G, r.argmax_h, r.argmax_lambda}.h_string();
    return r;
}

RegularGraphSpec cube_graph()
{
    RegularGraphSpec g{8, {}};
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b)))
                g.edges.emplace_back(v, v ^ (1 << b));
    return g;
}

RegularGraphSpec wagner_graph()
{
    RegularGraphSpec g = RegularGraphSpec::cycle(8);
    for (int i = 0; i < 4; ++i)
        g.edges.emplace_back(i, i + 4);
    return g;
}

RegularGraphSpec petersen_graph()
{
    RegularGraphSpec g{10, {}};
    for (int i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);
        g.edges.emplace_back(i, i + 5);
        g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Base case

BaseCaseReport base_case_check(const RegularGraphSpec& G, const std::vector<std::vector<R3Point>>& parts,
                               const std::vector<Rational>& squared_lengths)
{
    BaseCaseReport r;
    if (static_cast<int>(parts.size()) != G.k) {
        r.failure = "expected " + std::to_string(G.k) + " parts, got " + std::to_string(parts.size());
        return r;
    }
    if (!squared_lengths.empty() && squared_lengths.size() != G.edges.size()) {
        r.failure = "one squared length per edge of G is required";
        return r;
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].empty()) {
            r.failure = "part " + std::to_string(i) + " is empty";
            return r;
        }
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        const auto [i, j] = G.edges[e];
        const Rational len = squared_lengths.empty() ? Rational(1) : squared_lengths[e];
        for (std::size_t a = 0; a < parts[i].size(); ++a)
            for (std::size_t b = 0; b < parts[j].size(); ++b)
                if (squared_distance_r3(parts[i][a], parts[j][b]) != len) {
                    r.failure = "edge (" + std::to_string(i) + "," + std::to_string(j) + "): point " +
                                std::to_string(a) + " of part " + std::to_string(i) + " and point " +
                                std::to_string(b) + " of part " + std::to_string(j) + " are at squared distance " +
                                to_string(squared_distance_r3(parts[i][a], parts[j][b])) + ", not " + to_string(len);
                    return r;
                }
    }
    r.precondition = true;
    for (const auto& p : parts)
        r.small_parts += p.size() <= 2;
    r.holds = 2 * r.small_parts >= G.k;
    return r;
}

}  // namespace udlab
