#include "udlab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace udlab {

std::string PointLabel::to_string() const
{
    switch (kind) {
    case LabelKind::Q:
        return "Q(" + std::to_string(circle) + ")";
    case LabelKind::North:
        return "N(" + std::to_string(circle) + ")";
    case LabelKind::South:
        return "S(" + std::to_string(circle) + ")";
    case LabelKind::Closure:
        return "A(" + std::to_string(circle) + ")";
    case LabelKind::Rich:
        return "RICH";
    }
    return "?";
}

PointLabel PointLabel::parse(const std::string& s)
{
    if (s == "RICH")
        return {LabelKind::Rich, -1};
    if (s.size() < 4 || s[1] != '(' || s.back() != ')')
        throw Error("bad point label '" + s + "'");
    int circle = 0;
    try {
        circle = std::stoi(s.substr(2, s.size() - 3));
    } catch (const std::exception&) {
        throw Error("bad point label '" + s + "'");
    }
    switch (s[0]) {
    case 'Q':
        return {LabelKind::Q, circle};
    case 'N':
        return {LabelKind::North, circle};
    case 'S':
        return {LabelKind::South, circle};
    case 'A':
        return {LabelKind::Closure, circle};
    default:
        throw Error("bad point label '" + s + "'");
    }
}

std::string to_string(ConstructionKind kind)
{
    switch (kind) {
    case ConstructionKind::Path:
        return "sphere-path";
    case ConstructionKind::EnhancedPath:
        return "sphere-path-enhanced";
    case ConstructionKind::Cycle:
        return "sphere-cycle";
    case ConstructionKind::QuadraticC4:
        return "quadratic-c4";
    case ConstructionKind::Rich:
        return "rich";
    }
    return "?";
}

ConstructionKind parse_construction_kind(const std::string& s)
{
    for (auto k : {ConstructionKind::Path, ConstructionKind::EnhancedPath, ConstructionKind::Cycle,
                   ConstructionKind::QuadraticC4, ConstructionKind::Rich})
        if (to_string(k) == s)
            return k;
    throw Error("unknown construction kind '" + s + "'");
}

// ---------------------------------------------------------------------------
// Patterns

using Role = PatternSlot::Role;

std::size_t Pattern::free_slots() const
{
    return std::count_if(slots.begin(), slots.end(),
                         [](const PatternSlot& s) { return s.role == Role::FreeQ; });
}

bool Pattern::has_rich_prefix() const
{
    return !slots.empty() && slots.front().role == Role::RichFree;
}

Rational Pattern::growth_exponent() const
{
    Rational e(static_cast<long>(free_slots()));
    if (has_rich_prefix())
        e += Rational(4, 3);
    return e;
}

int Pattern::circles_used() const
{
    int c = 0;
    for (const auto& s : slots)
        c = std::max(c, s.circle + 1);
    return c;
}

namespace {

void append_blocks(Pattern& p, int k, bool chained_start)
{
    for (int i = 1; i <= k; ++i) {
        int block = (i - 1) / 5;
        switch ((i - 1) % 5 + 1) {
        case 1:
            p.slots.push_back(
                {(block == 0 && !chained_start) ? Role::FreeQ : Role::ChainQ, block});
            break;
        case 2:
            p.slots.push_back({Role::North, block});
            break;
        case 4:
            p.slots.push_back({Role::South, block});
            break;
        default:
            p.slots.push_back({Role::FreeQ, block});
        }
    }
}

}  // namespace

Pattern path_pattern(int k)
{
    if (k < 1)
        throw Error("path pattern needs k >= 1");
    Pattern p;
    append_blocks(p, k, false);
    return p;
}

Pattern enhanced_path_pattern(int k)
{
    if (k < 2)
        throw Error("enhanced path pattern needs k >= 2");
    Pattern p;
    p.slots.push_back({Role::RichFree, -1});
    p.slots.push_back({Role::RichAdj, -1});
    append_blocks(p, k - 2, true);
    return p;
}

Pattern cycle_pattern(int k, int circles, bool enhanced)
{
    if (k < 3)
        throw Error("cycle pattern needs k >= 3");
    std::vector<PatternSlot> seq;
    if (enhanced) {
        seq = {{Role::RichFree, -1}, {Role::RichAdj, -1}, {Role::ChainQ, 0}};
    } else {
        seq = {{Role::FreeQ, 0}};
    }
    std::optional<Pattern> best;
    std::size_t best_free = 0;
    int best_circles = 0;
    std::vector<char> used_n(circles, 0), used_s(circles, 0);

    std::function<void(int)> grow = [&](int cur) {
        const auto last = seq.back().role;
        const bool at_pole = last == Role::North || last == Role::South;
        const std::size_t len = seq.size();
        if (at_pole && len == static_cast<std::size_t>(k - 1)) {
            // That closing point would repeat the start's successor already in slot 2.
            if (!enhanced && cur == 1 && seq[1].role == Role::ChainQ)
                return;
            Pattern cand;
            cand.slots = seq;
            // From a Q_0 start the K_1 closing point is the start's own successor;
            // from a rich start the K_0 closing point is its image in Q_0.
            cand.slots.push_back({Role::Closure, cur, enhanced ? cur == 0 : cur == 1});
            cand.closed = true;
            std::size_t f = cand.free_slots();
            int c = cand.circles_used();
            if (!best || f > best_free || (f == best_free && c < best_circles)) {
                best = cand;
                best_free = f;
                best_circles = c;
            }
            return;
        }
        if (len >= static_cast<std::size_t>(k - 1))
            return;
        if (at_pole) {
            seq.push_back({Role::FreeQ, cur});
            grow(cur);
            seq.pop_back();
            return;
        }
        if (!used_n[cur]) {
            used_n[cur] = 1;
            seq.push_back({Role::North, cur});
            grow(cur);
            seq.pop_back();
            used_n[cur] = 0;
        }
        if (!used_s[cur]) {
            used_s[cur] = 1;
            seq.push_back({Role::South, cur});
            grow(cur);
            seq.pop_back();
            used_s[cur] = 0;
        }
        if (cur + 1 < circles) {
            seq.push_back({Role::ChainQ, cur + 1});
            grow(cur + 1);
            seq.pop_back();
        }
    };
    grow(0);
    if (!best)
        throw Error("no designated cycle pattern of length " + std::to_string(k) + " over " +
                    std::to_string(circles) + " circles");
    return *best;
}

// ---------------------------------------------------------------------------
// Sphere configurations

std::vector<std::size_t> SphereConfig::indices_with(LabelKind kind, int circle) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].kind == kind && (kind == LabelKind::Rich || labels[i].circle == circle))
            out.push_back(i);
    return out;
}

std::vector<std::size_t> SphereConfig::q_sizes() const
{
    std::vector<std::size_t> out(circles.size(), 0);
    for (const auto& l : labels)
        if (l.kind == LabelKind::Q && l.circle >= 0 && l.circle < static_cast<int>(out.size()))
            ++out[l.circle];
    return out;
}

std::vector<std::string> check_sphere_config(const SphereConfig& config)
{
    std::vector<std::string> bad;
    if (config.labels.size() != config.points.size())
        bad.push_back("label count differs from point count");
    std::set<Direction> seen;
    for (const auto& p : config.points)
        if (!seen.insert(p).second)
            bad.push_back("duplicate point " + p.to_string());
    const int circles = static_cast<int>(config.circles.size());
    std::set<Direction> poles;
    for (const auto& m : config.circles) {
        poles.insert(m);
        poles.insert(-m);
    }
    for (std::size_t i = 0; i < config.labels.size() && i < config.points.size(); ++i) {
        const auto& l = config.labels[i];
        const auto& p = config.points[i];
        if (l.kind != LabelKind::Rich && (l.circle < 0 || l.circle >= circles)) {
            bad.push_back("label " + l.to_string() + " names a missing circle");
            continue;
        }
        switch (l.kind) {
        case LabelKind::Q:
        case LabelKind::Closure:
            if (dot(p, config.circles[l.circle]) != 0)
                bad.push_back(p.to_string() + " is not on circle " + std::to_string(l.circle));
            [[fallthrough]];
        case LabelKind::Rich:
            if (poles.count(p))
                bad.push_back(l.to_string() + " point " + p.to_string() + " is a pole");
            break;
        case LabelKind::North:
            if (p != config.circles[l.circle])
                bad.push_back("N(" + std::to_string(l.circle) + ") is not the pole");
            break;
        case LabelKind::South:
            if (p != -config.circles[l.circle])
                bad.push_back("S(" + std::to_string(l.circle) + ") is not the antipole");
            break;
        }
    }
    for (std::size_t i = 0; i < config.designated.size(); ++i) {
        if (!config.designated[i])
            continue;
        std::size_t j = *config.designated[i];
        if (j >= config.points.size() || dot(config.points[i], config.points[j]) != 0)
            bad.push_back("designated neighbour of point " + std::to_string(i) + " is not adjacent");
    }
    for (std::size_t i = 0; i < config.closing.size(); ++i) {
        if (!config.closing[i])
            continue;
        std::size_t j = *config.closing[i];
        if (j >= config.points.size() || dot(config.points[i], config.points[j]) != 0)
            bad.push_back("closing point of point " + std::to_string(i) + " is not adjacent");
    }
    return bad;
}

Direction circle_pole(int i)
{
    if (i == 0)
        return Direction(0, 0, 1);
    return Direction(i, 1, BigInt(i) * i + 1);
}

int path_circle_count(int k)
{
    return (2 * k + 4) / 5;
}

namespace {

std::optional<Direction> normalized_cross(const Direction& p, const Direction& q)
{
    auto v = cross(p, q);
    if (v[0] == 0 && v[1] == 0 && v[2] == 0)
        return std::nullopt;
    return Direction(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

// Tracks occupied directions while points are added. Antipodal pairs of
// non-pole points are allowed: successors are recorded explicitly, so they do
// not disturb the pattern counts.
class Builder {
public:
    SphereConfig cfg;

    std::size_t add(const Direction& d, PointLabel label)
    {
        cfg.points.push_back(d);
        cfg.labels.push_back(label);
        cfg.designated.emplace_back();
        cfg.closing.emplace_back();
        occupied_.insert(d);
        return cfg.points.size() - 1;
    }

    bool is_free(const Direction& d) const { return !occupied_.count(d); }

    void add_circles(int count)
    {
        for (int i = 0; i < count; ++i) {
            Direction m = circle_pole(i);
            cfg.circles.push_back(m);
            add(m, {LabelKind::North, i});
            add(-m, {LabelKind::South, i});
        }
    }

    // Images of `first` under successive cross products with the poles
    // m_1 .. m_{B-1}, plus an optional closing point cross(first, m_close).
    // Accepted only if every new point is unoccupied and the new points are
    // pairwise distinct.
    bool try_chain(const Direction& first, int closure_circle, std::size_t* first_index)
    {
        std::vector<Direction> chain{first};
        const int b = static_cast<int>(cfg.circles.size());
        for (int i = 1; i < b; ++i) {
            auto next = normalized_cross(chain.back(), cfg.circles[i]);
            if (!next)
                return false;
            chain.push_back(*next);
        }
        std::optional<Direction> closing;
        // Closing on K_1 reuses the chain's own Q_1 point.
        if (closure_circle >= 0 && closure_circle != 1) {
            closing = normalized_cross(first, cfg.circles[closure_circle]);
            if (!closing)
                return false;
        }
        std::set<Direction> fresh;
        auto accept = [&](const Direction& d) {
            if (!is_free(d) || fresh.count(d))
                return false;
            fresh.insert(d);
            return true;
        };
        for (const auto& d : chain)
            if (!accept(d))
                return false;
        if (closing && !accept(*closing))
            return false;

        std::size_t prev = 0, start = 0;
        for (int i = 0; i < b; ++i) {
            std::size_t idx = add(chain[i], {LabelKind::Q, i});
            if (i > 0)
                cfg.designated[prev] = idx;
            else
                start = idx;
            if (i == 1 && closure_circle == 1)
                cfg.closing[start] = idx;
            prev = idx;
        }
        if (first_index)
            *first_index = start;
        if (closing)
            cfg.closing[start] = add(*closing, {LabelKind::Closure, closure_circle});
        return true;
    }

    // Fills Q_0 from candidates (t, 1, 0), t = 1, 2, ..., until `q` chains
    // are accepted.
    void fill_chains(long q, int closure_circle)
    {
        const long cap = 8 * q + 64;
        long accepted = 0;
        for (long t = 1; accepted < q; ++t) {
            if (t > cap)
                throw Error("chain filtering exhausted: accepted " + std::to_string(accepted) +
                            " of " + std::to_string(q) + " Q_0 points after " +
                            std::to_string(cap) + " candidates");
            if (try_chain(Direction(t, 1, 0), closure_circle, nullptr))
                ++accepted;
        }
    }

private:
    std::set<Direction> occupied_;
};

int largest_grid_for(long m)
{
    int N = 0;
    while (3L * (N + 1) * (N + 1) * (N + 1) <= m)
        ++N;
    return N;
}

// Incident (point, line) pairs between lifted objects: dot product zero.
BigInt lifted_incidences(const std::vector<Direction>& pts, const std::vector<Direction>& lines)
{
    BigInt c = 0;
    for (const auto& l : lines)
        for (const auto& p : pts)
            if (dot(p, l) == 0)
                ++c;
    return c;
}

// Rich set lifted from the grid scene, the enhanced construction's Q_0 as its
// images under m_0, the chains from Q_0 over the remaining circles and, for
// close >= 1, the closing points cross(q, m_close). A rich object whose chain
// or closing point collides is dropped and the build restarts without it.
Builder build_enhanced(int k, long n, int close)
{
    const int b = path_circle_count(k - 2);
    const long budget = n - 2L * b;
    const long sets = b + 1 + (close > 0 ? 1 : 0);
    const int N = budget > 0 ? largest_grid_for(budget / sets) : 0;
    if (N < 1)
        throw Error("n = " + std::to_string(n) + " is too small for the enhanced construction with k = " +
                    std::to_string(k));
    const PlanarScene scene = grid_incidence_scene(N);
    std::vector<Direction> rich;
    std::vector<char> is_line;
    for (const auto& p : scene.points) {
        rich.push_back(lift_point(p));
        is_line.push_back(0);
    }
    for (const auto& l : scene.lines) {
        rich.push_back(lift_line(l));
        is_line.push_back(1);
    }
    std::vector<char> keep(rich.size(), 1);

    for (;;) {
        Builder bld;
        bld.add_circles(b);
        std::vector<std::size_t> idx(rich.size(), 0);
        long failed = -1;
        for (std::size_t r = 0; r < rich.size() && failed < 0; ++r) {
            if (!keep[r])
                continue;
            if (!bld.is_free(rich[r]))
                failed = static_cast<long>(r);
            else
                idx[r] = bld.add(rich[r], {LabelKind::Rich, -1});
        }
        std::map<Direction, std::size_t> q0;
        for (std::size_t r = 0; r < rich.size() && failed < 0; ++r) {
            if (!keep[r])
                continue;
            auto img = normalized_cross(rich[r], bld.cfg.circles[0]);
            if (!img) {
                failed = static_cast<long>(r);
                break;
            }
            auto it = q0.find(*img);
            if (it == q0.end()) {
                std::size_t first = 0;
                if (!bld.try_chain(*img, -1, &first)) {
                    failed = static_cast<long>(r);
                    break;
                }
                it = q0.emplace(*img, first).first;
            }
            bld.cfg.designated[idx[r]] = it->second;
        }
        if (close > 0) {
            std::map<Direction, std::size_t> added;
            for (std::size_t r = 0; r < rich.size() && failed < 0; ++r) {
                if (!keep[r])
                    continue;
                auto c = normalized_cross(rich[r], bld.cfg.circles[close]);
                if (!c || (!added.count(*c) && !bld.is_free(*c))) {
                    failed = static_cast<long>(r);
                    break;
                }
                auto it = added.find(*c);
                if (it == added.end())
                    it = added.emplace(*c, bld.add(*c, {LabelKind::Closure, close})).first;
                bld.cfg.closing[idx[r]] = it->second;
            }
        } else if (close == 0) {
            for (std::size_t r = 0; r < rich.size() && failed < 0; ++r)
                if (keep[r])
                    bld.cfg.closing[idx[r]] = bld.cfg.designated[idx[r]];
        }
        if (failed >= 0) {
            keep[failed] = 0;
            continue;
        }
        std::vector<Direction> kp, kl;
        for (std::size_t r = 0; r < rich.size(); ++r)
            if (keep[r])
                (is_line[r] ? kl : kp).push_back(rich[r]);
        if (kp.empty() || kl.empty())
            throw Error("rich set emptied by collision filtering");
        bld.cfg.rich_incidences = lifted_incidences(kp, kl);
        if (bld.cfg.rich_incidences == 0)
            throw Error("n = " + std::to_string(n) + " leaves no rich incidences for k = " + std::to_string(k) +
                        " after collision filtering");
        return bld;
    }
}

}  // namespace

SphereConfig path_construction(int k, long n)
{
    if (k < 1)
        throw Error("path construction needs k >= 1");
    if (n < 5L * k)
        throw Error("n = " + std::to_string(n) + " is too small for k = " + std::to_string(k) +
                    " (need n >= 5k)");
    const int b = path_circle_count(k);
    const long m = std::min(5 * n / (2L * k), n / b);
    const long q = m - 2;
    if (q < 1)
        throw Error("n = " + std::to_string(n) + " leaves no Q points for k = " + std::to_string(k));
    Builder bld;
    bld.add_circles(b);
    bld.fill_chains(q, -1);
    bld.cfg.kind = ConstructionKind::Path;
    bld.cfg.k = k;
    bld.cfg.pattern = path_pattern(k);
    return std::move(bld.cfg);
}

PlanarScene grid_incidence_scene(int N)
{
    if (N < 1)
        throw Error("grid scene needs N >= 1");
    PlanarScene s;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= 2 * N * N; ++j)
            s.points.push_back({Rational(i), Rational(j)});
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N * N; ++b)
            s.lines.emplace_back(Rational(a), Rational(-1), Rational(b));
    return s;
}

namespace {

bool fits_small(const BigInt& v)
{
    static const BigInt limit = BigInt(1) << 40;
    return abs(v) < limit;
}

}  // namespace

std::size_t count_incidences(const PlanarScene& scene)
{
    // Integer points with moderate coordinates: 128-bit arithmetic is exact.
    bool small = std::all_of(scene.points.begin(), scene.points.end(), [](const PlanarPoint& p) {
        return denominator(p.x) == 1 && denominator(p.y) == 1 && fits_small(numerator(p.x)) &&
               fits_small(numerator(p.y));
    }) && std::all_of(scene.lines.begin(), scene.lines.end(), [](const PlanarLine& l) {
        return fits_small(l.a()) && fits_small(l.b()) && fits_small(l.c());
    });
    if (small) {
        std::vector<std::array<__int128, 2>> pts;
        for (const auto& p : scene.points)
            pts.push_back({numerator(p.x).convert_to<long long>(), numerator(p.y).convert_to<long long>()});
        std::size_t c = 0;
        for (const auto& l : scene.lines) {
            __int128 a = l.a().convert_to<long long>(), b = l.b().convert_to<long long>(),
                     cc = l.c().convert_to<long long>();
            for (const auto& p : pts)
                c += a * p[0] + b * p[1] + cc == 0;
        }
        return c;
    }
    std::size_t c = 0;
    for (const auto& l : scene.lines)
        for (const auto& p : scene.points)
            if (l.contains(p))
                ++c;
    return c;
}

SphereConfig lift_scene(const PlanarScene& scene)
{
    SphereConfig cfg;
    cfg.kind = ConstructionKind::Rich;
    for (const auto& p : scene.points) {
        cfg.points.push_back(lift_point(p));
        cfg.labels.push_back({LabelKind::Rich, -1});
    }
    for (const auto& l : scene.lines) {
        cfg.points.push_back(lift_line(l));
        cfg.labels.push_back({LabelKind::Rich, -1});
    }
    cfg.designated.resize(cfg.points.size());
    cfg.closing.resize(cfg.points.size());
    cfg.rich_incidences = BigInt(count_incidences(scene));
    return cfg;
}

SphereConfig rich_q_set(long m)
{
    if (m < 3)
        throw Error("rich set needs m >= 3");
    const int N = largest_grid_for(m);
    if (N >= 2)
        return lift_scene(grid_incidence_scene(N));
    SphereConfig cfg;
    cfg.kind = ConstructionKind::Rich;
    cfg.points = {Direction(1, 0, 0), Direction(0, 1, 0), Direction(0, 0, 1)};
    cfg.labels.assign(3, {LabelKind::Rich, -1});
    cfg.designated.resize(3);
    cfg.closing.resize(3);
    cfg.rich_incidences = BigInt(3);
    return cfg;
}

SphereConfig enhanced_path_construction(int k, long n)
{
    if (k == 2) {
        SphereConfig cfg = rich_q_set(n);
        cfg.kind = ConstructionKind::EnhancedPath;
        cfg.k = 2;
        cfg.pattern = enhanced_path_pattern(2);
        return cfg;
    }
    if (k % 5 != 2 || k < 7)
        throw Error("enhanced construction needs k = 2 (mod 5), k >= 7");
    Builder bld = build_enhanced(k, n, -1);
    bld.cfg.kind = ConstructionKind::EnhancedPath;
    bld.cfg.k = k;
    bld.cfg.pattern = enhanced_path_pattern(k);
    return std::move(bld.cfg);
}

SphereConfig cycle_construction(int k, long n)
{
    if (k < 4)
        throw Error("cycle construction needs k >= 4");
    if (k == 4) {
        // The pole pair closes every pair of Q_0 points.
        SphereConfig cfg = quadratic_c4_config(n);
        cfg.kind = ConstructionKind::Cycle;
        return cfg;
    }
    const bool enhanced = k % 5 == 2;
    if (enhanced) {
        const int b = path_circle_count(k - 2);
        Pattern pat = cycle_pattern(k, b, true);
        const int close = pat.slots.back().circle;
        Builder bld = build_enhanced(k, n, close);
        bld.cfg.kind = ConstructionKind::Cycle;
        bld.cfg.k = k;
        bld.cfg.pattern = pat;
        return std::move(bld.cfg);
    }
    const int b = path_circle_count(k);
    Pattern pat = cycle_pattern(k, b, false);
    const long q = (n - 2L * b) / (b + 1);
    if (q < 1)
        throw Error("n = " + std::to_string(n) + " leaves no Q points for k = " + std::to_string(k));
    Builder bld;
    bld.add_circles(b);
    bld.fill_chains(q, pat.slots.back().circle);
    bld.cfg.kind = ConstructionKind::Cycle;
    bld.cfg.k = k;
    bld.cfg.pattern = pat;
    return std::move(bld.cfg);
}

SphereConfig quadratic_c4_config(long n)
{
    if (n < 4)
        throw Error("quadratic 4-cycle configuration needs n >= 4");
    Builder bld;
    bld.add_circles(1);
    for (long t = 1; t <= n - 2; ++t)
        bld.add(Direction(t, 1, 0), {LabelKind::Q, 0});
    bld.cfg.kind = ConstructionKind::QuadraticC4;
    bld.cfg.k = 4;
    Pattern p;
    p.slots = {{Role::North, 0}, {Role::FreeQ, 0}, {Role::South, 0}, {Role::FreeQ, 0}};
    p.closed = true;
    bld.cfg.pattern = p;
    return std::move(bld.cfg);
}

BipartiteR3Config bipartite_r3_construction(int k, long n, const std::vector<Rational>& heights,
                                            const Rational& radius, std::vector<Rational> t_params)
{
    if (k < 2 || k % 2 != 0)
        throw Error("bipartite construction needs an even k >= 2");
    if (n <= k)
        throw Error("bipartite construction needs n > k");
    const std::size_t half = k / 2;
    if (heights.size() != half)
        throw Error("need exactly k/2 heights");
    if (std::set<Rational>(heights.begin(), heights.end()).size() != half)
        throw Error("duplicate heights");
    if (radius == 0)
        throw Error("radius must be nonzero");
    const std::size_t c = static_cast<std::size_t>(n) - half;
    if (t_params.empty())
        for (std::size_t i = 0; i < c; ++i)
            t_params.emplace_back(static_cast<long>(i));
    if (t_params.size() != c)
        throw Error("need n - k/2 circle parameters");
    if (std::set<Rational>(t_params.begin(), t_params.end()).size() != c)
        throw Error("duplicate circle parameters");

    BipartiteR3Config cfg;
    cfg.radius = radius;
    for (const auto& h : heights)
        cfg.line_points.push_back({Rational(0), Rational(0), h});
    for (const auto& t : t_params) {
        Rational d = 1 + t * t;
        cfg.circle_points.push_back({radius * (1 - t * t) / d, 2 * radius * t / d, Rational(0)});
    }
    for (const auto& h : heights)
        cfg.prescribed_lengths.emplace_back(half, h * h + radius * radius);
    return cfg;
}

}  // namespace udlab
