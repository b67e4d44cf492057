#include "udlab/exponent_lab.hpp"

#include <cmath>
#include <sstream>

namespace udlab {

BudgetExceeded::BudgetExceeded(long n_, const BigInt& predicted, double budget)
    : Error("n = " + std::to_string(n_) + " predicts " + to_string(predicted) + " structures, over the budget of " +
            [&] {
                std::ostringstream s;
                s << budget;
                return s.str();
            }()),
      n(n_)
{
}

Rational predicted_exponent(CurveKind kind, int k)
{
    if (kind == CurveKind::Path) {
        if (k < 1)
            throw Error("path exponent needs k >= 1");
        Rational e = (2 * (k + 3)) / 5;
        if (k % 5 == 2)
            e -= Rational(2, 3);
        return e;
    }
    if (k < 3)
        throw Error("cycle exponent needs k >= 3");
    if (k == 3 || k == 6 || k == 7 || k == 9)
        throw Error("cycle length " + std::to_string(k) + " has only an exponent interval; see the bound table");
    if (k == 4)
        return 2;
    Rational e = (2 * k) / 5;
    if (k % 5 == 2)
        e += Rational(1, 3);
    return e;
}

Rational antipodal_free_exponent(int k)
{
    if (k < 1)
        throw Error("antipodal-free exponent needs k >= 1");
    if (k % 3 == 2)
        return Rational(k + 2, 3);
    return k / 3 + 1;
}

const BoundRow* BoundTable::find(const std::string& quantity, int k) const
{
    for (const auto& r : rows)
        if (r.quantity == quantity && r.k == k)
            return &r;
    return nullptr;
}

BoundTable bound_table(int max_k)
{
    BoundTable t;
    for (int k = 1; k <= max_k; ++k) {
        Rational e = predicted_exponent(CurveKind::Path, k);
        t.rows.push_back({"sphere-path", k, e, e, k != 2});
    }
    for (int k = 3; k <= max_k; ++k) {
        switch (k) {
        case 3:
            t.rows.push_back({"sphere-cycle", 3, Rational(1), Rational(4, 3), false});
            break;
        case 6:
            t.rows.push_back({"sphere-cycle", 6, Rational(2), Rational(20, 9), true});
            break;
        case 7:
            t.rows.push_back({"sphere-cycle", 7, Rational(7, 3), Rational(8, 3), true});
            break;
        case 9:
            t.rows.push_back({"sphere-cycle", 9, Rational(3), Rational(10, 3), true});
            break;
        default: {
            Rational e = predicted_exponent(CurveKind::Cycle, k);
            t.rows.push_back({"sphere-cycle", k, e, e, k != 4});
        }
        }
    }
    for (int k = 1; k <= max_k; ++k)
        t.rows.push_back({"sphere-antipodal-free-path", k, std::nullopt, antipodal_free_exponent(k), true});
    t.rows.push_back({"r3-cycle", 4, Rational(2), Rational(12, 5), true});
    t.rows.push_back({"planar-cycle", 4, Rational(1), Rational(5, 3), true});
    return t;
}

std::string to_string(CountMode m)
{
    switch (m) {
    case CountMode::Pattern:
        return "pattern";
    case CountMode::ClosedForm:
        return "closed-form";
    case CountMode::Paths:
        return "paths";
    case CountMode::AntipodalFree:
        return "antipodal-free";
    case CountMode::Cycles:
        return "cycles";
    case CountMode::Incidences:
        return "incidences";
    case CountMode::Prescribed:
        return "prescribed";
    }
    return "?";
}

CountMode parse_count_mode(const std::string& s)
{
    for (auto m : {CountMode::Pattern, CountMode::ClosedForm, CountMode::Paths, CountMode::AntipodalFree,
                   CountMode::Cycles, CountMode::Incidences, CountMode::Prescribed})
        if (to_string(m) == s)
            return m;
    throw Error("unknown count mode '" + s + "'");
}

namespace {

SphereConfig make_sphere(const std::string& id, int k, long n)
{
    switch (parse_construction_kind(id)) {
    case ConstructionKind::Path:
        return path_construction(k, n);
    case ConstructionKind::EnhancedPath:
        return enhanced_path_construction(k, n);
    case ConstructionKind::Cycle:
        return cycle_construction(k, n);
    case ConstructionKind::QuadraticC4:
        return quadratic_c4_config(n);
    case ConstructionKind::Rich: {
        SphereConfig c = rich_q_set(n);
        c.k = 2;
        c.pattern = enhanced_path_pattern(2);
        return c;
    }
    }
    throw Error("unknown construction '" + id + "'");
}

bool budgeted(CountMode m)
{
    // The closed form enumerates nothing, so only counting modes are budgeted.
    return m != CountMode::ClosedForm;
}

ScalingPoint sphere_point(const ScalingSpec& spec, long n, bool count)
{
    SphereConfig cfg = make_sphere(spec.construction, spec.k, n);
    const int k = cfg.pattern ? static_cast<int>(cfg.pattern->slots.size()) : spec.k;
    ScalingPoint pt;
    pt.n = n;
    pt.x = static_cast<double>(cfg.size());
    pt.predicted = closed_form_pattern_count(*cfg.pattern, cfg.q_sizes(), cfg.rich_incidences);
    if (!count)
        return pt;

    CountOptions opts;
    opts.engine = spec.engine;
    opts.threads = spec.threads;
    opts.with_antipodal_free = false;
    switch (spec.mode) {
    case CountMode::ClosedForm:
        pt.count = pt.predicted;
        return pt;
    case CountMode::Pattern:
        pt.count = count_pattern_paths(cfg, k);
        return pt;
    default:
        break;
    }
    UnitDistanceGraph g = build_sphere_graph(cfg);
    const int kk = spec.k > 0 ? spec.k : k;
    switch (spec.mode) {
    case CountMode::Paths:
        pt.count = count_paths(g, kk, opts).unordered_paths;
        break;
    case CountMode::AntipodalFree:
        pt.count = count_antipodal_free_paths(g, kk, opts);
        break;
    case CountMode::Cycles:
        pt.count = count_cycles(g, kk, opts);
        break;
    default:
        throw Error("count mode " + to_string(spec.mode) + " does not apply to sphere constructions");
    }
    return pt;
}

std::vector<Rational> default_heights(const ScalingSpec& spec)
{
    std::vector<Rational> heights = spec.heights;
    if (heights.empty())
        for (int i = 0; i < spec.k / 2; ++i)
            heights.push_back(i);
    return heights;
}

ScalingPoint scaling_point(const ScalingSpec& spec, long n, bool count)
{
    ScalingPoint pt;
    pt.n = n;
    if (spec.construction == "grid") {
        if (spec.mode != CountMode::Incidences)
            throw Error("the grid scene supports only the incidences count");
        pt.predicted = pow(BigInt(n), 4);
        pt.x = 3.0 * static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
        if (count)
            pt.count = count_incidences(grid_incidence_scene(static_cast<int>(n)));
        return pt;
    }
    if (spec.construction == "bipartite-r3") {
        if (spec.mode != CountMode::Prescribed)
            throw Error("the bipartite construction supports only the prescribed count");
        const int half = spec.k / 2;
        BipartiteR3Config cfg = bipartite_r3_construction(spec.k, n, default_heights(spec), spec.radius);
        pt.x = static_cast<double>(cfg.line_points.size() + cfg.circle_points.size());
        pt.predicted = falling_factorial(static_cast<long>(cfg.circle_points.size()), half);
        if (count) {
            RegularGraphSpec G = RegularGraphSpec::complete_bipartite(half, half);
            pt.count = count_prescribed_copies(build_prescribed_graph(cfg, G), G, spec.threads);
        }
        return pt;
    }
    return sphere_point(spec, n, count);
}

}  // namespace

std::vector<BigInt> check_budget(const ScalingSpec& spec)
{
    for (std::size_t i = 1; i < spec.n_grid.size(); ++i)
        if (spec.n_grid[i] <= spec.n_grid[i - 1])
            throw Error("n grid must be strictly increasing");
    const BigInt budget(static_cast<unsigned long long>(spec.budget));
    std::vector<BigInt> out;
    for (long n : spec.n_grid) {
        ScalingPoint pt = scaling_point(spec, n, false);
        if (budgeted(spec.mode) && pt.predicted > budget)
            throw BudgetExceeded(n, pt.predicted, spec.budget);
        out.push_back(pt.predicted);
    }
    return out;
}

ScalingRun run_scaling(const ScalingSpec& spec)
{
    check_budget(spec);
    ScalingRun run;
    run.spec = spec;
    for (long n : spec.n_grid)
        run.series.push_back(scaling_point(spec, n, true));
    return run;
}

double log_big(const BigInt& v)
{
    if (v <= 0)
        throw Error("logarithm of a non-positive count");
    const unsigned bits = msb(v);
    if (bits < 60)
        return std::log(v.convert_to<double>());
    const unsigned shift = bits - 60;
    BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

ExponentFit fit_exponent(const std::vector<double>& x, const std::vector<BigInt>& y)
{
    if (x.size() != y.size())
        throw Error("series length mismatch");
    if (x.size() < 3)
        throw Error("an exponent fit needs at least 3 points, got " + std::to_string(x.size()));
    const std::size_t m = x.size();
    std::vector<double> lx(m), ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i] <= 0)
            throw Error("non-positive abscissa in series");
        lx[i] = std::log(x[i]);
        ly[i] = log_big(y[i]);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0)
        throw Error("all abscissae are equal");
    ExponentFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.points = m;
    for (std::size_t i = 0; i < m; ++i)
        f.max_residual = std::max(f.max_residual, std::abs(ly[i] - (f.intercept + f.slope * lx[i])));
    return f;
}

ExponentFit fit_exponent(const ScalingRun& run)
{
    std::vector<double> x;
    std::vector<BigInt> y;
    for (const auto& p : run.series) {
        x.push_back(p.x);
        y.push_back(p.count);
    }
    return fit_exponent(x, y);
}

void write_csv(std::ostream& os, const ScalingRun& run)
{
    os << "construction,k,n,x,count\n";
    for (const auto& p : run.series)
        os << run.spec.construction << ',' << run.spec.k << ',' << p.n << ',' << p.x << ',' << to_string(p.count)
           << '\n';
}

}  // namespace udlab
