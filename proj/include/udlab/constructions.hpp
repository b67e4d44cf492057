#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "udlab/exact_geom.hpp"

namespace udlab {

enum class LabelKind { Q, North, South, Rich, Closure };

/// Q(i): point of the set placed on great circle K_i; N(i)/S(i): its poles;
/// RICH: member of the incidence-rich set; A(i): closing points added on K_i
/// by the cycle construction.
struct PointLabel {
    LabelKind kind = LabelKind::Q;
    int circle = -1;

    bool operator==(const PointLabel&) const = default;
    std::string to_string() const;
    static PointLabel parse(const std::string& s);
};

enum class ConstructionKind { Path, EnhancedPath, Cycle, QuadraticC4, Rich };

std::string to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(const std::string& s);

/// One position of a designated path or cycle.
struct PatternSlot {
    enum class Role {
        FreeQ,     // any unused point of Q(circle)
        ChainQ,    // the designated neighbour of the previous point, in Q(circle)
        North,
        South,
        RichFree,  // any RICH point
        RichAdj,   // a RICH point orthogonal to the previous one
        Closure,   // the recorded closing point of the first vertex
    };
    Role role;
    int circle = -1;
    // Closure slots normally draw from A(circle); when set they draw from Q(circle).
    bool closure_in_q = false;

    bool operator==(const PatternSlot&) const = default;
};

struct Pattern {
    std::vector<PatternSlot> slots;
    bool closed = false;  // last slot must also be adjacent to the first

    std::size_t free_slots() const;
    bool has_rich_prefix() const;
    /// Exponent of n carried by the pattern: one per free slot plus 4/3 for
    /// the rich pair.
    Rational growth_exponent() const;
    int circles_used() const;
};

/// Path pattern for i = 5l + j: Q_l, N_l, Q_l, S_l, Q_l for j = 1..5, with
/// the j = 1 slot of every block after the first fixed by the chain.
Pattern path_pattern(int k);
/// (q1, q2, p1, ..., p_{k-2}) with q1 q2 an orthogonal pair of the rich set.
Pattern enhanced_path_pattern(int k);
/// Best cycle pattern for k vertices over `circles` circles: a maximal-free
/// designated path of k - 1 vertices ending at a pole, closed by one point
/// determined by the first vertex.
Pattern cycle_pattern(int k, int circles, bool enhanced);

struct SphereConfig {
    std::vector<Direction> points;
    std::vector<PointLabel> labels;
    std::vector<Direction> circles;  // pole m_i of great circle K_i
    /// Designated successor of a point (Q_i -> Q_{i+1}, RICH -> Q_0).
    std::vector<std::optional<std::size_t>> designated;
    /// Closing point of a cycle start: adjacent to it and to a pole of the
    /// closing circle.
    std::vector<std::optional<std::size_t>> closing;

    ConstructionKind kind = ConstructionKind::Path;
    int k = 0;
    std::optional<Pattern> pattern;
    /// Incidence count of the planar scene the RICH set was lifted from.
    std::optional<BigInt> rich_incidences;

    std::size_t size() const { return points.size(); }
    std::vector<std::size_t> indices_with(LabelKind kind, int circle = -1) const;
    std::size_t q_size(int circle) const { return indices_with(LabelKind::Q, circle).size(); }
    std::vector<std::size_t> q_sizes() const;
};

/// Invariant violations of a sphere configuration; empty when valid.
std::vector<std::string> check_sphere_config(const SphereConfig& config);

struct PlanarScene {
    std::vector<PlanarPoint> points;
    std::vector<PlanarLine> lines;
};

struct BipartiteR3Config {
    std::vector<R3Point> line_points;    // on the z-axis
    std::vector<R3Point> circle_points;  // x^2 + y^2 = r^2, z = 0
    std::vector<std::vector<Rational>> prescribed_lengths;  // [line slot][circle slot], squared
    Rational radius;
};

/// Pole of circle K_i: (0,0,1) for i = 0, (i, 1, i^2 + 1) otherwise.
Direction circle_pole(int i);
int path_circle_count(int k);  // ceil(2k/5)

SphereConfig path_construction(int k, long n);
SphereConfig rich_q_set(long m);
SphereConfig enhanced_path_construction(int k, long n);
SphereConfig cycle_construction(int k, long n);
SphereConfig quadratic_c4_config(long n);

/// Points {(i, j) : i in [N], j in [2N^2]} and lines {y = a x + b : a in [N],
/// b in [N^2]}; every line meets exactly N points.
PlanarScene grid_incidence_scene(int N);
std::size_t count_incidences(const PlanarScene& scene);
/// Lifts points then lines, labelled RICH.
SphereConfig lift_scene(const PlanarScene& scene);

BipartiteR3Config bipartite_r3_construction(int k, long n, const std::vector<Rational>& heights,
                                            const Rational& radius,
                                            std::vector<Rational> t_params = {});

}  // namespace udlab
