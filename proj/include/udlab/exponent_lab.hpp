#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "udlab/counting.hpp"
#include "udlab/exact_geom.hpp"

namespace udlab {

class BudgetExceeded : public Error {
public:
    BudgetExceeded(long n, const BigInt& predicted, double budget);
    long n;
};

enum class CurveKind { Path, Cycle };

/// Growth exponent of the extremal path/cycle count on the sphere. Cycle
/// lengths 3, 6, 7, 9 have no single exponent; use bound_table().
Rational predicted_exponent(CurveKind kind, int k);

struct BoundRow {
    std::string quantity;  // sphere-path, sphere-cycle, sphere-antipodal-free-path, r3-cycle, planar-cycle
    int k = 0;
    std::optional<Rational> lower;
    Rational upper;
    bool polylog = false;  // upper bound holds up to polylogarithmic factors
};

struct BoundTable {
    std::vector<BoundRow> rows;
    const BoundRow* find(const std::string& quantity, int k) const;
};

/// Rows for k up to max_k, plus the fixed gap and reference rows.
BoundTable bound_table(int max_k = 15);
/// Upper exponent of antipodal-free k-paths.
Rational antipodal_free_exponent(int k);

enum class CountMode {
    Pattern,       // enumerated designated-pattern count
    ClosedForm,    // closed-form pattern count from the generated sizes
    Paths,         // unordered k-paths
    AntipodalFree, // unordered antipodal-free k-paths
    Cycles,        // k-cycles up to symmetry
    Incidences,    // grid scene: (objects, incidences)
    Prescribed,    // bipartite R^3 construction: prescribed-length copies of G
};

std::string to_string(CountMode m);
CountMode parse_count_mode(const std::string& s);

struct ScalingSpec {
    std::string construction;  // a construction kind name, "grid" or "bipartite-r3"
    int k = 0;
    std::vector<long> n_grid;
    CountMode mode = CountMode::Paths;
    double budget = 1e8;
    unsigned threads = 0;
    Engine engine = Engine::Optimized;
    // bipartite-r3 only
    std::vector<Rational> heights;
    Rational radius = 1;
};

struct ScalingPoint {
    long n = 0;         // requested size
    double x = 0;       // abscissa: generated point count (grid: 3N^3 objects)
    BigInt count;
    BigInt predicted;   // the estimate checked against the budget
};

struct ScalingRun {
    ScalingSpec spec;
    std::vector<ScalingPoint> series;
};

/// Predicted structure count per grid point; throws BudgetExceeded for the
/// first point over the budget. Nothing is counted.
std::vector<BigInt> check_budget(const ScalingSpec& spec);
/// Validates the whole grid, then generates and counts each point exactly.
ScalingRun run_scaling(const ScalingSpec& spec);

struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double max_residual = 0;
    std::size_t points = 0;
};

/// Least squares on (log x, log count).
ExponentFit fit_exponent(const ScalingRun& run);
ExponentFit fit_exponent(const std::vector<double>& x, const std::vector<BigInt>& y);

double log_big(const BigInt& v);

void write_csv(std::ostream& os, const ScalingRun& run);

}  // namespace udlab
