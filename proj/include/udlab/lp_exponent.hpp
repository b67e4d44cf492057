#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udlab/exact_geom.hpp"
#include "udlab/udgraph.hpp"

namespace udlab {

// ---------------------------------------------------------------------------
// Exact linear programming

/// minimize c.x  subject to  A x >= b,  x >= 0.  Requires c >= 0.
struct CoveringLP {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LPSolution {
    bool feasible = false;
    Rational value;
    std::vector<Rational> x;       // primal optimum
    std::vector<Rational> y;       // dual optimum: A^T y <= c, y >= 0, b.y = value
    std::optional<std::size_t> infeasible_row;  // a row that cannot be covered
};

/// Bland-rule simplex on the dual (the origin is dual feasible since c >= 0).
LPSolution solve_covering_lp(const CoveringLP& lp);
/// Substitutes x and y into every constraint and checks c.x == b.y.
bool verify_certificate(const CoveringLP& lp, const LPSolution& sol, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Type pairs (H, lambda) for a 3-regular pattern graph G

struct TypePair {
    RegularGraphSpec G;
    std::uint32_t H = 0;         // bit e set iff G.edges[e] is in H
    std::vector<int> lambda;     // entries in {0,1,2,3}

    bool in_h(std::size_t e) const { return (H >> e) & 1u; }
    std::vector<int> h_degrees() const;
    std::string h_string() const;       // "[[0,1],[2,3]]"
    std::string lambda_string() const;  // "(3,3,3,3)"
};

struct RuleViolation {
    char rule;    // '1'..'5' for observations (i)..(v), 'w' for malformed input
    int vertex;
    std::string detail;
};

struct Realizability {
    bool ok = true;
    std::vector<RuleViolation> violations;
};

Realizability is_realizable(const TypePair& tp);
/// Same verdict without diagnostics.
bool realizable(const TypePair& tp);

/// The exponent-allocation LP; the row for a vertex with lambda 0 is waived.
CoveringLP xi_program(const TypePair& tp);

/// k_0..k_5 and the two counting identities, evaluated rather than assumed.
struct ClassCounts {
    std::array<int, 6> k{};
    bool double_count_identity = false;  // 3k_5 = k_1 + 3k_2 + k_3 + 2k_4
    bool size_identity = false;          // k = k_0 + 4/3 k_1 + 2k_2 + 4/3 k_3 + 5/3 k_4
    bool identities_expected = false;    // H-edges all have exactly one lambda-0 endpoint
    Rational stated_objective;           // 1/2 k_0 + 1/3 k_1 + k_2 + 2/3 k_3 + 5/6 k_4
    Rational derived_objective;          // same with 2/3 k_1: sum of lambda_i x_i by class
};

ClassCounts class_counts(const TypePair& tp);
std::vector<Rational> closed_form_x(const TypePair& tp);

struct LPOutcome {
    Rational xi;
    std::vector<Rational> x_witness;
    std::vector<Rational> dual;
    bool feasible = false;
    bool certified = false;
    std::optional<int> infeasible_vertex;
    std::vector<Rational> closed_form_x;
    bool closed_form_feasible = false;
    Rational closed_form_objective;
    ClassCounts counts;
};

LPOutcome solve_xi(const TypePair& tp);

// ---------------------------------------------------------------------------
// Sweep

struct IdentityFinding {
    std::string H;
    std::string lambda;
    std::string detail;
};

struct XiSweepReport {
    int k = 0;
    Rational bound;              // k/2
    Rational max_xi;
    std::uint32_t argmax_h = 0;
    std::vector<int> argmax_lambda;
    std::string argmax_h_string;
    std::uint64_t h_subsets = 0;
    std::uint64_t pairs_realizable = 0;
    std::uint64_t lp_solved = 0;
    std::uint64_t closed_form_equal = 0;       // pairs where xi equals the closed-form objective
    std::uint64_t stated_objective_mismatch = 0;  // closed-form objective != stated class formula
    std::uint64_t derived_objective_mismatch = 0; // closed-form objective != per-class sum (2/3 for k_1)
    bool all_within_bound = true;
    bool all_certified = true;
    bool closed_form_always_feasible = true;
    bool closed_form_within_bound = true;
    std::vector<IdentityFinding> identity_findings;   // identities failing where expected
    std::vector<IdentityFinding> identity_notes;      // failures outside the expected structure (capped)
    std::uint64_t identity_notes_total = 0;
    std::optional<TypePair> counterexample;
    bool ok() const;
};

/// Exhaustive sweep over H subsets of E(G) and lambda vectors that pass the
/// per-vertex rules. G must be 3-regular with at most 10 vertices.
XiSweepReport verify_xi_bound(const RegularGraphSpec& G, unsigned threads = 0);

/// Cubic graphs on 8 vertices used beyond the fixed examples.
RegularGraphSpec cube_graph();
RegularGraphSpec wagner_graph();
RegularGraphSpec petersen_graph();

// ---------------------------------------------------------------------------
// Base case: tuples of type G have at least k/2 parts of size <= 2

struct BaseCaseReport {
    bool precondition = false;  // every G-edge realized between all cross pairs
    std::string failure;
    int small_parts = 0;
    bool holds = false;         // precondition && 2 * small_parts >= k
};

/// squared_lengths[e] is the prescribed squared length of G.edges[e];
/// empty means unit length everywhere.
BaseCaseReport base_case_check(const RegularGraphSpec& G, const std::vector<std::vector<R3Point>>& parts,
                               const std::vector<Rational>& squared_lengths = {});

}  // namespace udlab
