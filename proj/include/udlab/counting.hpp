#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udlab/constructions.hpp"
#include "udlab/exact_geom.hpp"
#include "udlab/udgraph.hpp"

namespace udlab {

enum class Engine { Naive, Optimized };

std::string to_string(Engine e);
Engine parse_engine(const std::string& s);

struct CountOptions {
    Engine engine = Engine::Optimized;
    unsigned threads = 0;  // 0: UDLAB_THREADS, else hardware concurrency
    bool with_antipodal_free = true;  // only when the graph carries antipodal data
    bool with_cycles = false;
};

unsigned resolve_threads(unsigned requested);

struct CountReport {
    int k = 0;
    BigInt ordered_paths;
    BigInt unordered_paths;
    std::optional<BigInt> antipodal_free_unordered;
    std::optional<BigInt> cycles_dihedral;
    Engine engine = Engine::Optimized;
};

/// Paths on k distinct vertices. Fills antipodal-free and cycle counts as
/// requested in `opts`.
CountReport count_paths(const UnitDistanceGraph& g, int k, const CountOptions& opts = {});
/// Unordered k-paths with no p_i, p_{i+2} antipodal.
BigInt count_antipodal_free_paths(const UnitDistanceGraph& g, int k, const CountOptions& opts = {});
/// k-cycles up to rotation and reflection.
BigInt count_cycles(const UnitDistanceGraph& g, int k, const CountOptions& opts = {});

/// Ordered vertex sequences of the sphere graph of `config` that follow its
/// designated pattern slot by slot (for closed patterns the last vertex must
/// also be adjacent to the first). k must equal the pattern length.
BigInt count_pattern_paths(const SphereConfig& config, int k);
BigInt count_pattern_paths(const SphereConfig& config, const UnitDistanceGraph& g, int k);

/// Exact pattern count: per circle, the free slots pick distinct points from
/// Q_l minus the slots already forced; a rich prefix contributes the 2E
/// ordered orthogonal pairs.
BigInt closed_form_pattern_count(const Pattern& pattern, const std::vector<std::size_t>& q_sizes,
                                 const std::optional<BigInt>& rich_pairs = std::nullopt);
/// Path pattern of length k with |Q_l| = q on every circle; `rich_pairs`
/// selects the enhanced pattern.
BigInt closed_form_pattern_count(int k, long q, const std::optional<BigInt>& rich_pairs = std::nullopt);
/// Leading term q^{free slots} (times E for a rich prefix).
BigInt leading_pattern_term(const Pattern& pattern, long q, const std::optional<BigInt>& rich_pairs = std::nullopt);

/// Copies of G in g: labelled embeddings divided by |Aut(G)|.
BigInt count_subgraph_copies(const UnitDistanceGraph& g, const RegularGraphSpec& G, bool induced = false,
                             unsigned threads = 0);
/// Labelled embeddings of G into g (edge-preserving, optionally induced).
BigInt count_embeddings(const UnitDistanceGraph& g, const RegularGraphSpec& G, bool induced = false,
                        unsigned threads = 0);
BigInt automorphism_count(const RegularGraphSpec& G);

/// Tuples (p_1..p_k), p_i from part i, pairwise distinct points, with every
/// G-edge realized in mg.
BigInt count_prescribed_copies(const UnitDistanceGraph& mg, const RegularGraphSpec& G, unsigned threads = 0);

BigInt falling_factorial(long n, long r);

}  // namespace udlab
