#pragma once

#include <vector>

#include "edcslab/graph.hpp"
#include "edcslab/matching.hpp"

namespace edcslab {

/// Partition of the vertices into D (missed by some maximum matching),
/// A (neighbors of D outside D) and C (the rest), plus the connected
/// components of H[D] and, once marked, one special vertex per component.
struct GEDecomposition {
    std::vector<int> d_set;
    std::vector<int> a_set;
    std::vector<int> c_set;
    std::vector<std::vector<int>> d_components;  // partition of d_set, each sorted
    std::vector<int> specials;                   // specials[i] for d_components[i]; empty until marked

    bool specials_marked() const { return !d_components.empty() ? !specials.empty() : true; }
    int component_of(int v) const;  // index into d_components, or -1

    /// All special vertices (empty if unmarked).
    std::vector<int> special_set() const { return specials; }
};

/// Definitional decomposition of h: v is in D iff deleting v does not lower
/// the maximum matching size. Evaluated with one full matching computation
/// plus one warm-started augmenting search per vertex; the per-vertex checks
/// run concurrently.
GEDecomposition decompose(const Graph& h);

/// Counts, per component of H[D], the vertices that are unmatched by m or
/// matched into A. With a maximum matching this is exactly 1 everywhere.
std::vector<int> special_candidate_counts(const GEDecomposition& ge,
                                          const Matching& m);

/// Marks the special vertex of every component relative to the maximum
/// matching m. Throws std::runtime_error when some component does not have
/// exactly one candidate (m not maximum, or ge does not belong to h).
GEDecomposition mark_specials(const GEDecomposition& ge, const Graph& h,
                              const Matching& m);

/// Structural report for a decomposition against a matching.
struct GeReport {
    struct Clause {
        bool pass = true;
        std::vector<int> offenders;  // vertices (or component reps) violating
    };
    Clause c_matched_within_c;   // every C-vertex matched to another C-vertex
    Clause a_matched_to_d;       // every A-vertex matched to a D-vertex
    Clause component_structure;  // one near-unmatched vertex per component,
                                 // rest matched inside the component

    bool all_pass() const {
        return c_matched_within_c.pass && a_matched_to_d.pass &&
               component_structure.pass;
    }
};

GeReport verify_ge_properties(const GEDecomposition& ge, const Graph& h,
                              const Matching& m);

}  // namespace edcslab
