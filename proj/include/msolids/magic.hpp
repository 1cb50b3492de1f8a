#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msolids/bigint.hpp"
#include "msolids/incidence.hpp"

namespace msolids {

// Exact rational; divisibility is the feasibility argument, so no floating
// point anywhere in this module.
struct Rational {
    BigInt num;
    BigInt den = 1;  // > 0, reduced

    static Rational make(BigInt n, BigInt d);
    bool integral() const { return den == 1; }
    std::string str() const;
};

enum class Feasibility { Yes, No, Unknown };

struct VerdictReason {
    enum class Kind { Divisibility, IrregularIncidence, ForcedEqualLabels };
    Kind kind;
    std::string detail;
    std::vector<int> faces;  // offending face indices, when applicable
};

struct FeasibilityVerdict {
    Feasibility feasible = Feasibility::Unknown;
    std::vector<VerdictReason> reasons;
};

struct ClassConstant {
    std::string class_id;
    Rational sum;       // forced per-face target for this class
    long face_count;    // f_c
    long per_vertex;    // r_c: class-c faces through each vertex
};

struct DerivedConstants {
    std::vector<ClassConstant> constants;  // in structure class order
    FeasibilityVerdict verdict;            // No on non-integral target or
                                           // irregular incidence
};

// For class c with f_c faces and r_c faces per vertex:
//   S_c = r_c * V(V+1)/2 / f_c, exact.
DerivedConstants derive_constants(const IncidenceStructure& s);

// Two same-class faces whose vertex sets differ by exactly one vertex on
// each side force those two vertices to carry equal labels, contradicting
// bijectivity.
FeasibilityVerdict structural_infeasibility(const IncidenceStructure& s);

struct Labeling {
    std::vector<int> labels;  // labels[v] in 1..V
};

struct MagicProblem {
    IncidenceStructure structure;
    std::vector<long> class_targets;  // by class index
    std::vector<long> face_targets;   // by face index

    long target_of_class(const std::string& id) const;
};

// Constants are derived, never user-supplied; infeasible structures are
// refused (problem is empty, verdicts say why).
struct ProblemBuildResult {
    DerivedConstants derived;
    FeasibilityVerdict structural;
    std::optional<MagicProblem> problem;

    bool feasible() const { return problem.has_value(); }
};
ProblemBuildResult make_problem(const IncidenceStructure& s);

struct Violation {
    int face = -1;  // -1 for labeling-level violations
    std::string class_id;
    long expected = 0;
    long actual = 0;
    std::string message;
};

struct VerifyReport {
    bool ok = false;
    std::vector<Violation> violations;
};

// Exact check of bijectivity and every face sum. Length mismatch throws
// std::invalid_argument; everything else is reported, not thrown.
VerifyReport verify(const MagicProblem& p, const Labeling& l);

// Magic labeling of the 2k-gon prism: bottom[i] = 2n+1 - top[i], top chosen
// one from each complementary pair {j, 2n+1-j} with total n(2n+1)/2,
// lexicographically smallest. Throws std::invalid_argument for k < 2.
Labeling construct_prism_labeling(int k);

// V! / |group| exactly.
BigInt total_arrangements(const IncidenceStructure& s, const SymmetryGroup& g);

}  // namespace msolids
