#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace msolids {

// Vertex permutation in image form: p[v] is where v goes.
using Permutation = std::vector<int>;

Permutation identity_perm(int degree);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);

struct FaceClass {
    std::string id;
    std::string name;
};

// Vertex list is in cyclic boundary order, canonicalized: lowest index
// first, then its lower-indexed neighbor.
struct Face {
    std::string class_id;
    std::vector<int> vertices;
};

struct IncidenceStructure {
    std::string name;
    int num_vertices = 0;
    std::vector<FaceClass> classes;
    std::vector<Face> faces;  // grouped by class, lex-sorted within a class

    int class_index(const std::string& id) const;
    // Distinct boundary edges (i, j), i < j, sorted.
    std::vector<std::pair<int, int>> skeleton_edges() const;
};

enum class GroupKind { Rotation, Full };

struct SymmetryGroup {
    int degree = 0;
    GroupKind kind = GroupKind::Rotation;
    std::vector<Permutation> elements;  // lex-sorted; identity is first

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
    bool is_transitive() const;
    // Elements fixing vertex v.
    std::vector<Permutation> stabilizer(int v) const;
};

// Enumerates the group generated by `generators`; throws std::runtime_error
// if the closure exceeds `bound` elements (signals wrong generators).
SymmetryGroup group_closure(const std::vector<Permutation>& generators,
                            std::size_t bound,
                            GroupKind kind = GroupKind::Rotation);

struct SolidBundle {
    IncidenceStructure structure;
    SymmetryGroup rotation;               // trivial for solids used only in
                                          // feasibility prechecks
    std::optional<SymmetryGroup> full;    // with reflections, when supplied
};

// kind: tetrahedron | cube | octahedron | dodecahedron | icosahedron |
//       prism (requires n >= 3) | truncated-octahedron
// Throws std::invalid_argument on unknown kind or bad parameter.
SolidBundle build_solid(const std::string& kind,
                        std::optional<int> parameter = std::nullopt);

struct ValidationReport {
    std::vector<std::string> violations;
    // class id -> per-vertex face-membership counts
    std::map<std::string, std::vector<int>> membership;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const IncidenceStructure& s, const SymmetryGroup& g);

// Rotates/reflects a cyclic vertex list into canonical form: lowest vertex
// first, then its lower-indexed neighbor.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

}  // namespace msolids
