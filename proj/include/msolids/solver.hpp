#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msolids/bigint.hpp"
#include "msolids/incidence.hpp"
#include "msolids/magic.hpp"

namespace msolids::solver {

// The search kernel keeps labels in a 32-bit used mask.
constexpr int kMaxVertices = 32;

// Partial assignment with incrementally maintained per-face running sums and
// free-slot counts. The running sums always equal the sum of assigned labels
// on each face; sums_consistent() recomputes from scratch to assert that.
class PartialLabeling {
public:
    explicit PartialLabeling(const MagicProblem& p);

    int num_vertices() const { return num_vertices_; }
    int num_faces() const { return static_cast<int>(targets_.size()); }
    int label_of(int v) const { return label_of_[v]; }
    bool label_used(int label) const { return (used_ >> (label - 1)) & 1u; }
    std::uint32_t used_mask() const { return used_; }
    int assigned_count() const { return assigned_; }
    bool complete() const { return assigned_ == num_vertices_; }

    void assign(int v, int label);
    void unassign(int v);

    long face_sum(int f) const { return face_sum_[f]; }
    int face_free(int f) const { return face_free_[f]; }
    long face_target(int f) const { return targets_[f]; }

    // (min, max) achievable sum for face f: running sum plus the sum of the
    // u smallest (largest) unused labels, u = free slot count. A face prunes
    // when its target falls outside this interval.
    std::pair<long, long> face_bounds(int f) const;

    // Target still reachable for every face touching v (exact equality for
    // completed faces, interval test otherwise when use_bounds).
    bool faces_consistent_at(int v, bool use_bounds) const;

    const std::vector<int>& faces_of_vertex(int v) const { return vertex_faces_[v]; }
    const std::vector<int>& vertices_of_face(int f) const { return face_vertices_[f]; }

    bool sums_consistent() const;
    Labeling to_labeling() const;

private:
    long smallest_unused_sum(int u) const;
    long largest_unused_sum(int u) const;

    int num_vertices_ = 0;
    int assigned_ = 0;
    std::uint32_t used_ = 0;
    std::vector<int> label_of_;               // 0 = unassigned
    std::vector<long> face_sum_;
    std::vector<int> face_free_;
    std::vector<long> targets_;
    std::vector<std::vector<int>> face_vertices_;
    std::vector<std::vector<int>> vertex_faces_;
};

enum class ShardStatus { Pending, Running, Done };

// A shard fixes the first d search decisions after the pin; shards at a
// given depth partition the pinned space.
struct ShardEntry {
    std::uint64_t id = 0;
    std::vector<std::pair<int, int>> prefix;  // (vertex, label) decisions
    ShardStatus status = ShardStatus::Pending;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
};

struct EnumerationResult {
    BigInt orbit_count = 0;
    std::optional<BigInt> raw_count;  // orbit_count * |group|; labeling
                                      // stabilizers are trivial
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
    bool stopped_early = false;
    int shard_depth = 0;
    std::uint64_t emitted = 0;
    std::vector<ShardEntry> ledger;

    std::size_t completed_shards() const;
};

struct EnumerateOptions {
    bool count_only = true;
    int shard_depth = 2;
    int workers = 1;
    bool use_bounds = true;  // face_bounds propagation on/off
    int pin_vertex = 0;      // label 1 is pinned here (valid by transitivity)
    std::uint64_t limit = 0; // stop after this many emitted solutions
    std::string checkpoint_path;
    std::function<bool(const Labeling&)> sink;  // called on each orbit
                                                // representative; false stops
    std::vector<std::uint64_t> shard_filter;    // run only these shard ids
    bool progress = false;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Orbit count of magic labelings under the group action. Pins label 1 at
// pin_vertex, enumerates pinned solutions, and counts those that are
// canonical under the pin vertex's stabilizer (for simply transitive
// actions the stabilizer is trivial and the pinned count is the orbit
// count). Deterministic regardless of workers and shard_depth.
EnumerationResult enumerate(const MagicProblem& p, const SymmetryGroup& g,
                            const EnumerateOptions& opt = {});

// Full count with no symmetry reduction (cube/prism scale).
BigInt count_raw(const MagicProblem& p, bool use_bounds = true,
                 std::uint64_t* nodes = nullptr);

// Complete labelings extending a fixed partial assignment; no pin, no
// symmetry. Used for shard cross-checks.
std::uint64_t count_with_prefix(const MagicProblem& p,
                                const std::vector<std::pair<int, int>>& assignments,
                                bool use_bounds = true,
                                std::uint64_t* nodes = nullptr);

// Lexicographically smallest label array in {g . labeling : g in group}.
Labeling canonicalize(const Labeling& l, const SymmetryGroup& g);

// One shard per feasible depth-d prefix, in deterministic search order.
std::vector<ShardEntry> make_shards(const MagicProblem& p, int depth,
                                    int pin_vertex = 0, bool use_bounds = true);

struct CheckpointData {
    int version = 1;
    std::string fingerprint;
    int shard_depth = 0;
    std::vector<ShardEntry> shards;  // prefix not stored; id/status/count only
};

void checkpoint_save(const std::string& path, const CheckpointData& data);
CheckpointData checkpoint_load(const std::string& path);

}  // namespace msolids::solver
