#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bhc/topology.hpp"

namespace bhc {

/// Thrown when a fault refers to a pair that is not an edge of the host.
class FaultSetError : public std::invalid_argument {
public:
    FaultSetError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Canonical set of faulty edges of one BH_n. Immutable once built.
class FaultSet {
public:
    FaultSet() = default;
    FaultSet(const Topology& t, std::span<const Edge> edges);
    static FaultSet empty(const Topology& t) { return FaultSet(t, {}); }

    int dimension() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(Vertex u, Vertex v) const;
    bool contains(const Edge& e) const { return contains(e.u, e.v); }
    /// Bit s set when slot s of v's neighbor list is faulty.
    std::uint32_t faulty_slots(Vertex v) const { return masks_.empty() ? 0u : masks_[v]; }

    /// |F_i| for each dimension i.
    const std::vector<int>& per_dimension() const { return per_dimension_; }
    int count_in_dimension(int i) const { return per_dimension_[static_cast<std::size_t>(i)]; }

    FaultSet with(const Topology& t, const Edge& e) const;
    FaultSet without(const Topology& t, std::span<const Edge> removed) const;

    bool operator==(const FaultSet& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> masks_;
    std::vector<int> per_dimension_;
};

/// F split by a decomposition: the cross part F_i and the part F^j inside each subcube.
struct FaultPartition {
    int split_dimension = 0;
    std::vector<Edge> cross;
    std::array<std::vector<Edge>, 4> inside;
};

FaultPartition partition(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d);
FaultPartition partition(const Topology& t, const FaultSet& f, int split_dimension);

/// Faults inside part j, relabeled into BH_{n-1} coordinates.
FaultSet local_faults(const Topology& sub, const FaultSet& f, const SubcubeDecomposition& d, int part);

enum class EdgeClass { r_edge, non_r_edge };

/// Number of nonfaulty dimension-i edges at v.
int nonfaulty_in_dimension(const Topology& t, const FaultSet& f, Vertex v, int i);

/// Classifies an edge lying inside one subcube of the split at dimension i.
/// Throws std::invalid_argument for cross edges or non-edges.
EdgeClass classify_edge(const Topology& t, const FaultSet& f, int split_dimension, const Edge& e);

/// Nonfaulty degree of v, ignoring edges of `deleted_dimension` when given.
int surviving_degree(const Topology& t, const FaultSet& f, Vertex v, std::optional<int> deleted_dimension = {});

/// Vertices of part j with exactly one nonfaulty edge inside the subcube.
std::vector<Vertex> pivot_vertices(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d, int part);
/// Vertices of part j with no nonfaulty edge inside the subcube.
std::vector<Vertex> isolated_vertices(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d, int part);

struct F4Cycle {
    std::array<Vertex, 4> cycle{};        // u, x, w, y in cycle order
    std::array<Vertex, 2> degree_two{};   // the nonadjacent degree-2 pair {u, w}
    bool operator==(const F4Cycle&) const = default;
};

/// f4-cycles of BH_n - F (or of BH_n - D_i - F when deleted_dimension is set, in
/// which case degrees are read inside the subcubes).
std::vector<F4Cycle> find_f4_cycles(const Topology& t, const FaultSet& f, std::optional<int> deleted_dimension = {});

int min_degree(const Topology& t, const FaultSet& f, std::optional<int> deleted_dimension = {});

}  // namespace bhc
