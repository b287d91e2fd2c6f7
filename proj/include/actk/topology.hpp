#ifndef ACTK_TOPOLOGY_HPP
#define ACTK_TOPOLOGY_HPP

#include <cstdint>

#include "actk/extract.hpp"
#include "actk/formula.hpp"

namespace actk {

/// Axis-aligned sampling box: per-dimension closed rational interval, split
/// into `resolution` cells per axis.
struct Box {
    std::vector<std::pair<Rational, Rational>> intervals;  // [lo, hi] per axis
    unsigned resolution = 1;

    unsigned dims() const { return static_cast<unsigned>(intervals.size()); }
    /// Exact center of cell `idx` along `axis`.
    Rational center(unsigned axis, unsigned idx) const;
    void check() const;
};

/// Parses "lo:hi,lo:hi,..." with exact-rational bounds.
Box parse_box(const std::string& text, unsigned resolution);

struct OccupancyGrid {
    Box box;
    std::vector<std::uint8_t> occupied;  // row-major over {0..N-1}^n

    std::size_t cell_count() const;
    std::size_t flat_index(std::span<const unsigned> idx) const;
    std::size_t occupied_count() const;
};

struct OccupancyOptions {
    /// Include a cell if any of its 2^n corners satisfies the formula,
    /// instead of the center only.
    bool corner_mode = false;
    std::size_t cell_limit = 100'000'000;
};

/// Samples a closed formula (no strict signs) at exact cell centers.
OccupancyGrid occupancy_grid(const Dnf& f, const Box& box, const OccupancyOptions& opt = {});

/// Closed cubical complex: all occupied top cells plus all of their faces.
/// Cells are encoded in doubled grid coordinates (even = vertex position,
/// odd = unit interval); dimension = number of odd coordinates.
class CubicalComplex {
public:
    static CubicalComplex from_grid(const OccupancyGrid& g);

    unsigned ambient_dim() const { return ambient_dim_; }
    std::size_t cell_count(unsigned q) const;
    std::size_t total_cells() const;

    /// Boundary faces (indices into dimension q-1) of cell `i` in dimension q.
    std::vector<std::size_t> boundary(unsigned q, std::size_t i) const;

    /// Checks that the GF(2) boundary of every boundary vanishes.
    bool boundary_squared_is_zero() const;

    /// Homology ranks b_0..b_mmax over GF(2).
    std::vector<std::size_t> betti_numbers(unsigned mmax) const;

private:
    unsigned ambient_dim_ = 0;
    unsigned coord_bits_ = 0;
    // keys_[q]: sorted packed doubled-coordinate keys of the q-cells; a cell's
    // index is its position in the sorted vector.
    std::vector<std::vector<std::uint64_t>> keys_;

    std::uint64_t pack(std::span<const unsigned> coords) const;
    void unpack(std::uint64_t key, std::vector<unsigned>& coords) const;
    std::size_t rank_boundary(unsigned q, const std::vector<char>* cleared,
                              std::vector<char>* pivots_out) const;
};

/// Connected components of the occupied set under face-or-corner adjacency
/// (matching connectivity of the closed complex).
std::size_t component_count(const OccupancyGrid& g);

}  // namespace actk

#endif
