#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skeletal/common.hpp"

namespace skeletal {

// Finite subset of Z^dim in canonical form: rows lexicographically sorted and
// deduplicated, stored as one flat coordinate array (row-major).
class PointSet {
public:
    explicit PointSet(int dim);

    // Canonicalizes (sorts rows lexicographically, removes duplicates).
    static PointSet from_flat(int dim, std::vector<Coord> flat);

    // Caller guarantees rows are already sorted and unique (verified cheaply
    // in debug builds). Used by generators that enumerate in lex order.
    static PointSet from_flat_sorted(int dim, std::vector<Coord> flat);

    int dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    bool empty() const { return flat_.empty(); }

    std::span<const Coord> row(std::size_t idx) const {
        return {flat_.data() + idx * dim_, static_cast<std::size_t>(dim_)};
    }
    const std::vector<Coord>& flat() const { return flat_; }

    bool contains(std::span<const Coord> p) const;  // binary search over rows

    // Inclusive per-dimension coordinate range; nullopt for the empty set.
    std::optional<std::pair<Coord, Coord>> bounds(int d) const;
    Coord max_spread() const;  // max over dims of (max - min); 0 if empty

    bool operator==(const PointSet& other) const {
        return dim_ == other.dim_ && flat_ == other.flat_;
    }

private:
    int dim_ = 0;
    std::vector<Coord> flat_;
    std::vector<Coord> mins_, maxs_;
    void compute_bounds();
};

// Text format: one point per line, coordinates as space-separated decimal
// integers; lines starting with '#' (and blank lines) are ignored; dimension
// is inferred from the first data line and enforced thereafter.
PointSet parse_point_set(std::string_view text);
PointSet read_point_set(const std::filesystem::path& path);
void write_point_set(std::ostream& out, const PointSet& ps);
void write_point_set(const std::filesystem::path& path, const PointSet& ps);
std::string point_set_to_string(const PointSet& ps);

// O(1)-ish membership tests: a bitmap over the integer bounding box when the
// box is small enough, otherwise binary search over the canonical rows.
// Answers are identical either way; only speed differs.
class PointIndex {
public:
    explicit PointIndex(const PointSet& ps);  // ps must outlive the index
    bool contains(std::span<const Coord> p) const;
    const PointSet& points() const { return *ps_; }

private:
    const PointSet* ps_;
    bool bitmap_ = false;
    std::vector<Coord> mins_;
    std::vector<Coord> extents_;
    std::vector<std::uint64_t> strides_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace skeletal
