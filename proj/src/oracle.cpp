#include "skeletal/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "skeletal/lattice.hpp"
#include "skeletal/rational.hpp"

namespace skeletal {

namespace {

// Shape points are tallied in a refcounted map so the DFS can backtrack in
// O(|shape|). Cell keys are flattened coordinates over a box that certainly
// contains every reachable point (S's bounding box inflated by r_max).
struct UnionCounter {
    std::vector<Coord> lo;
    std::vector<std::uint64_t> stride;
    std::unordered_map<std::uint64_t, int> counts;
    Coord distinct = 0;

    UnionCounter(const PointSet& S, Coord r_max) {
        const int n = S.dim();
        lo.resize(n);
        stride.resize(n);
        std::uint64_t acc = 1;
        for (int d = 0; d < n; ++d) {
            auto b = S.bounds(d);
            lo[d] = b->first - r_max;
            const std::uint64_t extent =
                static_cast<std::uint64_t>(b->second - b->first) + 2 * r_max + 1;
            stride[d] = acc;
            if (__builtin_mul_overflow(acc, extent, &acc))
                throw ValidationError("min_cover: instance bounding box too large");
        }
        counts.reserve(1024);
    }

    std::uint64_t key(std::span<const Coord> p) const {
        std::uint64_t k = 0;
        for (std::size_t d = 0; d < p.size(); ++d)
            k += static_cast<std::uint64_t>(p[d] - lo[d]) * stride[d];
        return k;
    }

    void add(const PointSet& shape) {
        for (std::size_t i = 0; i < shape.size(); ++i)
            if (++counts[key(shape.row(i))] == 1) ++distinct;
    }

    void remove(const PointSet& shape) {
        for (std::size_t i = 0; i < shape.size(); ++i)
            if (--counts[key(shape.row(i))] == 0) --distinct;
    }
};

PointSet shape_points(const CoverInstance& inst, std::span<const Coord> x, Coord r) {
    return inst.shape == ShapeKind::Skeleton ? skeleton_points(x, r, inst.k)
                                             : orthoplex_points(x, r);
}

struct Search {
    const CoverInstance& inst;
    std::int64_t budget;
    UnionCounter counter;
    std::vector<Coord> current;
    Coord best = std::numeric_limits<Coord>::max();
    std::vector<Coord> best_assignment;
    std::int64_t nodes = 0;
    bool exhausted = false;

    Search(const CoverInstance& i, std::int64_t b)
        : inst(i), budget(b), counter(i.S, i.r_max), current(i.S.size(), 0) {}

    void dfs(std::size_t idx) {
        if (idx == inst.S.size()) {
            if (counter.distinct < best) {
                best = counter.distinct;
                best_assignment = current;
            }
            return;
        }
        for (Coord r = 1; r <= inst.r_max; ++r) {
            if (nodes >= budget) {
                exhausted = true;
                return;
            }
            ++nodes;
            const PointSet shape = shape_points(inst, inst.S.row(idx), r);
            counter.add(shape);
            current[idx] = r;
            // The union only grows along a branch, so a partial union already
            // at the incumbent size cannot strictly improve: prune.
            if (counter.distinct < best) dfs(idx + 1);
            counter.remove(shape);
            current[idx] = 0;
            if (exhausted) return;
        }
    }
};

}  // namespace

OracleResult min_cover(const CoverInstance& instance, std::int64_t node_budget) {
    if (instance.S.empty()) throw ValidationError("min_cover: empty target set");
    if (instance.r_max < 1) throw ValidationError("min_cover: r_max must be >= 1");
    if (instance.shape == ShapeKind::Skeleton &&
        (instance.k < 0 || instance.k >= instance.S.dim()))
        throw ValidationError("min_cover: k must be in [0, dim-1]");
    if (node_budget < 1) throw ValidationError("min_cover: node budget must be >= 1");

    Search search(instance, node_budget);
    search.dfs(0);

    OracleResult res;
    res.nodes_explored = search.nodes;
    res.complete = !search.exhausted;
    if (search.best == std::numeric_limits<Coord>::max()) {
        res.min_size = 0;  // nothing fully explored before the budget ran out
        res.assignment.clear();
        res.complete = false;
    } else {
        res.min_size = search.best;
        res.assignment = search.best_assignment;
    }
    return res;
}

std::vector<SweepRow> min_cover_sweep(std::span<const CoverInstance> instances,
                                      std::int64_t node_budget) {
    std::vector<std::size_t> order(instances.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return instances[a].S.size() < instances[b].S.size();
    });
    std::vector<SweepRow> rows;
    rows.reserve(instances.size());
    for (std::size_t idx : order) {
        const OracleResult r = min_cover(instances[idx], node_budget);
        rows.push_back({instances[idx].S.size(), r.min_size, instances[idx].r_max,
                        r.nodes_explored, r.complete});
    }
    return rows;
}

PointSet replay_assignment(const CoverInstance& instance, std::span<const Coord> assignment) {
    if (assignment.size() != instance.S.size())
        throw ValidationError("replay_assignment: assignment length mismatch");
    std::vector<Coord> flat;
    for (std::size_t i = 0; i < instance.S.size(); ++i) {
        if (assignment[i] < 1 || assignment[i] > instance.r_max)
            throw ValidationError("replay_assignment: radius out of range");
        const PointSet shape = shape_points(instance, instance.S.row(i), assignment[i]);
        flat.insert(flat.end(), shape.flat().begin(), shape.flat().end());
    }
    return PointSet::from_flat(instance.S.dim(), std::move(flat));
}

Coord cover_lower_bound(int n, std::size_t size_s) {
    if (n < 1) throw ValidationError("cover_lower_bound: n must be >= 1");
    if (size_s == 0) return 0;
    const BigInt rhs = boost::multiprecision::pow(BigInt(size_s), 2 * n - 1);
    const BigInt factor = boost::multiprecision::pow(BigInt(2), n - 1);
    Coord lo = 1, hi = static_cast<Coord>(size_s);  // L = |S| always suffices
    while (lo < hi) {
        const Coord mid = lo + (hi - lo) / 2;
        if (boost::multiprecision::pow(factor * mid, 2 * n) >= rhs)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace skeletal
