#include "skeletal/point_set.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

namespace skeletal {

namespace {

bool row_less(const Coord* a, const Coord* b, int dim) {
    return std::lexicographical_compare(a, a + dim, b, b + dim);
}

// Sort + dedup rows. Fast path: when the per-dimension ranges multiply into a
// u64, rows are packed into single keys (mixed radix, lex-compatible), sorted
// as scalars and unpacked; this is what keeps multi-million-row unions cheap.
void canonicalize(int dim, std::vector<Coord>& flat) {
    if (dim <= 0 || flat.empty()) return;
    const std::size_t rows = flat.size() / dim;
    if (rows <= 1) return;

    std::vector<Coord> mins(dim), maxs(dim);
    for (int d = 0; d < dim; ++d) mins[d] = maxs[d] = flat[d];
    for (std::size_t r = 1; r < rows; ++r)
        for (int d = 0; d < dim; ++d) {
            Coord v = flat[r * dim + d];
            mins[d] = std::min(mins[d], v);
            maxs[d] = std::max(maxs[d], v);
        }

    bool packable = true;
    unsigned __int128 volume = 1;
    for (int d = 0; d < dim && packable; ++d) {
        unsigned __int128 extent =
            static_cast<unsigned __int128>(maxs[d]) - static_cast<unsigned __int128>(mins[d]) + 1;
        volume *= extent;
        if (volume > static_cast<unsigned __int128>(UINT64_MAX)) packable = false;
    }

    if (packable) {
        std::vector<std::uint64_t> keys(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint64_t key = 0;
            for (int d = 0; d < dim; ++d) {
                std::uint64_t extent = static_cast<std::uint64_t>(maxs[d] - mins[d]) + 1;
                key = key * extent + static_cast<std::uint64_t>(flat[r * dim + d] - mins[d]);
            }
            keys[r] = key;
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        flat.resize(keys.size() * dim);
        for (std::size_t r = 0; r < keys.size(); ++r) {
            std::uint64_t key = keys[r];
            for (int d = dim - 1; d >= 0; --d) {
                std::uint64_t extent = static_cast<std::uint64_t>(maxs[d] - mins[d]) + 1;
                flat[r * dim + d] = mins[d] + static_cast<Coord>(key % extent);
                key /= extent;
            }
        }
        return;
    }

    std::vector<std::size_t> order(rows);
    for (std::size_t r = 0; r < rows; ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return row_less(flat.data() + a * dim, flat.data() + b * dim, dim);
    });
    std::vector<Coord> sorted;
    sorted.reserve(flat.size());
    for (std::size_t idx : order) {
        const Coord* p = flat.data() + idx * dim;
        if (!sorted.empty() &&
            std::equal(p, p + dim, sorted.data() + sorted.size() - dim))
            continue;
        sorted.insert(sorted.end(), p, p + dim);
    }
    flat = std::move(sorted);
}

}  // namespace

PointSet::PointSet(int dim) : dim_(dim) {
    if (dim < 1) throw ValidationError("point set dimension must be >= 1");
}

PointSet PointSet::from_flat(int dim, std::vector<Coord> flat) {
    PointSet ps(dim);
    if (flat.size() % dim != 0)
        throw ValidationError("flat coordinate array length not divisible by dimension");
    canonicalize(dim, flat);
    ps.flat_ = std::move(flat);
    ps.compute_bounds();
    return ps;
}

PointSet PointSet::from_flat_sorted(int dim, std::vector<Coord> flat) {
    PointSet ps(dim);
    if (flat.size() % dim != 0)
        throw ValidationError("flat coordinate array length not divisible by dimension");
#ifndef NDEBUG
    for (std::size_t r = 1; r * dim < flat.size(); ++r)
        assert(row_less(flat.data() + (r - 1) * dim, flat.data() + r * dim, dim));
#endif
    ps.flat_ = std::move(flat);
    ps.compute_bounds();
    return ps;
}

void PointSet::compute_bounds() {
    mins_.assign(dim_, 0);
    maxs_.assign(dim_, 0);
    if (flat_.empty()) return;
    for (int d = 0; d < dim_; ++d) mins_[d] = maxs_[d] = flat_[d];
    const std::size_t rows = size();
    for (std::size_t r = 1; r < rows; ++r)
        for (int d = 0; d < dim_; ++d) {
            Coord v = flat_[r * dim_ + d];
            mins_[d] = std::min(mins_[d], v);
            maxs_[d] = std::max(maxs_[d], v);
        }
}

bool PointSet::contains(std::span<const Coord> p) const {
    if (static_cast<int>(p.size()) != dim_) return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        const Coord* r = flat_.data() + mid * dim_;
        if (row_less(r, p.data(), dim_))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == size()) return false;
    const Coord* r = flat_.data() + lo * dim_;
    return std::equal(r, r + dim_, p.data());
}

std::optional<std::pair<Coord, Coord>> PointSet::bounds(int d) const {
    if (d < 0 || d >= dim_) throw ValidationError("dimension index out of range");
    if (empty()) return std::nullopt;
    return std::make_pair(mins_[d], maxs_[d]);
}

Coord PointSet::max_spread() const {
    Coord s = 0;
    if (empty()) return 0;
    for (int d = 0; d < dim_; ++d) s = std::max(s, maxs_[d] - mins_[d]);
    return s;
}

PointSet parse_point_set(std::string_view text) {
    std::vector<Coord> flat;
    int dim = -1;
    const char* p = text.data();
    const char* end = p + text.size();
    std::size_t line_no = 0;
    while (p < end) {
        const char* eol = static_cast<const char*>(std::memchr(p, '\n', end - p));
        if (!eol) eol = end;
        ++line_no;
        const char* q = p;
        while (q < eol && (*q == ' ' || *q == '\t' || *q == '\r')) ++q;
        if (q < eol && *q != '#') {
            int count = 0;
            while (q < eol) {
                Coord v = 0;
                auto [next, ec] = std::from_chars(q, eol, v);
                if (ec != std::errc())
                    throw ValidationError("point set line " + std::to_string(line_no) +
                                          ": malformed coordinate");
                flat.push_back(v);
                ++count;
                q = next;
                while (q < eol && (*q == ' ' || *q == '\t' || *q == '\r')) ++q;
            }
            if (dim == -1)
                dim = count;
            else if (count != dim)
                throw ValidationError("point set line " + std::to_string(line_no) +
                                      ": expected " + std::to_string(dim) + " coordinates, got " +
                                      std::to_string(count));
        }
        p = eol + 1;
    }
    if (dim == -1) throw ValidationError("point set file has no data lines");
    return PointSet::from_flat(dim, std::move(flat));
}

PointSet read_point_set(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open point set file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_point_set(text);
}

void write_point_set(std::ostream& out, const PointSet& ps) {
    std::string buf;
    buf.reserve(1 << 22);
    char tmp[24];
    const std::size_t rows = ps.size();
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = ps.row(r);
        for (int d = 0; d < ps.dim(); ++d) {
            if (d) buf.push_back(' ');
            auto [next, ec] = std::to_chars(tmp, tmp + sizeof(tmp), row[d]);
            (void)ec;
            buf.append(tmp, next);
        }
        buf.push_back('\n');
        if (buf.size() > (1 << 22) - 128) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_point_set(const std::filesystem::path& path, const PointSet& ps) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open point set file for writing: " + path.string());
    write_point_set(out, ps);
    if (!out) throw ValidationError("write failed: " + path.string());
}

std::string point_set_to_string(const PointSet& ps) {
    std::ostringstream os;
    write_point_set(os, ps);
    return os.str();
}

PointIndex::PointIndex(const PointSet& ps) : ps_(&ps) {
    if (ps.empty()) return;
    const int dim = ps.dim();
    mins_.resize(dim);
    extents_.resize(dim);
    unsigned __int128 cells = 1;
    for (int d = 0; d < dim; ++d) {
        auto b = *ps.bounds(d);
        mins_[d] = b.first;
        extents_[d] = b.second - b.first + 1;
        cells *= static_cast<unsigned __int128>(extents_[d]);
    }
    // 2^31 cells = 256 MiB of bits at most; in-scope sets are far smaller.
    if (cells > (static_cast<unsigned __int128>(1) << 31)) return;
    bitmap_ = true;
    strides_.assign(dim, 1);
    for (int d = dim - 2; d >= 0; --d)
        strides_[d] = strides_[d + 1] * static_cast<std::uint64_t>(extents_[d + 1]);
    bits_.assign((static_cast<std::uint64_t>(cells) + 63) / 64, 0);
    const std::size_t rows = ps.size();
    const auto& flat = ps.flat();
    for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t idx = 0;
        for (int d = 0; d < dim; ++d)
            idx += strides_[d] * static_cast<std::uint64_t>(flat[r * dim + d] - mins_[d]);
        bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
}

bool PointIndex::contains(std::span<const Coord> p) const {
    if (!bitmap_) return ps_->contains(p);
    const int dim = ps_->dim();
    if (static_cast<int>(p.size()) != dim) return false;
    std::uint64_t idx = 0;
    for (int d = 0; d < dim; ++d) {
        Coord off = p[d] - mins_[d];
        if (off < 0 || off >= extents_[d]) return false;
        idx += strides_[d] * static_cast<std::uint64_t>(off);
    }
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

}  // namespace skeletal
