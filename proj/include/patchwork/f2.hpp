#pragma once

// GF(2) linear algebra on bit-packed words.
//
// A word encodes either a vector of F2^n, a functional of its dual, or a
// point of the orthant space Q^n = {+,-}^n.  Bit i corresponds to
// coordinate i, '+' is 0 and '-' is 1, so reflections across coordinate
// hyperplanes act by XOR and sign products reduce to bit dot products.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchwork {

using F2Word = std::uint32_t;

/// Hard cap on the ambient dimension: orthant enumeration is 2^n.
inline constexpr int kMaxAmbientDim = 24;

inline void check_ambient_dim(int n) {
    if (n < 0 || n > kMaxAmbientDim)
        throw std::invalid_argument("ambient dimension " + std::to_string(n) +
                                    " outside supported range [0," +
                                    std::to_string(kMaxAmbientDim) + "]");
}

inline int f2_dot(F2Word a, F2Word b) { return std::popcount(a & b) & 1; }

inline std::string orthant_to_string(F2Word s, int n) {
    std::string out(static_cast<std::size_t>(n), '+');
    for (int i = 0; i < n; ++i)
        if (s >> i & 1u) out[static_cast<std::size_t>(i)] = '-';
    return out;
}

inline F2Word orthant_from_string(const std::string& text) {
    if (static_cast<int>(text.size()) > kMaxAmbientDim)
        throw std::invalid_argument("orthant string too long: " + text);
    F2Word s = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '-') s |= F2Word{1} << i;
        else if (c != '+')
            throw std::invalid_argument("orthant string must use '+'/'-': " + text);
    }
    return s;
}

/// Linear subspace of F2^n (or of its dual), stored as a reduced echelon
/// basis.  Pivots are the highest set bits, rows are mutually reduced and
/// kept sorted by descending pivot, so equal subspaces compare equal.
class F2Subspace {
  public:
    F2Subspace() = default;
    explicit F2Subspace(int width) : width_(width) { check_ambient_dim(width); }

    static F2Subspace zero(int width) { return F2Subspace(width); }

    static F2Subspace full(int width) {
        F2Subspace v(width);
        for (int i = width - 1; i >= 0; --i) v.rows_.push_back(F2Word{1} << i);
        return v;
    }

    static F2Subspace span(int width, const std::vector<F2Word>& generators) {
        F2Subspace v(width);
        for (F2Word g : generators) v.insert(g);
        return v;
    }

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<F2Word>& basis() const { return rows_; }

    bool operator==(const F2Subspace& o) const = default;

    /// Adds a vector to the span.  Returns false when it was already present.
    bool insert(F2Word v) {
        v = reduce(v);
        if (v == 0) return false;
        // Reduce existing rows against the newcomer, then keep echelon order.
        for (F2Word& r : rows_)
            if (r & top_bit(v)) r ^= v;
        rows_.push_back(v);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
        return true;
    }

    bool contains(F2Word v) const { return reduce(v) == 0; }

    /// Canonical coset representative: the minimal word in v + this.
    F2Word reduce(F2Word v) const {
        for (F2Word r : rows_)
            if (v & top_bit(r)) v ^= r;
        return v;
    }

    /// Annihilator under the coordinate dot pairing; dim n - dim this.
    F2Subspace orthogonal() const {
        // Kernel of the basis matrix: free coordinates parametrize solutions.
        std::vector<int> pivot_of_row(rows_.size());
        F2Word pivot_mask = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            pivot_of_row[r] = top_index(rows_[r]);
            pivot_mask |= top_bit(rows_[r]);
        }
        F2Subspace out(width_);
        for (int j = 0; j < width_; ++j) {
            if (pivot_mask >> j & 1u) continue;
            F2Word v = F2Word{1} << j;
            for (std::size_t r = 0; r < rows_.size(); ++r)
                if (rows_[r] >> j & 1u) v |= F2Word{1} << pivot_of_row[r];
            out.insert(v);
        }
        return out;
    }

    F2Subspace sum(const F2Subspace& o) const {
        F2Subspace out = *this;
        for (F2Word r : o.rows_) out.insert(r);
        return out;
    }

    /// Zassenhaus: echelonize rows (u|u) for u here and (v|0) for v in o;
    /// fully reduced rows with zero left half carry the intersection.
    static F2Subspace intersect(const F2Subspace& a, const F2Subspace& b) {
        if (a.width() != b.width())
            throw std::invalid_argument("F2Subspace::intersect width mismatch");
        const int w = a.width();
        std::vector<std::uint64_t> work;
        auto put = [&](std::uint64_t row) {
            for (std::uint64_t r : work) {
                const std::uint64_t t = std::uint64_t{1} << (63 - std::countl_zero(r));
                if (row & t) row ^= r;
                if (row == 0) return;
            }
            work.push_back(row);
            std::sort(work.begin(), work.end(), std::greater<>());
        };
        for (F2Word u : a.rows_) put((std::uint64_t{u} << w) | u);
        for (F2Word v : b.rows_) put(std::uint64_t{v} << w);
        F2Subspace out(w);
        for (std::uint64_t r : work)
            if ((r >> w) == 0) out.insert(static_cast<F2Word>(r));
        return out;
    }

    /// All 2^dim elements, ascending.  Intended for small subspaces.
    std::vector<F2Word> elements() const {
        std::vector<F2Word> out{0};
        for (F2Word r : rows_) {
            const std::size_t m = out.size();
            for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] ^ r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    static F2Word top_bit(F2Word v) {
        return F2Word{1} << (31 - std::countl_zero(v));
    }
    static int top_index(F2Word v) { return 31 - std::countl_zero(v); }

    int width_ = 0;
    std::vector<F2Word> rows_;
};

/// Affine coset of the orthant space: base + direction, with the base
/// normalized to the minimal word of the coset so that equality of cosets
/// is structural equality.
struct F2AffineSubspace {
    F2Word base = 0;
    F2Subspace direction;

    F2AffineSubspace() = default;
    F2AffineSubspace(F2Word point, F2Subspace dir)
        : base(dir.reduce(point)), direction(std::move(dir)) {}

    int width() const { return direction.width(); }
    std::size_t size() const { return std::size_t{1} << direction.dim(); }
    bool contains(F2Word s) const { return direction.contains(s ^ base); }

    bool operator==(const F2AffineSubspace& o) const = default;

    F2AffineSubspace translate(F2Word by) const {
        return F2AffineSubspace(base ^ by, direction);
    }

    std::vector<F2Word> elements() const {
        std::vector<F2Word> out = direction.elements();
        for (F2Word& v : out) v ^= base;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Intersection of two cosets; empty optional when they miss each other.
    static std::optional<F2AffineSubspace> intersect(const F2AffineSubspace& a,
                                                     const F2AffineSubspace& b) {
        // Solve base_a + x = base_b + y with x in dir_a, y in dir_b.  Track,
        // for every echelon row, the part of it contributed by dir_a.
        if (a.width() != b.width())
            throw std::invalid_argument("F2AffineSubspace::intersect width mismatch");
        struct Tracked { F2Word vec, from_a; };
        std::vector<Tracked> work;
        auto put = [&](F2Word vec, F2Word from_a) {
            for (const Tracked& t : work) {
                const F2Word top = F2Word{1} << (31 - std::countl_zero(t.vec));
                if (vec & top) { vec ^= t.vec; from_a ^= t.from_a; }
            }
            if (vec) work.push_back({vec, from_a});
        };
        for (F2Word r : a.direction.basis()) put(r, r);
        for (F2Word r : b.direction.basis()) put(r, 0);

        F2Word diff = a.base ^ b.base, from_a = 0;
        for (const Tracked& t : work) {
            const F2Word top = F2Word{1} << (31 - std::countl_zero(t.vec));
            if (diff & top) { diff ^= t.vec; from_a ^= t.from_a; }
        }
        if (diff != 0) return std::nullopt;
        return F2AffineSubspace(a.base ^ from_a,
                                F2Subspace::intersect(a.direction, b.direction));
    }
};

}  // namespace patchwork
