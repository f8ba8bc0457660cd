#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/geometry.hpp>
#include <gcn/interp.hpp>
#include <gcn/poly.hpp>

namespace gcn {

/// 64-bit mixing generator with fixed constants, reproducible across
/// platforms. All randomized behavior in the library flows through this.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); modulo bias is irrelevant here,
    /// reproducibility is the contract.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// Independent stream for one trial index, computable without sequencing.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Numerator in [-bound, bound], denominator in [1, bound], reduced.
inline Rat random_rational(SplitMix64& rng, std::uint32_t bound) {
    require(bound >= 1, Errc::bad_config, "random_rational: bound must be >= 1");
    const std::int64_t num =
        static_cast<std::int64_t>(rng.below(2 * static_cast<std::uint64_t>(bound) + 1)) -
        static_cast<std::int64_t>(bound);
    const std::uint64_t den = 1 + rng.below(bound);
    return Rat(Int(num), Int(den));
}

inline Point random_point(SplitMix64& rng, std::uint32_t bound) {
    return Point{random_rational(rng, bound), random_rational(rng, bound)};
}

/// Canonical line with integer coefficients in [-bound, bound].
inline Line random_line(SplitMix64& rng, std::uint32_t bound) {
    for (;;) {
        const auto draw = [&] {
            return Int(static_cast<std::int64_t>(rng.below(2 * bound + 1)) -
                       static_cast<std::int64_t>(bound));
        };
        const Int a = draw(), b = draw(), c = draw();
        if (a == 0 && b == 0) continue;
        return Line::from_coefficients(Rat(a), Rat(b), Rat(c));
    }
}

namespace detail {

/// Draw ranges are widened when the requested cap is too tight to supply
/// enough distinct values (e.g. 15 distinct points, or degree+2 pairwise
/// non-parallel lines), so generation always terminates.
inline std::uint32_t effective_bound(std::uint32_t bound, int degree) {
    const std::uint32_t floor_bound = static_cast<std::uint32_t>(degree) + 2;
    return bound < floor_bound ? floor_bound : bound;
}

} // namespace detail

/// dimension(degree) distinct random points; duplicates are redrawn.
inline NodeSet random_node_set(int degree, SplitMix64& rng, std::uint32_t bound) {
    bound = detail::effective_bound(bound, degree);
    const std::size_t n = static_cast<std::size_t>(dimension(degree));
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        Point p = random_point(rng, bound);
        bool fresh = true;
        for (const Point& q : pts)
            if (q == p) {
                fresh = false;
                break;
            }
        if (fresh) pts.push_back(std::move(p));
    }
    return NodeSet(degree, std::move(pts));
}

/// The pairwise intersections of n+2 general-position lines: always
/// poised, always GC; node (i, j) uses exactly the n lines through
/// neither of its two defining lines.
inline NodeSet chung_yao_lattice(int degree, const std::vector<Line>& lines) {
    require(degree >= 0, Errc::precondition, "chung_yao_lattice: negative degree");
    require(lines.size() == static_cast<std::size_t>(degree) + 2, Errc::precondition,
            "chung_yao_lattice: need degree+2 lines");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            std::optional<Point> p = intersect(lines[i], lines[j]);
            require(p.has_value(), Errc::degenerate_arrangement,
                    "chung_yao_lattice: parallel lines " + to_string(lines[i]) + " and " +
                        to_string(lines[j]));
            for (std::size_t k = 0; k < lines.size(); ++k)
                require(k == i || k == j || !incident(lines[k], *p),
                        Errc::degenerate_arrangement,
                        "chung_yao_lattice: three lines concurrent at " + to_string(*p));
            pts.push_back(std::move(*p));
        }
    }
    return NodeSet(degree, std::move(pts));
}

/// degree+2 random lines in general position (pairwise non-parallel, no
/// three concurrent); bad draws are replaced deterministically.
inline std::vector<Line> random_arrangement(int degree, SplitMix64& rng, std::uint32_t bound) {
    bound = detail::effective_bound(bound, degree);
    const std::size_t wanted = static_cast<std::size_t>(degree) + 2;
    std::vector<Line> lines;
    while (lines.size() < wanted) {
        Line l = random_line(rng, bound);
        bool ok = true;
        for (std::size_t i = 0; i < lines.size() && ok; ++i) {
            std::optional<Point> p = intersect(lines[i], l);
            if (!p) {
                ok = false;
                break;
            }
            for (std::size_t j = 0; j < lines.size() && ok; ++j)
                if (j != i && incident(lines[j], *p)) ok = false;
        }
        if (ok) lines.push_back(std::move(l));
    }
    return lines;
}

/// The triangular integer grid {(i, j) : i + j <= n}, graded order.
inline NodeSet principal_lattice(int n) {
    require(n >= 0, Errc::precondition, "principal_lattice: negative degree");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(dimension(n)));
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) pts.push_back(Point{Rat(d - j), Rat(j)});
    return NodeSet(n, std::move(pts));
}

/// Classical layered construction: n+1 points on the first line, n on the
/// second (off the first), down to one final point. Batch violations are
/// rejected; the result is always poised.
inline NodeSet berzolari_radon(int n, const std::vector<Line>& lines,
                               const std::vector<std::vector<Point>>& batches) {
    require(n >= 0, Errc::precondition, "berzolari_radon: negative degree");
    require(lines.size() == static_cast<std::size_t>(n) + 1, Errc::batch_violation,
            "berzolari_radon: need degree+1 lines");
    require(batches.size() == lines.size(), Errc::batch_violation,
            "berzolari_radon: need one point batch per line");
    std::vector<Point> pts;
    for (std::size_t k = 0; k < batches.size(); ++k) {
        const std::size_t expected = static_cast<std::size_t>(n) + 1 - k;
        require(batches[k].size() == expected, Errc::batch_violation,
                "berzolari_radon: batch " + std::to_string(k) + " must have " +
                    std::to_string(expected) + " points");
        for (const Point& p : batches[k]) {
            require(incident(lines[k], p), Errc::batch_violation,
                    "berzolari_radon: point " + to_string(p) + " is off its line");
            for (std::size_t e = 0; e < k; ++e)
                require(!incident(lines[e], p), Errc::batch_violation,
                        "berzolari_radon: point " + to_string(p) + " lies on an earlier line");
            pts.push_back(p);
        }
    }
    return NodeSet(n, std::move(pts));
}

/// Random inputs for the layered construction; returns the validated set.
inline NodeSet random_berzolari_radon(int n, SplitMix64& rng, std::uint32_t bound) {
    bound = detail::effective_bound(bound, n);
    for (;;) {
        std::vector<Line> lines;
        while (lines.size() < static_cast<std::size_t>(n) + 1) {
            Line l = random_line(rng, bound);
            bool fresh = true;
            for (const Line& m : lines)
                if (m == l) fresh = false;
            if (fresh) lines.push_back(std::move(l));
        }
        std::vector<std::vector<Point>> batches(lines.size());
        bool ok = true;
        for (std::size_t k = 0; k < lines.size() && ok; ++k) {
            const LineParam par = parametrize(lines[k]);
            int attempts = 0;
            while (batches[k].size() < static_cast<std::size_t>(n) + 1 - k) {
                if (++attempts > 256) {
                    ok = false; // pathological draw, restart with new lines
                    break;
                }
                Point p = par.at(random_rational(rng, bound));
                bool good = true;
                for (std::size_t e = 0; e < k && good; ++e)
                    if (incident(lines[e], p)) good = false;
                for (const Point& q : batches[k])
                    if (q == p) good = false;
                if (good) batches[k].push_back(std::move(p));
            }
        }
        if (ok) return berzolari_radon(n, lines, batches);
    }
}

/// Invertible affine map x -> M x + t over the rationals.
struct AffineMap {
    Rat m00, m01, m10, m11;
    Rat tx, ty;

    Rat det() const { return m00 * m11 - m01 * m10; }

    Point apply(const Point& p) const {
        return Point{m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }
};

inline NodeSet affine_transform(const NodeSet& nodes, const AffineMap& map) {
    require(map.det() != 0, Errc::singular_matrix, "affine_transform: singular matrix");
    std::vector<Point> pts;
    pts.reserve(nodes.size());
    for (const Point& p : nodes.nodes()) pts.push_back(map.apply(p));
    return NodeSet(nodes.degree(), std::move(pts));
}

/// Image of a line under the map: the canonical line through the images,
/// computed by composing with the inverse map.
inline Line transform_line(const AffineMap& map, const Line& l) {
    const Rat d = map.det();
    require(d != 0, Errc::singular_matrix, "transform_line: singular matrix");
    // row vector (a, b) times M^-1
    const Rat a2 = (Rat(l.a) * map.m11 - Rat(l.b) * map.m10) / d;
    const Rat b2 = (Rat(l.b) * map.m00 - Rat(l.a) * map.m01) / d;
    const Rat c2 = Rat(l.c) - (a2 * map.tx + b2 * map.ty);
    return Line::from_coefficients(a2, b2, c2);
}

/// A GC family instance with one or two nodes nudged off their lines by
/// small rational offsets: probes near-GC territory where a conjecture
/// counterexample would most plausibly hide.
inline NodeSet perturbed_lattice(int degree, SplitMix64& rng, std::uint32_t bound) {
    bound = detail::effective_bound(bound, degree);
    NodeSet base = (rng.next() & 1) == 0
                       ? principal_lattice(degree)
                       : chung_yao_lattice(degree, random_arrangement(degree, rng, bound));
    std::vector<Point> pts = base.nodes();
    const std::size_t moved = 1 + rng.below(2);
    const std::uint64_t small_den_base =
        static_cast<std::uint64_t>(bound) * static_cast<std::uint64_t>(bound);
    for (std::size_t m = 0; m < moved; ++m) {
        const std::size_t victim = rng.below(pts.size());
        for (;;) {
            const auto offset = [&] {
                const std::int64_t num =
                    static_cast<std::int64_t>(rng.below(2 * static_cast<std::uint64_t>(bound) + 1)) -
                    static_cast<std::int64_t>(bound);
                const std::uint64_t den = small_den_base + rng.below(small_den_base);
                return Rat(Int(num), Int(den));
            };
            Point candidate{pts[victim].x + offset(), pts[victim].y + offset()};
            bool fresh = true;
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (k != victim && pts[k] == candidate) fresh = false;
            if (fresh) {
                pts[victim] = std::move(candidate);
                break;
            }
        }
    }
    return NodeSet(degree, std::move(pts));
}

} // namespace gcn
