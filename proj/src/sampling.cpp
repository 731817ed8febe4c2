#include "qcf/sampling.hpp"

#include <random>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Unbiased draw in [0, n), identical on every platform (mt19937_64 output is
// fully specified; std::uniform_int_distribution is not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % n;
    }
}

long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational draw(std::mt19937_64& rng, const ParamSpec& spec) {
    using Kind = ParamSpec::Kind;
    switch (spec.kind) {
        case Kind::SmallRational:
            for (;;) {
                long num = pick(rng, -12, 12);
                long den = pick(rng, 1, 12);
                if (num == 0) continue;
                if (num > 3 * den || -num > 3 * den) continue;
                return Rational(num, den);
            }
        case Kind::SmallOrZero:
            for (;;) {
                long num = pick(rng, -12, 12);
                long den = pick(rng, 1, 12);
                if (num > 3 * den || -num > 3 * den) continue;
                return Rational(num, den);
            }
        case Kind::PositiveSmall:
            for (;;) {
                long num = pick(rng, 1, 12);
                long den = pick(rng, 1, 12);
                if (num > 3 * den) continue;
                return Rational(num, den);
            }
        case Kind::UnitRational: {
            long den = pick(rng, 2, 16);
            long num = pick(rng, 1, den - 1);
            long sign = pick(rng, 0, 1) == 0 ? 1 : -1;
            return Rational(sign * num, den);
        }
        case Kind::QPoint: {
            long den = pick(rng, 2, 16);
            long num = pick(rng, 1, den / 2);
            return Rational(num, den);
        }
        case Kind::Integer:
            return Rational(pick(rng, spec.lo, spec.hi));
    }
    throw DomainError("unknown parameter kind");
}

}  // namespace

std::vector<Params> sample_points(const Entry& e, int samples, std::uint64_t seed) {
    std::vector<Params> pts;
    if (e.params.empty()) {
        pts.emplace_back();
        return pts;
    }
    const std::size_t want = static_cast<std::size_t>(samples < 1 ? 1 : samples);
    for (const Params& p : e.preferred_points) {
        if (pts.size() >= want) break;
        pts.push_back(p);
    }
    std::mt19937_64 rng(seed ^ fnv1a(e.id));
    while (pts.size() < want) {
        bool found = false;
        for (int attempt = 0; attempt < 100 && !found; ++attempt) {
            Params p;
            for (const ParamSpec& spec : e.params) p[spec.name] = draw(rng, spec);
            if (e.admissible && !e.admissible(p)) continue;
            pts.push_back(std::move(p));
            found = true;
        }
        if (!found) {
            throw DomainError("could not sample an admissible point for '" + e.id + "'");
        }
    }
    return pts;
}

}  // namespace qcf
