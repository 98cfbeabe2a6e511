#ifndef NNOGRAPH_GENERATOR_HPP
#define NNOGRAPH_GENERATOR_HPP

#include "nnograph/graph.hpp"

// Deterministic construction of class members: a complete bipartite core
// x1..xi / y1..yj plus satellites whose neighborhoods are prefixes of the
// opposite core side. Reproducible across ports: the RNG is SplitMix64 and
// the draw order is fixed (A2 degrees first, then B2, one draw each, value
// 1 + next() % (side-1), then each list is sorted ascending).

namespace nno::gen {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

struct GenSpec {
    int i = 1, j = 1;  // core side sizes
    int p = 0, q = 0;  // satellite counts
    uint64_t seed = 1;
};

struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

struct NoSatellites : std::logic_error {
    NoSatellites() : std::logic_error("mutation requires satellites on both sides") {}
};

inline void validate(const GenSpec& spec) {
    if (spec.i < 1 || spec.j < 1) throw InvalidSpec("core sides must be at least 1");
    if (spec.p < 0 || spec.q < 0) throw InvalidSpec("satellite counts must be non-negative");
    if (spec.p > 0 && spec.j < 2) throw InvalidSpec("A-side satellites need j >= 2");
    if (spec.q > 0 && spec.i < 2) throw InvalidSpec("B-side satellites need i >= 2");
}

inline std::vector<int> draw_degrees(SplitMix64& rng, int count, int limit) {
    std::vector<int> degs;
    for (int k = 0; k < count; ++k)
        degs.push_back(1 + static_cast<int>(rng.next() % static_cast<uint64_t>(limit)));
    std::sort(degs.begin(), degs.end());
    return degs;
}

inline Graph generate(const GenSpec& spec) {
    validate(spec);
    SplitMix64 rng(spec.seed);
    auto a_degs = draw_degrees(rng, spec.p, spec.j - 1);
    auto b_degs = draw_degrees(rng, spec.q, spec.i - 1);
    Graph g;
    for (int a = 1; a <= spec.i; ++a)
        for (int b = 1; b <= spec.j; ++b)
            g.add_edge("x" + std::to_string(a), "y" + std::to_string(b));
    for (int k = 0; k < spec.p; ++k)
        for (int b = 1; b <= a_degs[k]; ++b)
            g.add_edge("u" + std::to_string(k + 1), "y" + std::to_string(b));
    for (int k = 0; k < spec.q; ++k)
        for (int a = 1; a <= b_degs[k]; ++a)
            g.add_edge("v" + std::to_string(k + 1), "x" + std::to_string(a));
    return g;
}

/// Adds one satellite-satellite edge, which forces an induced P5 through the
/// two cores; the result always fails recognition.
inline Graph mutate_break_class(const GenSpec& spec) {
    validate(spec);
    if (spec.p < 1 || spec.q < 1) throw NoSatellites();
    Graph g = generate(spec);
    SplitMix64 rng(spec.seed ^ 0xabcdef12345ULL);
    int u = static_cast<int>(rng.next() % static_cast<uint64_t>(spec.p)) + 1;
    int v = static_cast<int>(rng.next() % static_cast<uint64_t>(spec.q)) + 1;
    g.add_edge("u" + std::to_string(u), "v" + std::to_string(v));
    return g;
}

}  // namespace nno::gen

#endif
