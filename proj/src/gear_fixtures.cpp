#include "radiolabel/constructive.hpp"

namespace radiolabel {

namespace {

// Produced by the exact solver (default SolverConfig) on build(gear(n)),
// layout z, v_1..v_n, w_1..w_n. Fixture version 1; the regeneration test
// in tests/test_constructive.cpp re-derives the spans.
constexpr std::array<Label, 9> kGear4{1, 6, 10, 14, 18, 12, 16, 4, 8};
constexpr std::array<Label, 11> kGear5{1, 6, 10, 14, 18, 22, 16, 20, 4, 8, 12};
constexpr std::array<Label, 13> kGear6{1, 5, 8, 11, 14, 20, 26, 22, 17, 23, 18, 24, 16};

}  // namespace

std::span<const Label> stored_gear_labels(int n) {
    switch (n) {
    case 4: return kGear4;
    case 5: return kGear5;
    case 6: return kGear6;
    default: break;
    }
    throw Error(ErrorKind::NoConstruction, "no stored gear labeling for n=" + std::to_string(n));
}

}  // namespace radiolabel
