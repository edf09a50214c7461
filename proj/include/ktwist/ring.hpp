#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ktwist/error.hpp"

namespace ktwist {

// A ring context: fixed variable count and names, plus a Laurent flag.
// Arity is immutable; every polynomial carries a shared pointer to its ring
// and binary operations require equal contexts.
struct Ring {
    int nvars = 0;
    std::vector<std::string> names;
    bool laurent = false;

    bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, bool laurent = false);

// Variable frames used throughout: x1..xN, e1..eN, r1..r(N-1).
RingPtr x_ring(int N, bool laurent = false);
RingPtr e_ring(int N);
RingPtr r_ring(int N);  // N-1 variables

enum class FrameMode { X, E, R };

// Identifies which set of symmetric-function variables a value lives in.
// N is always the number of x-variables; the R frame has N-1 ring variables.
struct SymFrame {
    int N = 0;
    FrameMode mode = FrameMode::X;
    bool laurent = false;  // meaningful for X only (the torus ring R(T))

    bool operator==(const SymFrame&) const = default;

    int nvars() const { return mode == FrameMode::R ? N - 1 : N; }
    RingPtr ring() const;
};

inline SymFrame x_frame(int N, bool laurent = false) {
    return SymFrame{N, FrameMode::X, laurent};
}
inline SymFrame e_frame(int N) { return SymFrame{N, FrameMode::E, false}; }
inline SymFrame r_frame(int N) { return SymFrame{N, FrameMode::R, false}; }

// Basis symbol prefix for differential forms in this frame: dx / de / dr.
std::string d_symbol(const SymFrame& f, int var_index);

}  // namespace ktwist
