#include "ktwist/ring.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace ktwist {

RingPtr make_ring(std::vector<std::string> names, bool laurent) {
    auto r = std::make_shared<Ring>();
    r->nvars = static_cast<int>(names.size());
    r->names = std::move(names);
    r->laurent = laurent;
    return r;
}

namespace {

std::vector<std::string> numbered(const char* prefix, int count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

// Shared instances so that identical frames compare by pointer on the fast
// path; value equality still works for rings made elsewhere.
RingPtr cached(char prefix, int count, bool laurent) {
    static std::map<std::tuple<char, int, bool>, RingPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(prefix, count, laurent);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::string p(1, prefix);
    auto ring = make_ring(numbered(p.c_str(), count), laurent);
    cache.emplace(key, ring);
    return ring;
}

}  // namespace

RingPtr x_ring(int N, bool laurent) {
    if (N < 1) throw DomainError("x_ring needs N >= 1");
    return cached('x', N, laurent);
}

RingPtr e_ring(int N) {
    if (N < 1) throw DomainError("e_ring needs N >= 1");
    return cached('e', N, false);
}

RingPtr r_ring(int N) {
    if (N < 2) throw DomainError("r_ring needs N >= 2");
    return cached('r', N - 1, false);
}

RingPtr SymFrame::ring() const {
    switch (mode) {
        case FrameMode::X: return x_ring(N, laurent);
        case FrameMode::E: return e_ring(N);
        case FrameMode::R: return r_ring(N);
    }
    throw DomainError("invalid frame mode");
}

std::string d_symbol(const SymFrame& f, int var_index) {
    if (var_index < 0 || var_index >= f.nvars())
        throw DomainError("d-symbol index out of range");
    const char* prefix = f.mode == FrameMode::X ? "dx" : f.mode == FrameMode::E ? "de" : "dr";
    return prefix + std::to_string(var_index + 1);
}

}  // namespace ktwist
