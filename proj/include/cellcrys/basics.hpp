#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cellcrys {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Z ∪ {-inf}, the value semiring for eps/phi bookkeeping. -inf is absorbing
// under + and neutral under max.
struct TInt {
    std::int64_t v = 0;
    bool fin = true;

    static TInt ninf() { return TInt{0, false}; }
    static TInt of(std::int64_t x) { return TInt{x, true}; }

    bool finite() const { return fin; }
    std::int64_t value() const {
        if (!fin) throw std::logic_error("TInt: value() on -inf");
        return v;
    }

    friend TInt operator+(TInt a, TInt b) {
        if (!a.fin || !b.fin) return ninf();
        return of(a.v + b.v);
    }
    friend TInt operator+(TInt a, std::int64_t b) {
        if (!a.fin) return ninf();
        return of(a.v + b);
    }
    friend TInt operator-(TInt a, std::int64_t b) {
        if (!a.fin) return ninf();
        return of(a.v - b);
    }
    friend bool operator==(TInt a, TInt b) {
        if (a.fin != b.fin) return false;
        return !a.fin || a.v == b.v;
    }
    friend bool operator!=(TInt a, TInt b) { return !(a == b); }
    // total order with -inf smallest
    friend bool operator<(TInt a, TInt b) {
        if (!a.fin) return b.fin;
        if (!b.fin) return false;
        return a.v < b.v;
    }
    friend bool operator<=(TInt a, TInt b) { return a < b || a == b; }
    friend bool operator>(TInt a, TInt b) { return b < a; }
    friend bool operator>=(TInt a, TInt b) { return b <= a; }
    friend TInt tmax(TInt a, TInt b) { return a < b ? b : a; }

    std::string str() const { return fin ? std::to_string(v) : "-inf"; }
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// Deterministic RNG wrapper; seeds are always explicit in reports.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uniform_int_distribution<std::int64_t> d(lo, hi);
        return d(g);
    }
    // positive rational with numerator/denominator in [1,100]
    Rat positive_rational() {
        return Rat(Int(uniform(1, 100)), Int(uniform(1, 100)));
    }
};

inline void hash_mix(std::size_t& h, std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) hash_mix(h, static_cast<std::size_t>(x) * 0x9e3779b1u + 0x85ebca6bu);
        return h;
    }
};

// Chunked parallel map over [0, n); falls back to sequential for small n.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cellcrys
