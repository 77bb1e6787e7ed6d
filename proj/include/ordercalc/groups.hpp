// ============================================================================
// ordercalc/groups.hpp — group descriptors for Bernoulli jumps
// ============================================================================
//
// Elements are encoded as integer vectors:
//   Finite     {index into the multiplication table}
//   Int        {n}
//   IntPower k {n_1, ..., n_k}
//   Z2FinSupp  {bitmask}, coordinate i set = flip at i
// ============================================================================

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "point.hpp"

namespace ordercalc {

struct GroupDesc {
    enum class Kind { Finite, Int, IntPower, Z2FinSupp };

    Kind kind = Kind::Int;
    std::string name = "Z";
    std::vector<std::vector<int>> table;  // Finite only; table[a][b] = a*b
    int power = 1;                        // IntPower only

    GroupKey id() const {
        switch (kind) {
            case Kind::Finite: return {0};
            case Kind::Int: return {0};
            case Kind::IntPower: return GroupKey(static_cast<size_t>(power), 0);
            case Kind::Z2FinSupp: return {0};
        }
        return {0};
    }

    GroupKey mul(const GroupKey& a, const GroupKey& b) const {
        switch (kind) {
            case Kind::Finite: return {(long long)table[(size_t)a[0]][(size_t)b[0]]};
            case Kind::Int: return {a[0] + b[0]};
            case Kind::IntPower: {
                GroupKey out(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
                return out;
            }
            case Kind::Z2FinSupp: return {a[0] ^ b[0]};
        }
        return a;
    }

    GroupKey inv(const GroupKey& a) const {
        switch (kind) {
            case Kind::Finite: {
                for (std::size_t b = 0; b < table.size(); ++b)
                    if (table[(size_t)a[0]][b] == 0) return {(long long)b};
                throw std::logic_error("group table has no inverse");
            }
            case Kind::Int: return {-a[0]};
            case Kind::IntPower: {
                GroupKey out(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
                return out;
            }
            case Kind::Z2FinSupp: return a;
        }
        return a;
    }

    bool is_id(const GroupKey& a) const { return a == id(); }

    // Bounded enumeration window, closed under inverses.
    std::vector<GroupKey> ball(int radius) const {
        std::vector<GroupKey> out;
        switch (kind) {
            case Kind::Finite:
                for (std::size_t i = 0; i < table.size(); ++i) out.push_back({(long long)i});
                break;
            case Kind::Int:
                for (long long n = -radius; n <= radius; ++n) out.push_back({n});
                break;
            case Kind::IntPower: {
                std::vector<GroupKey> cur{{}};
                for (int d = 0; d < power; ++d) {
                    std::vector<GroupKey> next;
                    for (const auto& p : cur)
                        for (long long n = -radius; n <= radius; ++n) {
                            GroupKey q = p;
                            q.push_back(n);
                            next.push_back(std::move(q));
                        }
                    cur = std::move(next);
                }
                out = std::move(cur);
                break;
            }
            case Kind::Z2FinSupp: {
                int width = std::min(radius, 16);
                for (long long m = 0; m < (1LL << width); ++m) out.push_back({m});
                break;
            }
        }
        return out;
    }
};

inline GroupDesc group_int() {
    GroupDesc g;
    g.kind = GroupDesc::Kind::Int;
    g.name = "Z";
    return g;
}

inline GroupDesc group_int_power(int k) {
    GroupDesc g;
    g.kind = GroupDesc::Kind::IntPower;
    g.power = k;
    g.name = "Z^" + std::to_string(k);
    return g;
}

inline GroupDesc group_cyclic(int n) {
    GroupDesc g;
    g.kind = GroupDesc::Kind::Finite;
    g.name = "C" + std::to_string(n);
    g.table.assign((size_t)n, std::vector<int>((size_t)n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[(size_t)a][(size_t)b] = (a + b) % n;
    return g;
}

inline GroupDesc group_z2_finsupp() {
    GroupDesc g;
    g.kind = GroupDesc::Kind::Z2FinSupp;
    g.name = "Z2w";
    return g;
}

}  // namespace ordercalc
