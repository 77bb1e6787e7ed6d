// ============================================================================
// ordercalc/lasso.hpp — finitely presented eventually periodic sequences
// ============================================================================
//
// LassoZ<Cell> is a total map Z -> Cell: a periodic left tail, a finite
// middle, a periodic right tail.  Layout:
//
//     ... L L L ] [ mid ) [ R R R ...
//                 ^origin
//
// left.back() sits at origin-1, mid occupies [origin, origin+|mid|), and
// right[0] sits at origin+|mid|.
//
// Canonicalization produces the unique minimal presentation: primitive
// periods, minimal middle (absorbed into the tails), and for seams the
// rightmost valid cut.  The anchored form preserves the map, the shift form
// quotients by translation — equality of shift forms decides shift
// equivalence, the Z-jump's orbit relation.
//
// LassoSeq<Cell> is the one-sided variant (prefix + repeated period).
// ============================================================================

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ordercalc {

namespace lasso_detail {

template <class Cell, class Cmp>
std::size_t least_rotation(const std::vector<Cell>& w, Cmp cmp) {
    std::size_t n = w.size();
    if (n <= 1) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int c = cmp(w[(i + k) % n], w[(j + k) % n]);
        if (c == 0) {
            ++k;
        } else if (c < 0) {
            j += k + 1;
            if (i == j) ++j;
            k = 0;
        } else {
            i += k + 1;
            if (i == j) ++i;
            k = 0;
        }
    }
    return std::min(i, j);
}

template <class Cell>
std::vector<Cell> primitive(const std::vector<Cell>& w) {
    std::size_t n = w.size();
    if (n <= 1) return w;
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = fail[i - 1];
        while (k > 0 && !(w[i] == w[k])) k = fail[k - 1];
        if (w[i] == w[k]) ++k;
        fail[i] = k;
    }
    std::size_t p = n - fail[n - 1];
    if (n % p == 0) return std::vector<Cell>(w.begin(), w.begin() + static_cast<long>(p));
    return w;
}

template <class Cell>
std::vector<Cell> rot_left1(std::vector<Cell> v) {
    if (v.size() > 1) {
        Cell f = v.front();
        v.erase(v.begin());
        v.push_back(std::move(f));
    }
    return v;
}

template <class Cell>
std::vector<Cell> rot_right1(std::vector<Cell> v) {
    if (v.size() > 1) {
        Cell b = v.back();
        v.pop_back();
        v.insert(v.begin(), std::move(b));
    }
    return v;
}

template <class Cell>
std::vector<Cell> rotate_to(const std::vector<Cell>& v, std::size_t i) {
    std::vector<Cell> out(v.begin() + static_cast<long>(i), v.end());
    out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(i));
    return out;
}

inline long long pos_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace lasso_detail

template <class Cell>
struct LassoZ {
    std::vector<Cell> left;
    std::vector<Cell> mid;
    std::vector<Cell> right;
    long long origin = 0;

    LassoZ() = default;
    LassoZ(std::vector<Cell> l, std::vector<Cell> m, std::vector<Cell> r, long long o = 0)
        : left(std::move(l)), mid(std::move(m)), right(std::move(r)), origin(o) {
        if (left.empty() || right.empty())
            throw std::invalid_argument("LassoZ: periods must be nonempty");
    }

    static LassoZ constant(Cell c) { return LassoZ({c}, {}, {c}, 0); }

    const Cell& at(long long i) const {
        using lasso_detail::pos_mod;
        long long mid_end = origin + static_cast<long long>(mid.size());
        if (i >= mid_end)
            return right[static_cast<size_t>(pos_mod(i - mid_end, (long long)right.size()))];
        if (i >= origin) return mid[static_cast<size_t>(i - origin)];
        long long back_off = origin - 1 - i;  // 0 => left.back()
        long long n = static_cast<long long>(left.size());
        return left[static_cast<size_t>(n - 1 - pos_mod(back_off, n))];
    }

    LassoZ shifted(long long k) const {
        LassoZ out = *this;
        out.origin += k;
        return out;
    }

    friend bool operator==(const LassoZ& a, const LassoZ& b) {
        return a.origin == b.origin && a.left == b.left && a.mid == b.mid && a.right == b.right;
    }
};

namespace lasso_detail {

// Shared normalization: primitive periods, minimal middle, rightmost seam.
// Returns true when the map turned out to be fully periodic.
template <class Cell>
bool normalize(LassoZ<Cell>& x) {
    using std::vector;
    x.left = primitive(x.left);
    x.right = primitive(x.right);
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 1 << 20) throw std::logic_error("lasso normalize: no fixpoint");
        changed = false;
        while (!x.mid.empty() && x.mid.front() == x.left.front()) {
            x.mid.erase(x.mid.begin());
            x.left = rot_left1(std::move(x.left));
            x.origin += 1;
            changed = true;
        }
        while (!x.mid.empty() && x.mid.back() == x.right.back()) {
            x.mid.pop_back();
            x.right = rot_right1(std::move(x.right));
            changed = true;
        }
    }
    if (!x.mid.empty()) return false;
    if (x.left == x.right) return true;
    // seam: push the cut right as far as it goes
    std::size_t bound = x.left.size() * x.right.size() + x.left.size() + x.right.size() + 2;
    for (std::size_t step = 0; step < bound; ++step) {
        if (!(x.right.front() == x.left.front())) return false;
        x.left = rot_left1(std::move(x.left));
        x.right = rot_left1(std::move(x.right));
        x.origin += 1;
        if (x.left == x.right) return true;
    }
    throw std::logic_error("lasso normalize: seam push failed to terminate");
}

}  // namespace lasso_detail

// Canonical presentation of the map itself (absolute positions kept).
template <class Cell, class Cmp>
LassoZ<Cell> anchored_canonical(LassoZ<Cell> x, Cmp cmp) {
    bool periodic = lasso_detail::normalize(x);
    if (periodic) {
        // same cyclic word both sides, phased so that index 0 holds at(0)
        std::vector<Cell> p(x.right.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] = x.at(static_cast<long long>(k));
        x.left = p;
        x.right = std::move(p);
        x.mid.clear();
        x.origin = 0;
    }
    (void)cmp;
    return x;
}

// Canonical representative of the shift orbit (translation quotiented away).
template <class Cell, class Cmp>
LassoZ<Cell> shift_canonical(LassoZ<Cell> x, Cmp cmp) {
    bool periodic = lasso_detail::normalize(x);
    if (periodic) {
        std::vector<Cell> p = lasso_detail::rotate_to(
            x.right, lasso_detail::least_rotation(x.right, cmp));
        return LassoZ<Cell>(p, {}, p, 0);
    }
    x.origin = 0;
    return x;
}

template <class Cell, class Cmp>
bool shift_equivalent(const LassoZ<Cell>& a, const LassoZ<Cell>& b, Cmp cmp) {
    return shift_canonical(a, cmp) == shift_canonical(b, cmp);
}

// Exact equality as maps Z -> Cell.
template <class Cell>
bool equal_maps(const LassoZ<Cell>& a, const LassoZ<Cell>& b) {
    auto ca = anchored_canonical(a, [](const Cell&, const Cell&) { return 0; });
    auto cb = anchored_canonical(b, [](const Cell&, const Cell&) { return 0; });
    return ca == cb;
}

// Least-magnitude witness shift (positive on ties) with shifted(a) == b.
// Candidates are centered on the offset of the normalized presentations and
// scan |k - delta| <= |mid_a| + |mid_b| + 2*lcm of all period lengths, which
// is exhaustive for this representation.
template <class Cell>
std::optional<long long> brute_shift_witness(LassoZ<Cell> a, LassoZ<Cell> b) {
    lasso_detail::normalize(a);
    lasso_detail::normalize(b);
    auto lcm2 = [](long long x, long long y) { return std::lcm(x, y); };
    long long l = lcm2(lcm2((long long)a.left.size(), (long long)a.right.size()),
                       lcm2((long long)b.left.size(), (long long)b.right.size()));
    long long bound = (long long)a.mid.size() + (long long)b.mid.size() + 2 * l;
    long long delta = b.origin - a.origin;
    auto window_equal = [&](long long k) {
        LassoZ<Cell> as = a.shifted(k);
        long long lo = std::min(as.origin, b.origin) - 2 * l - 1;
        long long hi = std::max(as.origin + (long long)as.mid.size(),
                                b.origin + (long long)b.mid.size()) +
                       2 * l + 1;
        for (long long i = lo; i <= hi; ++i)
            if (!(as.at(i) == b.at(i))) return false;
        return true;
    };
    std::vector<long long> candidates;
    for (long long m = -bound; m <= bound; ++m) candidates.push_back(delta + m);
    std::sort(candidates.begin(), candidates.end(), [](long long x, long long y) {
        auto ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
        return ax != ay ? ax < ay : x > y;  // least magnitude, positive first
    });
    for (long long k : candidates)
        if (window_equal(k)) return k;
    return std::nullopt;
}

// ── one-sided lassos ────────────────────────────────────────────────────────

template <class Cell>
struct LassoSeq {
    std::vector<Cell> prefix;
    std::vector<Cell> period;

    LassoSeq() = default;
    LassoSeq(std::vector<Cell> pre, std::vector<Cell> per)
        : prefix(std::move(pre)), period(std::move(per)) {
        if (period.empty()) throw std::invalid_argument("LassoSeq: period must be nonempty");
    }

    const Cell& at(std::size_t i) const {
        if (i < prefix.size()) return prefix[i];
        return period[(i - prefix.size()) % period.size()];
    }

    friend bool operator==(const LassoSeq& a, const LassoSeq& b) {
        return a.prefix == b.prefix && a.period == b.period;
    }
};

// Minimal presentation of the same sequence.
template <class Cell>
LassoSeq<Cell> seq_canonical(LassoSeq<Cell> x) {
    x.period = lasso_detail::primitive(x.period);
    while (!x.prefix.empty() && x.prefix.back() == x.period.back()) {
        x.prefix.pop_back();
        x.period = lasso_detail::rot_right1(std::move(x.period));
    }
    return x;
}

template <class Cell>
bool equal_seqs(const LassoSeq<Cell>& a, const LassoSeq<Cell>& b) {
    return seq_canonical(a) == seq_canonical(b);
}

// Canonical pair (primitive period, absolute phase) of the tail: the period
// rewritten so entry j describes indices = j mod p for large indices.  Two
// sequences are eventually equal iff these tails coincide.
template <class Cell>
std::vector<Cell> tail_phase_canonical(const LassoSeq<Cell>& x) {
    LassoSeq<Cell> c = seq_canonical(x);
    std::size_t p = c.period.size();
    std::size_t start = ((c.prefix.size() + p - 1) / p) * p;  // first multiple of p past prefix
    std::vector<Cell> out(p);
    for (std::size_t j = 0; j < p; ++j) out[j] = c.at(start + j);
    return out;
}

template <class Cell>
bool eventually_equal(const LassoSeq<Cell>& a, const LassoSeq<Cell>& b) {
    return tail_phase_canonical(a) == tail_phase_canonical(b);
}

}  // namespace ordercalc
