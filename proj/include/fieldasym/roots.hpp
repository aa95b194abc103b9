#pragma once

#include "unipoly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace fieldasym {

/// Closed rational interval known to contain exactly one distinct real root.
/// A point interval (lo == hi) pins the root exactly.  Endpoints of proper
/// intervals are never roots.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    unsigned multiplicity = 1;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    double midpoint_double() const { return to_double(midpoint()); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Sturm chain of a squarefree polynomial; counts distinct real roots by
/// sign-variation differences.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& squarefree) {
        chain_.push_back(positive_scaled_primitive(squarefree));
        UniPoly d = squarefree.derivative();
        if (!d.is_zero()) {
            chain_.push_back(positive_scaled_primitive(d));
            while (true) {
                UniPoly r = UniPoly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
                if (r.is_zero()) break;
                chain_.push_back(positive_scaled_primitive(-r));
            }
        }
    }

    int variations(const Rational& x) const {
        int count = 0;
        int previous = 0;
        for (const auto& p : chain_) {
            int s = sign_of(p.eval(x));
            if (s == 0) continue;
            if (previous != 0 && s != previous) ++count;
            previous = s;
        }
        return count;
    }

    /// Number of distinct roots in (a, b); neither endpoint may be a root.
    int count_open(const Rational& a, const Rational& b) const {
        return variations(a) - variations(b);
    }

private:
    std::vector<UniPoly> chain_;
};

namespace detail {

/// Strict upper bound on the modulus of every root: 1 + max |c_i / c_d|.
inline Rational cauchy_root_bound(const UniPoly& p) {
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational ratio = abs_of(p.coeff(static_cast<unsigned>(i)) / p.leading());
        if (ratio > best) best = ratio;
    }
    return best + 1;
}

inline void isolate_squarefree(const UniPoly& q, unsigned multiplicity,
                               std::vector<IsolatingInterval>& out) {
    if (q.degree() < 1) return;
    SturmChain chain(q);
    Rational bound = cauchy_root_bound(q);
    struct Segment {
        Rational lo, hi;
        int variations_lo, variations_hi;
    };
    std::vector<Segment> stack;
    stack.push_back({-bound, bound, chain.variations(-bound), chain.variations(bound)});
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        int roots = seg.variations_lo - seg.variations_hi;
        if (roots <= 0) continue;
        if (roots == 1) {
            out.push_back({seg.lo, seg.hi, multiplicity});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) / 2;
        if (q.eval(mid) != 0) {
            int variations_mid = chain.variations(mid);
            stack.push_back({seg.lo, mid, seg.variations_lo, variations_mid});
            stack.push_back({mid, seg.hi, variations_mid, seg.variations_hi});
            continue;
        }
        // The midpoint is itself a root: emit it exactly, then shrink a
        // symmetric window around it until it contains no other root.
        out.push_back({mid, mid, multiplicity});
        Rational eps = (seg.hi - seg.lo) / 4;
        while (q.eval(mid - eps) == 0 || q.eval(mid + eps) == 0 ||
               chain.count_open(mid - eps, mid + eps) != 1) {
            eps /= 2;
        }
        stack.push_back({seg.lo, mid - eps, seg.variations_lo, chain.variations(mid - eps)});
        stack.push_back({mid + eps, seg.hi, chain.variations(mid + eps), seg.variations_hi});
    }
}

}  // namespace detail

/// One bisection step; needs the squarefree polynomial the interval isolates.
inline void refine_step(const UniPoly& squarefree, IsolatingInterval& interval) {
    if (interval.is_point()) return;
    Rational mid = interval.midpoint();
    int sign_mid = sign_of(squarefree.eval(mid));
    if (sign_mid == 0) {
        interval.lo = interval.hi = mid;
        return;
    }
    if (sign_of(squarefree.eval(interval.lo)) != sign_mid) {
        interval.hi = mid;
    } else {
        interval.lo = mid;
    }
}

inline void refine_to_width(const UniPoly& squarefree, IsolatingInterval& interval,
                            const Rational& width) {
    while (!interval.is_point() && interval.width() > width) refine_step(squarefree, interval);
}

/// Isolating intervals for all distinct real roots, sorted increasingly and
/// pairwise disjoint, each annotated with the root's multiplicity in p.
inline std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate root set of zero polynomial");
    struct Tagged {
        IsolatingInterval interval;
        const UniPoly* factor;
    };
    auto factors = squarefree_decomposition(p);
    std::vector<Tagged> tagged;
    for (const auto& [factor, multiplicity] : factors) {
        std::vector<IsolatingInterval> intervals;
        detail::isolate_squarefree(factor, multiplicity, intervals);
        for (auto& interval : intervals) tagged.push_back({std::move(interval), &factor});
    }
    // Roots of distinct Yun factors are distinct, so overlapping intervals
    // from different factors can always be bisected apart.
    auto overlap = [](const IsolatingInterval& a, const IsolatingInterval& b) {
        return a.hi >= b.lo && b.hi >= a.lo;
    };
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        for (std::size_t j = i + 1; j < tagged.size(); ++j) {
            if (tagged[i].factor == tagged[j].factor) continue;
            while (overlap(tagged[i].interval, tagged[j].interval)) {
                if (tagged[i].interval.width() >= tagged[j].interval.width()) {
                    refine_step(*tagged[i].factor, tagged[i].interval);
                } else {
                    refine_step(*tagged[j].factor, tagged[j].interval);
                }
            }
        }
    }
    std::vector<IsolatingInterval> result;
    result.reserve(tagged.size());
    for (auto& t : tagged) result.push_back(std::move(t.interval));
    std::sort(result.begin(), result.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return result;
}

/// Convenience: isolate and refine every interval to at most the given width.
inline std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
    auto intervals = isolate_real_roots(p);
    UniPoly sq = squarefree_part(p);
    for (auto& interval : intervals) refine_to_width(sq, interval, width);
    return intervals;
}

inline int count_distinct_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate root set of zero polynomial");
    if (p.degree() < 1) return 0;
    UniPoly sq = squarefree_part(p);
    if (sq.degree() < 1) return 0;
    SturmChain chain(sq);
    Rational bound = detail::cauchy_root_bound(sq);
    return chain.count_open(-bound, bound);
}

/// Verdict on two root families: both families entirely real, and strictly
/// interlacing (all roots simple, no shared root, tags alternating when the
/// two sorted families are merged).
struct InterlacingVerdict {
    bool all_real_first = false;
    bool all_real_second = false;
    bool shared_root = false;
    bool strictly_interlacing = false;
};

inline InterlacingVerdict interlacing_check(const UniPoly& a, const UniPoly& b) {
    InterlacingVerdict verdict;
    auto roots_a = isolate_real_roots(a);
    auto roots_b = isolate_real_roots(b);
    auto total = [](const std::vector<IsolatingInterval>& roots) {
        unsigned n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    };
    verdict.all_real_first = total(roots_a) == static_cast<unsigned>(std::max(a.degree(), 0));
    verdict.all_real_second = total(roots_b) == static_cast<unsigned>(std::max(b.degree(), 0));
    verdict.shared_root = poly_gcd(a, b).degree() > 0;
    if (verdict.shared_root) return verdict;

    bool simple = true;
    for (const auto& r : roots_a) simple = simple && r.multiplicity == 1;
    for (const auto& r : roots_b) simple = simple && r.multiplicity == 1;
    if (!simple || !verdict.all_real_first || !verdict.all_real_second) return verdict;

    UniPoly sq_a = squarefree_part(a);
    UniPoly sq_b = squarefree_part(b);
    auto disjoint = [](const IsolatingInterval& x, const IsolatingInterval& y) {
        return x.hi < y.lo || y.hi < x.lo;
    };
    for (auto& ra : roots_a)
        for (auto& rb : roots_b)
            while (!disjoint(ra, rb)) {
                if (ra.width() >= rb.width()) {
                    refine_step(sq_a, ra);
                } else {
                    refine_step(sq_b, rb);
                }
            }
    struct Entry {
        Rational lo;
        int tag;
    };
    std::vector<Entry> merged;
    for (const auto& r : roots_a) merged.push_back({r.lo, 0});
    for (const auto& r : roots_b) merged.push_back({r.lo, 1});
    std::sort(merged.begin(), merged.end(),
              [](const Entry& x, const Entry& y) { return x.lo < y.lo; });
    bool alternating = true;
    for (std::size_t i = 1; i < merged.size(); ++i)
        alternating = alternating && merged[i].tag != merged[i - 1].tag;
    verdict.strictly_interlacing = alternating && !merged.empty();
    return verdict;
}

}  // namespace fieldasym
