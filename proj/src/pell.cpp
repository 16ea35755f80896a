#include "pellab/pell.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace pellab {

namespace {

Solution make_checked(Int x, Int y, const Int& d, const Int& m) {
    if (x * x - d * y * y != m)
        throw internal_error("solution check failed: (" + x.get_str() + ", " + y.get_str() +
                             ") does not solve x^2 - " + d.get_str() + " y^2 = " + m.get_str());
    return Solution{std::move(x), std::move(y)};
}

ResidueSets residue_sets_unchecked(const SurdExpansion& exp, const Int& m) {
    ResidueSets r;
    const std::uint64_t T = exp.period_length();
    for (std::uint64_t j = 1; j <= T; ++j) {
        const Int& vj = exp.v_seq[j - 1];
        const bool odd = (j % 2) != 0;
        // signed value (-1)^j v_j
        if ((odd && vj == -m) || (!odd && vj == m)) r.pos.push_back(j);
        if ((odd && vj == m) || (!odd && vj == -m)) r.neg.push_back(j);
    }
    return r;
}

/// Lazy cursor over one branch: yields scale * (p_j, q_j) at convergent
/// indices j = start - 1 + k*stride, k = 0, 1, 2, ... Every yielded pair is
/// verified against x^2 - d y^2 = m. All cursors share the top family's
/// expansion (imprimitive sub-branches live over the same sqrt(d)).
class BranchCursor {
public:
    BranchCursor(const SurdExpansion& exp, Branch br, Int scale, const Int& m)
        : stream_(exp), d_(&exp.d), m_(&m), scale_(std::move(scale)),
          next_index_(br.start - 1), stride_(br.stride) {
        advance();
    }

    const Solution& peek() const { return current_; }

    Solution take() {
        Solution s = current_;
        advance();
        return s;
    }

private:
    void advance() {
        Convergent c;
        do {
            c = stream_.next();
        } while (static_cast<std::uint64_t>(c.index) != next_index_);
        next_index_ += stride_;
        current_ = make_checked(scale_ * c.p, scale_ * c.q, *d_, *m_);
    }

    ConvergentStream stream_;
    const Int* d_;
    const Int* m_;
    Int scale_;
    std::uint64_t next_index_;
    std::uint64_t stride_;
    Solution current_;
};

std::vector<BranchCursor> make_cursors(const SolutionFamily& f, bool include_imprimitive) {
    std::vector<BranchCursor> cursors;
    for (const Branch& br : f.branches) cursors.emplace_back(f.expansion, br, Int(1), f.m);
    if (include_imprimitive) {
        Int am = abs(f.m);
        for (Int delta = 2; delta * delta <= am; ++delta) {
            if (!divides(delta * delta, f.m)) continue;
            SolutionFamily sub = solve_pell_general(f.expansion, exact_div(f.m, delta * delta));
            for (const Branch& br : sub.branches) cursors.emplace_back(f.expansion, br, delta, f.m);
        }
    }
    return cursors;
}

std::size_t min_y_cursor(const std::vector<BranchCursor>& cursors) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cursors.size(); ++i) {
        if (cursors[i].peek().y == cursors[best].peek().y)
            throw internal_error("enumerate_family: duplicate y across branches");
        if (cursors[i].peek().y < cursors[best].peek().y) best = i;
    }
    return best;
}

}  // namespace

ResidueSets residue_sets(const SurdExpansion& exp, const Int& m) {
    if (m == 0 || m * m >= exp.d)
        throw magnitude_error("residue_sets: need 1 <= |m| < sqrt(d), got m = " + m.get_str() +
                              ", d = " + exp.d.get_str());
    return residue_sets_unchecked(exp, m);
}

SolutionFamily solve_pell_general(const SurdExpansion& exp, const Int& m) {
    if (m == 0) throw magnitude_error("solve_pell_general: m must be nonzero");
    SolutionFamily f;
    f.d = exp.d;
    f.m = m;
    f.expansion = exp;
    f.residues = residue_sets_unchecked(exp, m);

    const std::uint64_t T = exp.period_length();
    if (T % 2 == 0) {
        for (std::uint64_t n : f.residues.pos) f.branches.push_back({n, T});
    } else {
        for (std::uint64_t n : f.residues.pos) f.branches.push_back({n, 2 * T});
        for (std::uint64_t n : f.residues.neg) f.branches.push_back({n + T, 2 * T});
    }
    std::sort(f.branches.begin(), f.branches.end(),
              [](const Branch& a, const Branch& b) { return a.start < b.start; });

    if (m > 0 && is_perfect_square(m)) f.trivial = Solution{isqrt(m), Int(0)};
    return f;
}

SolutionFamily solve_pell_general(const Int& d, const Int& m) {
    return solve_pell_general(expand_sqrt(d), m);
}

PellResult solve_pell(const Int& d) {
    SolutionFamily fam = solve_pell_general(expand_sqrt(d), Int(1));
    std::vector<Solution> first = enumerate_family(fam, 1);
    if (first.empty())
        throw internal_error("solve_pell: empty family for d = " + d.get_str());
    return PellResult{std::move(first.front()), std::move(fam)};
}

std::vector<Solution> enumerate_family(const SolutionFamily& f, std::size_t count, bool include_trivial,
                                       bool include_imprimitive) {
    std::vector<Solution> out;
    if (count == 0) return out;
    if (include_trivial && f.trivial) out.push_back(*f.trivial);

    std::vector<BranchCursor> cursors = make_cursors(f, include_imprimitive);
    while (out.size() < count && !cursors.empty()) out.push_back(cursors[min_y_cursor(cursors)].take());
    return out;
}

std::vector<Solution> enumerate_family_up_to_y(const SolutionFamily& f, const Int& y_bound,
                                               bool include_trivial, bool include_imprimitive) {
    std::vector<Solution> out;
    if (include_trivial && f.trivial && f.trivial->y <= y_bound) out.push_back(*f.trivial);

    std::vector<BranchCursor> cursors = make_cursors(f, include_imprimitive);
    if (cursors.empty()) return out;
    for (;;) {
        std::size_t i = min_y_cursor(cursors);
        if (cursors[i].peek().y > y_bound) return out;
        out.push_back(cursors[i].take());
    }
}

}  // namespace pellab
