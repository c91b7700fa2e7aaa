#include "wsg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace wsg {

struct Semigroup::Cache {
    mutable std::shared_mutex mutex;
    std::unordered_map<IntTuple, Int, IntTupleHash> ell;
};

Semigroup::Semigroup(Description d) : desc_(std::move(d)), cache_(std::make_unique<Cache>()) {}
Semigroup::~Semigroup() = default;
Semigroup::Semigroup(Semigroup&&) noexcept = default;
Semigroup& Semigroup::operator=(Semigroup&&) noexcept = default;

Int TwoPointProfile::sigma2_at(const Int& j) const {
    Int k = floor_div(j, a);
    Int r = j - k * a;
    return sigma2.at(r.get_ui()) - k * a;
}

/*
 * Depth-first walk over gamma + sum_i k_i eta^i <= alpha.
 *
 * With s = |gamma| fixed, coordinate i of the candidate is
 * base_i + a_i k_i where base_i = gamma_i - a_{i-1} k_{i-1}.  Its upper
 * bound is alpha_i; its lower bound comes from the sum constraint:
 * beta_i >= s - (beta_0 + ... + beta_{i-1}) - (alpha_{i+1} + ... + alpha_{m-1}).
 * The last coordinate is then determined and automatically <= alpha_{m-1}.
 */
template <class Visit>
void Semigroup::enumerate_gamma_below(const IntTuple& alpha, Visit&& visit) const {
    const std::size_t m = this->m();
    require_length(alpha, m);
    if (alpha.sum() < 0) return;
    const Lattice& lat = desc_.lattice();

    std::vector<Int> tail(m, Int(0));
    for (std::size_t i = m - 1; i-- > 0;) tail[i] = tail[i + 1] + alpha[i + 1];

    IntTuple beta(m);
    std::vector<Int> k(m - 1), hi(m - 1);
    for (const IntTuple& gamma : desc_.gamma_fundamental()) {
        const Int s = gamma.sum();
        // explicit stack over the m-1 lattice coefficients
        std::size_t depth = 0;
        Int prefix = 0;
        auto bounds = [&](std::size_t i) {
            const Int& a = lat.period(i);
            Int base = gamma[i];
            if (i > 0) base -= lat.period(i - 1) * k[i - 1];
            hi[i] = floor_div(alpha[i] - base, a);
            k[i] = ceil_div(s - prefix - tail[i] - base, a);
        };
        bounds(0);
        while (true) {
            if (k[depth] > hi[depth]) {
                if (depth == 0) break;
                --depth;
                prefix -= beta[depth];
                ++k[depth];
                continue;
            }
            Int base = gamma[depth];
            if (depth > 0) base -= lat.period(depth - 1) * k[depth - 1];
            beta[depth] = base + lat.period(depth) * k[depth];
            if (depth + 1 == m - 1) {
                beta[m - 1] = gamma[m - 1] - lat.period(m - 2) * k[m - 2];
                visit(static_cast<const IntTuple&>(beta));
                ++k[depth];
            } else {
                prefix += beta[depth];
                ++depth;
                bounds(depth);
            }
        }
    }
}

std::vector<IntTuple> Semigroup::gamma_below(const IntTuple& alpha) const {
    std::vector<IntTuple> out;
    enumerate_gamma_below(alpha, [&](const IntTuple& b) { out.push_back(b); });
    std::sort(out.begin(), out.end());
    return out;
}

/*
 * Counts distinct last coordinates of Γ(alpha) without visiting every
 * element: for fixed gamma and k_0..k_{m-3} the admissible k_{m-2} form an
 * interval, so the last coordinates form an arithmetic progression of step
 * a_{m-2}.  Progressions are grouped by residue and merged.
 */
Int Semigroup::compute_ell(const IntTuple& alpha) const {
    const std::size_t m = this->m();
    if (alpha.sum() < 0) return 0;
    const Lattice& lat = desc_.lattice();
    const Int& a_last = lat.period(m - 2);

    std::vector<Int> tail(m, Int(0));
    for (std::size_t i = m - 1; i-- > 0;) tail[i] = tail[i + 1] + alpha[i + 1];

    // residue -> intervals of j where last coordinate = residue + a_last * j
    std::map<Int, std::vector<std::pair<Int, Int>>> runs;

    std::vector<Int> k(m - 1), hi(m - 1);
    IntTuple beta(m);
    for (const IntTuple& gamma : desc_.gamma_fundamental()) {
        const Int s = gamma.sum();
        Int residue;
        mpz_fdiv_r(residue.get_mpz_t(), gamma[m - 1].get_mpz_t(), a_last.get_mpz_t());
        const Int offset = (gamma[m - 1] - residue) / a_last;

        std::size_t depth = 0;
        Int prefix = 0;
        auto bounds = [&](std::size_t i) {
            const Int& a = lat.period(i);
            Int base = gamma[i];
            if (i > 0) base -= lat.period(i - 1) * k[i - 1];
            hi[i] = floor_div(alpha[i] - base, a);
            k[i] = ceil_div(s - prefix - tail[i] - base, a);
        };
        bounds(0);
        while (true) {
            if (depth == m - 2) {
                if (k[depth] <= hi[depth]) runs[residue].emplace_back(offset - hi[depth], offset - k[depth]);
                if (depth == 0) break;
                --depth;
                prefix -= beta[depth];
                ++k[depth];
                continue;
            }
            if (k[depth] > hi[depth]) {
                if (depth == 0) break;
                --depth;
                prefix -= beta[depth];
                ++k[depth];
                continue;
            }
            Int base = gamma[depth];
            if (depth > 0) base -= lat.period(depth - 1) * k[depth - 1];
            beta[depth] = base + lat.period(depth) * k[depth];
            prefix += beta[depth];
            ++depth;
            bounds(depth);
        }
    }

    Int count = 0;
    for (auto& [residue, intervals] : runs) {
        std::sort(intervals.begin(), intervals.end());
        Int cur_lo = intervals.front().first;
        Int cur_hi = intervals.front().second;
        for (std::size_t t = 1; t < intervals.size(); ++t) {
            const auto& [lo, hi_j] = intervals[t];
            if (lo > cur_hi + 1) {
                count += cur_hi - cur_lo + 1;
                cur_lo = lo;
                cur_hi = hi_j;
            } else if (hi_j > cur_hi) {
                cur_hi = hi_j;
            }
        }
        count += cur_hi - cur_lo + 1;
    }
    return count;
}

Int Semigroup::ell(const IntTuple& alpha) const {
    require_length(alpha, m());
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->ell.find(alpha);
        if (it != cache_->ell.end()) return it->second;
    }
    Int value = compute_ell(alpha);
    std::unique_lock lock(cache_->mutex);
    cache_->ell.emplace(alpha, value);
    return value;
}

Int Semigroup::ell_by_index(const IntTuple& alpha, std::size_t i) const {
    if (i >= m()) throw std::out_of_range("coordinate index out of range");
    std::set<Int> classes;
    enumerate_gamma_below(alpha, [&](const IntTuple& b) { classes.insert(b[i]); });
    return Int(static_cast<unsigned long>(classes.size()));
}

int Semigroup::d_jump(const IntTuple& alpha, std::size_t i) const {
    if (i >= m()) throw std::out_of_range("coordinate index out of range");
    Int diff = ell(alpha) - ell(alpha - basis_vector(m(), i));
    return static_cast<int>(diff.get_si());
}

bool Semigroup::member(const IntTuple& alpha) const {
    require_length(alpha, m());
    if (alpha.sum() < 0) return false;
    for (std::size_t i = 0; i < m(); ++i)
        if (d_jump(alpha, i) != 1) return false;
    return true;
}

bool Semigroup::nabla_im_empty(const IntTuple& alpha, std::size_t i) const { return d_jump(alpha, i) == 0; }

namespace {

std::vector<std::size_t> checked_subset(const std::vector<std::size_t>& J, std::size_t m) {
    std::vector<std::size_t> s = J;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("nabla_J: J must be nonempty");
    if (s.back() >= m) throw std::invalid_argument("nabla_J: index outside 0..m-1");
    if (s.size() == m) throw std::invalid_argument("nabla_J: J must be a proper subset");
    return s;
}

// Walks beta with beta_j = alpha_j on J, beta_f <= alpha_f - 1 off J and
// |beta| >= 0, in lexicographic order.  visit returns false to stop.
template <class Visit>
void walk_nabla_candidates(const IntTuple& alpha, const std::vector<std::size_t>& J, Visit&& visit) {
    const std::size_t m = alpha.size();
    std::vector<bool> fixed(m, false);
    for (auto j : J) fixed[j] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < m; ++i)
        if (!fixed[i]) free.push_back(i);

    IntTuple beta = alpha;
    Int fixed_sum = 0;
    for (auto j : J) fixed_sum += alpha[j];
    // room[t] = sum of upper bounds of free coordinates after position t
    std::vector<Int> room(free.size() + 1, Int(0));
    for (std::size_t t = free.size(); t-- > 0;) room[t] = room[t + 1] + (alpha[free[t]] - 1);

    std::size_t depth = 0;
    Int prefix = fixed_sum;
    std::vector<Int> cur(free.size()), upper(free.size());
    auto init = [&](std::size_t t) {
        upper[t] = alpha[free[t]] - 1;
        cur[t] = -prefix - room[t + 1];
    };
    init(0);
    while (true) {
        if (cur[depth] > upper[depth]) {
            if (depth == 0) return;
            --depth;
            prefix -= cur[depth];
            ++cur[depth];
            continue;
        }
        beta[free[depth]] = cur[depth];
        if (depth + 1 == free.size()) {
            if (!visit(static_cast<const IntTuple&>(beta))) return;
            ++cur[depth];
        } else {
            prefix += cur[depth];
            ++depth;
            init(depth);
        }
    }
}

}  // namespace

std::vector<IntTuple> Semigroup::nabla_J(const IntTuple& alpha, const std::vector<std::size_t>& J) const {
    require_length(alpha, m());
    auto subset = checked_subset(J, m());
    std::vector<IntTuple> out;
    walk_nabla_candidates(alpha, subset, [&](const IntTuple& b) {
        if (member(b)) out.push_back(b);
        return true;
    });
    return out;
}

bool Semigroup::nabla_J_empty(const IntTuple& alpha, const std::vector<std::size_t>& J) const {
    require_length(alpha, m());
    auto subset = checked_subset(J, m());
    bool empty = true;
    walk_nabla_candidates(alpha, subset, [&](const IntTuple& b) {
        if (member(b)) empty = false;
        return empty;
    });
    return empty;
}

// ∇_i(alpha) = ∇_i^m(alpha - 1 + e_i), so maximality is d_i(alpha-1+e_i) = 0 for all i.
bool Semigroup::is_maximal(const IntTuple& alpha) const {
    if (!member(alpha)) return false;
    const IntTuple shifted = alpha - ones(m());
    for (std::size_t i = 0; i < m(); ++i)
        if (!nabla_im_empty(shifted + basis_vector(m(), i), i)) return false;
    return true;
}

bool Semigroup::is_absolute_maximal(const IntTuple& alpha) const {
    return member(alpha) && ell(alpha) == ell(alpha - ones(m())) + 1;
}

RegionClassification Semigroup::maximals_in_region() const {
    RegionClassification out;
    for_each_in_region_slab(desc_.lattice(), Int(0), desc_.top_degree(), [&](const IntTuple& a) {
        if (!is_maximal(a)) return;
        out.maximal.push_back(a);
        if (is_absolute_maximal(a)) out.absolute.push_back(a);
    });
    std::sort(out.maximal.begin(), out.maximal.end());
    std::sort(out.absolute.begin(), out.absolute.end());
    return out;
}

/*
 * alpha is a lub of m elements of Γ(Q) exactly when every coordinate of
 * alpha is attained by some element of Γ(alpha): such elements are all
 * dominated by alpha, so their lub is alpha.
 */
std::vector<IntTuple> Semigroup::members_by_lub(const Box& box) const {
    require_length(box.lower(), m(), "box");
    std::vector<IntTuple> out;
    std::vector<bool> attained(m());
    box.for_each([&](const IntTuple& alpha) {
        if (alpha.sum() < 0) return;
        std::fill(attained.begin(), attained.end(), false);
        std::size_t hits = 0;
        enumerate_gamma_below(alpha, [&](const IntTuple& b) {
            for (std::size_t i = 0; i < m(); ++i)
                if (!attained[i] && b[i] == alpha[i]) {
                    attained[i] = true;
                    ++hits;
                }
        });
        if (hits == m()) out.push_back(alpha);
    });
    return out;
}

std::vector<IntTuple> Semigroup::rr_basis_exponents(const IntTuple& alpha) const {
    std::map<Int, IntTuple> least;
    enumerate_gamma_below(alpha, [&](const IntTuple& b) {
        auto [it, inserted] = least.emplace(b[m() - 1], b);
        if (!inserted && b < it->second) it->second = b;
    });
    std::vector<IntTuple> out;
    out.reserve(least.size());
    for (auto& [key, rep] : least) out.push_back(std::move(rep));
    std::sort(out.begin(), out.end());
    return out;
}

Int Semigroup::sigma2(const Int& j) const {
    if (m() != 2) throw std::invalid_argument("sigma functions need m = 2");
    // |(j,t)| >= 2g forces membership, so the scan stops by t = 2g - j
    const Int stop = Int(2 * desc_.genus()) - j;
    for (Int t = -j; t <= stop; ++t)
        if (member(IntTuple(std::vector<Int>{j, t}))) return t;
    throw std::domain_error("sigma2(" + j.get_str() + "): no member found up to |alpha| = 2g");
}

Int Semigroup::sigma1(const Int& t) const {
    if (m() != 2) throw std::invalid_argument("sigma functions need m = 2");
    const Int stop = Int(2 * desc_.genus()) - t;
    for (Int s = -t; s <= stop; ++s)
        if (member(IntTuple(std::vector<Int>{s, t}))) return s;
    throw std::domain_error("sigma1(" + t.get_str() + "): no member found up to |alpha| = 2g");
}

TwoPointProfile Semigroup::sigma_profile() const {
    if (m() != 2) throw std::invalid_argument("sigma_profile needs m = 2, description has m = " + std::to_string(m()));
    TwoPointProfile p;
    p.a = desc_.lattice().period(0);
    for (Int j = 0; j < p.a; ++j) {
        Int t = sigma2(j);
        if (sigma1(t) != j)
            throw std::domain_error("sigma1(sigma2(" + j.get_str() + ")) = " + sigma1(t).get_str() + " != " + j.get_str());
        p.sigma2.push_back(t);
    }
    return p;
}

std::size_t Semigroup::cache_size() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->ell.size();
}

void Semigroup::clear_cache() const {
    std::unique_lock lock(cache_->mutex);
    cache_->ell.clear();
}

std::vector<std::vector<std::size_t>> proper_subsets(std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned long mask = 1; mask + 1 < (1UL << m); ++mask) {
        std::vector<std::size_t> J;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1UL << i)) J.push_back(i);
        out.push_back(std::move(J));
    }
    return out;
}

}  // namespace wsg
