#include "wsg/int_tuple.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wsg {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("ceil_div: division by zero");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int parse_int(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty integer");
    s = s.substr(first, last - first + 1);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

IntTuple::IntTuple(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

Int IntTuple::sum() const {
    Int s = 0;
    for (const auto& c : coords_) s += c;
    return s;
}

IntTuple& IntTuple::operator+=(const IntTuple& other) {
    require_length(other, size());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

IntTuple& IntTuple::operator-=(const IntTuple& other) {
    require_length(other, size());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

IntTuple IntTuple::operator-() const {
    IntTuple r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

IntTuple operator*(const Int& k, const IntTuple& a) {
    IntTuple r(a);
    for (auto& c : r.coords_) c *= k;
    return r;
}

bool operator==(const IntTuple& a, const IntTuple& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coords_[i] != b.coords_[i]) return false;
    return true;
}

bool operator<(const IntTuple& a, const IntTuple& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

std::string IntTuple::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += coords_[i].get_str();
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const IntTuple& t) { return os << t.to_string(); }

bool leq(const IntTuple& a, const IntTuple& b) {
    require_length(b, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void require_length(const IntTuple& a, std::size_t m, std::string_view what) {
    if (a.size() != m) {
        std::ostringstream msg;
        msg << what << " " << a << " has length " << a.size() << ", expected " << m;
        throw std::invalid_argument(msg.str());
    }
}

IntTuple unit_tuple(std::size_t m, const std::vector<std::size_t>& indices) {
    IntTuple t(m);
    for (std::size_t j : indices) {
        if (j >= m) throw std::out_of_range("unit_tuple: index " + std::to_string(j) + " outside 0.." +
                                            std::to_string(m - 1));
        t[j] = 1;
    }
    return t;
}

IntTuple ones(std::size_t m) {
    IntTuple t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = 1;
    return t;
}

IntTuple basis_vector(std::size_t m, std::size_t i) { return unit_tuple(m, {i}); }

IntTuple lub(const std::vector<IntTuple>& tuples) {
    if (tuples.empty()) throw std::invalid_argument("lub of an empty list");
    IntTuple r = tuples.front();
    for (const auto& t : tuples) {
        require_length(t, r.size(), "lub operand");
        for (std::size_t i = 0; i < r.size(); ++i)
            if (t[i] > r[i]) r[i] = t[i];
    }
    return r;
}

IntTuple parse_tuple(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) throw std::invalid_argument("empty tuple");
    std::vector<Int> coords;
    std::size_t pos = 0;
    while (true) {
        auto comma = s.find(',', pos);
        coords.push_back(parse_int(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return IntTuple(std::move(coords));
}

std::size_t IntTupleHash::operator()(const IntTuple& t) const noexcept {
    std::size_t h = t.size();
    for (const auto& c : t) {
        std::size_t v = static_cast<std::size_t>(mpz_get_si(c.get_mpz_t()));
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Box::Box(IntTuple lower, IntTuple upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    require_length(upper_, lower_.size(), "box upper corner");
    if (lower_.size() == 0) throw std::invalid_argument("box of dimension 0");
    if (!leq(lower_, upper_))
        throw std::invalid_argument("box lower corner " + lower_.to_string() + " exceeds upper corner " +
                                    upper_.to_string());
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        Int extent = upper_[i] - lower_[i] + 1;
        if (!extent.fits_ulong_p()) {
            extents_.clear();
            return;
        }
        extents_.push_back(extent.get_ui());
    }
}

Box Box::cube(std::size_t m, long lo, long hi) {
    IntTuple l(m), u(m);
    for (std::size_t i = 0; i < m; ++i) {
        l[i] = lo;
        u[i] = hi;
    }
    return Box(std::move(l), std::move(u));
}

Int Box::point_count() const {
    Int n = 1;
    for (std::size_t i = 0; i < lower_.size(); ++i) n *= upper_[i] - lower_[i] + 1;
    return n;
}

bool Box::contains(const IntTuple& a) const {
    return a.size() == lower_.size() && leq(lower_, a) && leq(a, upper_);
}

std::size_t Box::index_of(const IntTuple& a) const {
    if (extents_.size() != lower_.size() || !point_count().fits_ulong_p())
        throw std::length_error("box too large to index");
    if (!contains(a)) throw std::out_of_range("point " + a.to_string() + " outside box " + to_string());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int off = a[i] - lower_[i];
        idx = idx * extents_[i] + off.get_ui();
    }
    return idx;
}

IntTuple Box::point_at(std::size_t index) const {
    if (extents_.size() != lower_.size()) throw std::length_error("box too large to index");
    IntTuple a(lower_.size());
    for (std::size_t i = lower_.size(); i-- > 0;) {
        a[i] = lower_[i] + Int(static_cast<unsigned long>(index % extents_[i]));
        index /= extents_[i];
    }
    return a;
}

void Box::for_each(const std::function<void(const IntTuple&)>& visit) const {
    IntTuple cur = lower_;
    const std::size_t m = cur.size();
    while (true) {
        visit(cur);
        std::size_t i = m;
        while (i-- > 0) {
            if (cur[i] < upper_[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lower_[i];
            if (i == 0) return;
        }
    }
}

Box Box::parse(std::string_view text) {
    std::vector<Int> lo, hi;
    std::string s(text);
    std::size_t pos = 0;
    while (true) {
        auto comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto dots = part.find("..");
        if (dots == std::string::npos) throw std::invalid_argument("box range '" + part + "' lacks '..'");
        lo.push_back(parse_int(part.substr(0, dots)));
        hi.push_back(parse_int(part.substr(dots + 2)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Box(IntTuple(std::move(lo)), IntTuple(std::move(hi)));
}

std::string Box::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (i) out += ',';
        out += lower_[i].get_str() + ".." + upper_[i].get_str();
    }
    return out;
}

}  // namespace wsg
