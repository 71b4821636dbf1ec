#include "hecat/algebra/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace hecat {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
    if (e.size() > kMaxVars) throw Error(Errc::UnsupportedContext, "too many variables");
    Monomial m;
    uint64_t tot = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > kMaxExp) throw Error(Errc::UnsupportedContext, "exponent out of range");
        m.bits_ |= static_cast<uint64_t>(e[i]) << shift(static_cast<int>(i));
        tot += static_cast<uint64_t>(e[i]);
    }
    m.bits_ |= tot << 56;
    return m;
}

Monomial Monomial::var(int i, int power) {
    Monomial m;
    m.bits_ = (static_cast<uint64_t>(power) << shift(i)) | (static_cast<uint64_t>(power) << 56);
    return m;
}

std::vector<int> Monomial::exponents(int n) const {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = exponent(i);
    return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.bits_ = bits_ + o.bits_;
    // A carry out of any 7-bit field would show up as a field exceeding its range;
    // detect it by recomputing the total.
    int tot = 0;
    for (int i = 0; i < kMaxVars; ++i) tot += m.exponent(i);
    if (tot != m.total()) throw Error(Errc::UnsupportedContext, "monomial exponent overflow");
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exponent(i) > o.exponent(i)) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial m;
    m.bits_ = bits_ - divisor.bits_;
    return m;
}

Monomial Monomial::swapped(int i, int j) const {
    int a = exponent(i), b = exponent(j);
    Monomial m = *this;
    m.bits_ &= ~((uint64_t{0x7f} << shift(i)) | (uint64_t{0x7f} << shift(j)));
    m.bits_ |= (static_cast<uint64_t>(b) << shift(i)) | (static_cast<uint64_t>(a) << shift(j));
    return m;
}

MultiPoly::MultiPoly(int nvars, const mpq_class& c) : n_(nvars) {
    if (c != 0) terms_.emplace_back(Monomial(), c);
}

MultiPoly MultiPoly::var(int nvars, int i) { return monomial(nvars, Monomial::var(i)); }

MultiPoly MultiPoly::monomial(int nvars, Monomial m, const mpq_class& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0);
}

mpq_class MultiPoly::constant_term() const { return coeff(Monomial()); }

mpq_class MultiPoly::coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first > k; });
    return it != terms_.end() && it->first == m ? it->second : mpq_class(0);
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.total(); }

bool MultiPoly::is_homogeneous() const {
    return terms_.empty() || terms_.front().first.total() == terms_.back().first.total();
}

MultiPoly MultiPoly::component(int k) const {
    MultiPoly r(n_);
    for (const auto& t : terms_)
        if (t.first.total() == k) r.terms_.push_back(t);
    return r;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }), out.end());
    terms_ = std::move(out);
}

void MultiPoly::add_term(Monomial m, const mpq_class& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first > k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term(m, c));
    }
}

namespace {

// Merge of two descending term lists, b scaled by sign.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                   bool subtract) {
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, subtract ? mpq_class(-b[j].second) : b[j].second);
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(a[i].second - b[j].second) : mpq_class(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
    if (n_ == 0) n_ = b.n_;
    terms_ = merge(terms_, b.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
    if (n_ == 0) n_ = b.n_;
    terms_ = merge(terms_, b.terms_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(std::max(a.n_, b.n_));
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1 && b.terms_[0].first == Monomial()) return a * b.terms_[0].second;
    if (a.terms_.size() == 1 && a.terms_[0].first == Monomial()) return b * a.terms_[0].second;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [m1, c1] : a.terms_)
        for (const auto& [m2, c2] : b.terms_) r.terms_.emplace_back(m1 * m2, c1 * c2);
    r.normalize();
    return r;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
    MultiPoly r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m.swapped(i, j), c);
    r.normalize();
    return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<int>& perm) const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(n_, 0);
        for (int i = 0; i < n_; ++i) e[perm[i]] = m.exponent(i);
        r.terms_.emplace_back(Monomial::from_exponents(e), c);
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::div_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw Error(Errc::NonDivisible, "division by zero polynomial");
    MultiPoly rem(*this);
    MultiPoly quo(n_);
    const auto& [lm, lc] = d.terms_.front();
    while (!rem.is_zero()) {
        const auto& [m, c] = rem.terms_.front();
        if (!lm.divides(m)) throw Error(Errc::NonDivisible, str() + " by " + d.str());
        Monomial qm = m.quotient(lm);
        mpq_class qc = c / lc;
        quo.terms_.emplace_back(qm, qc);
        rem -= d * MultiPoly::monomial(n_, qm, qc);
    }
    return quo;  // terms were produced in decreasing order
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& point) const {
    mpq_class acc = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < m.exponent(i); ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = m.total() == 0;
        if (unit) {
            os << a.get_str();
            continue;
        }
        bool star = false;
        if (a != 1) {
            os << a.get_str();
            star = true;
        }
        for (int i = 0; i < n_; ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (star) os << '*';
            os << 'x' << (i + 1);
            if (e > 1) os << '^' << e;
            star = true;
        }
    }
    return os.str();
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    // Enumerate compositions of k into n parts.
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            e[i] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
    };
    if (n == 0) {
        if (k == 0) out.push_back(Monomial());
        return out;
    }
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace hecat
