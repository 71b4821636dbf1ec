#include "hecat/algebra/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hecat {

char var_char(Var x) { return x == Var::q ? 'q' : 'v'; }

LaurentPoly::LaurentPoly(Var x, long c) : var_(x) {
    if (c != 0) terms_.emplace(0, mpz_class(c));
}

LaurentPoly::LaurentPoly(Var x, const mpz_class& c) : var_(x) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(Var x, int exponent, const mpz_class& c) {
    LaurentPoly p(x);
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(Var x, const Terms& t) {
    LaurentPoly p(x);
    for (const auto& [e, c] : t) p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::degree() const {
    ensure(!terms_.empty(), "degree of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
    ensure(!terms_.empty(), "low degree of zero polynomial");
    return terms_.begin()->first;
}

mpz_class LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::check_var(const LaurentPoly& b) const {
    if (var_ != b.var_ && !b.is_zero() && !is_zero())
        throw Error(Errc::VariableMismatch, std::string("cannot combine ") + var_char(var_) + " and " +
                                                var_char(b.var_) + " polynomials");
}

void LaurentPoly::add_term(int exponent, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
    check_var(b);
    if (is_zero()) var_ = b.var_;
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
    check_var(b);
    if (is_zero()) var_ = b.var_;
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
    *this = *this * b;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

mpq_class LaurentPoly::specialize(const mpq_class& t0) const {
    if (t0 == 0) throw Error(Errc::ZeroEvaluationPoint, "evaluation at 0");
    if (terms_.empty()) return 0;
    // Horner from the top exponent down to the bottom, then divide out t^low.
    int lo = low_degree();
    mpq_class acc = 0;
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = it->first; k < prev; ++k) acc *= t0;
        acc += it->second;
        prev = it->first;
    }
    mpq_class scale = 1;
    for (int k = 0; k < (lo < 0 ? -lo : lo); ++k) scale *= t0;
    mpq_class r = lo < 0 ? mpq_class(acc / scale) : mpq_class(acc * scale);
    r.canonicalize();
    return r;
}

LaurentPoly LaurentPoly::to_v() const {
    if (var_ == Var::v) return *this;
    LaurentPoly r(Var::v);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-2 * e, c);
    return r;
}

LaurentPoly LaurentPoly::to_q() const {
    if (var_ == Var::q) return *this;
    LaurentPoly r(Var::q);
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0)
            throw Error(Errc::NonIntegerCoefficients, "odd power of v in " + str() + " has no q-form");
        r.terms_.emplace(-e / 2, c);
    }
    return r;
}

LaurentPoly LaurentPoly::positive_part() const {
    LaurentPoly r(var_);
    for (auto it = terms_.upper_bound(0); it != terms_.end(); ++it) r.terms_.insert(*it);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const char x = var_char(var_);
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << '*';
        os << x;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::ParseError, "polynomial '" + std::string(s) + "': " + why);
    }
    std::string digits() {
        skip();
        size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return std::string(s.substr(j, i - j));
    }
    int signed_int() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++i;
            skip();
            if (i < s.size() && s[i] == '-') {
                neg = !neg;
                ++i;
            }
        }
        std::string d = digits();
        if (d.empty()) fail("expected exponent");
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++i;
        }
        int v = std::stoi(d);
        return neg ? -v : v;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, Var default_var) {
    Cursor cur{text};
    LaurentPoly out(default_var);
    bool var_fixed = false;
    if (cur.done()) cur.fail("empty");
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++cur.i;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        mpz_class coef = 1;
        std::string d = cur.digits();
        bool have_coef = !d.empty();
        if (have_coef) coef = mpz_class(d);
        int exponent = 0;
        char n = cur.peek();
        if (have_coef && n == '*') {
            ++cur.i;
            n = cur.peek();
        }
        if (n == 'q' || n == 'v') {
            Var x = n == 'q' ? Var::q : Var::v;
            if (var_fixed && x != out.var_) cur.fail("mixed variables");
            if (!var_fixed) {
                out.var_ = x;
                var_fixed = true;
            }
            ++cur.i;
            exponent = 1;
            if (cur.peek() == '^') {
                ++cur.i;
                exponent = cur.signed_int();
            }
        } else if (!have_coef) {
            cur.fail("expected a term");
        }
        out.add_term(exponent, sign * coef);
    }
    return out;
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        if (c.fits_slong_p())
            arr.push_back({e, c.get_si()});
        else
            arr.push_back({e, c.get_str()});
    }
    return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j, Var x) {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial JSON must be an array");
    LaurentPoly p(x);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw Error(Errc::ParseError, "term must be [exponent, coefficient]");
        int e = t[0].get<int>();
        mpz_class c = t[1].is_string() ? mpz_class(t[1].get<std::string>()) : mpz_class(t[1].get<long>());
        p.add_term(e, c);
    }
    return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var() != b.var() && !a.is_zero() && !b.is_zero())
        throw Error(Errc::VariableMismatch, "cannot multiply q and v polynomials");
    LaurentPoly r(a.is_zero() ? b.var() : a.var());
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var() != b.var() && !a.is_zero())
        throw Error(Errc::VariableMismatch, "div_exact across variables");
    if (b.is_zero()) throw Error(Errc::NonDivisible, "division by zero polynomial");
    if (a.is_zero()) return LaurentPoly(b.var());
    // Units of Z[t,t^-1] are +-t^k, so divisibility reduces to ordinary
    // long division of the normalized polynomials from the top term down.
    LaurentPoly rem = a;
    LaurentPoly quo(a.var());
    const int bd = b.degree();
    const int blo = b.low_degree();
    const mpz_class& lead = b.terms().rbegin()->second;
    const int width = bd - blo;
    while (!rem.is_zero() && rem.degree() - rem.low_degree() >= width) {
        int e = rem.degree();
        const mpz_class& c = rem.terms().rbegin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw Error(Errc::NonDivisible, a.str() + " by " + b.str());
        mpz_class k = c / lead;
        quo.add_term(e - bd, k);
        rem -= b.shifted(e - bd) * k;
    }
    if (!rem.is_zero()) throw Error(Errc::NonDivisible, a.str() + " by " + b.str());
    return quo;
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
    switch (op) {
    case LaurentOp::add: return a + b;
    case LaurentOp::mul: return a * b;
    case LaurentOp::div_exact: return div_exact(a, b);
    }
    return a;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace hecat
