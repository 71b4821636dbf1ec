#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <map>
#include <string>
#include <string_view>

#include "hecat/algebra/error.hpp"

namespace hecat {

enum class Var : unsigned char { q, v };

char var_char(Var x);

// Integer Laurent polynomial in one variable. Coefficients are kept in an
// ordered map without zero entries so that equality is structural.
class LaurentPoly {
public:
    using Terms = std::map<int, mpz_class>;

    explicit LaurentPoly(Var x = Var::q) : var_(x) {}
    LaurentPoly(Var x, long c);
    LaurentPoly(Var x, const mpz_class& c);

    static LaurentPoly monomial(Var x, int exponent, const mpz_class& c = 1);
    static LaurentPoly from_terms(Var x, const Terms& t);
    // "3*q^2 - q^-1", "1+q", "v^-1 - v" and similar.
    static LaurentPoly parse(std::string_view text, Var default_var = Var::q);

    Var var() const { return var_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Highest and lowest exponent; both require a nonzero polynomial.
    int degree() const;
    int low_degree() const;
    mpz_class coeff(int exponent) const;
    bool is_polynomial() const { return is_zero() || low_degree() >= 0; }

    LaurentPoly& operator+=(const LaurentPoly& b);
    LaurentPoly& operator-=(const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& b);
    LaurentPoly& operator*=(const mpz_class& c);
    // Adds c * t^e in place.
    void add_term(int exponent, const mpz_class& c);
    // Multiplies by t^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly operator-() const;

    LaurentPoly bar() const;
    mpq_class specialize(const mpq_class& t0) const;

    // q <-> v with v^2 = q^-1. to_q rejects odd exponents.
    LaurentPoly to_v() const;
    LaurentPoly to_q() const;
    LaurentPoly in(Var x) const { return x == Var::q ? to_q() : to_v(); }

    // Exponents <= 0 dropped (positive part) etc.
    LaurentPoly positive_part() const;

    std::string str() const;
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j, Var x);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

private:
    void check_var(const LaurentPoly& b) const;
    Var var_;
    Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const mpz_class& c);

// Exact quotient in Z[t, t^-1]; throws NonDivisible when b does not divide a.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

enum class LaurentOp { add, mul, div_exact };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace hecat
