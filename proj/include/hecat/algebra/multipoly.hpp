#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecat/algebra/error.hpp"

namespace hecat {

// Exponent vector packed into one word: total degree in the top byte, then
// seven bits per variable with x1 most significant. Comparing the packed
// words is graded lexicographic order and multiplying monomials is addition.
class Monomial {
public:
    static constexpr int kMaxVars = 8;
    static constexpr int kMaxExp = 127;

    Monomial() = default;
    static Monomial from_exponents(const std::vector<int>& e);
    static Monomial var(int i, int power = 1);

    int exponent(int i) const { return static_cast<int>((bits_ >> shift(i)) & 0x7f); }
    int total() const { return static_cast<int>(bits_ >> 56); }
    std::vector<int> exponents(int n) const;
    uint64_t bits() const { return bits_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient(const Monomial& divisor) const;  // requires divides
    Monomial swapped(int i, int j) const;

    friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
    friend auto operator<=>(Monomial a, Monomial b) { return a.bits_ <=> b.bits_; }

private:
    static int shift(int i) { return 49 - 7 * i; }
    uint64_t bits_ = 0;
};

// Polynomial over Q in n <= 8 variables, terms sorted by decreasing monomial.
class MultiPoly {
public:
    using Term = std::pair<Monomial, mpq_class>;

    explicit MultiPoly(int nvars = 0) : n_(nvars) {}
    MultiPoly(int nvars, const mpq_class& c);
    static MultiPoly var(int nvars, int i);
    static MultiPoly monomial(int nvars, Monomial m, const mpq_class& c = 1);

    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    mpq_class coeff(Monomial m) const;
    const Term& leading() const { return terms_.front(); }
    // Polynomial degree (sum of exponents) and homogeneity; grading degree is twice that.
    int total_degree() const;
    bool is_homogeneous() const;
    // Graded component with exponent sum k.
    MultiPoly component(int k) const;

    MultiPoly& operator+=(const MultiPoly& b);
    MultiPoly& operator-=(const MultiPoly& b);
    MultiPoly& operator*=(const mpq_class& c);
    MultiPoly operator-() const;
    void add_term(Monomial m, const mpq_class& c);

    // Variables permuted by the transposition (i j).
    MultiPoly swap_vars(int i, int j) const;
    // Variable i sent to perm[i].
    MultiPoly permute_vars(const std::vector<int>& perm) const;
    // Exact division; throws NonDivisible if d does not divide.
    MultiPoly div_exact(const MultiPoly& d) const;
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }

private:
    void normalize();  // sort and merge
    int n_;
    std::vector<Term> terms_;
};

// All monomials in n variables with exponent sum k, in decreasing order.
std::vector<Monomial> monomials_of_degree(int n, int k);

}  // namespace hecat
