#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecat/rouquier/category.hpp"

namespace hecat {

// Block matrix of degree-0 maps between two lists of summands. Only nonzero
// blocks are stored; a product is "first this, then that".
class Grid {
public:
    Grid() = default;
    Grid(std::vector<int> row_ranks, std::vector<int> col_ranks, int nvars);

    int rows() const { return static_cast<int>(row_ranks_.size()); }
    int cols() const { return static_cast<int>(col_ranks_.size()); }
    const std::vector<int>& row_ranks() const { return row_ranks_; }
    const std::vector<int>& col_ranks() const { return col_ranks_; }
    int nvars() const { return nvars_; }
    const std::map<std::pair<int, int>, PolyMatrix>& blocks() const { return blocks_; }

    // nullptr for a zero block
    const PolyMatrix* get(int a, int b) const;
    PolyMatrix block(int a, int b) const;
    void add(int a, int b, const PolyMatrix& m);
    void set(int a, int b, const PolyMatrix& m);
    bool is_zero() const { return blocks_.empty(); }

    Grid& operator+=(const Grid& g);
    Grid& operator-=(const Grid& g);
    Grid scaled(const mpq_class& c) const;
    friend Grid operator*(const Grid& a, const Grid& b);
    friend Grid operator+(Grid a, const Grid& b) { return a += b; }
    friend Grid operator-(Grid a, const Grid& b) { return a -= b; }
    friend bool operator==(const Grid& a, const Grid& b) {
        return a.row_ranks_ == b.row_ranks_ && a.col_ranks_ == b.col_ranks_ && a.blocks_ == b.blocks_;
    }

private:
    std::vector<int> row_ranks_, col_ranks_;
    int nvars_ = 0;
    std::map<std::pair<int, int>, PolyMatrix> blocks_;
};

// Bounded complex of Soergel bimodules with indecomposable summands.
// terms[i] sits in homological degree lo + i; diff[i] : terms[i] -> terms[i+1].
struct BimoduleComplex {
    CategoryPtr cat;
    int lo = 0;
    std::vector<std::vector<Summand>> terms;
    std::vector<Grid> diff;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool is_zero() const { return terms.empty(); }
    // Summands in degree i (empty outside the range).
    const std::vector<Summand>& at(int i) const;
    std::vector<int> ranks(int i) const;
    // The differential leaving degree i (zero grid outside the range).
    Grid d(int i) const;
    Grid identity(int i) const;
    int summand_count() const;

    // d o d == 0, exactly
    bool check_d_squared() const;
    // Drops empty terms at both ends.
    void trim();
    std::string str() const;
    nlohmann::json to_json() const;
};

// A family of maps C_i -> D_{i+degree}.
struct ChainMap {
    int degree = 0;
    std::map<int, Grid> comp;

    Grid at(const BimoduleComplex& C, const BimoduleComplex& D, int i) const;
    static ChainMap identity(const BimoduleComplex& C);
};

// f then g, where f starts at C
ChainMap compose(const BimoduleComplex& C, const ChainMap& f, const ChainMap& g);
ChainMap add(const BimoduleComplex& C, const ChainMap& f, const ChainMap& g, const BimoduleComplex& D);
bool is_chain_map(const BimoduleComplex& C, const ChainMap& f, const BimoduleComplex& D);
// Every block a degree-0 bimodule map between the shifted ambients.
bool blocks_are_morphisms(const BimoduleComplex& C, const ChainMap& f, const BimoduleComplex& D);

// phi : C -> D, psi : D -> C with
//   phi psi - id_C = d h_C + h_C d,   psi phi - id_D = d h_D + h_D d.
struct HomotopyCertificate {
    BimoduleComplex C, D;
    ChainMap phi, psi, hC, hD;

    // Checks every identity exactly; `why` receives the first failure.
    bool verify(std::string* why = nullptr) const;
    nlohmann::json to_json() const;
};

BimoduleComplex unit_complex(CategoryPtr cat);
// F(sigma_s) = [B_s -> R<1>] in degrees 0, 1 (multiplication);
// F(sigma_s^-1) = [R<-1> -> B_s] in degrees -1, 0.
BimoduleComplex rouquier_complex(CategoryPtr cat, int s, int sign);
// Total complex with Koszul signs, terms split into indecomposables.
BimoduleComplex tensor_complexes(const BimoduleComplex& C, const BimoduleComplex& D);
HeckeElem k0_class(const BimoduleComplex& C);

// Removes every differential component between equal summands that is a
// nonzero multiple of the identity, lowest degree and index first.
std::pair<BimoduleComplex, HomotopyCertificate> gaussian_eliminate(const BimoduleComplex& C);
bool is_minimal(const BimoduleComplex& C);

// Braid words: "s1 s2^-1 s1", "e" or "" for the empty word.
std::vector<std::pair<int, int>> parse_braid_word(std::string_view text, int rank);
std::string braid_word_str(const std::vector<std::pair<int, int>>& word);
BimoduleComplex braid_complex(CategoryPtr cat, const std::vector<std::pair<int, int>>& word);

struct BraidCheck {
    bool equivalent = false;
    BimoduleComplex lhs_min, rhs_min;
    std::optional<HomotopyCertificate> certificate;
    std::string reason;
};

// Minimal complexes are compared summand by summand and an invertible chain
// map between them is solved for; the certificate relates the unminimized
// tensor products.
BraidCheck braid_certify(CategoryPtr cat, const std::vector<std::pair<int, int>>& lhs,
                         const std::vector<std::pair<int, int>>& rhs, uint64_t seed = 1);

}  // namespace hecat
