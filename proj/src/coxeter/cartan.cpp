#include "hecat/coxeter/cartan.hpp"

#include <cctype>

#include "hecat/algebra/error.hpp"

namespace hecat {

namespace {

void check_factor(const CartanFactor& f) {
    bool ok = false;
    switch (f.letter) {
    case 'A': ok = f.rank >= 1; break;
    case 'B':
    case 'C': ok = f.rank >= 2; break;
    case 'D': ok = f.rank >= 3; break;
    case 'F': ok = f.rank == 4; break;
    case 'G': ok = f.rank == 2; break;
    default: break;
    }
    if (!ok) throw Error(Errc::UnsupportedType, std::string(1, f.letter) + std::to_string(f.rank));
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r = sat_mul(r, static_cast<uint64_t>(i));
    return r;
}

}  // namespace

CartanType::CartanType(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::UnsupportedType, "empty Cartan type");
    for (const auto& f : factors_) {
        check_factor(f);
        rank_ += f.rank;
    }
}

CartanType CartanType::parse(std::string_view text) {
    std::vector<CartanFactor> fs;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
        size_t j = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (j == i) throw Error(Errc::UnsupportedType, "bad Cartan type '" + std::string(text) + "'");
        fs.push_back({letter, std::stoi(std::string(text.substr(j, i - j)))});
        skip();
        if (i < text.size()) {
            if (text[i] == 'x' || text[i] == 'X' || text[i] == '*') {
                ++i;
            } else if (text.substr(i, 2) == "\xc3\x97") {  // multiplication sign
                i += 2;
            } else {
                throw Error(Errc::UnsupportedType, "bad Cartan type '" + std::string(text) + "'");
            }
            skip();
        }
    }
    return CartanType(std::move(fs));
}

std::string CartanType::str() const {
    std::string s;
    for (size_t k = 0; k < factors_.size(); ++k) {
        if (k) s += 'x';
        s += factors_[k].letter;
        s += std::to_string(factors_[k].rank);
    }
    return s;
}

bool CartanType::is_type_a() const {
    return factors_.size() == 1 && factors_[0].letter == 'A';
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
    std::vector<std::vector<int>> a(rank_, std::vector<int>(rank_, 0));
    int off = 0;
    for (const auto& f : factors_) {
        const int n = f.rank;
        for (int i = 0; i < n; ++i) a[off + i][off + i] = 2;
        auto link = [&](int i, int j, int aij, int aji) {
            a[off + i][off + j] = aij;
            a[off + j][off + i] = aji;
        };
        switch (f.letter) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -1, -2);  // last simple root short
            break;
        case 'C':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 3, n - 1, -1, -1);
            break;
        case 'F':
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            break;
        case 'G':
            link(0, 1, -1, -3);
            break;
        default: break;
        }
        off += n;
    }
    return a;
}

uint64_t CartanType::group_order() const {
    uint64_t r = 1;
    for (const auto& f : factors_) {
        const int n = f.rank;
        uint64_t o = 0;
        switch (f.letter) {
        case 'A': o = factorial(n + 1); break;
        case 'B':
        case 'C': o = sat_mul(uint64_t{1} << n, factorial(n)); break;
        case 'D': o = sat_mul(uint64_t{1} << (n - 1), factorial(n)); break;
        case 'F': o = 1152; break;
        case 'G': o = 12; break;
        default: break;
        }
        r = sat_mul(r, o);
    }
    return r;
}

}  // namespace hecat
