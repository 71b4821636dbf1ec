#include "hecat/rouquier/complex.hpp"

#include <algorithm>
#include <climits>

#include "hecat/hecke/kl.hpp"

namespace hecat {

Grid::Grid(std::vector<int> row_ranks, std::vector<int> col_ranks, int nvars)
    : row_ranks_(std::move(row_ranks)), col_ranks_(std::move(col_ranks)), nvars_(nvars) {}

const PolyMatrix* Grid::get(int a, int b) const {
    auto it = blocks_.find({a, b});
    return it == blocks_.end() ? nullptr : &it->second;
}

PolyMatrix Grid::block(int a, int b) const {
    if (const PolyMatrix* m = get(a, b)) return *m;
    return PolyMatrix(row_ranks_[a], col_ranks_[b], nvars_);
}

void Grid::add(int a, int b, const PolyMatrix& m) {
    ensure(m.rows() == row_ranks_[a] && m.cols() == col_ranks_[b], "block shape mismatch");
    if (m.is_zero()) return;
    auto it = blocks_.find({a, b});
    if (it == blocks_.end()) {
        blocks_.emplace(std::make_pair(a, b), m);
        return;
    }
    it->second += m;
    if (it->second.is_zero()) blocks_.erase(it);
}

void Grid::set(int a, int b, const PolyMatrix& m) {
    blocks_.erase({a, b});
    add(a, b, m);
}

Grid& Grid::operator+=(const Grid& g) {
    ensure(row_ranks_ == g.row_ranks_ && col_ranks_ == g.col_ranks_, "grid shape mismatch");
    for (const auto& [ab, m] : g.blocks_) add(ab.first, ab.second, m);
    return *this;
}

Grid& Grid::operator-=(const Grid& g) { return *this += g.scaled(-1); }

Grid Grid::scaled(const mpq_class& c) const {
    Grid out(row_ranks_, col_ranks_, nvars_);
    if (sgn(c) == 0) return out;
    for (const auto& [ab, m] : blocks_) out.blocks_.emplace(ab, m.scaled(c));
    return out;
}

Grid operator*(const Grid& a, const Grid& b) {
    ensure(a.col_ranks_ == b.row_ranks_, "grid product shape mismatch");
    Grid out(a.row_ranks_, b.col_ranks_, a.nvars_);
    for (const auto& [ik, m] : a.blocks_)
        for (auto it = b.blocks_.lower_bound({ik.second, INT_MIN}); it != b.blocks_.end() && it->first.first == ik.second;
             ++it)
            out.add(ik.first, it->first.second, m * it->second);
    return out;
}

const std::vector<Summand>& BimoduleComplex::at(int i) const {
    static const std::vector<Summand> empty;
    if (i < lo || i > hi()) return empty;
    return terms[i - lo];
}

std::vector<int> BimoduleComplex::ranks(int i) const {
    std::vector<int> r;
    for (const auto& s : at(i)) r.push_back(cat->rank(s));
    return r;
}

Grid BimoduleComplex::d(int i) const {
    if (i >= lo && i < hi()) return diff[i - lo];
    return Grid(ranks(i), ranks(i + 1), cat->nvars());
}

Grid BimoduleComplex::identity(int i) const {
    Grid g(ranks(i), ranks(i), cat->nvars());
    const auto& t = at(i);
    for (size_t a = 0; a < t.size(); ++a) g.add(static_cast<int>(a), static_cast<int>(a), cat->idempotent(t[a].w));
    return g;
}

int BimoduleComplex::summand_count() const {
    int n = 0;
    for (const auto& t : terms) n += static_cast<int>(t.size());
    return n;
}

bool BimoduleComplex::check_d_squared() const {
    for (size_t k = 0; k + 1 < diff.size(); ++k)
        if (!(diff[k] * diff[k + 1]).is_zero()) return false;
    return true;
}

void BimoduleComplex::trim() {
    while (!terms.empty() && terms.front().empty()) {
        terms.erase(terms.begin());
        if (!diff.empty()) diff.erase(diff.begin());
        ++lo;
    }
    while (!terms.empty() && terms.back().empty()) {
        terms.pop_back();
        if (!diff.empty()) diff.pop_back();
    }
    if (terms.empty()) lo = 0;
}

std::string BimoduleComplex::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = lo; i <= hi(); ++i) {
        if (i > lo) s += " -> ";
        s += "[" + std::to_string(i) + ": ";
        const auto& t = at(i);
        if (t.empty()) s += "0";
        for (size_t a = 0; a < t.size(); ++a) s += (a ? " + " : "") + cat->tag(t[a]);
        s += "]";
    }
    return s;
}

nlohmann::json BimoduleComplex::to_json() const {
    nlohmann::json j;
    j["lo"] = lo;
    j["terms"] = nlohmann::json::array();
    for (int i = lo; i <= hi(); ++i) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& s : at(i)) t.push_back(cat->tag(s));
        j["terms"].push_back(t);
    }
    j["differentials"] = nlohmann::json::array();
    for (int i = lo; i < hi(); ++i) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& [ab, m] : diff[i - lo].blocks())
            blocks.push_back({{"from", ab.first}, {"to", ab.second}, {"matrix", m.to_json()}});
        j["differentials"].push_back({{"degree", i}, {"blocks", blocks}});
    }
    j["k0_class"] = k0_class(*this).str();
    return j;
}

Grid ChainMap::at(const BimoduleComplex& C, const BimoduleComplex& D, int i) const {
    auto it = comp.find(i);
    if (it != comp.end()) return it->second;
    return Grid(C.ranks(i), D.ranks(i + degree), C.cat->nvars());
}

ChainMap ChainMap::identity(const BimoduleComplex& C) {
    ChainMap f;
    for (int i = C.lo; i <= C.hi(); ++i) f.comp[i] = C.identity(i);
    return f;
}

namespace {

std::pair<int, int> joint_range(const BimoduleComplex& C, const BimoduleComplex& D, int shift) {
    int lo = INT_MAX, hi = INT_MIN;
    if (!C.is_zero()) {
        lo = std::min(lo, C.lo);
        hi = std::max(hi, C.hi());
    }
    if (!D.is_zero()) {
        lo = std::min(lo, D.lo - shift);
        hi = std::max(hi, D.hi() - shift);
    }
    return {lo - 1, hi + 1};
}

bool is_homotopic_identity(const BimoduleComplex& C, const ChainMap& f, const ChainMap& h, std::string* why,
                           const char* name) {
    if (C.is_zero()) return true;
    for (int i = C.lo; i <= C.hi(); ++i) {
        Grid lhs = f.at(C, C, i) - C.identity(i);
        Grid rhs = C.d(i) * h.at(C, C, i + 1) + h.at(C, C, i) * C.d(i - 1);
        if (!(lhs == rhs)) {
            if (why) *why = std::string(name) + " fails in degree " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace

ChainMap compose(const BimoduleComplex& C, const ChainMap& f, const ChainMap& g) {
    ChainMap out;
    out.degree = f.degree + g.degree;
    if (C.is_zero()) return out;
    for (int i = C.lo; i <= C.hi(); ++i) {
        auto fi = f.comp.find(i);
        auto gi = g.comp.find(i + f.degree);
        if (fi == f.comp.end() || gi == g.comp.end()) continue;
        Grid p = fi->second * gi->second;
        if (!p.is_zero()) out.comp[i] = std::move(p);
    }
    return out;
}

ChainMap add(const BimoduleComplex& C, const ChainMap& f, const ChainMap& g, const BimoduleComplex& D) {
    ensure(f.degree == g.degree, "adding maps of different degrees");
    ChainMap out;
    out.degree = f.degree;
    if (C.is_zero()) return out;
    for (int i = C.lo; i <= C.hi(); ++i) {
        Grid s = f.at(C, D, i) + g.at(C, D, i);
        if (!s.is_zero()) out.comp[i] = std::move(s);
    }
    return out;
}

bool is_chain_map(const BimoduleComplex& C, const ChainMap& f, const BimoduleComplex& D) {
    if (f.degree != 0) return false;
    auto [lo, hi] = joint_range(C, D, 0);
    for (int i = lo; i <= hi; ++i)
        if (!(C.d(i) * f.at(C, D, i + 1) == f.at(C, D, i) * D.d(i))) return false;
    return true;
}

bool blocks_are_morphisms(const BimoduleComplex& C, const ChainMap& f, const BimoduleComplex& D) {
    for (const auto& [i, g] : f.comp) {
        const auto& src = C.at(i);
        const auto& dst = D.at(i + f.degree);
        if (g.rows() != static_cast<int>(src.size()) || g.cols() != static_cast<int>(dst.size())) return false;
        for (const auto& [ab, m] : g.blocks()) {
            BimoduleMorphism mor{C.cat->ambient(src[ab.first]), D.cat->ambient(dst[ab.second]), m, 0};
            if (!mor.is_valid()) return false;
        }
    }
    return true;
}

bool HomotopyCertificate::verify(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!C.check_d_squared() || !D.check_d_squared()) return fail("d^2 != 0");
    if (!is_chain_map(C, phi, D)) return fail("phi is not a chain map");
    if (!is_chain_map(D, psi, C)) return fail("psi is not a chain map");
    if (hC.degree != -1 || hD.degree != -1) return fail("homotopies must have degree -1");
    ChainMap pp = compose(C, phi, psi);
    if (!is_homotopic_identity(C, pp, hC, why, "phi psi - id = d hC + hC d")) return false;
    ChainMap qq = compose(D, psi, phi);
    if (!is_homotopic_identity(D, qq, hD, why, "psi phi - id = d hD + hD d")) return false;
    if (!blocks_are_morphisms(C, phi, D) || !blocks_are_morphisms(D, psi, C) || !blocks_are_morphisms(C, hC, C) ||
        !blocks_are_morphisms(D, hD, D))
        return fail("a component is not a bimodule map");
    return true;
}

namespace {

nlohmann::json map_json(const ChainMap& f) {
    nlohmann::json j;
    j["degree"] = f.degree;
    j["components"] = nlohmann::json::array();
    for (const auto& [i, g] : f.comp) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& [ab, m] : g.blocks())
            blocks.push_back({{"from", ab.first}, {"to", ab.second}, {"matrix", m.to_json()}});
        j["components"].push_back({{"source_degree", i}, {"blocks", blocks}});
    }
    return j;
}

PolyMatrix normalized(PolyMatrix m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && m.at(i, j).is_constant()) return m.scaled(1 / m.at(i, j).constant_term());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return m.scaled(1 / m.at(i, j).leading().second);
    return m;
}

}  // namespace

nlohmann::json HomotopyCertificate::to_json() const {
    return {{"source", C.to_json()}, {"target", D.to_json()}, {"phi", map_json(phi)},
            {"psi", map_json(psi)},  {"h_source", map_json(hC)}, {"h_target", map_json(hD)}};
}

BimoduleComplex unit_complex(CategoryPtr cat) {
    BimoduleComplex C;
    C.cat = std::move(cat);
    C.terms = {{Summand{0, 0}}};
    return C;
}

BimoduleComplex rouquier_complex(CategoryPtr cat, int s, int sign) {
    if (s < 0 || s >= cat->group().rank()) throw Error(Errc::UnsupportedContext, "simple reflection out of range");
    if (sign != 1 && sign != -1) throw Error(Errc::ParseError, "braid generator exponent must be 1 or -1");
    const Summand Bs{cat->group().simple(s).index(), 0};
    BimoduleComplex C;
    C.cat = cat;
    Summand src = Bs, dst{0, 1};
    C.lo = 0;
    if (sign < 0) {
        src = Summand{0, -1};
        dst = Bs;
        C.lo = -1;
    }
    C.terms = {{src}, {dst}};
    const auto& basis = cat->hom0(src, dst);
    ensure(basis.size() == 1, "the Rouquier differential is not unique up to scalar");
    Grid d(C.ranks(C.lo), C.ranks(C.lo + 1), cat->nvars());
    d.add(0, 0, normalized(basis[0]));
    C.diff = {d};
    return C;
}

BimoduleComplex tensor_complexes(const BimoduleComplex& C, const BimoduleComplex& D) {
    if (C.cat != D.cat) throw Error(Errc::UnsupportedContext, "complexes over different rings");
    const auto& cat = *C.cat;
    BimoduleComplex T;
    T.cat = C.cat;
    if (C.is_zero() || D.is_zero()) return T;
    T.lo = C.lo + D.lo;
    const int hi = C.hi() + D.hi();
    T.terms.resize(hi - T.lo + 1);
    // X_a (x) Y_b in bidegree (i, j) -> its first part in term i + j and its splitting
    using Piece = std::pair<int, const Splitting*>;
    std::map<std::tuple<int, int, int, int>, Piece> where;
    for (int k = T.lo; k <= hi; ++k)
        for (int i = C.lo; i <= C.hi(); ++i) {
            const int j = k - i;
            if (j < D.lo || j > D.hi()) continue;
            const auto& Ci = C.at(i);
            const auto& Dj = D.at(j);
            auto& term = T.terms[k - T.lo];
            for (size_t a = 0; a < Ci.size(); ++a)
                for (size_t b = 0; b < Dj.size(); ++b) {
                    const Splitting& sp = cat.split_product(Ci[a].w, Dj[b].w);
                    where[{i, j, static_cast<int>(a), static_cast<int>(b)}] = {static_cast<int>(term.size()), &sp};
                    for (const auto& p : sp.parts) term.push_back({p.w, p.shift + Ci[a].shift + Dj[b].shift});
                }
        }
    for (int k = T.lo; k < hi; ++k) T.diff.emplace_back(T.ranks(k), T.ranks(k + 1), cat.nvars());

    auto connect = [&](const Piece& from, const Piece& to, const PolyMatrix& M, int k) {
        for (size_t p = 0; p < from.second->parts.size(); ++p)
            for (size_t p2 = 0; p2 < to.second->parts.size(); ++p2)
                T.diff[k - T.lo].add(from.first + static_cast<int>(p), to.first + static_cast<int>(p2),
                                     from.second->incl[p] * M * to.second->proj[p2]);
    };
    for (const auto& [key, from] : where) {
        const auto [i, j, a, b] = key;
        const Summand X = C.at(i)[a], Y = D.at(j)[b];
        const auto& ux = cat.rex(X.w);
        const auto& uy = cat.rex(Y.w);
        const Grid dC = C.d(i), dD = D.d(j);
        if (i < C.hi())
            for (const auto& [ab, f] : dC.blocks()) {
                if (ab.first != a) continue;
                const auto& ux2 = cat.rex(C.at(i + 1)[ab.second].w);
                PolyMatrix M = tensor_matrix(*cat.bs(ux), *cat.bs(ux2), f, *cat.bs(uy), *cat.bs(uy),
                                             cat.idempotent(Y.w));
                connect(from, where.at({i + 1, j, ab.second, b}), M, i + j);
            }
        if (j < D.hi())
            for (const auto& [ab, g] : dD.blocks()) {
                if (ab.first != b) continue;
                const auto& uy2 = cat.rex(D.at(j + 1)[ab.second].w);
                PolyMatrix M = tensor_matrix(*cat.bs(ux), *cat.bs(ux), cat.idempotent(X.w), *cat.bs(uy),
                                             *cat.bs(uy2), g);
                if (i % 2 != 0) M = M.scaled(-1);
                connect(from, where.at({i, j + 1, a, ab.second}), M, i + j);
            }
    }
    ensure(T.check_d_squared(), "tensor product complex has d^2 != 0");
    T.trim();
    return T;
}

HeckeElem k0_class(const BimoduleComplex& C) {
    HeckeElem h = C.cat->hecke()->zero(Var::v);
    for (int i = C.lo; i <= C.hi(); ++i)
        for (const auto& s : C.at(i)) {
            if (i % 2 == 0)
                h += C.cat->cls(s);
            else
                h -= C.cat->cls(s);
        }
    return h;
}

}  // namespace hecat
