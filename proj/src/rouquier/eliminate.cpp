#include "hecat/rouquier/complex.hpp"

namespace hecat {

namespace {

struct Pivot {
    int i = 0;  // homological degree of X
    int a = 0, b = 0;
    mpq_class c;  // d(X -> Y) = c e
};

bool find_pivot(const BimoduleComplex& C, Pivot* out) {
    for (int i = C.lo; i < C.hi(); ++i) {
        const auto& src = C.at(i);
        const auto& dst = C.at(i + 1);
        for (const auto& [ab, m] : C.diff[i - C.lo].blocks()) {
            if (src[ab.first] != dst[ab.second]) continue;
            mpq_class c;
            if (!C.cat->scalar_of(src[ab.first].w, m, &c) || sgn(c) == 0) continue;
            *out = {i, ab.first, ab.second, c};
            return true;
        }
    }
    return false;
}

int skip(int x, int removed) { return x < removed ? x : x - 1; }

struct Step {
    BimoduleComplex reduced;
    ChainMap phi, psi, h;  // phi psi - id = d h + h d on the input
};

// Cancels X = C_i[a] against Y = C_{i+1}[b] along d(X -> Y) = c e.
Step eliminate_one(const BimoduleComplex& C, const Pivot& p) {
    const auto& cat = *C.cat;
    const int n = cat.nvars();
    const int i = p.i;
    const PolyMatrix g = cat.idempotent(C.at(i)[p.a].w).scaled(1 / p.c);
    const Grid& D = C.diff[i - C.lo];

    Step st;
    BimoduleComplex& R = st.reduced;
    R.cat = C.cat;
    R.lo = C.lo;
    R.terms = C.terms;
    R.terms[i - C.lo].erase(R.terms[i - C.lo].begin() + p.a);
    R.terms[i + 1 - C.lo].erase(R.terms[i + 1 - C.lo].begin() + p.b);
    for (int k = C.lo; k < C.hi(); ++k) {
        Grid nd(R.ranks(k), R.ranks(k + 1), n);
        const Grid& od = C.diff[k - C.lo];
        for (const auto& [ab, m] : od.blocks()) {
            int r = ab.first, c = ab.second;
            if (k == i - 1) {
                if (c == p.a) continue;
                c = skip(c, p.a);
            } else if (k == i) {
                if (r == p.a || c == p.b) continue;
                r = skip(r, p.a);
                c = skip(c, p.b);
            } else if (k == i + 1) {
                if (r == p.b) continue;
                r = skip(r, p.b);
            }
            nd.add(r, c, m);
        }
        if (k == i) {
            // d' = w - v g u
            for (const auto& [ab, v] : od.blocks()) {
                if (ab.second != p.b || ab.first == p.a) continue;
                PolyMatrix vg = v * g;
                for (const auto& [ab2, u] : od.blocks()) {
                    if (ab2.first != p.a || ab2.second == p.b) continue;
                    nd.add(skip(ab.first, p.a), skip(ab2.second, p.b), (vg * u).scaled(-1));
                }
            }
        }
        R.diff.push_back(std::move(nd));
    }

    st.phi.degree = st.psi.degree = 0;
    st.h.degree = -1;
    for (int k = C.lo; k <= C.hi(); ++k) {
        Grid f(C.ranks(k), R.ranks(k), n), q(R.ranks(k), C.ranks(k), n);
        const auto& t = C.at(k);
        const int removed = k == i ? p.a : k == i + 1 ? p.b : -1;
        for (int x = 0; x < static_cast<int>(t.size()); ++x) {
            if (x == removed) continue;
            const PolyMatrix& e = cat.idempotent(t[x].w);
            f.add(x, skip(x, removed < 0 ? static_cast<int>(t.size()) : removed), e);
            q.add(skip(x, removed < 0 ? static_cast<int>(t.size()) : removed), x, e);
        }
        if (k == i) {
            // psi: A -> X is -v g
            for (const auto& [ab, v] : D.blocks())
                if (ab.second == p.b && ab.first != p.a) q.add(skip(ab.first, p.a), p.a, (v * g).scaled(-1));
        }
        if (k == i + 1) {
            // phi: Y -> B is -g u
            for (const auto& [ab, u] : D.blocks())
                if (ab.first == p.a && ab.second != p.b) f.add(p.b, skip(ab.second, p.b), (g * u).scaled(-1));
            Grid h(C.ranks(k), C.ranks(k - 1), n);
            h.add(p.b, p.a, g.scaled(-1));
            st.h.comp[k] = std::move(h);
        }
        st.phi.comp[k] = std::move(f);
        st.psi.comp[k] = std::move(q);
    }
    R.trim();
    return st;
}

}  // namespace

bool is_minimal(const BimoduleComplex& C) {
    Pivot p;
    return !find_pivot(C, &p);
}

std::pair<BimoduleComplex, HomotopyCertificate> gaussian_eliminate(const BimoduleComplex& C) {
    HomotopyCertificate cert;
    cert.C = C;
    cert.phi = ChainMap::identity(C);
    cert.psi = ChainMap::identity(C);
    cert.hC.degree = -1;
    cert.hD.degree = -1;
    BimoduleComplex cur = C;
    Pivot p;
    while (find_pivot(cur, &p)) {
        Step st = eliminate_one(cur, p);
        // H += Phi h Psi, Phi <- Phi phi, Psi <- psi Psi
        ChainMap extra = compose(C, compose(C, cert.phi, st.h), cert.psi);
        cert.hC = add(C, cert.hC, extra, C);
        cert.hC.degree = -1;
        cert.phi = compose(C, cert.phi, st.phi);
        cert.psi = compose(st.reduced, st.psi, cert.psi);
        cur = std::move(st.reduced);
    }
    cert.D = cur;
    return {cur, cert};
}

}  // namespace hecat
