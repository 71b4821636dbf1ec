#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "hecat/hecke/hecke.hpp"
#include "hecat/soergel/hom.hpp"

namespace hecat {

// The indecomposable Soergel bimodule B_w<shift>. It is realized as a
// summand of BS(rex(w)) cut out by a degree-0 idempotent.
struct Summand {
    uint32_t w = 0;
    int shift = 0;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

// A Karoubian object (BS(word)<shift>, idempotent) written as a direct sum of
// indecomposables: incl[a] : parts[a] -> X and proj[a] : X -> parts[a] with
// incl[a] proj[b] = delta_ab e and sum_a proj[a] incl[a] = idempotent of X.
struct Splitting {
    std::vector<Summand> parts;
    std::vector<PolyMatrix> incl, proj;
};

// Per-ring cache of indecomposables and Hom^0 spaces between them.
class SoergelCategory {
public:
    static std::shared_ptr<const SoergelCategory> create(std::shared_ptr<const PolyRingCtx> ctx);
    static std::shared_ptr<const SoergelCategory> create(std::string_view type) {
        return create(PolyRingCtx::create(type));
    }

    const PolyRingCtx& ring() const { return *ctx_; }
    std::shared_ptr<const PolyRingCtx> ring_ptr() const { return ctx_; }
    const WeylGroup& group() const { return ctx_->group(); }
    std::shared_ptr<const HeckeAlgebra> hecke() const { return alg_; }
    int nvars() const { return ctx_->nvars(); }

    const std::vector<int>& rex(uint32_t w) const;
    // BS(word), unshifted
    BimodulePtr bs(const std::vector<int>& word) const;
    // BS(rex(w))<shift>
    BimodulePtr ambient(const Summand& s) const;
    int rank(const Summand& s) const { return bs(rex(s.w))->rank(); }
    const PolyMatrix& idempotent(uint32_t w) const;
    // v^shift C_w in the v-form
    HeckeElem cls(const Summand& s) const;
    std::string tag(const Summand& s) const;

    // Linearly independent degree-0 maps a -> b (then-convention matrices).
    const std::vector<PolyMatrix>& hom0(const Summand& a, const Summand& b) const;
    // Hom^d(BS(u), BS(u')) as matrices.
    const std::vector<PolyMatrix>& bs_hom(const std::vector<int>& u, const std::vector<int>& u2, int d) const;

    // Splits (BS(word), e) whose class (unshifted, v-form) is h.
    Splitting split(const std::vector<int>& word, const PolyMatrix& e, const HeckeElem& h) const;
    // B_w1 (x) B_w2 split into indecomposables, cached.
    const Splitting& split_product(uint32_t w1, uint32_t w2) const;

    // If m = c e_w for a rational c, returns c (m must be an endomorphism of B_w).
    bool scalar_of(uint32_t w, const PolyMatrix& m, mpq_class* c) const;

private:
    explicit SoergelCategory(std::shared_ptr<const PolyRingCtx> ctx);

    std::shared_ptr<const PolyRingCtx> ctx_;
    std::shared_ptr<const HeckeAlgebra> alg_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<uint32_t, std::vector<int>> rex_;
    mutable std::map<std::vector<int>, BimodulePtr> bs_;
    mutable std::map<Summand, BimodulePtr> ambient_;
    mutable std::map<uint32_t, PolyMatrix> idem_;
    mutable std::map<std::pair<Summand, Summand>, std::vector<PolyMatrix>> hom0_;
    mutable std::map<std::tuple<std::vector<int>, std::vector<int>, int>, std::vector<PolyMatrix>> bs_hom_;
    mutable std::map<std::pair<uint32_t, uint32_t>, Splitting> products_;
};

using CategoryPtr = std::shared_ptr<const SoergelCategory>;

// h = sum_w m_w C_w; returns (w, m_w) with m_w != 0, longest w first.
std::vector<std::pair<uint32_t, LaurentPoly>> kl_expand(const HeckeElem& h);

}  // namespace hecat
