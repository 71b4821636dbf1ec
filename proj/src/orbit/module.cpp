#include "hecat/orbit/module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hecat/algebra/error.hpp"
#include "hecat/algebra/interpolate.hpp"
#include "hecat/algebra/parallel.hpp"

namespace hecat {

namespace {

std::string sname(int s) { return "s" + std::to_string(s + 1); }

// T_s coefficients at one q: samples[s][source position] = column of integers
using IntColumn = std::map<OrbitKey, long>;

struct Sampled {
    int q = 0;
    std::vector<std::vector<IntColumn>> cols;
};

Sampled sample_at(const OrbitDatum& d, const std::vector<OrbitKey>& basis, int q) {
    auto oracle = PointOracle::make(*d.oracle, q);
    const uint32_t n = d.size();
    const std::string at = " at q = " + std::to_string(q);
    if (oracle->geometric_count() != n)
        throw Error(Errc::InconsistentSamples, std::to_string(oracle->geometric_count()) + " orbits" + at + ", datum has " +
                                                   std::to_string(n));
    std::vector<uint32_t> plus(n);
    std::vector<int> pos(n, -1);
    for (uint32_t v = 0; v < n; ++v) {
        plus[v] = oracle->locate(d.reps[v]);
        uint32_t g = oracle->geometric(plus[v]);
        if (pos[g] >= 0) throw Error(Errc::InconsistentSamples, "two representatives share an orbit" + at);
        pos[g] = static_cast<int>(v);
    }
    std::vector<std::vector<uint32_t>> classes(n);
    std::vector<uint32_t> orbit_of(oracle->class_count());
    for (uint32_t c = 0; c < oracle->class_count(); ++c) {
        orbit_of[c] = static_cast<uint32_t>(pos[oracle->geometric(c)]);
        classes[orbit_of[c]].push_back(c);
    }
    std::vector<char> signed_orbit(n, 0);
    for (const auto& [v, chr] : basis)
        if (chr == 1) {
            if (classes[v].size() != 2)
                throw Error(Errc::UnsupportedContext,
                            "the oracle cannot realize the sign character on " + d.orbits[v].id + at);
            signed_orbit[v] = 1;
        }

    auto value = [&](const OrbitKey& b, uint32_t c) -> long {
        if (orbit_of[c] != b.first) return 0;
        if (b.second == 0) return 1;
        return c == plus[b.first] ? 1 : -1;
    };

    Sampled out;
    out.q = q;
    out.cols.assign(d.rank(), std::vector<IntColumn>(basis.size()));
    for (int s = 0; s < d.rank(); ++s) {
        // the case data must describe the fibers the oracle sees
        for (uint32_t v = 0; v < n; ++v) {
            std::map<uint32_t, int> count;
            count[v] += 1;
            for (uint32_t c : oracle->step(s, plus[v])) count[orbit_of[c]] += 1;
            const CaseEntry& e = d.cases[s][v];
            std::map<uint32_t, int> expect;
            switch (e.label) {
            case OrbitCase::G: expect[v] = q + 1; break;
            case OrbitCase::U: expect[e.star] = q; break;
            case OrbitCase::T:
            case OrbitCase::N: expect[e.star] = q - 1; break;
            }
            for (uint32_t a : e.aux) expect[a] = e.label == OrbitCase::N ? 2 : 1;
            if (count != expect)
                throw Error(Errc::ValidationFailed, "case data for " + sname(s) + ", " + d.orbits[v].id +
                                                        " disagree with the oracle" + at);
        }
        // (T_s f)(x) = sum_a f(s^-1 u_s(-a) x) evaluated on every rational class
        std::vector<std::map<uint32_t, long>> hist(oracle->class_count());
        for (uint32_t c = 0; c < oracle->class_count(); ++c)
            for (uint32_t y : oracle->step(s, c)) hist[c][y] += 1;
        for (size_t i = 0; i < basis.size(); ++i) {
            const OrbitKey& b = basis[i];
            std::vector<long> val(oracle->class_count(), 0);
            for (uint32_t c = 0; c < oracle->class_count(); ++c)
                for (auto [y, k] : hist[c]) val[c] += k * value(b, y);
            IntColumn& col = out.cols[s][i];
            for (uint32_t u = 0; u < n; ++u) {
                if (signed_orbit[u]) {
                    uint32_t cp = plus[u];
                    uint32_t cm = classes[u][0] == cp ? classes[u][1] : classes[u][0];
                    long sum = val[cp] + val[cm], diff = val[cp] - val[cm];
                    if (sum % 2 != 0)
                        throw Error(Errc::NonIntegerCoefficients,
                                    "half-integral character coefficient on " + d.orbits[u].id + at);
                    if (sum) col[{u, 0}] = sum / 2;
                    if (diff) col[{u, 1}] = diff / 2;
                } else {
                    for (uint32_t c : classes[u])
                        if (val[c] != val[plus[u]])
                            throw Error(Errc::InconsistentSamples,
                                        "T_" + sname(s).substr(1) + " of a basis function is not constant on " +
                                            d.orbits[u].id + at);
                    if (val[plus[u]]) col[{u, 0}] = val[plus[u]];
                }
            }
        }
    }
    return out;
}

OrbitModuleElem bar_T_s(const OrbitModule& mod, int s, const OrbitModuleElem& x) {
    // bar(T_s) = q^-1 T_s + (q^-1 - 1)
    LaurentPoly qi = LaurentPoly::monomial(Var::q, -1);
    LaurentPoly c = qi - LaurentPoly(Var::q, 1);
    OrbitModuleElem r = mod.apply_T(s, x.in(Var::q)).scaled(qi);
    r += x.in(Var::q).scaled(c);
    return x.form() == Var::v ? r.in(Var::v) : r;
}

}  // namespace

OrbitModuleElem::OrbitModuleElem(std::shared_ptr<const OrbitModule> mod, Var form)
    : mod_(std::move(mod)), form_(form) {}

LaurentPoly OrbitModuleElem::coeff(const OrbitKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentPoly(form_) : it->second;
}

void OrbitModuleElem::add(const OrbitKey& k, const LaurentPoly& c) {
    if (!mod_->has(k))
        throw Error(Errc::ParseError, "(" + std::to_string(k.first) + ", " + std::to_string(k.second) +
                                          ") is not a basis element");
    if (c.is_zero()) return;
    if (c.var() != form_) throw Error(Errc::VariableMismatch, "coefficient form differs from the element");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OrbitModuleElem& OrbitModuleElem::operator+=(const OrbitModuleElem& b) {
    if (mod_ != b.mod_) throw Error(Errc::GroupMismatch, "elements of different orbit modules");
    if (form_ != b.form_) throw Error(Errc::VariableMismatch, "adding q-form and v-form elements");
    for (const auto& [k, c] : b.terms_) add(k, c);
    return *this;
}

OrbitModuleElem& OrbitModuleElem::operator-=(const OrbitModuleElem& b) {
    if (mod_ != b.mod_) throw Error(Errc::GroupMismatch, "elements of different orbit modules");
    if (form_ != b.form_) throw Error(Errc::VariableMismatch, "adding q-form and v-form elements");
    for (const auto& [k, c] : b.terms_) add(k, -c);
    return *this;
}

OrbitModuleElem OrbitModuleElem::scaled(const LaurentPoly& c) const {
    OrbitModuleElem r(mod_, form_);
    const LaurentPoly cc = c.in(form_);
    for (const auto& [k, x] : terms_) r.add(k, x * cc);
    return r;
}

OrbitModuleElem OrbitModuleElem::in(Var form) const {
    if (form == form_) return *this;
    OrbitModuleElem r(mod_, form);
    for (const auto& [k, x] : terms_) r.terms_.emplace(k, x.in(form));
    return r;
}

std::string OrbitModuleElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.is_one() ? "" : "(" + c.str() + ")*";
        out += "m[" + mod_->key_str(k) + "]";
    }
    return out;
}

nlohmann::json OrbitModuleElem::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : terms_) j[mod_->key_str(k)] = c.str();
    return j;
}

OrbitModule::OrbitModule(std::shared_ptr<const OrbitDatum> datum)
    : datum_(std::move(datum)), hecke_(HeckeAlgebra::create(datum_->type)) {
    for (uint32_t v = 0; v < datum_->size(); ++v) basis_.emplace_back(v, 0);
}

std::shared_ptr<const OrbitModule> OrbitModule::unfitted(std::shared_ptr<const OrbitDatum> datum) {
    datum->validate();
    return std::shared_ptr<const OrbitModule>(new OrbitModule(std::move(datum)));
}

bool OrbitModule::has(const OrbitKey& k) const { return std::binary_search(basis_.begin(), basis_.end(), k); }

size_t OrbitModule::position(const OrbitKey& k) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), k);
    ensure(it != basis_.end() && *it == k, "orbit key outside the basis");
    return static_cast<size_t>(it - basis_.begin());
}

std::string OrbitModule::key_str(const OrbitKey& k) const {
    const auto& o = datum_->orbits.at(k.first);
    return k.second == 0 ? o.id : o.id + ":" + o.chars.at(k.second);
}

OrbitModuleElem OrbitModule::zero(Var form) const { return OrbitModuleElem(shared_from_this(), form); }

OrbitModuleElem OrbitModule::m(uint32_t orbit, int chr) const {
    OrbitModuleElem r = zero();
    r.add({orbit, chr}, LaurentPoly(Var::q, 1));
    return r;
}

void OrbitModule::require_fitted() const {
    if (!fitted_) throw Error(Errc::ActionNotFitted, "the orbit module has no fitted action table");
}

const OrbitModule::Column& OrbitModule::column(int s, const OrbitKey& k) const {
    require_fitted();
    if (s < 0 || s >= datum_->rank()) throw Error(Errc::ParseError, "simple reflection out of range");
    return table_[s][position(k)];
}

OrbitModuleElem OrbitModule::apply_T(int s, const OrbitModuleElem& x) const {
    require_fitted();
    OrbitModuleElem r = zero(x.form());
    for (const auto& [k, c] : x.terms())
        for (const auto& [t, a] : column(s, k)) r.add(t, c * a.in(x.form()));
    return r;
}

std::shared_ptr<const OrbitModule> fit_action(std::shared_ptr<const OrbitDatum> datum, const FitOptions& options) {
    datum->validate();
    if (!datum->oracle) throw Error(Errc::UnsupportedContext, "orbit datum has no oracle descriptor");
    std::shared_ptr<OrbitModule> mod(new OrbitModule(datum));
    mod->options_ = options;
    FitOptions& opt = mod->options_;
    if (opt.degree_bound < 0) {
        const WeylGroup& W = mod->hecke_->group();
        opt.degree_bound = W.length(W.longest().index());
    }
    std::set<int> distinct(opt.primes.begin(), opt.primes.end());
    if (static_cast<int>(distinct.size()) < opt.degree_bound + 1)
        throw Error(Errc::UnsupportedContext, "degree bound " + std::to_string(opt.degree_bound) + " needs " +
                                                  std::to_string(opt.degree_bound + 1) + " distinct sample values of q");
    if (opt.held_out <= 0 || distinct.count(opt.held_out))
        throw Error(Errc::UnsupportedContext, "a held-out q outside the sample list is required");

    if (opt.characters) {
        mod->basis_.clear();
        for (uint32_t v = 0; v < datum->size(); ++v)
            for (int c = 0; c < static_cast<int>(datum->orbits[v].chars.size()); ++c) mod->basis_.emplace_back(v, c);
    }

    std::vector<int> qs = opt.primes;
    qs.push_back(opt.held_out);
    std::vector<Sampled> samples(qs.size());
    std::vector<std::exception_ptr> errors(qs.size());
    parallel_chunks(qs.size(), thread_count(), [&](int, size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) try {
                samples[i] = sample_at(*datum, mod->basis_, qs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
    });
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    const int rank = datum->rank();
    const Sampled& held = samples.back();
    mod->table_.assign(rank, std::vector<OrbitModule::Column>(mod->basis_.size()));
    for (int s = 0; s < rank; ++s)
        for (size_t i = 0; i < mod->basis_.size(); ++i) {
            std::set<OrbitKey> support;
            for (const auto& smp : samples)
                for (const auto& [k, x] : smp.cols[s][i]) support.insert(k);
            for (const OrbitKey& k : support) {
                std::vector<Sample> pts;
                for (size_t j = 0; j + 1 < samples.size(); ++j) {
                    auto it = samples[j].cols[s][i].find(k);
                    pts.push_back({samples[j].q, it == samples[j].cols[s][i].end() ? 0 : it->second});
                }
                const std::string where =
                    sname(s) + " on " + mod->key_str(mod->basis_[i]) + " at " + mod->key_str(k);
                LaurentPoly p;
                try {
                    p = interpolate(pts, opt.degree_bound);
                } catch (const Error& e) {
                    throw Error(e.code(), where + ": " + e.detail());
                }
                auto it = held.cols[s][i].find(k);
                mpz_class expect = it == held.cols[s][i].end() ? 0 : it->second;
                if (p.specialize(mpq_class(held.q)) != mpq_class(expect))
                    throw Error(Errc::HeldOutMismatch, where + ": fit " + p.str() + " gives " +
                                                           p.specialize(mpq_class(held.q)).get_str() + " at q = " +
                                                           std::to_string(held.q) + ", oracle gives " + expect.get_str());
                if (!p.is_zero()) mod->table_[s][i].emplace(k, p);
            }
        }
    mod->fitted_ = true;

    // Fast-path law for type G: the orbit is P_s-stable and T_s acts by q.
    for (int s = 0; s < rank; ++s)
        for (size_t i = 0; i < mod->basis_.size(); ++i) {
            const OrbitKey& k = mod->basis_[i];
            if (datum->cases[s][k.first].label != OrbitCase::G || k.second != 0) continue;
            OrbitModule::Column expect{{k, LaurentPoly::monomial(Var::q, 1)}};
            ensure(mod->table_[s][i] == expect, "type G orbit where T_s does not act by q");
        }
    return mod;
}

OrbitModuleElem act(const HeckeElem& h, const OrbitModuleElem& m) {
    const OrbitModule& mod = m.module();
    if (!mod.fitted()) throw Error(Errc::ActionNotFitted, "the orbit module has no fitted action table");
    if (h.algebra().group().type().str() != mod.hecke()->group().type().str())
        throw Error(Errc::GroupMismatch, "Hecke algebra and orbit datum have different types");
    const Var form = (h.form() == Var::v || m.form() == Var::v) ? Var::v : Var::q;
    const WeylGroup& W = h.algebra().group();
    OrbitModuleElem base = m.in(form);
    OrbitModuleElem r = mod.zero(form);
    for (const auto& [w, c] : h.terms()) {
        OrbitModuleElem x = base;
        std::vector<int> word = W.reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = mod.apply_T(*it, x);
        r += x.scaled(c.in(form));
    }
    return r;
}

void OrbitModule::build_duality() const {
    require_fitted();
    const size_t n = basis_.size();
    dual_.assign(n, Column{});
    std::vector<char> done(n, 0);
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return dim(basis_[a]) < dim(basis_[b]); });
    const std::set<uint32_t> closed(datum_->closed.begin(), datum_->closed.end());
    auto self = shared_from_this();
    auto as_elem = [&](const Column& c) {
        OrbitModuleElem e(self, Var::q);
        for (const auto& [k, x] : c) e.add(k, x);
        return e;
    };

    for (size_t i : order) {
        const OrbitKey& b = basis_[i];
        const int db = dim(b);
        bool set = false;
        if (!(b.second == 0 && closed.count(b.first))) {
            // D(m_b) from T_s m_u = c m_b + (terms already known)
            for (int s = 0; s < datum_->rank() && !set; ++s)
                for (size_t j : order) {
                    const OrbitKey& u = basis_[j];
                    if (!done[j] || dim(u) >= db) continue;
                    const Column& col = table_[s][j];
                    auto hit = col.find(b);
                    if (hit == col.end()) continue;
                    bool known = true;
                    for (const auto& [k, x] : col)
                        if (k != b && !done[position(k)]) known = false;
                    if (!known) continue;
                    OrbitModuleElem rhs = bar_T_s(*this, s, as_elem(dual_[j]));
                    for (const auto& [k, x] : col)
                        if (k != b) rhs -= as_elem(dual_[position(k)]).scaled(x.bar());
                    const LaurentPoly c = hit->second.bar();
                    Column out;
                    try {
                        for (const auto& [k, x] : rhs.terms()) out.emplace(k, div_exact(x, c));
                    } catch (const Error&) {
                        throw Error(Errc::NoSelfDualBasis,
                                    "duality of " + key_str(b) + " is not integral along " + sname(s));
                    }
                    dual_[i] = std::move(out);
                    set = true;
                    break;
                }
        }
        if (!set) {
            if (b.second == 0 && !closed.count(b.first))
                throw Error(Errc::NotHeckeConnected, key_str(b) + " is not reached from a closed orbit");
            // closed orbits and cuspidal character elements
            dual_[i] = Column{{b, LaurentPoly::monomial(Var::q, -db)}};
        }
        done[i] = 1;
    }

    for (size_t i = 0; i < n; ++i) {
        OrbitModuleElem mi = m(basis_[i].first, basis_[i].second);
        OrbitModuleElem dd = zero();
        for (const auto& [k, x] : dual_[i]) dd += as_elem(dual_[position(k)]).scaled(x.bar());
        if (!(dd == mi)) throw Error(Errc::NoSelfDualBasis, "D^2 != id on " + key_str(basis_[i]));
    }
}

OrbitModuleElem OrbitModule::duality(const OrbitModuleElem& x) const {
    std::call_once(dual_once_, [this] { build_duality(); });
    OrbitModuleElem r = zero(x.form());
    for (const auto& [k, c] : x.terms())
        for (const auto& [t, d] : dual_[position(k)]) r.add(t, c.bar() * d.in(x.form()));
    return r;
}

OrbitModuleElem orbit_duality(const OrbitModuleElem& m) { return m.module().duality(m); }

OrbitModuleElem OrbitModule::klv_basis(const OrbitKey& v) const {
    if (!has(v)) throw Error(Errc::ParseError, "not a basis element");
    std::call_once(dual_once_, [this] { build_duality(); });
    Column p;
    {
        std::lock_guard<std::mutex> lock(klv_mutex_);
        auto it = klv_.find(v);
        if (it != klv_.end()) p = it->second;
    }
    if (p.empty()) {
        // Self-dual C = sum_u p_u h_u with h_u = v^{dim u} m_u, p_v = 1 and
        // p_u in v Z[v]. R_{x,y} is the h_x coefficient of D(h_y).
        auto R = [&](const OrbitKey& x, const OrbitKey& y) {
            const Column& col = dual_[position(y)];
            auto it = col.find(x);
            if (it == col.end()) return LaurentPoly(Var::v);
            return it->second.to_v().shifted(-dim(x) - dim(y));
        };
        std::vector<OrbitKey> lower;
        for (const auto& u : basis_)
            if (u != v) lower.push_back(u);
        std::stable_sort(lower.begin(), lower.end(), [&](const OrbitKey& a, const OrbitKey& b) { return dim(a) > dim(b); });
        p.emplace(v, LaurentPoly(Var::v, 1));
        for (const OrbitKey& x : lower) {
            LaurentPoly r(Var::v);
            for (const auto& [y, py] : p) r += R(x, y) * py.bar();
            if (r.is_zero()) continue;
            if (dim(x) >= dim(v) || !(r + r.bar()).is_zero() || r.coeff(0) != 0)
                throw Error(Errc::NoSelfDualBasis, "no self-dual element over " + key_str(v) + " (at " + key_str(x) + ")");
            LaurentPoly px = r.positive_part();
            ensure(px - px.bar() == r, "KLV triangular solve");
            p.emplace(x, px);
        }
        std::lock_guard<std::mutex> lock(klv_mutex_);
        klv_.emplace(v, p);
    }
    OrbitModuleElem c = zero(Var::v);
    for (const auto& [u, pu] : p) c.add(u, pu.shifted(dim(u)));
    return c;
}

LaurentPoly OrbitModule::klv_poly(const OrbitKey& u, const OrbitKey& v) const {
    OrbitModuleElem c = klv_basis(v);
    LaurentPoly x = c.coeff(u);
    if (x.is_zero()) return LaurentPoly(Var::q);
    // coefficient v^{dim v} P(q) with q = v^-2
    return x.shifted(-dim(v)).to_q();
}

void OrbitModule::check_axioms() const {
    require_fitted();
    const WeylGroup& W = hecke_->group();
    const int rank = datum_->rank();
    for (const OrbitKey& k : basis_) {
        OrbitModuleElem mk = m(k.first, k.second);
        for (int s = 0; s < rank; ++s)
            for (int t = 0; t < rank; ++t) {
                HeckeElem prod = hecke_->T(W.simple(s)) * hecke_->T(W.simple(t));
                if (!(act(prod, mk) == apply_T(s, apply_T(t, mk))))
                    throw Error(Errc::InternalInvariant,
                                "(T_" + sname(s).substr(1) + " T_" + sname(t).substr(1) + ") m != T(T m) on " + key_str(k));
                if (s >= t) continue;
                // braid relation of length m_st
                uint32_t st = W.lmul(s, W.simple(t).index()), x = 0;
                int m_st = 0;
                do {
                    x = W.mul(W.elem(x), W.elem(st)).index();
                    ++m_st;
                } while (x != 0);
                OrbitModuleElem a = mk, b = mk;
                for (int i = 0; i < m_st; ++i) {
                    a = apply_T(i % 2 ? s : t, a);
                    b = apply_T(i % 2 ? t : s, b);
                }
                if (!(a == b))
                    throw Error(Errc::InternalInvariant, "braid relation fails on " + key_str(k) + " for " + sname(s) +
                                                             ", " + sname(t));
            }
        OrbitModuleElem d = duality(mk);
        if (!(duality(d) == mk)) throw Error(Errc::NoSelfDualBasis, "D^2 != id on " + key_str(k));
        for (int s = 0; s < rank; ++s)
            if (!(duality(apply_T(s, mk)) == bar_T_s(*this, s, d)))
                throw Error(Errc::NoSelfDualBasis, "D(T_s m) != bar(T_s) D(m) on " + key_str(k) + " for " + sname(s));
    }
}

nlohmann::json OrbitModule::action_json() const {
    require_fitted();
    nlohmann::json j;
    j["type"] = datum_->type;
    j["primes"] = options_.primes;
    j["held_out"] = options_.held_out;
    j["degree_bound"] = options_.degree_bound;
    j["basis"] = nlohmann::json::array();
    for (const auto& k : basis_) j["basis"].push_back(key_str(k));
    nlohmann::json a = nlohmann::json::object();
    for (int s = 0; s < datum_->rank(); ++s) {
        nlohmann::json row = nlohmann::json::object();
        for (size_t i = 0; i < basis_.size(); ++i) {
            nlohmann::json col = nlohmann::json::object();
            for (const auto& [k, c] : table_[s][i]) col[key_str(k)] = c.str();
            row[key_str(basis_[i])] = col;
        }
        a[sname(s)] = row;
    }
    j["action"] = a;
    return j;
}

std::string OrbitModule::action_csv() const {
    require_fitted();
    std::ostringstream os;
    os << "s,source,target,coefficient\n";
    for (int s = 0; s < datum_->rank(); ++s)
        for (size_t i = 0; i < basis_.size(); ++i)
            for (const auto& [k, c] : table_[s][i])
                os << sname(s) << ',' << key_str(basis_[i]) << ',' << key_str(k) << ',' << c.str() << '\n';
    return os.str();
}

nlohmann::json OrbitModule::klv_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& v : basis_) {
        nlohmann::json col = nlohmann::json::object();
        OrbitModuleElem c = klv_basis(v);
        for (const auto& [u, x] : c.terms()) col[key_str(u)] = klv_poly(u, v).str();
        j[key_str(v)] = col;
    }
    return j;
}

}  // namespace hecat
