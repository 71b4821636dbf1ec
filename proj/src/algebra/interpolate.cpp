#include "hecat/algebra/interpolate.hpp"

#include <algorithm>

namespace hecat {

LaurentPoly interpolate(const std::vector<Sample>& samples, int degree_bound) {
    if (degree_bound < 0) throw Error(Errc::ParseError, "negative degree bound");
    std::vector<Sample> nodes;
    std::vector<Sample> rest;
    for (const auto& s : samples) {
        auto same = std::find_if(nodes.begin(), nodes.end(), [&](const Sample& t) { return t.x == s.x; });
        if (same != nodes.end()) {
            if (same->y != s.y)
                throw Error(Errc::InconsistentSamples, "two values at x = " + s.x.get_str());
            continue;
        }
        if (static_cast<int>(nodes.size()) <= degree_bound)
            nodes.push_back(s);
        else
            rest.push_back(s);
    }
    if (static_cast<int>(nodes.size()) < degree_bound + 1)
        throw Error(Errc::InconsistentSamples, "need " + std::to_string(degree_bound + 1) + " distinct points, got " +
                                                   std::to_string(nodes.size()));

    // Newton divided differences, then expand the Newton form into monomials.
    const size_t n = nodes.size();
    std::vector<mpq_class> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = nodes[i].y;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(nodes[i].x - nodes[i - k].x);
            if (i == k) break;
        }
    std::vector<mpq_class> coef(n, 0);
    for (size_t k = n; k-- > 0;) {
        // coef <- coef * (t - x_k) + dd[k]
        for (size_t j = n - 1; j >= 1; --j) coef[j] = coef[j - 1] - coef[j] * nodes[k].x;
        coef[0] = -coef[0] * nodes[k].x;
        coef[0] += dd[k];
    }

    LaurentPoly p(Var::q);
    for (size_t j = 0; j < n; ++j) {
        mpq_class c = coef[j];
        c.canonicalize();
        if (c.get_den() != 1)
            throw Error(Errc::NonIntegerCoefficients, "coefficient of q^" + std::to_string(j) + " is " + c.get_str());
        p.add_term(static_cast<int>(j), c.get_num());
    }
    for (const auto& s : rest) {
        mpq_class got = p.specialize(mpq_class(s.x));
        if (got != mpq_class(s.y))
            throw Error(Errc::InconsistentSamples,
                        "fit " + p.str() + " gives " + got.get_str() + " at " + s.x.get_str() + ", sample is " +
                            s.y.get_str());
    }
    return p;
}

}  // namespace hecat
