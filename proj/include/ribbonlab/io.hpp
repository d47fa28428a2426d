#ifndef RIBBONLAB_IO_HPP
#define RIBBONLAB_IO_HPP

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <ribbonlab/cohomology.hpp>
#include <ribbonlab/error.hpp>
#include <ribbonlab/fredholm.hpp>
#include <ribbonlab/geometry.hpp>
#include <ribbonlab/laurent.hpp>
#include <ribbonlab/local2d.hpp>
#include <ribbonlab/schur.hpp>

// JSON encodings. nlohmann::json objects keep keys sorted, so every dump is
// canonical.
namespace ribbonlab::io
{

using json = nlohmann::json;

namespace detail
{

template <class F> auto guarded(const std::string &what, F &&f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception &e) {
        throw error(errc::malformed_input, what + ": " + e.what());
    }
}

inline const json &member(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw error(errc::malformed_input, std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

} // namespace detail

inline json to_json(const LaurentPoly &p)
{
    json coeffs = json::array();
    for (const auto &[e, c] : p.terms()) {
        coeffs.push_back(json::array({e, c.to_string()}));
    }
    return json{{"field", p.field().name()}, {"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const json &j, const Field &expected)
{
    return detail::guarded("LaurentPoly", [&] {
        const auto f = Field::parse(detail::member(j, "field").get<std::string>());
        require_same_field(expected, f);
        LaurentPoly p(f);
        for (const auto &t : detail::member(j, "coeffs")) {
            p.add_term(t.at(0).get<int>(), Scalar::parse(f, t.at(1).get<std::string>()));
        }
        return p;
    });
}

inline json to_json(const Local2DElement &x, std::optional<std::size_t> component = std::nullopt)
{
    json terms = json::array();
    for (const auto &[e, c] : x.terms()) {
        terms.push_back(json::array({e.u, e.t, c.to_string()}));
    }
    json j{{"terms", terms}};
    if (component) {
        j["component"] = *component;
    }
    return j;
}

inline Local2DElement element_from_json(const json &j, const Field &f)
{
    return detail::guarded("Local2DElement", [&] {
        Local2DElement x(f);
        for (const auto &t : detail::member(j, "terms")) {
            x.add_term(t.at(0).get<int>(), t.at(1).get<int>(), Scalar::parse(f, t.at(2).get<std::string>()));
        }
        return x;
    });
}

// A vector of K^{⊕r} as its nonzero components, numbered from 1.
inline json to_json(const Local2DVector &v)
{
    json out = json::array();
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (!v[c].is_zero()) {
            out.push_back(to_json(v[c], c + 1));
        }
    }
    return out;
}

inline Local2DVector vector_from_json(const json &j, const Field &f, std::size_t r)
{
    return detail::guarded("vector", [&] {
        Local2DVector v(r, Local2DElement(f));
        for (const auto &e : j) {
            const auto c = e.contains("component") ? e.at("component").get<std::size_t>() : std::size_t{1};
            if (c < 1 || c > r) {
                throw error(errc::malformed_input, "component " + std::to_string(c) + " out of range");
            }
            v[c - 1] = v[c - 1] + element_from_json(e, f);
        }
        return v;
    });
}

inline json to_json(const Window2D &w)
{
    return json{{"t_lo", w.t_lo}, {"t_hi", w.t_hi}, {"u_lo", w.u_lo},
                {"u_hi", w.u_hi}, {"m_t", w.m_t},   {"m_u", w.m_u}};
}

inline Window2D window_from_json(const json &j)
{
    return detail::guarded("window", [&] {
        return Window2D::make(detail::member(j, "t_lo").get<int>(), detail::member(j, "t_hi").get<int>(),
                              detail::member(j, "u_lo").get<int>(), detail::member(j, "u_hi").get<int>(),
                              detail::member(j, "m_t").get<int>(), detail::member(j, "m_u").get<int>());
    });
}

inline json to_json(const WindowedSubspace &W)
{
    json rows = json::array();
    for (const auto &v : W.rows()) {
        json row = json::array();
        for (const auto &p : v) {
            row.push_back(to_json(p));
        }
        rows.push_back(std::move(row));
    }
    return json{{"r", W.rank()},
                {"u_lo", W.u_lo()},
                {"u_hi", W.u_hi()},
                {"full_below", W.full_below()},
                {"rows", rows}};
}

inline WindowedSubspace windowed_from_json(const json &j, const Field &f)
{
    return detail::guarded("WindowedSubspace", [&] {
        const auto r = detail::member(j, "r").get<std::size_t>();
        std::vector<LaurentVector> rows;
        for (const auto &row : detail::member(j, "rows")) {
            LaurentVector v;
            for (const auto &p : row) {
                v.push_back(laurent_from_json(p, f));
            }
            rows.push_back(std::move(v));
        }
        return WindowedSubspace::echelonize(f, rows, r, detail::member(j, "u_lo").get<int>(),
                                            detail::member(j, "u_hi").get<int>(),
                                            detail::member(j, "full_below").get<bool>());
    });
}

inline json to_json(const LayeredSubspace &L)
{
    json levels = json::array();
    for (int b = L.window().t_lo; b < L.window().t_hi; ++b) {
        auto lj = to_json(L.level(b));
        lj["b"] = b;
        levels.push_back(std::move(lj));
    }
    json gens = json::array();
    for (const auto &g : L.generators()) {
        gens.push_back(to_json(g));
    }
    return json{{"r", L.rank()}, {"levels", levels}, {"generators", gens}};
}

inline LayeredSubspace layered_from_json(const json &j, const Field &f, const Window2D &w)
{
    return detail::guarded("LayeredSubspace", [&] {
        const auto r = detail::member(j, "r").get<std::size_t>();
        std::vector<std::optional<WindowedSubspace>> slots(static_cast<std::size_t>(w.t_width()));
        for (const auto &lj : detail::member(j, "levels")) {
            const int b = detail::member(lj, "b").get<int>();
            if (b < w.t_lo || b >= w.t_hi) {
                throw error(errc::malformed_input, "level " + std::to_string(b) + " outside the t-window");
            }
            slots[static_cast<std::size_t>(b - w.t_lo)] = windowed_from_json(lj, f);
        }
        std::vector<WindowedSubspace> levels;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (!slots[i]) {
                throw error(errc::malformed_input, "missing level " + std::to_string(w.t_lo + static_cast<int>(i)));
            }
            levels.push_back(std::move(*slots[i]));
        }
        std::vector<Local2DVector> gens;
        if (j.contains("generators")) {
            for (const auto &g : j.at("generators")) {
                gens.push_back(vector_from_json(g, f, r));
            }
        }
        return LayeredSubspace::make(f, r, w, std::move(levels), std::move(gens));
    });
}

inline json to_json(const GeometricDatum &g)
{
    json j{{"kind", cli_name(g.kind)}, {"twist", g.twist}, {"selfint", g.selfint}, {"synthetic", g.synthetic}};
    json coords = json::object();
    for (const auto &[k, v] : g.describe()) {
        coords[k] = v;
    }
    j["coordinates"] = coords;
    return j;
}

inline json pair_to_json(const SchurPair &P, const std::optional<GeometricDatum> &origin = std::nullopt)
{
    json j{{"field", P.field().name()}, {"window", to_json(P.window())}, {"A", to_json(P.A)}, {"W", to_json(P.W)}};
    if (origin) {
        j["example"] = to_json(*origin);
    }
    return j;
}

inline SchurPair pair_from_json(const json &j)
{
    return detail::guarded("pair", [&] {
        const auto f = Field::parse(detail::member(j, "field").get<std::string>());
        const auto w = window_from_json(detail::member(j, "window"));
        return SchurPair::make(layered_from_json(detail::member(j, "A"), f, w),
                               layered_from_json(detail::member(j, "W"), f, w));
    });
}

inline json to_json(const LevelIndex &li)
{
    json j{{"b", li.b}, {"interior", li.interior}, {"status_A", li.status_A}, {"status_W", li.status_W}};
    j["index_A"] = li.index_A ? json(*li.index_A) : json(nullptr);
    j["index_W"] = li.index_W ? json(*li.index_W) : json(nullptr);
    return j;
}

inline json to_json(const SchurReport &r)
{
    json levels = json::array();
    for (const auto &li : r.levels) {
        levels.push_back(to_json(li));
    }
    return json{{"unit", to_string(r.unit)},
                {"subalgebra", to_string(r.subalgebra)},
                {"module_closure", to_string(r.module_closure)},
                {"fredholm", to_string(r.fredholm)},
                {"verdict", to_string(r.verdict)},
                {"margin_adequate", r.margin_adequate},
                {"generator_radius", r.generator_radius},
                {"products_checked", r.products_checked},
                {"products_skipped", r.products_skipped},
                {"levels", levels},
                {"findings", r.findings}};
}

inline json to_json(const StackCohomology &c)
{
    json levels = json::array();
    for (const auto &l : c.levels) {
        levels.push_back(json{{"d", l.d}, {"h0", l.h0}, {"h1", l.h1}});
    }
    return json{{"h0", c.h0},
                {"h1", c.h1},
                {"levelwise_h0", c.levelwise_h0},
                {"levelwise_h1", c.levelwise_h1},
                {"block_levelwise_agree", c.agree()},
                {"levels", levels},
                {"transition_surjective", c.transition_surjective},
                {"bound", c.bound}};
}

inline json read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error(errc::malformed_input, "cannot open " + path);
    }
    return detail::guarded(path, [&] { return json::parse(in); });
}

inline void write_file(const std::string &path, const json &j)
{
    std::ofstream out(path);
    if (!out) {
        throw error(errc::invalid_argument, "cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

} // namespace ribbonlab::io

#endif
