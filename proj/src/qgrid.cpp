#include "qsolve/qgrid.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "qsolve/errors.hpp"

namespace qsolve {

void PathSpec::validate(const DegreeTable& deg) const {
    if (vertices.empty()) throw Error("empty path");
    if (vertices.front() != Vertex{0, 0}) throw Error("path must start at (0,0)");
    for (size_t i = 0; i < vertices.size(); ++i) {
        auto [a, s] = vertices[i];
        if (!deg.in_region(a, s)) throw Error("path vertex outside Young-diagram region");
        if (i > 0) {
            auto [pa, ps] = vertices[i - 1];
            bool step_a = (a == pa + 1 && s == ps);
            bool step_s = (a == pa && s == ps + 1);
            if (!step_a && !step_s) throw Error("path steps must increase a or s by one");
        }
    }
    auto [ea, es] = vertices.back();
    if (deg.M(ea, es) != 0) throw Error("path must end on the upper-right boundary (M=0)");
}

std::string PathSpec::to_string() const {
    std::string s;
    for (auto& [a, b] : vertices) {
        if (!s.empty()) s += "->";
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return s;
}

PathSpec choose_path(const DegreeTable& deg) {
    // g[v] = cost of the cheapest monotone continuation starting at v
    // (counting M of every vertex from v on); boundary vertices cost 0.
    std::map<Vertex, long> g;
    auto verts = deg.vertices();
    // process in decreasing a+s so successors are done first
    std::sort(verts.begin(), verts.end(), [](auto& x, auto& y) {
        return x.first + x.second > y.first + y.second;
    });
    const long INF = std::numeric_limits<long>::max() / 4;
    for (auto& v : verts) {
        auto [a, s] = v;
        if (deg.M(a, s) == 0) {
            g[v] = 0;
            continue;
        }
        long best = INF;
        if (deg.in_region(a + 1, s)) best = std::min(best, g.at({a + 1, s}));
        if (deg.in_region(a, s + 1)) best = std::min(best, g.at({a, s + 1}));
        g[v] = best >= INF ? INF : deg.M(a, s) + best;
    }
    PathSpec path;
    Vertex cur{0, 0};
    path.vertices.push_back(cur);
    while (deg.M(cur.first, cur.second) != 0) {
        Vertex up{cur.first + 1, cur.second};
        Vertex right{cur.first, cur.second + 1};
        long cu = deg.in_region(up.first, up.second) ? g.at(up) : std::numeric_limits<long>::max() / 4;
        long cr = deg.in_region(right.first, right.second) ? g.at(right) : std::numeric_limits<long>::max() / 4;
        cur = (cu <= cr) ? up : right;  // tie prefers increasing a
        path.vertices.push_back(cur);
    }
    return path;
}

RelationSpec RelationSpec::parse(const std::string& text) {
    if (text == "full") return full();
    if (text == "minimal") return minimal();
    if (text.rfind("rect:", 0) == 0) {
        auto rest = text.substr(5);
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw MalformedInput("rectangle relations need rect:N,S");
        try {
            return rectangle(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
        } catch (...) {
            throw MalformedInput("bad rectangle bounds: " + rest);
        }
    }
    throw MalformedInput("unknown relation mode: " + text);
}

std::string RelationSpec::to_string() const {
    switch (mode) {
        case RelationMode::Full: return "full";
        case RelationMode::Minimal: return "minimal";
        case RelationMode::Rectangle:
            return "rect:" + std::to_string(rect_a) + "," + std::to_string(rect_s);
    }
    return "full";
}

QGrid::QGrid(const Partition& lam, const PathSpec& path, const std::vector<Rational>& inhom)
    : deg_(lam), path_(path), inhom_(inhom) {
    path_.validate(deg_);
    if (!inhom_.empty() && static_cast<int>(inhom_.size()) != deg_.length()) throw BadInhomogeneityCount();

    // Q_{0,0} = u^L, or Π (u − χ_i) with inhomogeneities
    UPolyQ q00 = UPolyQ::one();
    if (inhom_.empty()) {
        q00 = UPolyQ::monomial(static_cast<size_t>(deg_.length()));
    } else {
        for (auto& chi : inhom_) q00 = q00 * UPolyQ(std::vector<Rational>{-chi, Rational(1)});
    }
    entries_[{0, 0}] = QEntry{{0, 0}, QStatus::Fixed, q00.map_coeffs([](const Rational& c) { return MPoly(c); })};

    // the whole upper-right boundary is fixed to 1
    for (auto& v : deg_.vertices()) {
        if (v == Vertex{0, 0}) continue;
        if (deg_.M(v.first, v.second) == 0)
            entries_[v] = QEntry{v, QStatus::Fixed, UPoly<MPoly>::one()};
    }

    // monic ansatz with fresh coefficients along the path
    for (auto& v : path_.vertices) {
        if (entries_.count(v)) continue;  // (0,0) and boundary vertices
        int m = deg_.M(v.first, v.second);
        std::vector<MPoly> coeffs(static_cast<size_t>(m) + 1);
        for (int k = 0; k < m; ++k) {
            size_t idx = syms_.add(SymbolId{v.first, v.second, k});
            coeffs[static_cast<size_t>(k)] = MPoly::var(static_cast<uint32_t>(idx));
        }
        coeffs[static_cast<size_t>(m)] = MPoly(Rational(1));
        entries_[v] = QEntry{v, QStatus::Ansatz, UPoly<MPoly>(std::move(coeffs))};
    }
}

void QGrid::select_relations(const RelationSpec& spec) {
    int bound_a = 0, bound_s = 0;
    switch (spec.mode) {
        case RelationMode::Full:
            bound_a = bound_s = std::numeric_limits<int>::max() / 2;
            break;
        case RelationMode::Minimal:
            bound_a = bound_s = minimal_symmetric_hook(deg_.partition());
            break;
        case RelationMode::Rectangle:
            bound_a = spec.rect_a;
            bound_s = spec.rect_s;
            break;
    }
    // the ansatz (non-fixed path vertices and the origin) must live inside
    for (auto& v : path_.vertices) {
        if (entries_.at(v).status == QStatus::Fixed && v != Vertex{0, 0}) continue;
        if (v.first > bound_a || v.second > bound_s)
            throw RegionExcludesPath("path vertex (" + std::to_string(v.first) + "," + std::to_string(v.second) +
                                     ") outside relation region");
    }
    region_.plaquettes.clear();
    for (auto& p : deg_.plaquettes())
        if (p.first + 1 <= bound_a && p.second + 1 <= bound_s) region_.plaquettes.push_back(p);
    region_selected_ = true;
}

std::set<Vertex> QGrid::region_vertices() const {
    std::set<Vertex> vs(path_.vertices.begin(), path_.vertices.end());
    for (auto& [a, s] : region_.plaquettes) {
        vs.insert({a, s});
        vs.insert({a + 1, s});
        vs.insert({a, s + 1});
        vs.insert({a + 1, s + 1});
    }
    return vs;
}

void QGrid::add_equation(MPoly p, bool consistency, Vertex plaq, int idx) {
    if (p.is_zero()) return;
    std::string key = p.normalized().to_string();
    if (!eq_keys_.insert(key).second) return;
    eqs_.push_back(Equation{std::move(p), consistency, plaq, idx});
}

void QGrid::propagate(bool emit_consistency) {
    if (!region_selected_) select_relations(RelationSpec::full());
    std::vector<Vertex> pending = region_.plaquettes;
    std::vector<bool> done(pending.size(), false);
    size_t remaining = pending.size();

    auto known = [&](int a, int s) { return entries_.count({a, s}) > 0; };

    bool progressed = true;
    while (remaining > 0 && progressed) {
        progressed = false;
        for (size_t i = 0; i < pending.size(); ++i) {
            if (done[i]) continue;
            auto [a, s] = pending[i];
            bool k_ll = known(a, s), k_ur = known(a + 1, s + 1);
            bool k_ul = known(a + 1, s), k_lr = known(a, s + 1);
            if (!k_ll || !k_ur) continue;
            int n_off = (k_ul ? 1 : 0) + (k_lr ? 1 : 0);
            if (n_off == 0) continue;

            const UPoly<MPoly>& f = entries_.at({a, s}).poly;          // larger degree
            const UPoly<MPoly>& g = entries_.at({a + 1, s + 1}).poly;  // smaller degree
            int mf = deg_.M(a, s), mg = deg_.M(a + 1, s + 1);
            UPoly<MPoly> w = wronskian(f, g);
            // leading coefficient is the exact rational (mf − mg) = hook length
            // of box (a+1, s+1); the u^{mf+mg} terms cancel identically
            assert(w.degree() == mf + mg - 1);
            assert(w.lc().is_constant());
            Rational lead = w.lc().constant_value();
            assert(lead == Rational(mf - mg));
            UPoly<MPoly> wm = w.scaled(lead.inv());

            if (n_off == 2) {
                if (!emit_consistency) {
                    done[i] = true;
                    --remaining;
                    progressed = true;
                    continue;
                }
                UPoly<MPoly> expected = entries_.at({a + 1, s}).poly * entries_.at({a, s + 1}).poly;
                UPoly<MPoly> diff = wm - expected;
                for (size_t k = 0; k < static_cast<size_t>(diff.degree()) + 1 && !diff.is_zero(); ++k)
                    add_equation(diff.coeff(k), true, {a, s}, static_cast<int>(k));
                done[i] = true;
                --remaining;
                progressed = true;
                continue;
            }

            // exactly one off-diagonal unknown: derive it by the quotient trick
            Vertex unknown_v = k_ul ? Vertex{a, s + 1} : Vertex{a + 1, s};
            Vertex known_v = k_ul ? Vertex{a + 1, s} : Vertex{a, s + 1};
            const UPoly<MPoly>& divisor = entries_.at(known_v).poly;
            auto [quo, rem] = divmod_monic(wm, divisor);
            assert(quo.is_monic());
            assert(quo.degree() == deg_.M(unknown_v.first, unknown_v.second));
            for (size_t k = 0; k < static_cast<size_t>(rem.degree()) + 1 && !rem.is_zero(); ++k)
                add_equation(rem.coeff(k), false, {a, s}, static_cast<int>(k));
            entries_[unknown_v] = QEntry{unknown_v, QStatus::Derived, std::move(quo)};
            done[i] = true;
            --remaining;
            progressed = true;
        }
    }
    if (remaining > 0) throw StuckPropagation();
    for (auto& v : region_vertices())
        if (!entries_.count(v)) throw StuckPropagation("region vertex left unpopulated");
    propagated_ = true;
}

const QEntry& QGrid::entry(const Vertex& v) const {
    auto it = entries_.find(v);
    if (it == entries_.end()) throw Error("Q-function not populated at requested vertex");
    return it->second;
}

std::vector<Vertex> QGrid::ansatz_vertices() const {
    std::vector<Vertex> out;
    for (auto& v : path_.vertices)
        if (entries_.at(v).status == QStatus::Ansatz) out.push_back(v);
    return out;
}

std::vector<MPoly> QGrid::system_equations() const {
    std::vector<size_t> idx(eqs_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        return eqs_[x].poly.total_degree() < eqs_[y].poly.total_degree();
    });
    std::vector<MPoly> out;
    out.reserve(idx.size());
    for (size_t i : idx) out.push_back(eqs_[i].poly);
    return out;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

UPolyQ cyclotomic(unsigned d) {
    // Φ_d = (t^d − 1) / Π_{e|d, e<d} Φ_e, exact division
    std::vector<Rational> td(d + 1, Rational(0));
    td[0] = Rational(-1);
    td[d] = Rational(1);
    UPolyQ num{std::move(td)};
    for (unsigned e : divisors(d)) {
        if (e == d) continue;
        auto [q, r] = divmod_monic(num, cyclotomic(e));
        assert(r.is_zero());
        num = q;
    }
    return num;
}

std::vector<MPoly> QGrid::momentum_split() const {
    const UPoly<MPoly>& q10 = q(1, 0);
    MPoly x = q10.eval(Rational(1, 2));
    MPoly y = q10.eval(Rational(-1, 2));
    unsigned L = static_cast<unsigned>(deg_.length());
    std::vector<MPoly> out;
    for (unsigned d : divisors(L)) {
        UPolyQ phi = cyclotomic(d);
        // homogenize: Σ_j phi_j · x^j · y^{deg−j}
        int n = phi.degree();
        // power tables
        std::vector<MPoly> xp(static_cast<size_t>(n) + 1), yp(static_cast<size_t>(n) + 1);
        xp[0] = MPoly(Rational(1));
        yp[0] = MPoly(Rational(1));
        for (int j = 1; j <= n; ++j) {
            xp[static_cast<size_t>(j)] = xp[static_cast<size_t>(j - 1)] * x;
            yp[static_cast<size_t>(j)] = yp[static_cast<size_t>(j - 1)] * y;
        }
        MPoly f;
        for (int j = 0; j <= n; ++j) {
            Rational c = phi.coeff(static_cast<size_t>(j));
            if (c.is_zero()) continue;
            f = f + (xp[static_cast<size_t>(j)] * yp[static_cast<size_t>(n - j)]).scaled(c);
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace qsolve
