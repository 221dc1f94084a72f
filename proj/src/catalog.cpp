#include "racah/catalog.hpp"

#include <stdexcept>
#include <vector>

namespace racah {

namespace {

Rat half(int n) { return Rat(n, 2); }

bool eps_valid(std::pair<int, int> e) {
    return (e.first == 1 || e.first == -1) && (e.second == 1 || e.second == -1);
}

std::string eps_str(std::pair<int, int> e) {
    std::string s;
    s += e.first == 1 ? '+' : '-';
    s += e.second == 1 ? '+' : '-';
    return s;
}

} // namespace

DerivedParams derived_params(int d, const Rat& a, const Rat& b, const Rat& c) {
    DerivedParams p;
    const Rat e = half(d + 1);
    p.sigma = a + b + c - e;
    p.tau = a + b - c - e;
    p.lambda = a - b - c - e;
    p.mu = c - a - b - e;
    p.nu = b - a - c - e;
    for (int i = 1; i <= d; i += 2) {
        const Rat t = a + b - e + Rat(i);
        p.rho[i] = c * c - t * t;
    }
    return p;
}

Rat r_delta_scalar(int d, const Rat& a, const Rat& b, const Rat& c) {
    return half(d) * (half(d) + 1) + a * (a + 1) + b * (b + 1) + c * (c + 1);
}

RacahRep build_R(int d, const Rat& a, const Rat& b, const Rat& c) {
    if (d < 0) throw std::invalid_argument("build_R: d must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    RacahRep r;
    r.dim = n;
    r.A = RatMatrix(n, n);
    r.B = RatMatrix(n, n);
    for (int i = 0; i <= d; ++i) {
        const Rat ta = a + half(d) - Rat(i);
        const Rat tb = b + half(d) - Rat(i);
        r.A.at(i, i) = ta * (ta + 1);
        r.B.at(i, i) = tb * (tb + 1);
    }
    for (int i = 1; i <= d; ++i) {
        r.A.at(i, i - 1) = 1;
        r.B.at(i - 1, i) = Rat(i) * Rat(i - d - 1) * (a + b + c + half(d) - Rat(i) + 2) *
                           (a + b - c + half(d) - Rat(i) + 1);
    }
    const Rat delta = r_delta_scalar(d, a, b, c);
    r.C = delta * RatMatrix::identity(n) - r.A - r.B;
    r.delta = delta;
    r.meta = ModuleMeta{Family::R, d, a, b, c, {1, 1}};
    return r;
}

HRep build_E(int d, const Rat& a, const Rat& b, const Rat& c) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("build_E: d must be odd for family E");
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    const DerivedParams p = derived_params(d, a, b, c);
    HRep h;
    h.dim = n;
    h.t0 = RatMatrix(n, n);
    h.t1 = RatMatrix(n, n);
    h.t0v = RatMatrix(n, n);
    h.t1v = RatMatrix(n, n);

    // Column i holds the action on the i-th basis vector.
    h.t0.at(0, 0) = -half(d + 1);
    h.t0.at(d, d) = -half(d + 1);
    for (int i = 2; i <= d - 1; i += 2) {
        h.t0.at(i - 1, i) = Rat(i) * Rat(d - i + 1);
        h.t0.at(i, i) = -half(d - 2 * i + 1);
    }
    for (int i = 1; i <= d - 2; i += 2) {
        h.t0.at(i, i) = half(d - 2 * i - 1);
        h.t0.at(i + 1, i) = 1;
    }

    h.t1.at(0, 0) = a;
    h.t1.at(1, 0) = 1;
    for (int i = 2; i <= d - 1; i += 2) {
        h.t1.at(i - 1, i) = Rat(i) * Rat(i - d - 1);
        h.t1.at(i, i) = a;
        h.t1.at(i + 1, i) = 1;
    }
    for (int i = 1; i <= d; i += 2) h.t1.at(i, i) = -a;

    for (int i = 0; i <= d - 1; i += 2) h.t0v.at(i, i) = b;
    for (int i = 1; i <= d - 2; i += 2) {
        h.t0v.at(i - 1, i) = -(p.sigma + Rat(i)) * (p.tau + Rat(i));
        h.t0v.at(i, i) = -b;
        h.t0v.at(i + 1, i) = -1;
    }
    h.t0v.at(d - 1, d) = -(p.sigma + Rat(d)) * (p.tau + Rat(d));
    h.t0v.at(d, d) = -b;

    for (int i = 0; i <= d - 1; i += 2) {
        h.t1v.at(i, i) = -(p.sigma + p.tau + Rat(2 * i + 2)) / 2;
        h.t1v.at(i + 1, i) = -1;
    }
    for (int i = 1; i <= d; i += 2) {
        h.t1v.at(i - 1, i) = (p.sigma + Rat(i)) * (p.tau + Rat(i));
        h.t1v.at(i, i) = (p.sigma + p.tau + Rat(2 * i)) / 2;
    }

    h.meta = ModuleMeta{Family::E, d, a, b, c, {1, 1}};
    return h;
}

HRep build_O(int d, const Rat& a, const Rat& b, const Rat& c) {
    if (d < 0 || d % 2 == 1) throw std::invalid_argument("build_O: d must be even for family O");
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    const DerivedParams p = derived_params(d, a, b, c);
    HRep h;
    h.dim = n;
    h.t0 = RatMatrix(n, n);
    h.t1 = RatMatrix(n, n);
    h.t0v = RatMatrix(n, n);
    h.t1v = RatMatrix(n, n);

    h.t0.at(0, 0) = p.sigma / 2;
    for (int i = 2; i <= d; i += 2) {
        h.t0.at(i - 1, i) = -Rat(i) * (p.sigma + Rat(i));
        h.t0.at(i, i) = (p.sigma + Rat(2 * i)) / 2;
    }
    for (int i = 1; i <= d - 1; i += 2) {
        h.t0.at(i, i) = -(p.sigma + Rat(2 * i + 2)) / 2;
        h.t0.at(i + 1, i) = 1;
    }

    h.t1.at(0, 0) = p.lambda / 2;
    if (d >= 1) h.t1.at(1, 0) = 1;
    for (int i = 2; i <= d - 2; i += 2) {
        h.t1.at(i - 1, i) = Rat(i) * (p.sigma + Rat(i));
        h.t1.at(i, i) = p.lambda / 2;
        h.t1.at(i + 1, i) = 1;
    }
    for (int i = 1; i <= d - 1; i += 2) h.t1.at(i, i) = -p.lambda / 2;
    if (d >= 2) {
        h.t1.at(d - 1, d) = Rat(d) * (p.sigma + Rat(d));
        h.t1.at(d, d) = p.lambda / 2;
    }

    for (int i = 0; i <= d; i += 2) h.t0v.at(i, i) = p.nu / 2;
    for (int i = 1; i <= d - 1; i += 2) {
        h.t0v.at(i - 1, i) = Rat(d - i + 1) * (p.tau + Rat(i));
        h.t0v.at(i, i) = -p.nu / 2;
        h.t0v.at(i + 1, i) = -1;
    }

    for (int i = 0; i <= d - 2; i += 2) {
        h.t1v.at(i, i) = (Rat(2 * d) + p.mu - Rat(2 * i)) / 2;
        h.t1v.at(i + 1, i) = -1;
    }
    for (int i = 1; i <= d - 1; i += 2) {
        h.t1v.at(i - 1, i) = Rat(i - d - 1) * (p.tau + Rat(i));
        h.t1v.at(i, i) = -(Rat(2 * d) + p.mu - Rat(2 * i - 2)) / 2;
    }
    h.t1v.at(d, d) = p.mu / 2;

    h.meta = ModuleMeta{Family::O, d, a, b, c, {1, 1}};
    return h;
}

HRep twist(const HRep& h, std::pair<int, int> eps) {
    if (!eps_valid(eps)) throw std::invalid_argument("twist: eps components must be +-1");
    HRep t;
    t.dim = h.dim;
    if (eps == std::pair<int, int>{1, 1}) {
        t = h;
    } else if (eps == std::pair<int, int>{1, -1}) {
        t.t0 = h.t1;
        t.t1 = h.t0;
        t.t0v = h.t1v;
        t.t1v = h.t0v;
    } else if (eps == std::pair<int, int>{-1, 1}) {
        t.t0 = h.t0v;
        t.t1 = h.t1v;
        t.t0v = h.t0;
        t.t1v = h.t1;
    } else {
        t.t0 = h.t1v;
        t.t1 = h.t0v;
        t.t0v = h.t1;
        t.t1v = h.t0;
    }
    t.meta = h.meta;
    if (t.meta) t.meta->eps = {eps.first * t.meta->eps.first, eps.second * t.meta->eps.second};
    return t;
}

HRep build_h_module(const ModuleSpec& spec) {
    if (spec.family == Family::R)
        throw std::invalid_argument("build_h_module: family R has no four-generator form");
    HRep base = spec.family == Family::E ? build_E(spec.d, spec.a, spec.b, spec.c)
                                         : build_O(spec.d, spec.a, spec.b, spec.c);
    return twist(base, spec.eps);
}

bool irreducibility_criterion(const ModuleSpec& spec) {
    std::vector<Rat> values;
    std::vector<Rat> forbidden;
    const Rat &a = spec.a, &b = spec.b, &c = spec.c;
    switch (spec.family) {
    case Family::R:
        values = {a + b + c + 1, -a + b + c, a - b + c, a + b - c};
        for (int i = 1; i <= spec.d; ++i) forbidden.push_back(half(spec.d) - Rat(i));
        break;
    case Family::E:
        values = {a + b + c, -a + b + c, a - b + c, a + b - c};
        for (int i = 0; i <= spec.d - 1; i += 2) forbidden.push_back(half(spec.d - 1) - Rat(i));
        break;
    case Family::O:
        values = {a + b + c, a - b - c, -a + b - c, -a - b + c};
        for (int i = 2; i <= spec.d; i += 2) forbidden.push_back(half(spec.d + 1) - Rat(i));
        break;
    }
    for (const Rat& v : values)
        for (const Rat& f : forbidden)
            if (v == f) return false;
    return true;
}

std::array<Rat, 4> central_scalars(const ModuleSpec& spec) {
    if (spec.family == Family::R)
        throw std::invalid_argument("central_scalars: unsupported for family R");
    std::array<Rat, 4> base;
    if (spec.family == Family::E) {
        const Rat e = half(spec.d + 1);
        base = {e * e, spec.a * spec.a, spec.b * spec.b, spec.c * spec.c};
    } else {
        const DerivedParams p = derived_params(spec.d, spec.a, spec.b, spec.c);
        const Rat s = p.sigma / 2, l = p.lambda / 2, nn = p.nu / 2, m = p.mu / 2;
        base = {s * s, l * l, nn * nn, m * m};
    }
    // Twisting relabels which generator acts by which matrix, so the four
    // scalars permute alongside the generators.
    if (spec.eps == std::pair<int, int>{1, -1}) return {base[1], base[0], base[3], base[2]};
    if (spec.eps == std::pair<int, int>{-1, 1}) return {base[2], base[3], base[0], base[1]};
    if (spec.eps == std::pair<int, int>{-1, -1}) return {base[3], base[2], base[1], base[0]};
    return base;
}

ModuleSpec parse_module_spec(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos || colon != 1)
        throw std::invalid_argument("module spec: expected '<family>:<key=value,...>'");
    ModuleSpec spec;
    switch (s[0]) {
    case 'R': spec.family = Family::R; break;
    case 'E': spec.family = Family::E; break;
    case 'O': spec.family = Family::O; break;
    default: throw std::invalid_argument("module spec: unknown family, expected R, E or O");
    }
    bool have_d = false, have_a = false, have_b = false, have_c = false, have_eps = false;
    std::string_view rest = s.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("module spec: expected key=value in '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view val = item.substr(eq + 1);
        if (key == "d") {
            const Rat dv = Rat::parse(val);
            if (!dv.is_integer() || dv.sign() < 0)
                throw std::invalid_argument("module spec: d must be a nonnegative integer");
            spec.d = static_cast<int>(dv.num().get_si());
            have_d = true;
        } else if (key == "a") {
            spec.a = Rat::parse(val);
            have_a = true;
        } else if (key == "b") {
            spec.b = Rat::parse(val);
            have_b = true;
        } else if (key == "c") {
            spec.c = Rat::parse(val);
            have_c = true;
        } else if (key == "eps") {
            if (val.size() != 2 || (val[0] != '+' && val[0] != '-') || (val[1] != '+' && val[1] != '-'))
                throw std::invalid_argument("module spec: eps must be one of ++, +-, -+, --");
            spec.eps = {val[0] == '+' ? 1 : -1, val[1] == '+' ? 1 : -1};
            have_eps = true;
        } else {
            throw std::invalid_argument("module spec: unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_d || !have_a || !have_b || !have_c)
        throw std::invalid_argument("module spec: d, a, b, c are all required");
    if (have_eps && spec.family == Family::R)
        throw std::invalid_argument("module spec: eps is not valid for family R");
    return spec;
}

std::string to_string(const ModuleSpec& spec) {
    std::string s;
    s += spec.family == Family::R ? 'R' : spec.family == Family::E ? 'E' : 'O';
    s += ":d=" + std::to_string(spec.d);
    s += ",a=" + spec.a.str();
    s += ",b=" + spec.b.str();
    s += ",c=" + spec.c.str();
    if (spec.family != Family::R) s += ",eps=" + eps_str(spec.eps);
    return s;
}

} // namespace racah
