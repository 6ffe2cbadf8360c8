#include "psatz/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psatz {

namespace {
std::optional<unsigned> find_in(const std::vector<poly>& v, const poly& p) {
    for (unsigned i = 0; i < v.size(); ++i)
        if (v[i] == p) return i;
    return std::nullopt;
}
} // namespace

std::optional<unsigned> sign_system::find_ne(const poly& p) const { return find_in(ne, p); }
std::optional<unsigned> sign_system::find_ge(const poly& p) const { return find_in(ge, p); }
std::optional<unsigned> sign_system::find_eq(const poly& p) const { return find_in(eq, p); }

unsigned sign_system::ne_index(const poly& p) {
    if (auto i = find_ne(p)) return *i;
    return add_ne(p);
}
unsigned sign_system::ge_index(const poly& p) {
    if (auto i = find_ge(p)) return *i;
    return add_ge(p);
}
unsigned sign_system::eq_index(const poly& p) {
    if (auto i = find_eq(p)) return *i;
    return add_eq(p);
}

void sign_system::add_sign(const poly& p, int s) {
    if (s > 0) add_gt(p);
    else if (s < 0) add_lt(p);
    else eq_index(p);
}

bool sign_system::satisfied_at(const std::map<var, rat>& point) const {
    auto value = [&](const poly& p) {
        poly v = p.eval(point);
        if (!v.is_constant()) throw std::invalid_argument("satisfied_at: point leaves free variables");
        return v.constant_value();
    };
    for (auto& p : ne)
        if (sgn(value(p)) == 0) return false;
    for (auto& p : ge)
        if (sgn(value(p)) < 0) return false;
    for (auto& p : eq)
        if (sgn(value(p)) != 0) return false;
    return true;
}

std::vector<var> sign_system::all_vars() const {
    std::set<var> s;
    auto grab = [&](const std::vector<poly>& ps) {
        for (auto& p : ps)
            for (var v : p.vars()) s.insert(v);
    };
    grab(ne);
    grab(ge);
    grab(eq);
    return {s.begin(), s.end()};
}

poly incompat::expand_monoid() const {
    poly r(monoid.scalar);
    for (auto& [i, e] : monoid.factors) r = r * sys.ne.at(i).pow(e);
    return r;
}

poly incompat::expand_cone(std::size_t k) const {
    const auto& c = cone.at(k);
    poly r = c.root * c.root * c.weight;
    for (auto& [i, e] : c.factors) r = r * sys.ge.at(i).pow(e);
    return r;
}

poly incompat::expand_ideal(std::size_t k) const {
    const auto& z = ideal.at(k);
    return z.cofactor * sys.eq.at(z.index);
}

poly incompat::residual() const {
    poly r = expand_monoid();
    for (std::size_t k = 0; k < cone.size(); ++k) r += expand_cone(k);
    for (std::size_t k = 0; k < ideal.size(); ++k) r += expand_ideal(k);
    return r;
}

verify_result verify(const incompat& inc) {
    verify_result res;
    if (sgn(inc.monoid.scalar) <= 0) {
        res.diagnostic = "monoid scalar not positive";
        return res;
    }
    for (auto& [i, e] : inc.monoid.factors) {
        if (i >= inc.sys.ne.size()) {
            res.diagnostic = "monoid factor index out of range";
            return res;
        }
        if (e == 0 || e % 2 != 0) {
            res.diagnostic = "monoid exponent not a positive even number";
            return res;
        }
    }
    for (auto& c : inc.cone) {
        if (sgn(c.weight) <= 0) {
            res.diagnostic = "cone weight not positive";
            return res;
        }
        for (auto& [i, e] : c.factors) {
            if (i >= inc.sys.ge.size()) {
                res.diagnostic = "cone factor index out of range";
                return res;
            }
            if (e == 0) {
                res.diagnostic = "cone factor with zero exponent";
                return res;
            }
        }
    }
    for (auto& z : inc.ideal) {
        if (z.index >= inc.sys.eq.size()) {
            res.diagnostic = "ideal generator index out of range";
            return res;
        }
    }
    poly r = inc.residual();
    if (!r.is_zero()) {
        res.diagnostic = "nonzero residual: " + print_poly(r);
        return res;
    }
    auto warn_dups = [&](const std::vector<poly>& v, const char* what) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j])
                    res.warnings.push_back(std::string("duplicate ") + what + " member at " +
                                           std::to_string(i) + "," + std::to_string(j));
    };
    warn_dups(inc.sys.ne, "ne");
    warn_dups(inc.sys.ge, "ge");
    warn_dups(inc.sys.eq, "eq");
    res.ok = true;
    return res;
}

void check(const incompat& inc, const std::string& where) {
    auto v = verify(inc);
    if (!v.ok) throw std::logic_error(where + ": certificate rejected: " + v.diagnostic);
}

std::vector<degree_report_entry> degree_report(const incompat& inc,
                                               const std::vector<var_group>& groups) {
    std::vector<degree_report_entry> out;
    poly s = inc.expand_monoid();
    std::vector<poly> cs, zs;
    for (std::size_t k = 0; k < inc.cone.size(); ++k) cs.push_back(inc.expand_cone(k));
    for (std::size_t k = 0; k < inc.ideal.size(); ++k) zs.push_back(inc.expand_ideal(k));
    for (auto& g : groups) {
        degree_report_entry e;
        e.monoid = s.degree_in(g);
        for (auto& c : cs) e.cone = std::max(e.cone, c.degree_in(g));
        for (auto& z : zs) e.ideal = std::max(e.ideal, z.degree_in(g));
        e.total = std::max({e.monoid, e.cone, e.ideal});
        out.push_back(e);
    }
    return out;
}

unsigned certificate_degree(const incompat& inc, const var_group& w) {
    return degree_report(inc, {w})[0].total;
}

incompat make_trivial(const poly& P, trivial_shape shape) {
    incompat inc;
    switch (shape) {
        case trivial_shape::ne_eq: { // P != 0, P = 0
            unsigned n = inc.sys.add_ne(P);
            unsigned q = inc.sys.add_eq(P);
            inc.monoid.factors = {{n, 2}};
            inc.ideal.push_back({-P, q});
            break;
        }
        case trivial_shape::gt_le: { // P > 0, P <= 0
            unsigned n = inc.sys.add_ne(P);
            unsigned g1 = inc.sys.add_ge(P);
            unsigned g2 = inc.sys.add_ge(-P);
            inc.monoid.factors = {{n, 2}};
            inc.cone.push_back({rat_of(1), poly(1), {{g1, 1}, {g2, 1}}});
            break;
        }
        case trivial_shape::gt_eq: { // P > 0, P = 0
            unsigned n = inc.sys.add_ne(P);
            inc.sys.add_ge(P);
            unsigned q = inc.sys.add_eq(P);
            inc.monoid.factors = {{n, 2}};
            inc.ideal.push_back({-P, q});
            break;
        }
        case trivial_shape::lt_eq: { // P < 0, P = 0
            unsigned n = inc.sys.add_ne(P);
            inc.sys.add_ge(-P);
            unsigned q = inc.sys.add_eq(P);
            inc.monoid.factors = {{n, 2}};
            inc.ideal.push_back({-P, q});
            break;
        }
        case trivial_shape::lt_ge: { // P < 0, P >= 0
            unsigned n = inc.sys.add_ne(P);
            unsigned gm = inc.sys.add_ge(-P);
            unsigned gp = inc.sys.add_ge(P);
            inc.monoid.factors = {{n, 2}};
            inc.cone.push_back({rat_of(1), poly(1), {{gm, 1}, {gp, 1}}});
            break;
        }
        case trivial_shape::gt_lt: { // P > 0, P < 0
            unsigned n = inc.sys.add_ne(P);
            unsigned gp = inc.sys.add_ge(P);
            unsigned gm = inc.sys.add_ge(-P);
            inc.monoid.factors = {{n, 2}};
            inc.cone.push_back({rat_of(1), poly(1), {{gp, 1}, {gm, 1}}});
            break;
        }
    }
    return inc;
}

incompat substitute_in_certificate(const incompat& inc, const std::map<var, poly>& bindings) {
    incompat out = inc;
    auto sub = [&](poly& p) { p = p.substitute(bindings); };
    for (auto& p : out.sys.ne) sub(p);
    for (auto& p : out.sys.ge) sub(p);
    for (auto& p : out.sys.eq) sub(p);
    for (auto& c : out.cone) sub(c.root);
    for (auto& z : out.ideal) sub(z.cofactor);
    return out;
}

std::size_t certificate_size(const incompat& inc) {
    std::size_t n = 0;
    auto count = [&](const poly& p) { n += std::max<std::size_t>(1, p.term_count()); };
    for (auto& p : inc.sys.ne) count(p);
    for (auto& p : inc.sys.ge) count(p);
    for (auto& p : inc.sys.eq) count(p);
    for (auto& c : inc.cone) count(c.root);
    for (auto& z : inc.ideal) count(z.cofactor);
    return n;
}

// ------------------------------------------------------------- text format

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string factors_str(const factor_list& fs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << " ";
        os << fs[i].first << "^" << fs[i].second;
    }
    return os.str();
}

factor_list parse_factors(std::istringstream& is) {
    factor_list fs;
    std::string tok;
    while (is >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) throw std::runtime_error("certificate parse: bad factor " + tok);
        fs.emplace_back(unsigned(std::stoul(tok.substr(0, caret))),
                        unsigned(std::stoul(tok.substr(caret + 1))));
    }
    return fs;
}
} // namespace

std::string serialize(const incompat& inc) {
    incompat c = inc;
    // canonical component order
    std::sort(c.monoid.factors.begin(), c.monoid.factors.end());
    std::stable_sort(c.cone.begin(), c.cone.end(), [](const cone_component& a, const cone_component& b) {
        if (a.factors != b.factors) return a.factors < b.factors;
        std::string ra = print_poly(a.root), rb = print_poly(b.root);
        if (ra != rb) return ra < rb;
        return a.weight < b.weight;
    });
    std::stable_sort(c.ideal.begin(), c.ideal.end(), [](const ideal_component& a, const ideal_component& b) {
        if (a.index != b.index) return a.index < b.index;
        return print_poly(a.cofactor) < print_poly(b.cofactor);
    });

    std::ostringstream os;
    os << "SYSTEM\n";
    for (auto& p : c.sys.ne) os << "ne " << print_poly(p) << "\n";
    for (auto& p : c.sys.ge) os << "ge " << print_poly(p) << "\n";
    for (auto& p : c.sys.eq) os << "eq " << print_poly(p) << "\n";
    os << "MONOID\n";
    os << "scalar " << rat_str(c.monoid.scalar) << "\n";
    if (!c.monoid.factors.empty()) os << "factors " << factors_str(c.monoid.factors) << "\n";
    os << "CONE\n";
    for (auto& cc : c.cone)
        os << "comp " << rat_str(cc.weight) << " ; " << print_poly(cc.root) << " ; "
           << factors_str(cc.factors) << "\n";
    os << "IDEAL\n";
    for (auto& z : c.ideal) os << "comp " << z.index << " ; " << print_poly(z.cofactor) << "\n";
    return os.str();
}

incompat parse_certificate(const std::string& text) {
    incompat inc;
    std::istringstream in(text);
    std::string line;
    enum { none, system, monoid, cone, ideal } sec = none;
    std::size_t lineno = 0;
    auto bad = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error("certificate parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line == "SYSTEM") { sec = system; continue; }
        if (line == "MONOID") { sec = monoid; continue; }
        if (line == "CONE") { sec = cone; continue; }
        if (line == "IDEAL") { sec = ideal; continue; }
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        std::string rest;
        std::getline(ls, rest);
        try {
            switch (sec) {
                case system:
                    if (head == "ne") inc.sys.add_ne(parse_poly(rest));
                    else if (head == "ge") inc.sys.add_ge(parse_poly(rest));
                    else if (head == "eq") inc.sys.add_eq(parse_poly(rest));
                    else throw bad("unknown system entry " + head);
                    break;
                case monoid:
                    if (head == "scalar") inc.monoid.scalar = rat_parse(trim(rest));
                    else if (head == "factors") {
                        std::istringstream fs(rest);
                        inc.monoid.factors = parse_factors(fs);
                    } else throw bad("unknown monoid entry " + head);
                    break;
                case cone: {
                    if (head != "comp") throw bad("unknown cone entry " + head);
                    auto p1 = rest.find(';');
                    auto p2 = rest.find(';', p1 + 1);
                    if (p1 == std::string::npos || p2 == std::string::npos) throw bad("bad cone component");
                    cone_component cc;
                    cc.weight = rat_parse(trim(rest.substr(0, p1)));
                    cc.root = parse_poly(rest.substr(p1 + 1, p2 - p1 - 1));
                    std::istringstream fs(rest.substr(p2 + 1));
                    cc.factors = parse_factors(fs);
                    inc.cone.push_back(std::move(cc));
                    break;
                }
                case ideal: {
                    if (head != "comp") throw bad("unknown ideal entry " + head);
                    auto p1 = rest.find(';');
                    if (p1 == std::string::npos) throw bad("bad ideal component");
                    ideal_component z;
                    z.index = unsigned(std::stoul(trim(rest.substr(0, p1))));
                    z.cofactor = parse_poly(rest.substr(p1 + 1));
                    inc.ideal.push_back(std::move(z));
                    break;
                }
                default:
                    throw bad("content before a section header");
            }
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            throw bad(e.what());
        }
    }
    return inc;
}

} // namespace psatz
