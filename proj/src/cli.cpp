#include "srcot/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srcot/cochain.hpp"
#include "srcot/cotangent.hpp"
#include "srcot/deform.hpp"
#include "srcot/gen.hpp"
#include "srcot/report.hpp"
#include "srcot/taylor.hpp"

namespace srcot {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string input;
    std::string gen;
    int jobs = 1;
    int cap = 0;
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs = true) {
    cmd->add_option("input", o.input, "complex file (JSON or one facet per line)");
    cmd->add_option("--gen", o.gen, "builtin generator descriptor");
    cmd->add_option("--cap", o.cap, "enumeration cap (ambient vertex count)");
    cmd->add_flag("--json", o.as_json, "machine-readable output");
    if (with_jobs) cmd->add_option("--jobs", o.jobs, "parallel workers");
}

SimplicialComplex load_input(const CommonOpts& o) {
    if (!o.gen.empty()) return make_generator(o.gen);
    if (!o.input.empty()) return load_complex_file(o.input);
    throw std::invalid_argument("no input given: pass a file or --gen NAME");
}

Caps caps_of(const CommonOpts& o) {
    Caps c = default_caps();
    if (o.cap > 0) {
        c.complex_ambient = o.cap;
        c.nonface_ambient = o.cap;
    }
    return c;
}

PieceDims dims_via_m_route(const SimplicialComplex& x, const DegreeKey& key,
                           const Caps& caps) {
    auto sol = m_solution(x, ExponentVector::characteristic(key.a),
                          ExponentVector::characteristic(key.b), caps);
    return {(int)sol.hom.size(), sol.t1, sol.t2};
}

std::vector<std::pair<DegreeKey, PieceDims>> route_dims(
    const SimplicialComplex& x, const std::string& route, int jobs,
    const Caps& caps) {
    std::vector<std::pair<DegreeKey, PieceDims>> rows;
    if (route == "n") {
        for (const auto& p : full_report(x, jobs, caps))
            rows.emplace_back(p.key, p.dims);
        return rows;
    }
    for (const DegreeKey& key : relevant_degrees(x, caps)) {
        PieceDims d;
        if (route == "order")
            d = piece_via_order(x, key);
        else if (route == "u")
            d = piece_via_u(x, key);
        else if (route == "m")
            d = dims_via_m_route(x, key, caps);
        else
            throw std::invalid_argument("unknown route '" + route + "'");
        if (d.t1 != 0 || d.t2 != 0) rows.emplace_back(key, d);
    }
    return rows;
}

std::string key_to_string(const SimplicialComplex& x, const DegreeKey& key) {
    auto joined = [&](Face f) {
        std::string s;
        for (int v : f.members()) {
            if (!s.empty()) s += ",";
            s += x.name_of(v);
        }
        return s.empty() ? "-" : s;
    };
    return "(" + joined(key.a) + " | " + joined(key.b) + ")";
}

int cmd_report(const CommonOpts& o, const std::string& route, bool has_coarse,
               int coarse_d, std::ostream& out, std::ostream& err) {
    SimplicialComplex x = load_input(o);
    Caps caps = caps_of(o);
    std::vector<std::pair<DegreeKey, PieceDims>> rows;
    if (route == "all") {
        rows = route_dims(x, "n", o.jobs, caps);
        for (const char* other : {"order", "u", "m"}) {
            auto alt = route_dims(x, other, o.jobs, caps);
            if (alt != rows) {
                err << "route mismatch: n vs " << other << "\n";
                return 3;
            }
        }
    } else {
        rows = route_dims(x, route, o.jobs, caps);
    }
    ReportDocument doc = build_report(x, rows);
    if (has_coarse) {
        std::vector<ReportDocument::Slice> keep;
        for (const auto& s : doc.coarse)
            if (s.d == coarse_d) keep.push_back(s);
        doc.coarse = std::move(keep);
    }
    out << (o.as_json ? report_to_json(doc) + "\n" : report_to_table(doc));
    return 0;
}

int cmd_piece(const CommonOpts& o, const std::string& a_csv,
              const std::string& b_csv, std::ostream& out, std::ostream& err) {
    SimplicialComplex x = load_input(o);
    Face a = face_from_names(x, a_csv);
    ExponentVector amult = exponents_from_names(x, a_csv);
    Face b = face_from_names(x, b_csv);
    if (b.empty()) throw std::invalid_argument("piece: --b must be nonempty");
    if (!x.contains(a))
        err << "warning: a is not a face of the complex; all pieces are zero\n";
    CotangentPiece p = piece_via_n(x, {a, b});

    auto face_name = [&](Face f) {
        std::string s;
        for (int v : f.members()) {
            if (!s.empty()) s += ",";
            s += x.name_of(v);
        }
        return s.empty() ? "()" : "(" + s + ")";
    };
    std::vector<std::string> eqs;
    if (p.dims.t1 > 0)
        for (const auto& lambda : p.t1_basis)
            for (const auto& e : perturbed_equations(x, amult, b, lambda, caps_of(o)))
                eqs.push_back(e);

    if (o.as_json) {
        json j;
        j["key"] = {{"a", a_csv}, {"b", b_csv}};
        j["dims"] = {{"hom", p.dims.hom}, {"t1", p.dims.t1}, {"t2", p.dims.t2}};
        j["n"] = json::array();
        for (std::size_t i = 0; i < p.kernel.n_elems.size(); ++i)
            j["n"].push_back({{"face", face_name(p.kernel.n_elems[i])},
                              {"tilde", (bool)p.kernel.in_tilde[i]}});
        j["t1_basis"] = json::array();
        for (const auto& lambda : p.t1_basis) {
            json row = json::array();
            for (const auto& v : lambda) row.push_back(v.str());
            j["t1_basis"].push_back(row);
        }
        j["equations"] = eqs;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "key " << key_to_string(x, p.key) << "\n";
    out << "N:";
    for (std::size_t i = 0; i < p.kernel.n_elems.size(); ++i)
        out << ' ' << face_name(p.kernel.n_elems[i])
            << (p.kernel.in_tilde[i] ? "~" : "");
    out << "\ndims: hom " << p.dims.hom << ", t1 " << p.dims.t1 << ", t2 "
        << p.dims.t2 << "\n";
    for (std::size_t k = 0; k < p.t1_basis.size(); ++k) {
        out << "t1[" << k << "]:";
        for (std::size_t i = 0; i < p.t1_basis[k].size(); ++i)
            if (p.t1_basis[k][i] != 0)
                out << ' ' << face_name(p.kernel.n_elems[i]) << "="
                    << p.t1_basis[k][i];
        out << "\n";
    }
    for (const auto& e : eqs) out << "equation: " << e << "\n";
    return 0;
}

int cmd_cup(const CommonOpts& o, const std::string& a1, const std::string& b1,
            const std::string& a2, const std::string& b2, int i1, int i2,
            std::ostream& out) {
    SimplicialComplex x = load_input(o);
    ExponentVector av1 = exponents_from_names(x, a1);
    ExponentVector av2 = exponents_from_names(x, a2);
    Face bf1 = face_from_names(x, b1), bf2 = face_from_names(x, b2);
    CotangentPiece p1 = piece_via_n(x, {av1.support(), bf1});
    CotangentPiece p2 = piece_via_n(x, {av2.support(), bf2});
    if (p1.dims.t1 <= i1 || p2.dims.t1 <= i2)
        throw std::invalid_argument("cup: requested basis element does not exist");
    T2Class c = cup(x, make_t1_class(p1, av1, i1), make_t1_class(p2, av2, i2));
    if (o.as_json) {
        json j;
        j["zero_by_disjoint_b"] = c.zero_by_disjointness;
        if (!c.zero_by_disjointness) {
            j["target"] = key_to_string(x, {c.a.support(), c.b});
            json coords = json::array();
            for (const auto& v : c.coords) coords.push_back(v.str());
            j["coords"] = coords;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (c.zero_by_disjointness) {
        out << "zero: the two b-sets intersect\n";
        return 0;
    }
    out << "target " << key_to_string(x, {c.a.support(), c.b}) << "\ncoords:";
    for (const auto& v : c.coords) out << ' ' << v;
    if (c.coords.empty()) out << " (target piece is zero)";
    out << "\n";
    return 0;
}

std::string form_to_string(const QuadraticObstruction& q,
                           const QuadraticForm& form) {
    std::ostringstream os;
    bool first = true;
    int nt = (int)q.coordinates.size();
    for (int j = 0; j < nt; ++j)
        for (int k = j; k < nt; ++k) {
            Rational c = form.coeffs.at(j, k);
            if (j != k) c += form.coeffs.at(k, j);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (mag != 1) os << mag << " ";
            os << q.coordinates[j].name << " " << q.coordinates[k].name;
        }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

int cmd_quadratic(const CommonOpts& o, int d1, int d2, std::ostream& out) {
    SimplicialComplex x = load_input(o);
    QuadraticObstruction q = quadratic_base_equations(x, d1, d2, caps_of(o));
    if (o.as_json) {
        json j;
        j["coordinates"] = json::array();
        for (const auto& c : q.coordinates)
            j["coordinates"].push_back(
                {{"name", c.name},
                 {"key", key_to_string(x, c.key)},
                 {"index", c.basis_index}});
        j["equations"] = json::array();
        for (const auto& f : q.forms)
            j["equations"].push_back({{"key", key_to_string(x, f.key)},
                                      {"equation", form_to_string(q, f)}});
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& c : q.coordinates)
        out << c.name << " <- T1 piece " << key_to_string(x, c.key) << " #"
            << c.basis_index << "\n";
    for (const auto& f : q.forms)
        out << "T2 " << key_to_string(x, f.key) << " #" << f.basis_index << ": "
            << form_to_string(q, f) << "\n";
    if (q.forms.empty()) out << "no obstruction equations in this slice\n";
    return 0;
}

int cmd_localize(const CommonOpts& o, const std::string& a_csv,
                 const std::string& b_csv, const std::string& v_name, int i,
                 std::ostream& out) {
    SimplicialComplex x = load_input(o);
    ExponentVector amult = exponents_from_names(x, a_csv);
    Face b = face_from_names(x, b_csv);
    auto v = x.index_of(v_name);
    if (!v) throw std::invalid_argument("unknown vertex '" + v_name + "'");
    CotangentPiece p = piece_via_n(x, {amult.support(), b});
    int dim = i == 1 ? p.dims.t1 : p.dims.t2;
    out << "source dims: t" << i << " = " << dim << "\n";
    for (int idx = 0; idx < dim; ++idx) {
        std::vector<Rational> coords;
        Face tb = b.without(*v);
        if (i == 1) {
            T1Class loc = localize(x, make_t1_class(p, amult, idx), *v);
            if (!loc.b.empty()) {
                SimplicialComplex lk = link(Face::singleton(*v), x);
                coords = t1_coordinates(piece_via_n(lk, {loc.a.support(), loc.b}),
                                        loc.lambda);
            }
        } else {
            T2Class src;
            src.a = amult;
            src.b = b;
            src.n_elems = p.kernel.n_elems;
            src.pairs = p.kernel.deg1;
            src.values = p.t2_basis[idx];
            T2Class loc = localize(x, src, *v);
            coords = loc.coords;
        }
        out << "basis #" << idx << " -> link(" << v_name << ") piece, b="
            << (tb.empty() ? std::string("-") : b_csv) << " coords:";
        for (const auto& c : coords) out << ' ' << c;
        if (coords.empty()) out << " (zero target)";
        out << "\n";
    }
    return 0;
}

int cmd_t0(const CommonOpts& o, std::ostream& out) {
    SimplicialComplex x = load_input(o);
    T0Description d = t0(x);
    auto face_name = [&](Face f) {
        std::string s;
        for (int v : f.members()) {
            if (!s.empty()) s += ",";
            s += x.name_of(v);
        }
        return s.empty() ? "1" : s;
    };
    if (o.as_json) {
        json j;
        j["generated_by_delta"] = d.module_generated_by_delta;
        j["generators"] = json::object();
        for (int v : x.vertex_set().members()) {
            json lst = json::array();
            for (Face a : d.generators[v]) lst.push_back(face_name(a));
            j["generators"][x.name_of(v)] = lst;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    for (int v : x.vertex_set().members()) {
        out << "d/d" << x.name_of(v) << " ideal generators:";
        for (Face a : d.generators[v]) out << ' ' << face_name(a);
        out << "\n";
    }
    out << "generated by the Euler-type derivations: "
        << (d.module_generated_by_delta ? "yes" : "no") << "\n";
    return 0;
}

bool quasi_check(const USubset& y) {
    auto a = cohomology(k_complex(y, 2), false);
    auto b = cohomology(order_cochain_complex(order_complex(y), {}, 2), false);
    return a[0] == b[0] && a[1] == b[1];
}

int cmd_check(const CommonOpts& o, std::ostream& out) {
    SimplicialComplex x = load_input(o);
    Caps caps = caps_of(o);
    bool ok_routes = true, ok_quasi = true, ok_link = true;
    auto keys = relevant_degrees(x, caps);
    for (const DegreeKey& key : keys) {
        CotangentPiece p = piece_via_n(x, key);
        PieceDims alt1 = piece_via_order(x, key);
        PieceDims alt2 = piece_via_u(x, key);
        PieceDims alt3 = dims_via_m_route(x, key, caps);
        if (!(p.dims == alt1 && p.dims == alt2 && p.dims == alt3)) {
            ok_routes = false;
            out << "  route mismatch at " << key_to_string(x, key) << "\n";
        }
        auto [n, nt] = n_sets(x, key.a, key.b);
        if (!quasi_check(n) || !quasi_check(nt)) ok_quasi = false;
        SimplicialComplex lk = link(key.a, x);
        if (!lk.is_void()) {
            auto [u, ut] = u_sets(lk, key.b);
            if (!quasi_check(u) || !quasi_check(ut)) ok_quasi = false;
        }
        if (!link_reduction_check(x, key)) {
            ok_link = false;
            out << "  link reduction failed at " << key_to_string(x, key) << "\n";
        }
    }
    bool ok_inject = injectivity_check(x, 1, caps).injective() &&
                     injectivity_check(x, 2, caps).injective();

    bool ok_cup = true;
    std::vector<T1Class> classes;
    auto pieces = full_report(x, o.jobs, caps);
    for (const auto& p : pieces)
        for (int idx = 0; idx < p.dims.t1 && classes.size() < 6; ++idx)
            classes.push_back(
                make_t1_class(p, ExponentVector::characteristic(p.key.a), idx));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j) {
            T2Class c1 = cup(x, classes[i], classes[j]);
            T2Class c2 = cup(x, classes[j], classes[i]);
            T2Class c3 = cup(x, classes[i], classes[j], true);
            if (c1.zero_by_disjointness != c2.zero_by_disjointness ||
                c1.coords != c2.coords || c1.coords != c3.coords)
                ok_cup = false;
        }

    auto line = [&](const char* name, bool ok) {
        out << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    };
    line("route agreement", ok_routes);
    line("cohomology model agreement", ok_quasi);
    line("link reduction", ok_link);
    line("localization injectivity", ok_inject);
    line("cup symmetry and choice independence", ok_cup);
    return (ok_routes && ok_quasi && ok_link && ok_inject && ok_cup) ? 0 : 3;
}

int cmd_gen(const std::string& descriptor, std::ostream& out) {
    SimplicialComplex x = make_generator(descriptor);
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < x.ambient_size(); ++v) j["vertices"].push_back(x.name_of(v));
    j["facets"] = json::array();
    for (Face f : x.facets()) {
        json facet = json::array();
        for (int v : f.members()) facet.push_back(x.name_of(v));
        j["facets"].push_back(facet);
    }
    out << j.dump(2) << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"deformation invariants T0, T1, T2 of a simplicial complex face ring"};
    app.require_subcommand(1);

    CommonOpts ro;
    std::string route = "n";
    int coarse_d = 0;
    auto* rep = app.add_subcommand("report", "all nonzero T1/T2 pieces");
    add_common(rep, ro);
    rep->add_option("--route", route)->check(CLI::IsMember({"n", "order", "u", "m", "all"}));
    auto* coarse_opt = rep->add_option("--coarse", coarse_d, "show only this coarse degree");

    CommonOpts po;
    std::string pa, pb;
    auto* pc = app.add_subcommand("piece", "one multidegree in detail");
    add_common(pc, po, false);
    pc->add_option("--a", pa, "comma-separated vertex names");
    pc->add_option("--b", pb, "comma-separated vertex names")->required();

    CommonOpts co;
    std::string ca1, cb1, ca2, cb2;
    int ci1 = 0, ci2 = 0;
    auto* cu = app.add_subcommand("cup", "cup product of two T1 classes");
    add_common(cu, co, false);
    cu->add_option("--a1", ca1);
    cu->add_option("--b1", cb1)->required();
    cu->add_option("--a2", ca2);
    cu->add_option("--b2", cb2)->required();
    cu->add_option("--i1", ci1, "basis index of the first class");
    cu->add_option("--i2", ci2, "basis index of the second class");

    CommonOpts qo;
    int qd1 = -1, qd2 = -2;
    auto* qu = app.add_subcommand("quadratic", "second-order base equations");
    add_common(qu, qo, false);
    qu->add_option("--t1-degree", qd1, "coarse degree of the T1 slice");
    qu->add_option("--t2-degree", qd2, "coarse degree of the T2 slice");

    CommonOpts lo;
    std::string la, lb, lv;
    int li = 1;
    auto* lc = app.add_subcommand("localize", "restrict classes to a vertex chart");
    add_common(lc, lo, false);
    lc->add_option("--a", la);
    lc->add_option("--b", lb)->required();
    lc->add_option("--v", lv, "vertex name")->required();
    lc->add_option("--i", li)->check(CLI::IsMember(std::vector<int>{1, 2}));

    CommonOpts to;
    auto* tc = app.add_subcommand("t0", "derivation module");
    add_common(tc, to, false);

    CommonOpts ko;
    auto* kc = app.add_subcommand("check", "run all cross-route invariant suites");
    add_common(kc, ko);

    std::string gdesc;
    auto* gc = app.add_subcommand("gen", "emit a builtin complex as JSON");
    gc->add_option("descriptor", gdesc)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (rep->parsed())
            return cmd_report(ro, route, coarse_opt->count() > 0, coarse_d, out, err);
        if (pc->parsed()) return cmd_piece(po, pa, pb, out, err);
        if (cu->parsed()) return cmd_cup(co, ca1, cb1, ca2, cb2, ci1, ci2, out);
        if (qu->parsed()) return cmd_quadratic(qo, qd1, qd2, out);
        if (lc->parsed()) return cmd_localize(lo, la, lb, lv, li, out);
        if (tc->parsed()) return cmd_t0(to, out);
        if (kc->parsed()) return cmd_check(ko, out);
        if (gc->parsed()) return cmd_gen(gdesc, out);
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace srcot
