#include "toric/combinatorics.hpp"
#include "toric/corpus.hpp"
#include "toric/io.hpp"
#include "toric/ishida.hpp"
#include "toric/mhm.hpp"
#include "toric/shelling.hpp"
#include "toric/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;

namespace {

constexpr int schema_version = 1;

enum Exit { ok = 0, usage = 1, verification = 2, computation = 3 };

struct Output {
    json doc;
    std::string table;
    int code = ok;
};

std::string join(const std::vector<long long>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string rayset(const std::vector<int>& r) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '}';
    return os.str();
}

json face_json(const toric::FaceLattice& fl, int id) {
    return {{"id", id}, {"dim", fl[id].dim}, {"rays", fl[id].rays}};
}

json header(const std::string& command, const toric::Cone& c) {
    return {{"schema_version", schema_version}, {"command", command}, {"cone", toric::cone_to_json(c)}};
}

// Comma-separated ray indices; "" or "{}" selects the apex.
std::vector<int> parse_rayset(std::string s) {
    std::vector<int> out;
    for (char& ch : s)
        if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 0) throw toric::InputError("invalid ray index in face selector: " + tok);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Output cmd_faces(const toric::Cone& c) {
    auto fl = toric::face_lattice(c);
    Output o;
    o.doc = header("faces", c);
    o.doc["f_vector"] = fl.f_vector();
    std::vector<bool> simple_in_dim;
    for (int d = 0; d <= fl.n; ++d) simple_in_dim.push_back(toric::is_simple_in_dim(fl, d));
    o.doc["predicates"] = {{"simplicial", toric::is_simplicial(c)},
                           {"cone_over_simplicial", toric::is_cone_over_simplicial(fl)},
                           {"cone_over_simple", toric::is_cone_over_simple(fl)},
                           {"simple_in_dim", simple_in_dim}};
    json faces = json::array();
    for (const auto& f : fl.faces) faces.push_back(face_json(fl, f.id));
    o.doc["faces"] = faces;
    json normals = json::array();
    for (const auto& v : c.facet_normals()) normals.push_back(toric::vector_to_json(v));
    o.doc["facet_normals"] = normals;

    std::ostringstream t;
    t << "cone " << c.name() << " (rank " << c.dim() << ", " << c.rays().size() << " rays)\n";
    t << "f-vector: " << join(fl.f_vector()) << "\n";
    t << "simplicial: " << toric::is_simplicial(c) << "\n";
    t << "cone over simplicial polytope: " << toric::is_cone_over_simplicial(fl) << "\n";
    t << "cone over simple polytope: " << toric::is_cone_over_simple(fl) << "\n";
    t << "simple in dim c:";
    for (int d = 0; d <= fl.n; ++d) t << ' ' << d << '=' << simple_in_dim[static_cast<std::size_t>(d)];
    t << "\n";
    for (const auto& f : fl.faces) t << "  face " << f.id << " dim " << f.dim << " rays " << rayset(f.rays) << "\n";
    o.table = t.str();
    return o;
}

Output cmd_ishida(const toric::Cone& c, int l, const std::optional<std::string>& face) {
    auto fl = toric::face_lattice(c);
    if (l < 0 || l > fl.n) throw toric::InputError("--l must lie in 0.." + std::to_string(fl.n));
    Output o;
    o.doc = header("ishida", c);
    o.doc["l"] = l;
    std::ostringstream t;
    if (face) {
        auto rays = parse_rayset(*face);
        auto id = fl.find(rays);
        if (!id) throw toric::InputError("ray set " + rayset(rays) + " is not a face of the cone");
        auto core = toric::core_table(fl);
        auto dims = toric::graded_piece_dims(fl, core, l, *id);
        o.doc["face"] = face_json(fl, *id);
        o.doc["cohomology"] = dims;
        t << "graded piece of Ish^" << l << " for face class " << rayset(rays) << "\n";
        t << "cohomology dims: " << join(dims) << "\n";
    } else {
        auto cx = toric::build_degree_zero(fl, l);
        auto h = toric::cohomology_dims(cx);
        std::vector<long long> terms(cx.term_dims.begin(), cx.term_dims.end());
        o.doc["face"] = nullptr;
        o.doc["term_dims"] = terms;
        o.doc["cohomology"] = h;
        t << "degree-zero Ish^" << l << "\n";
        t << "term dims:       " << join(terms) << "\n";
        t << "cohomology dims: " << join(h) << "\n";
    }
    o.table = t.str();
    return o;
}

Output cmd_ext(const toric::Cone& c) {
    auto fl = toric::face_lattice(c);
    auto ext = toric::ext_table(fl);
    Output o;
    o.doc = header("ext", c);
    json core = json::array();
    json assembled = json::array();
    std::ostringstream t;
    t << "core table h^i(Ish_tau^m):\n";
    for (const auto& f : fl.faces) {
        const auto& rows = ext.core.h[static_cast<std::size_t>(f.id)];
        json entry = face_json(fl, f.id);
        entry["h"] = rows;
        core.push_back(entry);
        t << "  " << rayset(f.rays);
        for (std::size_t m = 0; m < rows.size(); ++m) t << "  m=" << m << ": " << join(rows[m], ",");
        t << "\n";
    }
    t << "assembled Ext^i(Omega^k, omega) per face class (row k, entries i = 0..n-k):\n";
    for (const auto& f : fl.faces) {
        json entry = face_json(fl, f.id);
        entry["ext"] = ext.assembled[static_cast<std::size_t>(f.id)];
        assembled.push_back(entry);
        t << "  " << rayset(f.rays) << "\n";
        for (int k = 0; k <= fl.n; ++k)
            t << "    k=" << k << ": " << join(ext.assembled[static_cast<std::size_t>(f.id)][static_cast<std::size_t>(k)]) << "\n";
    }
    json depth = json::array();
    t << "depth:\n";
    for (int k = 0; k <= fl.n; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        depth.push_back({{"k", k}, {"depth", ext.depth[uk]}, {"maximal", static_cast<bool>(ext.maximal[uk])}});
        t << "  Omega^" << k << ": " << ext.depth[uk] << (ext.maximal[uk] ? " (maximal)" : "") << "\n";
    }
    o.doc["core"] = core;
    o.doc["assembled"] = assembled;
    o.doc["depth"] = depth;
    o.doc["lcdef"] = toric::lcdef(ext);
    t << "lcdef: " << toric::lcdef(ext) << "\n";
    o.table = t.str();
    return o;
}

Output cmd_lcdef(const toric::Cone& c) {
    const int d = toric::lcdef(toric::face_lattice(c));
    Output o;
    o.doc = header("lcdef", c);
    o.doc["lcdef"] = d;
    o.table = std::to_string(d) + "\n";
    return o;
}

json multiplicity_json(const std::optional<long long>& m) {
    if (m) return *m;
    return "undetermined";
}

Output cmd_decompose(const toric::Cone& c) {
    auto fl = toric::face_lattice(c);
    auto ext = toric::ext_table(fl);
    auto dec = toric::a_numbers(fl, ext.core);
    auto rep = toric::decomposition_report(fl, ext, dec);
    Output o;
    o.doc = header("decompose", c);
    json faces = json::array();
    for (const auto& f : fl.faces) {
        const auto& an = dec.faces[static_cast<std::size_t>(f.id)];
        json entry = face_json(fl, f.id);
        entry["method"] = toric::to_string(an.method);
        json a = json::array();
        for (const auto& [key, v] : an.a) a.push_back({{"l", key.first}, {"j", key.second}, {"a", v}});
        entry["a"] = a;
        json und = json::array();
        for (const auto& [l, j] : an.undetermined) und.push_back({{"l", l}, {"j", j}});
        entry["undetermined"] = und;
        if (an.r) entry["r"] = *an.r;
        faces.push_back(entry);
    }
    o.doc["a_numbers"] = faces;
    json rows = json::array();
    std::ostringstream t;
    t << "weight-graded pieces of the trivial Hodge module (degree -l, weight w):\n";
    for (const auto& row : rep.rows) {
        json summands = json::array();
        t << "  l=" << row.l << " w=" << row.weight << ":";
        if (row.ic_top) t << " IC_X";
        for (const auto& s : row.summands) {
            summands.push_back(
                {{"face", face_json(fl, s.face)}, {"twist", s.twist}, {"multiplicity", multiplicity_json(s.multiplicity)}});
            t << " IC" << rayset(fl[s.face].rays) << "(-" << s.twist << ")^";
            if (s.multiplicity)
                t << *s.multiplicity;
            else
                t << "undetermined";
        }
        t << "\n";
        rows.push_back({{"l", row.l}, {"weight", row.weight}, {"ic_top", row.ic_top}, {"summands", summands}});
    }
    o.doc["rows"] = rows;
    o.doc["lcdef"] = {{"implied_lower", rep.implied_lcdef_lower},
                      {"implied_upper", rep.implied_lcdef_upper},
                      {"ishida", rep.ishida_lcdef},
                      {"consistent", rep.consistent}};
    t << "lcdef: implied range [" << rep.implied_lcdef_lower << ", " << rep.implied_lcdef_upper << "], Ishida "
      << rep.ishida_lcdef << (rep.consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
    o.table = t.str();
    if (!rep.consistent) o.code = verification;
    return o;
}

Output cmd_gpoly(const toric::Cone& c) {
    auto fl = toric::face_lattice(c);
    const auto f = fl.f_vector();
    Output o;
    o.doc = header("gpoly", c);
    o.doc["f_vector"] = f;
    o.doc["polytope_f_vector"] = toric::polytope_f_vector(f);
    o.doc["g"] = toric::g_polynomial(fl);
    o.doc["toric_h"] = toric::toric_h_polynomial(fl);
    std::ostringstream t;
    t << "polytope f-vector: " << join(toric::polytope_f_vector(f)) << "\n";
    t << "toric g-vector: " << join(toric::g_polynomial(fl)) << "\n";
    t << "toric h-vector: " << join(toric::toric_h_polynomial(fl)) << "\n";
    if (toric::is_cone_over_simplicial(fl)) {
        o.doc["h"] = toric::h_vector_simplicial(f, fl.n);
        t << "h-vector: " << join(toric::h_vector_simplicial(f, fl.n)) << "\n";
    }
    if (toric::is_cone_over_simple(fl)) {
        o.doc["h_tilde"] = toric::h_tilde_simple(f, fl.n);
        t << "h-tilde: " << join(toric::h_tilde_simple(f, fl.n)) << "\n";
    }
    o.table = t.str();
    return o;
}

Output cmd_hodge(const toric::Cone& c) {
    auto fl = toric::face_lattice(c);
    if (!toric::is_cone_over_simple(fl))
        throw toric::InputError("hodge needs a simple polytope (or a cone over one)");
    const int d = fl.n - 1;
    const auto fp = toric::polytope_f_vector(fl.f_vector());
    auto table = toric::hodge_du_bois_table(fp, d);
    auto e = toric::hodge_deligne_polynomial(fp, d);
    auto betti = toric::betti_numbers(table);
    Output o;
    o.doc = header("hodge", c);
    o.doc["polytope_dim"] = d;
    o.doc["polytope_f_vector"] = fp;
    // rows[q][p] = h̄^{p,q}
    std::vector<std::vector<long long>> rows(table.size(), std::vector<long long>(table.size(), 0));
    for (std::size_t p = 0; p < table.size(); ++p)
        for (std::size_t q = 0; q < table.size(); ++q) rows[q][p] = table[p][q];
    o.doc["hodge_du_bois"] = rows;
    o.doc["hodge_deligne"] = e;
    o.doc["betti"] = betti;
    std::ostringstream t;
    t << "Hodge-Du Bois numbers h^{p,q} (row q, columns p = 0.." << d << "):\n";
    for (int q = d; q >= 0; --q) t << "  " << q << " | " << join(rows[static_cast<std::size_t>(q)]) << "\n";
    t << "E(X) coefficients of (uv)^p: " << join(e) << "\n";
    t << "Betti numbers: " << join(betti) << "\n";
    o.table = t.str();
    return o;
}

Output cmd_shelling(const toric::Cone& c, const std::optional<std::string>& order_arg) {
    auto fl = toric::face_lattice(c);
    const auto& facets = fl.by_dim[static_cast<std::size_t>(fl.n - 1)];
    Output o;
    o.doc = header("shelling", c);
    json fj = json::array();
    for (int id : facets) fj.push_back(fl[id].rays);
    o.doc["facets"] = fj;
    std::vector<int> order;
    std::ostringstream t;
    std::vector<toric::PrefixCertificate> certs;
    bool valid = false;
    if (order_arg) {
        std::string s = *order_arg;
        for (char& ch : s)
            if (ch == ',') ch = ' ';
        std::istringstream in(s);
        int idx = 0;
        while (in >> idx) {
            if (idx < 0 || idx >= static_cast<int>(facets.size())) throw toric::InputError("facet index out of range in --order");
            order.push_back(facets[static_cast<std::size_t>(idx)]);
        }
        if (!in.eof()) throw toric::InputError("--order must be comma-separated facet indices");
        valid = toric::verify_shelling(fl, order, &certs);
        o.doc["perturbation"] = nullptr;
    } else {
        auto sh = toric::shelling(fl);
        order = sh.order;
        certs = sh.certificates;
        valid = true;
        o.doc["perturbation"] = sh.perturbation;
        t << "line direction: " << sh.perturbation << "\n";
    }
    auto position = [&](int id) {
        return static_cast<int>(std::find(facets.begin(), facets.end(), id) - facets.begin());
    };
    json oj = json::array();
    for (int id : order) oj.push_back(position(id));
    o.doc["order"] = oj;
    o.doc["valid"] = valid;
    json cj = json::array();
    if (valid)
        for (const auto& cert : certs) {
            json seg = json::array(), sub = json::array();
            for (int id : cert.initial_segment) seg.push_back(fl[id].rays);
            for (int id : cert.sub_shelling) sub.push_back(fl[id].rays);
            cj.push_back({{"facet", position(cert.facet)}, {"initial_segment", seg}, {"sub_shelling", sub}});
        }
    o.doc["certificates"] = cj;
    t << "facet order:";
    for (int id : order) t << ' ' << position(id) << rayset(fl[id].rays);
    t << "\n" << (valid ? "valid shelling" : "NOT a shelling") << "\n";
    o.table = t.str();
    if (!valid) o.code = verification;
    return o;
}

Output cmd_verify(const std::vector<toric::Cone>& cones, const std::string& suite, const toric::SuiteOptions& opts) {
    Output o;
    o.doc = {{"schema_version", schema_version}, {"command", "verify"}, {"suite", suite}};
    json results = json::array();
    std::ostringstream t;
    long total = 0, failed = 0;
    for (const auto& c : cones) {
        auto reports = toric::run_suite(c, suite, opts);
        json suites = json::array();
        for (const auto& r : reports) {
            total += r.checks;
            failed += static_cast<long>(r.failures.size());
            suites.push_back({{"suite", r.name}, {"checks", r.checks}, {"pass", r.pass()}, {"failures", r.failures}});
            t << (r.pass() ? "PASS " : "FAIL ") << c.name() << " " << r.name << " (" << r.checks << " checks)\n";
            for (const auto& w : r.failures) t << "    " << w << "\n";
        }
        results.push_back({{"cone", toric::cone_to_json(c)}, {"suites", suites}});
    }
    o.doc["results"] = results;
    o.doc["checks"] = total;
    o.doc["failures"] = failed;
    o.doc["pass"] = failed == 0;
    t << (failed == 0 ? "all passed" : std::to_string(failed) + " failure(s)") << " (" << total << " checks on "
      << cones.size() << " cone(s))\n";
    o.table = t.str();
    if (failed != 0) o.code = verification;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ishida complexes, Ext tables and Hodge data of affine toric varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("-o,--output", out_path, "Write output to a file instead of stdout");

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Cone JSON file")->required(); };

    auto* faces = app.add_subcommand("faces", "f-vector, face lattice and predicates");
    add_file(faces);
    int l = 0;
    std::optional<std::string> face;
    auto* ishida = app.add_subcommand("ishida", "Ishida complex dimensions");
    add_file(ishida);
    ishida->add_option("--l", l, "Degree parameter")->required();
    ishida->add_option("--face", face, "Face class as comma-separated ray indices (empty for the apex)");
    auto* ext = app.add_subcommand("ext", "Ext table, depth and lcdef");
    add_file(ext);
    auto* lc = app.add_subcommand("lcdef", "Local cohomological defect");
    add_file(lc);
    auto* decompose = app.add_subcommand("decompose", "Weight-graded decomposition of the trivial Hodge module");
    add_file(decompose);
    auto* gpoly = app.add_subcommand("gpoly", "Toric g- and h-vectors");
    add_file(gpoly);
    auto* hodge = app.add_subcommand("hodge", "Hodge-Du Bois table of the toric variety of a simple polytope");
    add_file(hodge);
    std::optional<std::string> order;
    auto* shell = app.add_subcommand("shelling", "Line shelling of the facets, or check a given order");
    add_file(shell);
    shell->add_option("--order", order, "Comma-separated facet indices to check instead");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    std::string vfile;
    std::vector<int> random;
    std::uint64_t seed = 1;
    bool corpus = false;
    toric::SuiteOptions opts;
    std::vector<std::string> suite_choices = toric::suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
    auto* vf = verify->add_option("file", vfile, "Cone JSON file");
    auto* vr = verify->add_option("--random", random, "N_DIM N_COUNT: seeded random cones")->expected(2);
    verify->add_option("--seed", seed, "Seed for --random");
    auto* vc = verify->add_flag("--corpus", corpus, "Run on the built-in fixture corpus");
    verify->add_flag("--corrupt-differential", opts.corrupt_differential, "Perturb a differential (negative control)");
    vf->excludes(vr)->excludes(vc);
    vr->excludes(vc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    Output out;
    try {
        auto load = [&]() {
            try {
                return toric::load_cone_file(file);
            } catch (const std::invalid_argument& e) {
                throw toric::InputError(e.what());
            }
        };
        if (*faces)
            out = cmd_faces(load());
        else if (*ishida)
            out = cmd_ishida(load(), l, face);
        else if (*ext)
            out = cmd_ext(load());
        else if (*lc)
            out = cmd_lcdef(load());
        else if (*decompose)
            out = cmd_decompose(load());
        else if (*gpoly)
            out = cmd_gpoly(load());
        else if (*hodge)
            out = cmd_hodge(load());
        else if (*shell)
            out = cmd_shelling(load(), order);
        else {
            std::vector<toric::Cone> cones;
            if (corpus) {
                cones = toric::fixture_corpus();
            } else if (!random.empty()) {
                if (random[0] < 1 || random[1] < 0) throw toric::InputError("--random needs N_DIM >= 1 and N_COUNT >= 0");
                toric::ConeSampler sampler(seed);
                for (int i = 0; i < random[1]; ++i) {
                    auto c = sampler.random_cone(random[0]);
                    c.set_name("random" + std::to_string(random[0]) + "_" + std::to_string(i));
                    cones.push_back(std::move(c));
                }
            } else if (!vfile.empty()) {
                file = vfile;
                cones.push_back(load());
            } else {
                throw toric::InputError("verify needs a FILE, --random N_DIM N_COUNT or --corpus");
            }
            out = cmd_verify(cones, suite, opts);
            out.doc["seed"] = random.empty() ? json(nullptr) : json(seed);
        }
    } catch (const toric::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return computation;
    }

    const std::string text = format == "json" ? out.doc.dump(2) + "\n" : out.table;
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return usage;
        }
        f << text;
    }
    return out.code;
}
