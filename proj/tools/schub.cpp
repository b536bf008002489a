// schub: command line front end for the Schubert-variety combinatorics
// library.  Subcommands: analyze, enumerate, kl, interval, poincare, graph,
// locus, arrangement, matcount, coxeter (game/flatten/bn-smooth), series,
// verify.  Exit codes: 0 success, 2 parse error, 3 budget exceeded.

#include "schubert/arrangements.hpp"
#include "schubert/bruhat.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/hecke.hpp"
#include "schubert/patterns.hpp"
#include "schubert/properties.hpp"
#include "schubert/series.hpp"
#include "schubert/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace {

using namespace schubert;
using nlohmann::json;

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

json poly_coeff_array(const IntPolynomial& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coefficient(k).str());
    return arr;
}

json poly_exponent_map(const IntPolynomial& p) {
    json obj = json::object();
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coefficient(k) != 0) obj[std::to_string(k)] = p.coefficient(k).str();
    return obj;
}

std::vector<std::pair<int, int>> parse_cells(const std::string& text) {
    std::vector<std::pair<int, int>> cells;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        if (chunk.empty()) continue;
        const auto comma = chunk.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("expected i,j cell: " + chunk);
        cells.emplace_back(std::stoi(chunk.substr(0, comma)), std::stoi(chunk.substr(comma + 1)));
    }
    return cells;
}

std::vector<std::vector<int>> parse_root_list(const std::string& text) {
    std::vector<std::vector<int>> roots;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        if (chunk.empty()) continue;
        std::vector<int> root;
        std::istringstream cs(chunk);
        std::string tok;
        while (std::getline(cs, tok, ',')) root.push_back(std::stoi(tok));
        roots.push_back(std::move(root));
    }
    return roots;
}

RootSystemType type_from_letter(const std::string& s) {
    if (s == "a" || s == "A") return RootSystemType::A;
    if (s == "b" || s == "B") return RootSystemType::B;
    if (s == "c" || s == "C") return RootSystemType::C;
    if (s == "d" || s == "D") return RootSystemType::D;
    throw std::invalid_argument("unknown root system type: " + s);
}

int run(int argc, char** argv) {
    CLI::App app{"Schubert variety combinatorics toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    bool as_tsv = false;
    std::size_t budget = 50000;
    int threads = 1;
    app.add_flag("--json", as_json, "prefer JSON output");
    app.add_flag("--tsv", as_tsv, "prefer TSV output");
    app.add_option("--budget", budget, "interval element budget for KL work");
    app.add_option("--threads", threads, "worker threads for enumeration");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "property report for one permutation");
    std::vector<std::string> analyze_perm;
    bool with_kl = false, with_locus = false, with_poincare = false, with_arrangement = false;
    analyze->add_option("permutation", analyze_perm, "one-line notation")->required();
    analyze->add_flag("--kl", with_kl, "include the KL table");
    analyze->add_flag("--locus", with_locus, "include the singular locus");
    analyze->add_flag("--poincare", with_poincare, "include the Poincare polynomial");
    analyze->add_flag("--arrangement", with_arrangement, "include inversion arrangement stats");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count or list a property over S_n");
    std::string enum_property, enum_mode = "count";
    int enum_n = 0;
    enumerate->add_option("property", enum_property, "property name")->required();
    enumerate->add_option("n", enum_n, "symmetric group size")->required();
    enumerate->add_option("--mode", enum_mode, "count or list")
        ->check(CLI::IsMember({"count", "list"}));

    // kl
    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
    std::vector<std::string> kl_top;
    std::string kl_bottom;
    kl->add_option("w", kl_top, "top permutation")->required();
    kl->add_option("--x", kl_bottom, "bottom permutation (single polynomial)");

    // interval
    auto* interval = app.add_subcommand("interval", "materialize a Bruhat interval");
    std::string interval_bottom, interval_top;
    bool interval_dot = false;
    interval->add_option("bottom", interval_bottom, "bottom permutation")->required();
    interval->add_option("top", interval_top, "top permutation")->required();
    interval->add_flag("--dot", interval_dot, "emit the Hasse diagram as DOT");

    // poincare
    auto* poin = app.add_subcommand("poincare", "Poincare polynomial of [id, w]");
    std::vector<std::string> poin_perm;
    poin->add_option("permutation", poin_perm)->required();

    // graph
    auto* graph = app.add_subcommand("graph", "Bruhat graph as DOT");
    std::vector<std::string> graph_perm;
    graph->add_option("permutation", graph_perm)->required();

    // locus
    auto* locus = app.add_subcommand("locus", "singular locus components");
    std::vector<std::string> locus_perm;
    bool locus_by_patterns = false;
    locus->add_option("permutation", locus_perm)->required();
    locus->add_flag("--by-patterns", locus_by_patterns, "use the pattern construction");

    // arrangement
    auto* arrangement = app.add_subcommand("arrangement", "inversion arrangement statistics");
    std::vector<std::string> arr_perm;
    arrangement->add_option("permutation", arr_perm)->required();

    // matcount
    auto* matcount = app.add_subcommand("matcount", "matrix rank counting over F_q");
    int mat_n = 0, mat_q = 0, mat_rank = 0;
    std::string mat_forbidden;
    matcount->add_option("--n", mat_n, "matrix size")->required();
    matcount->add_option("--q", mat_q, "field size (prime)")->required();
    matcount->add_option("--rank", mat_rank, "target rank")->required();
    matcount->add_option("--forbidden", mat_forbidden, "cells i,j;i,j forced to zero");

    // coxeter
    auto* coxeter = app.add_subcommand("coxeter", "numbers game, flattening, B_n smoothness");
    coxeter->require_subcommand(1);

    auto* game = coxeter->add_subcommand("game", "run the numbers game on a word");
    std::string game_type = "a";
    int game_rank = 0;
    std::string game_graph_file;
    std::vector<int> game_word;
    game->add_option("--type", game_type, "builtin graph type (a or b)");
    game->add_option("--rank", game_rank, "graph rank");
    game->add_option("--graph-file", game_graph_file, "edge list file: 'i j m' per line");
    game->add_option("--word", game_word, "generator indices");

    auto* flatten_cmd = coxeter->add_subcommand("flatten", "parabolic pattern map");
    std::string fl_type = "a";
    int fl_rank = 0;
    std::string fl_roots, fl_element;
    flatten_cmd->add_option("--type", fl_type, "ambient type a|b|c|d")->required();
    flatten_cmd->add_option("--rank", fl_rank, "ambient rank")->required();
    flatten_cmd->add_option("--roots", fl_roots, "spanning roots '1,-1,0;0,1,-1'")->required();
    flatten_cmd->add_option("--element", fl_element, "permutation or signed permutation")
        ->required();

    auto* bn = coxeter->add_subcommand("bn-smooth", "signed pattern smoothness test");
    std::string bn_elem;
    bn->add_option("element", bn_elem, "signed permutation, e.g. -2,-1")->required();

    // series
    auto* series = app.add_subcommand("series", "generating function coefficients");
    std::string series_kind;
    int series_nmax = 8;
    series->add_option("kind", series_kind, "smooth|factorial|inclusions|catalan")->required();
    series->add_option("--nmax", series_nmax, "highest coefficient");

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    for (auto* sub : coxeter->get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);
    set_symmetric_kl_budget(budget);

    if (*analyze) {
        const Permutation w = parse_permutation(join(analyze_perm));
        const PropertyReport report = classify(w);
        json j = json::parse(report.to_json());
        if (with_poincare) j["poincare"] = poly_coeff_array(poincare(w));
        if (with_kl) {
            json rows = json::array();
            for (const auto& [x, p] : kl_table(w).rows)
                rows.push_back({{"x", x.to_string()}, {"polynomial", poly_exponent_map(p)}});
            j["kl_table"] = rows;
        }
        if (with_locus) {
            json loci = json::array();
            for (const auto& v : singular_locus(w)) loci.push_back(v.to_string());
            j["singular_locus"] = loci;
        }
        if (with_arrangement) {
            j["region_count"] = region_count(w).str();
            j["region_distance_gf"] = poly_coeff_array(region_distance_gf(w));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (*enumerate) {
        if (enum_mode == "list") {
            if (enum_property == "bn_smooth" || enum_property == "bn-smooth") {
                for (const auto& w : list_bn_smooth(enum_n)) std::cout << w.to_string() << "\n";
            } else {
                for (const auto& w : list_property(enum_property, enum_n))
                    std::cout << w.to_string() << "\n";
            }
            return 0;
        }
        const VerificationReport report = run_enumerate(enum_property, enum_n, threads);
        if (as_json) {
            json rows = json::array();
            for (const auto& row : report.rows) {
                json r{{"n", row.n}, {"count", row.actual.str()}, {"ok", row.ok}};
                if (row.expected) r["expected"] = row.expected->str();
                rows.push_back(std::move(r));
            }
            std::cout << json{{"property", report.suite},
                              {"rows", rows},
                              {"passed", report.passed},
                              {"seconds", report.elapsed_seconds}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& row : report.rows) {
                std::cout << enum_property << "\tn=" << row.n << "\t" << row.actual.str();
                if (row.expected)
                    std::cout << "\texpected=" << row.expected->str()
                              << (row.ok ? "\tok" : "\tMISMATCH");
                std::cout << "\n";
            }
            if (!report.passed) return 1;
        }
        return 0;
    }

    if (*kl) {
        const Permutation w = parse_permutation(join(kl_top));
        if (!kl_bottom.empty()) {
            const Permutation x = parse_permutation(kl_bottom);
            const IntPolynomial p = kl_polynomial(x, w);
            if (as_json)
                std::cout << poly_exponent_map(p).dump() << "\n";
            else
                std::cout << p.to_string("q") << "\n";
            return 0;
        }
        const KLTable table = kl_table(w);
        if (as_json) {
            json rows = json::array();
            for (const auto& [x, p] : table.rows)
                rows.push_back({{"x", x.to_string()}, {"polynomial", poly_exponent_map(p)}});
            std::cout << json{{"top", w.to_string()}, {"rows", rows}}.dump(2) << "\n";
        } else {
            for (const auto& [x, p] : table.rows)
                std::cout << x.to_string() << "\t" << p.to_string("q") << "\n";
        }
        return 0;
    }

    if (*interval) {
        const BruhatInterval iv(parse_permutation(interval_bottom),
                                parse_permutation(interval_top));
        if (interval_dot) {
            std::cout << iv.to_dot();
            return 0;
        }
        if (as_json) {
            json elems = json::array();
            for (const auto& v : iv.elements()) elems.push_back(v.to_string());
            std::cout << json{{"bottom", iv.bottom().to_string()},
                              {"top", iv.top().to_string()},
                              {"size", iv.size()},
                              {"rank_gf", poly_coeff_array(iv.rank_generating_function())},
                              {"elements", elems}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "size " << iv.size() << ", rank generating function "
                      << iv.rank_generating_function().to_string() << "\n";
            for (const auto& v : iv.elements()) std::cout << v.to_string() << "\n";
        }
        return 0;
    }

    if (*poin) {
        const IntPolynomial p = poincare(parse_permutation(join(poin_perm)));
        if (as_json)
            std::cout << poly_coeff_array(p).dump() << "\n";
        else
            std::cout << p.to_string() << "\n";
        return 0;
    }

    if (*graph) {
        std::cout << bruhat_graph(parse_permutation(join(graph_perm))).to_dot();
        return 0;
    }

    if (*locus) {
        const Permutation w = parse_permutation(join(locus_perm));
        const auto components = locus_by_patterns ? singular_locus_by_patterns(w)
                                                  : singular_locus(w);
        if (as_json) {
            json arr = json::array();
            for (const auto& v : components) arr.push_back(v.to_string());
            std::cout << arr.dump() << "\n";
        } else {
            for (const auto& v : components) std::cout << v.to_string() << "\n";
            if (components.empty()) std::cout << "smooth\n";
        }
        return 0;
    }

    if (*arrangement) {
        const Permutation w = parse_permutation(join(arr_perm));
        if (as_tsv) {
            std::cout << regions_tsv(w);
            return 0;
        }
        const IntPolynomial gf = region_distance_gf(w);
        if (as_json) {
            std::cout << json{{"hyperplanes", inversion_arrangement(w).hyperplanes.size()},
                              {"regions", region_count(w).str()},
                              {"distance_gf", poly_coeff_array(gf)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "hyperplanes " << inversion_arrangement(w).hyperplanes.size()
                      << ", regions " << region_count(w).str() << "\nR_w(t) = "
                      << gf.to_string() << "\n";
        }
        return 0;
    }

    if (*matcount) {
        std::cout << matcount_fq(mat_n, parse_cells(mat_forbidden), mat_q, mat_rank).str()
                  << "\n";
        return 0;
    }

    if (*game) {
        std::shared_ptr<const CoxeterGraph> g;
        if (!game_graph_file.empty()) {
            std::ifstream in(game_graph_file);
            if (!in) throw std::invalid_argument("cannot open " + game_graph_file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            g = std::make_shared<CoxeterGraph>(CoxeterGraph::parse(buffer.str(), game_rank));
        } else if (game_type == "a") {
            g = std::make_shared<CoxeterGraph>(CoxeterGraph::type_a(game_rank));
        } else if (game_type == "b") {
            g = std::make_shared<CoxeterGraph>(CoxeterGraph::type_b(game_rank));
        } else {
            throw std::invalid_argument("unknown builtin graph type: " + game_type);
        }
        const CoxeterElement e = canonical_form(game_word, g);
        json values = json::array();
        for (long long v : e.values()) values.push_back(v);
        json descents = json::array();
        for (int d : e.right_descents()) descents.push_back(d);
        json word = json::array();
        for (int i : e.reduced_word()) word.push_back(i);
        std::cout << json{{"values", values},
                          {"length", e.length()},
                          {"right_descents", descents},
                          {"reduced_word", word}}
                         .dump(2)
                  << "\n";
        return 0;
    }

    if (*flatten_cmd) {
        RootSubsystemSelector sel;
        sel.ambient_type = type_from_letter(fl_type);
        sel.ambient_rank = fl_rank;
        sel.spanning_roots = parse_root_list(fl_roots);
        const RootSubsystem sub = root_subsystem(sel);
        AmbientElement element;
        if (fl_element.find('-') != std::string::npos && sel.ambient_type != RootSystemType::A)
            element = ambient_from_signed(parse_signed_permutation(fl_element));
        else if (sel.ambient_type == RootSystemType::A)
            element = ambient_from_permutation(parse_permutation(fl_element), fl_rank + 1);
        else
            element = ambient_from_signed(parse_signed_permutation(fl_element));
        const AmbientElement fl = flatten_parabolic(element, sub);
        for (size_t k = 0; k < fl.size(); ++k) std::cout << (k ? " " : "") << fl[k];
        std::cout << "\n";
        return 0;
    }

    if (*bn) {
        std::cout << (bn_is_smooth(parse_signed_permutation(bn_elem)) ? "smooth" : "singular")
                  << "\n";
        return 0;
    }

    if (*series) {
        const auto coeffs = gf_series(series_kind_from_name(series_kind), series_nmax);
        if (as_json) {
            json arr = json::array();
            for (const auto& c : coeffs) arr.push_back(c.str());
            std::cout << arr.dump() << "\n";
        } else {
            for (size_t k = 0; k < coeffs.size(); ++k)
                std::cout << k << "\t" << coeffs[k].str() << "\n";
        }
        return 0;
    }

    if (*verify) {
        const auto results = run_verification(std::cout, threads);
        for (const auto& r : results)
            if (!r.passed) return 1;
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schubert::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
