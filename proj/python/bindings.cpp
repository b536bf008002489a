#include "schubert/arrangements.hpp"
#include "schubert/bruhat.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/hecke.hpp"
#include "schubert/patterns.hpp"
#include "schubert/permutation.hpp"
#include "schubert/properties.hpp"
#include "schubert/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace schubert;

namespace {

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list poly_to_list(const IntPolynomial& p) {
    py::list out;
    for (int k = 0; k <= p.degree(); ++k) out.append(to_py(p.coefficient(k)));
    return out;
}

Permutation perm(const std::vector<int>& one_line) { return Permutation(one_line); }

py::list perms_to_list(const std::vector<Permutation>& ws) {
    py::list out;
    for (const auto& w : ws) out.append(w.one_line());
    return out;
}

}  // namespace

PYBIND11_MODULE(_schubert, m) {
    m.doc() = "Schubert variety combinatorics: patterns, Bruhat order, "
              "Kazhdan-Lusztig polynomials, inversion arrangements";

    // permutations
    m.def("length", [](const std::vector<int>& w) { return perm(w).length(); });
    m.def("inversions", [](const std::vector<int>& w) { return perm(w).inversions(); });
    m.def("inverse", [](const std::vector<int>& w) { return perm(w).inverse().one_line(); });
    m.def("flatten",
          [](const std::vector<int>& values) { return flatten(values).one_line(); });
    m.def("rank_table", [](const std::vector<int>& w) {
        const RankTable rk{perm(w)};
        std::vector<std::vector<int>> grid(rk.size(), std::vector<int>(rk.size()));
        for (int i = 1; i <= rk.size(); ++i)
            for (int j = 1; j <= rk.size(); ++j) grid[i - 1][j - 1] = rk.at(i, j);
        return grid;
    });
    m.def("diagram_cells", [](const std::vector<int>& w) { return diagram(perm(w)).cells; });
    m.def("essential_cells",
          [](const std::vector<int>& w) { return diagram(perm(w)).essential; });
    m.def("shape_of_diagram",
          [](const std::vector<int>& w) { return shape_of_diagram(perm(w)); });
    m.def("reduced_words",
          [](const std::vector<int>& w, std::uint64_t cap) {
              return reduced_words(perm(w), cap);
          },
          py::arg("w"), py::arg("cap") = (1u << 22));
    m.def("reduced_word_count",
          [](const std::vector<int>& w) { return to_py(reduced_word_count(perm(w))); });
    m.def("syt_count", [](const std::vector<int>& shape) { return to_py(syt_count(shape)); });

    // patterns
    m.def("occurrences",
          [](const std::vector<int>& host, const std::vector<int>& pattern) {
              py::list out;
              for (const auto& occ : occurrences_classical(perm(host), perm(pattern)))
                  out.append(occ.positions);
              return out;
          });
    m.def("contains", [](const std::vector<int>& host, const std::string& spec_text) {
        const PatternSpec spec = parse_pattern_spec(spec_text);
        switch (spec.kind) {
            case PatternKind::classical:
                return contains_classical(perm(host), spec.pattern);
            case PatternKind::adjacency:
                return contains_adjacency(perm(host), spec);
            case PatternKind::bruhat_restricted:
                return contains_bruhat_restricted(perm(host), spec);
            default:
                throw std::invalid_argument("unsupported pattern kind for contains()");
        }
    });
    m.def("signed_contains",
          [](const std::vector<int>& host, const std::vector<int>& pattern) {
              return signed_contains(SignedPermutation(host), SignedPermutation(pattern));
          });
    m.def("interval_embeds",
          [](const std::vector<int>& u, const std::vector<int>& v, const std::vector<int>& x,
             const std::vector<int>& y) -> py::object {
              auto occ = interval_embeds(perm(u), perm(v), perm(x), perm(y));
              if (!occ) return py::none();
              return py::cast(occ->positions);
          });

    // Bruhat order
    m.def("bruhat_leq", [](const std::vector<int>& x, const std::vector<int>& w) {
        return bruhat_leq(perm(x), perm(w));
    });
    m.def("covers_down",
          [](const std::vector<int>& w) { return perms_to_list(covers_down(perm(w))); });
    m.def("interval_elements",
          [](const std::vector<int>& x, const std::vector<int>& w) {
              return perms_to_list(BruhatInterval(perm(x), perm(w)).elements());
          });
    m.def("poincare", [](const std::vector<int>& w) { return poly_to_list(poincare(perm(w))); });
    m.def("is_palindromic_poly", [](const std::vector<long>& coeffs) {
        return is_palindromic(IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end())));
    });
    m.def("factor_q_integers", [](const std::vector<long>& coeffs) -> py::object {
        auto f =
            factor_q_integers(IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end())));
        if (!f) return py::none();
        return py::cast(*f);
    });
    m.def("tangent_dimension", [](const std::vector<int>& v, const std::vector<int>& w) {
        return tangent_dimension(perm(v), perm(w));
    });
    m.def("bruhat_graph_edges", [](const std::vector<int>& w) {
        const BruhatGraph g = bruhat_graph(perm(w));
        py::list edges;
        for (auto [a, b] : g.edges)
            edges.append(py::make_tuple(g.vertices[a].one_line(), g.vertices[b].one_line()));
        return edges;
    });
    m.def("singular_locus",
          [](const std::vector<int>& w) { return perms_to_list(singular_locus(perm(w))); });
    m.def("singular_locus_by_patterns", [](const std::vector<int>& w) {
        return perms_to_list(singular_locus_by_patterns(perm(w)));
    });
    m.def("essential_set", [](const std::vector<int>& w) {
        return perms_to_list(essential_set_E(perm(w), static_cast<int>(w.size())));
    });

    // Kazhdan-Lusztig
    m.def("kl_polynomial", [](const std::vector<int>& x, const std::vector<int>& w) {
        return poly_to_list(kl_polynomial(perm(x), perm(w)));
    });
    m.def("kl_table", [](const std::vector<int>& w) {
        py::dict out;
        for (const auto& [x, p] : kl_table(perm(w)).rows)
            out[py::tuple(py::cast(x.one_line()))] = poly_to_list(p);
        return out;
    });
    m.def("mu", [](const std::vector<int>& x, const std::vector<int>& w) {
        return to_py(mu(perm(x), perm(w)));
    });
    m.def("deodhar_identity_holds",
          [](const std::vector<int>& w) { return deodhar_identity_holds(perm(w)); });
    m.def("mask_defect_gf",
          [](const std::vector<int>& v, const std::vector<int>& w, const ReducedWord& word) {
              return poly_to_list(mask_defect_gf(perm(v), perm(w), word));
          });
    m.def("first_reduced_word",
          [](const std::vector<int>& w) { return first_reduced_word(perm(w)); });
    m.def("set_kl_budget", &set_symmetric_kl_budget);

    // property checkers
    m.def("is_smooth", [](const std::vector<int>& w) { return is_smooth(perm(w)); });
    m.def("is_factorial", [](const std::vector<int>& w) { return is_factorial(perm(w)); });
    m.def("is_gorenstein", [](const std::vector<int>& w) { return is_gorenstein(perm(w)); });
    m.def("is_defined_by_inclusions",
          [](const std::vector<int>& w) { return is_defined_by_inclusions(perm(w)); });
    m.def("is_lci", [](const std::vector<int>& w) { return is_lci(perm(w)); });
    m.def("is_321_hexagon_avoiding",
          [](const std::vector<int>& w) { return is_321_hexagon_avoiding(perm(w)); });
    m.def("is_boolean", [](const std::vector<int>& w) { return is_boolean(perm(w)); });
    m.def("is_vexillary", [](const std::vector<int>& w) { return is_vexillary(perm(w)); });
    m.def("is_2_vexillary", [](const std::vector<int>& w) { return is_2_vexillary(perm(w)); });
    m.def("is_kl2", [](const std::vector<int>& w) { return kl_filtration_level_le2(perm(w)); });
    m.def("classify_json", [](const std::vector<int>& w) { return classify(perm(w)).to_json(); });

    // arrangements and matrix counting
    m.def("region_count",
          [](const std::vector<int>& w) { return to_py(region_count(perm(w))); });
    m.def("region_distance_gf",
          [](const std::vector<int>& w) { return poly_to_list(region_distance_gf(perm(w))); });
    m.def("matcount_fq",
          [](int n, const std::vector<std::pair<int, int>>& forbidden, int q, int r) {
              return to_py(matcount_fq(n, forbidden, q, r));
          });
    m.def("lewis_morales_check",
          [](const std::vector<int>& w, const std::vector<int>& qs) {
              return lewis_morales_check(perm(w), qs);
          });

    // series and enumeration
    m.def("gf_series", [](const std::string& kind, int nmax) {
        py::list out;
        for (const auto& c : gf_series(series_kind_from_name(kind), nmax)) out.append(to_py(c));
        return out;
    });
    m.def("count_property", [](const std::string& name, int n, int threads) {
        return to_py(count_property(name, n, threads));
    }, py::arg("name"), py::arg("n"), py::arg("threads") = 1);

    // Coxeter systems
    m.def("numbers_game",
          [](const std::vector<int>& word, const std::string& type, int rank) {
              std::shared_ptr<const CoxeterGraph> g;
              if (type == "a")
                  g = std::make_shared<CoxeterGraph>(CoxeterGraph::type_a(rank));
              else if (type == "b")
                  g = std::make_shared<CoxeterGraph>(CoxeterGraph::type_b(rank));
              else
                  throw std::invalid_argument("type must be 'a' or 'b'");
              const CoxeterElement e = canonical_form(word, g);
              return py::make_tuple(e.values(), e.length(), e.right_descents());
          },
          py::arg("word"), py::arg("type"), py::arg("rank"));
    m.def("bn_is_smooth",
          [](const std::vector<int>& w) { return bn_is_smooth(SignedPermutation(w)); });
    m.def("bn_length", [](const std::vector<int>& w) { return SignedPermutation(w).length(); });

    py::register_exception<budget_error>(m, "BudgetError");
}
