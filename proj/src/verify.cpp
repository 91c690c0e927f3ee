#include "gjets/verify.hpp"

#include "gjets/betti.hpp"
#include "gjets/error.hpp"
#include "gjets/graph_io.hpp"
#include "gjets/groebner.hpp"
#include "gjets/jets.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gjets {

namespace {

std::string cover_names(const Graph& g, const std::vector<int>& cover) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < cover.size(); ++i)
        os << (i ? "," : "") << g.vertex_name(cover[i]);
    os << "}";
    return os.str();
}

std::string cycle_names(const Graph& g, const Cycle& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.path.size(); ++i)
        os << (i ? " " : "") << g.vertex_name(c.path[i]);
    os << ")";
    return os.str();
}

// Product of the order-0 jets variables over the complement of a cover.
Polynomial complement_product(const JetsRing& jr, const Graph& g, const std::vector<int>& cover) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : cover)
        in[static_cast<std::size_t>(v)] = 1;
    Monomial m;
    for (int v = 0; v < g.n(); ++v)
        if (!in[static_cast<std::size_t>(v)])
            m = m * Monomial::var(jr.var(v, 0));
    return Polynomial::from_monomial(jr.ring, m);
}

struct CellResult {
    SuiteStatus status = SuiteStatus::Pass;
    std::string witness;
};

CellResult check_cor135(const Graph& g, const Limits& limits) {
    RingPtr ring = vertex_ring(g);
    std::vector<MonomialIdeal> primes;
    for (const auto& w : minimal_vertex_covers(g, limits)) {
        std::vector<Monomial> gens;
        for (int v : w.cover)
            gens.push_back(Monomial::var(v));
        primes.emplace_back(ring, std::move(gens));
    }
    MonomialIdeal intersection = mono_intersect(primes, ring);
    MonomialIdeal ideal = edge_ideal(g);
    if (intersection.generators() == ideal.generators())
        return {};
    std::ostringstream os;
    os << "edge ideal:\n" << ideal.to_string() << "cover intersection:\n"
       << intersection.to_string() << "graph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

CellResult check_vc_colon(const Graph& g, int s, const VertexCover& w, const Limits& limits) {
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    PolyIdeal jets = jets_of_ideal(edge_ideal(g), s);
    Polynomial f = complement_product(jr, g, w.cover);
    PolyIdeal saturated = saturate(jets, f, limits);
    PolyIdeal prime = PolyIdeal::from_monomial_ideal(cover_prime_ideal(jr, w.cover));
    if (ideal_equal(saturated, prime, limits))
        return {};
    std::ostringstream os;
    os << "cover prime:\n" << prime.to_string() << "saturation by " << f.to_string() << ":\n"
       << saturated.to_string() << "graph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

CellResult check_minimal_prime(const Graph& g, int s, const VertexCover& w,
                               const Limits& limits) {
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    MonomialIdeal radical = radical_of_jets(edge_ideal(g), s);
    MonomialIdeal prime = cover_prime_ideal(jr, w.cover);
    for (const auto& p : minimal_primes(radical, limits))
        if (p.generators() == prime.generators())
            return {};
    std::ostringstream os;
    os << "cover prime:\n" << prime.to_string() << "radical of jets:\n" << radical.to_string()
       << "graph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

CellResult check_pc_identity(const Graph& g, int s, const Limits& limits) {
    MonomialIdeal closed = principal_component_ideal(g, s);
    MonomialIdeal intersected = pc_as_cover_intersection(g, s, limits);
    if (closed == intersected)
        return {};
    std::ostringstream os;
    os << "closed form:\n" << closed.to_string() << "cover intersection:\n"
       << intersected.to_string() << "graph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

CellResult check_pc_saturation(const Graph& g, int s, const Limits& limits) {
    MonomialIdeal closed = principal_component_ideal(g, s);
    PolyIdeal saturated = principal_component_via_saturation(g, s, limits);
    for (const auto& gen : saturated.generators())
        if (!mono_member(gen, closed)) {
            std::ostringstream os;
            os << "saturation generator outside the closed form: " << gen.to_string()
               << "\nclosed form:\n" << closed.to_string() << "graph:\n" << graph_to_json(g);
            return {SuiteStatus::Fail, os.str()};
        }
    for (const auto& m : closed.generators()) {
        Polynomial gen = Polynomial::from_monomial(saturated.ring(), m);
        if (!radical_membership(gen, saturated, limits)) {
            std::ostringstream os;
            os << "closed-form generator outside the saturation radical: " << gen.to_string()
               << "\nsaturation:\n" << saturated.to_string() << "graph:\n" << graph_to_json(g);
            return {SuiteStatus::Fail, os.str()};
        }
    }
    return {};
}

CellResult check_cochordal_pc(const Graph& g, int s, const Limits&) {
    Graph pc = principal_component_graph(g, s);
    Graph pc_complement = complement(pc);
    auto [chordal, witness] = is_chordal(pc_complement);
    if (chordal)
        return {};
    std::ostringstream os;
    os << "chordless cycle in the principal-component complement: ";
    if (witness)
        os << cycle_names(pc_complement, *witness);
    os << "\ngraph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

CellResult check_froberg(const Graph& g, const Limits& limits) {
    bool linear = has_linear_resolution(edge_ideal(g), limits);
    bool cochordal = is_cochordal(g);
    if (linear == cochordal)
        return {};
    std::ostringstream os;
    os << "linear resolution: " << (linear ? "true" : "false")
       << ", cochordal: " << (cochordal ? "true" : "false") << "\nBetti table:\n"
       << betti_table(edge_ideal(g), limits).to_text() << "graph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

CellResult check_ghw_cover(const Graph& g, int s, const VertexCover& w, const Limits&) {
    VertexCover jw = jets_of_cover(w, s);
    if (is_minimal_cover(jw.graph, jw.cover))
        return {};
    std::ostringstream os;
    os << "jets cover " << cover_names(jw.graph, jw.cover)
       << (is_cover(jw.graph, jw.cover) ? " is not minimal" : " misses an edge")
       << "\njets graph:\n" << graph_to_json(jw.graph) << "base graph:\n" << graph_to_json(g);
    return {SuiteStatus::Fail, os.str()};
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "cor135",    "vc-colon",      "minimal-prime", "pc-identity",
        "pc-saturation", "cochordal-pc", "froberg",     "ghw-cover"};
    return names;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const Corpus& corpus,
                                          const std::vector<int>& s_values,
                                          const Limits& limits) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UnknownSuite("unknown suite: " + suite);

    bool per_cover = suite == "vc-colon" || suite == "minimal-prime" || suite == "ghw-cover";
    bool uses_s = suite != "cor135" && suite != "froberg";

    struct Cell {
        VerificationReport header;
        std::function<CellResult()> run;
    };
    std::vector<Cell> cells;
    for (const auto& [name, graph] : corpus.instances) {
        const Graph& g = graph;
        if (suite == "cochordal-pc" && !is_cochordal(g))
            continue; // the statement is about cochordal inputs
        std::vector<int> orders = uses_s ? s_values : std::vector<int>{-1};
        for (int s : orders) {
            if (per_cover) {
                for (const auto& w : minimal_vertex_covers(g, limits)) {
                    VerificationReport header{suite, name, s, cover_names(g, w.cover),
                                              SuiteStatus::Pass, ""};
                    VertexCover cover = w;
                    if (suite == "vc-colon")
                        cells.push_back({header, [g, s, cover, limits] {
                                             return check_vc_colon(g, s, cover, limits);
                                         }});
                    else if (suite == "minimal-prime")
                        cells.push_back({header, [g, s, cover, limits] {
                                             return check_minimal_prime(g, s, cover, limits);
                                         }});
                    else
                        cells.push_back({header, [g, s, cover, limits] {
                                             return check_ghw_cover(g, s, cover, limits);
                                         }});
                }
            } else {
                VerificationReport header{suite, name, s, "", SuiteStatus::Pass, ""};
                if (suite == "cor135")
                    cells.push_back({header, [g, limits] { return check_cor135(g, limits); }});
                else if (suite == "pc-identity")
                    cells.push_back(
                        {header, [g, s, limits] { return check_pc_identity(g, s, limits); }});
                else if (suite == "pc-saturation")
                    cells.push_back(
                        {header, [g, s, limits] { return check_pc_saturation(g, s, limits); }});
                else if (suite == "cochordal-pc")
                    cells.push_back(
                        {header, [g, s, limits] { return check_cochordal_pc(g, s, limits); }});
                else if (suite == "froberg")
                    cells.push_back({header, [g, limits] { return check_froberg(g, limits); }});
            }
        }
    }

    std::vector<VerificationReport> reports(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        VerificationReport r = cells[static_cast<std::size_t>(i)].header;
        try {
            CellResult result = cells[static_cast<std::size_t>(i)].run();
            r.status = result.status;
            r.witness = result.witness;
        } catch (const ResourceLimit& e) {
            r.status = SuiteStatus::Skipped;
            r.witness = e.what();
        } catch (const CapExceeded& e) {
            r.status = SuiteStatus::Skipped;
            r.witness = e.what();
        }
        reports[static_cast<std::size_t>(i)] = std::move(r);
    }
    return reports;
}

int reports_exit_code(const std::vector<VerificationReport>& reports) {
    bool any_fail = false, any_skip = false;
    for (const auto& r : reports) {
        any_fail |= r.status == SuiteStatus::Fail;
        any_skip |= r.status == SuiteStatus::Skipped;
    }
    if (any_fail)
        return 1;
    return any_skip ? 3 : 0;
}

std::string report_line(const VerificationReport& report) {
    std::ostringstream os;
    switch (report.status) {
    case SuiteStatus::Pass:
        os << "pass";
        break;
    case SuiteStatus::Fail:
        os << "FAIL";
        break;
    case SuiteStatus::Skipped:
        os << "skip";
        break;
    }
    os << " " << report.suite << " " << report.instance;
    if (report.s >= 0)
        os << " s=" << report.s;
    if (!report.detail.empty())
        os << " " << report.detail;
    return os.str();
}

} // namespace gjets
