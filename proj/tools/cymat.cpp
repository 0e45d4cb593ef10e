// cymat: construct, verify, count, and search cyclic matroids on Z_n.
//
// Subcommands: bounds, orbits, enumerate, verify, search, code, plane,
// knormal, figures. All output is deterministic given the flags (and seed).
// Exit codes: 0 success/valid, 1 invalid input or verification failure,
// 2 resource cap exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cymat/bounds.hpp"
#include "cymat/cyclic_code.hpp"
#include "cymat/jobs.hpp"
#include "cymat/knormal.hpp"
#include "cymat/matroid_json.hpp"
#include "cymat/orbit_count.hpp"
#include "cymat/plane.hpp"
#include "cymat/search.hpp"

namespace {

using namespace cymat;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::parse_error, "cannot open " + path + " for writing");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse_error, "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_bounds(std::uint32_t n, std::int64_t k, bool csv) {
    if (k >= 0) {
        const BoundReport r = m_best(n, static_cast<std::uint32_t>(k));
        if (csv) std::cout << bounds_csv_header << "\n";
        std::cout << bounds_csv_row(r) << "\n";
        return 0;
    }
    const std::vector<BoundReport> rows = bounds_table(n);
    if (csv) {
        std::cout << bounds_csv_header << "\n";
        for (const BoundReport& r : rows) std::cout << bounds_csv_row(r) << "\n";
    } else {
        std::cout << "n=" << n << "\n" << bounds_text_table(rows);
    }
    return 0;
}

int cmd_orbits(std::uint32_t n, std::uint32_t k, bool brute, bool csv) {
    const OrbitCensus census = total_orbits_by_composition(n, k);
    const std::uint64_t burnside = count_orbits_burnside(n, k);
    if (csv) {
        std::cout << census_csv(census);
    } else {
        std::cout << "n=" << n << " k=" << k << "\n";
        for (const auto& [r, cnt] : census.per_length)
            std::cout << "r=" << r << ": " << cnt << "\n";
        std::cout << "total: " << census.total << "\n";
    }
    if (census.total != burnside) {
        std::cerr << "internal error: composition total " << census.total
                  << " != orbit-counting value " << burnside << "\n";
        return 1;
    }
    if (brute) {
        const std::size_t bf = orbits_brute_force(n, k).size();
        std::cout << "brute: " << bf << (bf == census.total ? ", OK" : ", MISMATCH") << "\n";
        if (bf != census.total) return 1;
    }
    return 0;
}

int cmd_enumerate(std::uint32_t n, std::uint32_t k, const std::string& out_path) {
    const std::vector<CyclicMatroid> all = enumerate_cyclic_matroids(n, k);
    std::string doc = "[\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::string one = matroid_to_json(all[i]);
        doc += one;
        if (i + 1 < all.size()) doc += ",";
        doc += "\n";
    }
    doc += "]\n";
    write_file(out_path, doc);
    const std::uint64_t mb = m_best(n, k).m_best;
    std::cout << n << "," << k << "," << all.size() << "," << all.front().basis_count() << ","
              << mb << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    const MatroidDocument doc = matroid_document_from_json(read_file(path));
    const VerificationReport rep = verify_matroid_document(doc);
    if (!rep.valid) {
        std::cout << "invalid: " << rep.failure << "\n";
        return 1;
    }
    std::cout << "valid cyclic " << rep.k << "-matroid, " << rep.basis_count << " bases\n";
    std::cout << "orbits: " << rep.orbit_count << "\n";
    if (rep.bound > 0)
        std::cout << "bases >= m_B(" << rep.n << "," << rep.k << ") = " << rep.bound << ": "
                  << (rep.meets_bound ? "yes" : "NO") << "\n";
    if (doc.basis_count != 0 && doc.basis_count != rep.basis_count) {
        std::cout << "declared basis_count " << doc.basis_count << " != actual "
                  << rep.basis_count << "\n";
        return 1;
    }
    return rep.meets_bound || rep.bound == 0 ? 0 : 1;
}

int cmd_search(const SearchConfig& cfg) {
    const std::optional<CyclicMatroid> m = random_cyclic_matroid(cfg);
    if (!m) {
        std::cout << "NotFound: no proper sub-family located\n";
        return 1;
    }
    std::cout << matroid_to_json(*m) << "\n";
    return 0;
}

int cmd_code(const std::string& spec) {
    const CyclicCode code = CyclicCode::parse(spec);
    const CyclicMatroid m = code_matroid(code);
    std::cout << matroid_to_json(m) << "\n";
    std::cout << "cyclic: yes, exchange axiom: verified\n";
    return 0;
}

int cmd_plane(std::uint32_t q, bool full) {
    const bool enumerate = full || q <= 3;
    const PlaneResult res = plane_matroid(q, enumerate);
    std::cout << "q=" << res.q << " n=" << res.n
              << " difference_set=" << res.difference_set.str() << "\n";
    std::cout << "rank=" << res.rank << " expected=" << res.expected_rank
              << (res.rank == res.expected_rank ? " OK" : " MISMATCH") << "\n";
    if (res.rank != res.expected_rank) return 1;
    if (res.matroid) std::cout << matroid_to_json(*res.matroid) << "\n";
    return 0;
}

int cmd_knormal(std::uint32_t p, std::uint32_t n, std::uint32_t k) {
    const std::optional<Gf::Elem> alpha = find_knormal(p, n, k);
    if (!alpha) {
        std::cout << "NotFound: no " << k << "-normal element in F_" << p << "^" << n << "\n";
        return 1;
    }
    const Gf field = Gf::extension_field(p, n);
    const KNormalResult res = knormal_matroid(field, *alpha);
    std::cout << "element: " << field.elem_str(*alpha) << "\n";
    std::cout << "defect: " << res.defect << "\n";
    std::cout << matroid_to_json(res.matroid) << "\n";
    return 0;
}

int cmd_figures(std::int64_t fixed_n, const std::string& rule, const std::string& range,
                const std::string& out_path) {
    std::vector<FigurePoint> pts;
    if (fixed_n >= 0) {
        pts = figure_fixed_n(static_cast<std::uint32_t>(fixed_n));
    } else {
        const std::size_t dots = range.find("..");
        if (rule.empty() || dots == std::string::npos)
            throw error(errc::parse_error, "need --fixed-n N, or --rule R --n A..B");
        const std::uint32_t a = static_cast<std::uint32_t>(std::stoul(range.substr(0, dots)));
        const std::uint32_t b = static_cast<std::uint32_t>(std::stoul(range.substr(dots + 2)));
        pts = figure_rule(parse_krule(rule), a, b);
    }
    write_file(out_path, figure_csv(pts));
    std::cout << "wrote " << pts.size() << " rows to " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic matroid toolkit"};
    app.require_subcommand(1);
    unsigned jobs_flag = 1;
    app.add_option("--jobs", jobs_flag, "worker thread cap (default 1)");

    std::uint32_t n = 0, k = 0, q = 2, p = 2;
    std::int64_t opt_k = -1, fixed_n = -1;
    bool csv = false, brute = false, full = false;
    std::string path, spec, rule, range;
    SearchConfig cfg;

    auto* bounds_cmd = app.add_subcommand("bounds", "lower-bound table for one n");
    bounds_cmd->add_option("-n", n, "ground-set size (>= 4)")->required();
    bounds_cmd->add_option("-k", opt_k, "single rank instead of the full table");
    bounds_cmd->add_flag("--csv", csv, "CSV output");

    auto* orbits_cmd = app.add_subcommand("orbits", "orbit census of k-subsets");
    orbits_cmd->add_option("-n", n, "ground-set size")->required();
    orbits_cmd->add_option("-k", k, "subset size")->required();
    orbits_cmd->add_flag("--brute", brute, "cross-check against the brute-force partition");
    orbits_cmd->add_flag("--csv", csv, "CSV output");

    auto* enum_cmd = app.add_subcommand("enumerate", "all cyclic k-matroids on Z_n");
    enum_cmd->add_option("-n", n, "ground-set size")->required();
    enum_cmd->add_option("-k", k, "rank")->required();
    enum_cmd->add_option("out", path, "output JSON path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "validate a matroid JSON document");
    verify_cmd->add_option("file", path, "matroid JSON path")->required();

    auto* search_cmd = app.add_subcommand("search", "seeded randomized matroid search");
    search_cmd->add_option("-n", cfg.n, "ground-set size")->required();
    search_cmd->add_option("-k", cfg.k, "rank")->required();
    search_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
    search_cmd->add_option("--max-candidates", cfg.max_candidates,
                           "consecutive failed removals before stopping");
    search_cmd->add_flag("--require-nonuniform", cfg.require_nonuniform,
                         "fail instead of returning the uniform matroid");

    auto* code_cmd = app.add_subcommand("code", "matroid of a cyclic code");
    code_cmd->add_option("spec", spec, "e.g. \"p=3;n=6;g=1,2,2,1\"")->required();

    auto* plane_cmd = app.add_subcommand("plane", "cyclic projective plane matroid");
    plane_cmd->add_option("-q", q, "plane order (2, 3, 4)")->required();
    plane_cmd->add_flag("--matroid", full, "enumerate bases even at q=4");

    auto* kn_cmd = app.add_subcommand("knormal", "matroid of a k-normal element");
    kn_cmd->add_option("-p", p, "field characteristic")->required();
    kn_cmd->add_option("-n", n, "extension degree")->required();
    kn_cmd->add_option("-k", k, "normality defect")->required();

    auto* fig_cmd = app.add_subcommand("figures", "bound-comparison CSV series");
    fig_cmd->add_option("--fixed-n", fixed_n, "sweep k=2..n-2 at this n");
    fig_cmd->add_option("--rule", rule, "k rule: n/2, n/3, n/4, n-2, n-3, n/3-exact");
    fig_cmd->add_option("--n", range, "range A..B for the rule sweep");
    fig_cmd->add_option("out", path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    cymat::set_jobs(jobs_flag);
    try {
        if (bounds_cmd->parsed()) return cmd_bounds(n, opt_k, csv);
        if (orbits_cmd->parsed()) return cmd_orbits(n, k, brute, csv);
        if (enum_cmd->parsed()) return cmd_enumerate(n, k, path);
        if (verify_cmd->parsed()) return cmd_verify(path);
        if (search_cmd->parsed()) return cmd_search(cfg);
        if (code_cmd->parsed()) return cmd_code(spec);
        if (plane_cmd->parsed()) return cmd_plane(q, full);
        if (kn_cmd->parsed()) return cmd_knormal(p, n, k);
        if (fig_cmd->parsed()) return cmd_figures(fixed_n, rule, range, path);
    } catch (const cymat::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == cymat::errc::too_large ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
