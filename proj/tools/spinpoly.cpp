#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinpoly/graphs.hpp"
#include "spinpoly/polyspace.hpp"
#include "spinpoly/su2.hpp"
#include "spinpoly/sweep.hpp"
#include "spinpoly/tetra.hpp"

using nlohmann::json;
using namespace spinpoly;

namespace {

constexpr int kExitVerdictFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

AdmissibleGraph load_graph(const std::string& source) {
    try {
        return builtin_graph(source);
    } catch (const std::exception&) {
        std::ifstream in(source);
        if (!in) throw ParseError("no such builtin graph or file: " + source);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph(ss.str());
    }
}

std::vector<long> parse_ell(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_spectrum(const std::string& graph_src, const std::string& ell_csv,
                 const std::string& out_path, const std::string& format) {
    auto ell = parse_ell(ell_csv);
    if (!nontrivial(ell)) {
        long sum = 0;
        for (long l : ell) sum += l;
        std::cerr << "spectrum: invariant subspace is trivial for this boundary ("
                  << (sum % 2 ? "sum odd" : "polygonal inequality fails")
                  << "); nontrivial iff the sum is even and each entry is at most half the sum\n";
        return kExitPrecondition;
    }
    auto g = load_graph(graph_src);
    if (g.n_half() != static_cast<int>(ell.size())) {
        std::cerr << "spectrum: boundary size does not match the graph\n";
        return kExitPrecondition;
    }

    InvariantSpace space(ell);
    std::vector<JointEigenvector> basis;
    try {
        basis = joint_eigenbasis(g, space);
    } catch (const std::logic_error& e) {
        std::cerr << "spectrum: " << e.what() << "\n";
        return kExitInternal;
    }
    bool pass = static_cast<int>(basis.size()) == space.dim();

    std::ofstream file;
    auto& os = open_out(file, out_path);
    if (format == "json") {
        json doc;
        doc["dim"] = space.dim();
        doc["tuples"] = json::array();
        for (const auto& v : basis) {
            json rec;
            rec["coloring"] = v.coloring.internal;
            json eig = json::array();
            for (long m : v.coloring.internal) eig.push_back(m * (m + 2));
            rec["eigenvalues"] = eig;
            doc["tuples"].push_back(rec);
        }
        doc["verdict"] = pass ? "PASS" : "FAIL";
        os << doc.dump(2) << "\n";
    } else {
        for (const auto& v : basis) {
            os << "coloring";
            for (long m : v.coloring.internal) os << " " << m;
            os << "  eigenvalues";
            for (long m : v.coloring.internal) os << " " << m * (m + 2);
            os << "\n";
        }
        os << "dim " << space.dim() << "  tuples " << basis.size() << "  verdict "
           << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : kExitVerdictFail;
}

int cmd_sweep(const std::string& ell_csv, long k_single, const std::string& k_range,
              double target_E, double target_Ep, const std::string& out_path, int workers,
              double tol_slope) {
    auto ell = parse_ell(ell_csv);
    if (ell.size() != 4) {
        std::cerr << "sweep: needs exactly four boundary values\n";
        return kExitPrecondition;
    }
    SweepSpec spec;
    std::copy(ell.begin(), ell.end(), spec.ell.begin());
    spec.target_E = target_E;
    spec.target_Ep = target_Ep;
    spec.workers = workers;
    if (!k_range.empty()) {
        auto colon = k_range.find(':');
        if (colon == std::string::npos) {
            std::cerr << "sweep: --k-range wants a:b\n";
            return kExitPrecondition;
        }
        spec.k_lo = std::stol(k_range.substr(0, colon));
        spec.k_hi = std::stol(k_range.substr(colon + 1));
    } else {
        spec.k_lo = spec.k_hi = k_single;
    }

    try {
        TetraEdges probe{std::sqrt(target_E), std::sqrt(target_Ep), double(ell[0]),
                         double(ell[1]), double(ell[2]), double(ell[3])};
        if (volume(probe) <= 0) throw DegenerateTetra("flat target tetrahedron");
    } catch (const std::exception& e) {
        std::cerr << "sweep: targets do not span a tetrahedron: " << e.what() << "\n";
        return kExitPrecondition;
    }

    auto res = run_sweep(spec);
    std::ofstream file;
    auto& os = open_out(file, out_path);
    os << sweep_csv_header() << "\n";
    for (const auto& r : res.rows) os << sweep_csv_row(r) << "\n";
    if (res.rows.size() > 1 && res.fitted_points >= 2) {
        os << "# slope " << fmt(res.slope) << " fitted_points " << res.fitted_points
           << " uniformity " << fmt(res.uniformity) << "\n";
        return res.slope <= tol_slope ? 0 : kExitVerdictFail;
    }
    return 0;
}

int cmd_bend(const std::string& graph_src, const std::string& ell_csv, const std::string& d_csv,
             int edge, double time, int steps, unsigned long seed, const std::string& out_path,
             double tol_lambda) {
    auto g = load_graph(graph_src);
    auto ell_long = parse_ell(ell_csv);
    if (g.n_half() != static_cast<int>(ell_long.size())) {
        std::cerr << "bend: boundary size does not match the graph\n";
        return kExitPrecondition;
    }
    std::vector<double> ell(ell_long.begin(), ell_long.end());
    std::size_t n_internal = g.internal_edges().size();
    if (edge < 0 || static_cast<std::size_t>(edge) >= n_internal) {
        std::cerr << "bend: no such internal edge\n";
        return kExitPrecondition;
    }

    std::vector<double> d;
    if (!d_csv.empty()) {
        std::stringstream ss(d_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) d.push_back(std::stod(tok));
        if (d.size() != n_internal) {
            std::cerr << "bend: need one diagonal per internal edge\n";
            return kExitPrecondition;
        }
        if (polytope_membership(g, ell, d) != Membership::Interior) {
            std::cerr << "bend: start point is not interior to the polytope\n";
            return kExitPrecondition;
        }
    } else {
        double half = 0;
        for (double l : ell) half += l;
        half /= 2;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(0.0, half);
        for (int tries = 0; tries < 100000; ++tries) {
            d.assign(n_internal, 0.0);
            for (auto& x : d) x = u(rng);
            if (polytope_membership(g, ell, d) == Membership::Interior) break;
            d.clear();
        }
        if (d.empty()) {
            std::cerr << "bend: could not sample an interior point\n";
            return kExitPrecondition;
        }
    }

    auto c0 = realize(g, ell, d);
    auto I = g.i_subset(edge);
    auto lambda0 = lambda_map(g, c0);

    std::ofstream file;
    auto& os = open_out(file, out_path);
    os << "t";
    for (std::size_t a = 0; a < n_internal; ++a) os << ",lambda_" << a;
    os << ",theta_" << edge << "\n";

    bool conserved = true;
    for (int s = 0; s <= steps; ++s) {
        double t = time * s / steps;
        // the flow of lambda_a at time t rotates I(a) by 2t
        auto c = bend(c0, I, 2.0 * t);
        auto lam = lambda_map(g, c);
        os << fmt(t);
        for (std::size_t a = 0; a < n_internal; ++a) {
            os << "," << fmt(lam[a]);
            if (std::fabs(lam[a] - lambda0[a]) > tol_lambda) conserved = false;
        }
        double theta = std::numeric_limits<double>::quiet_NaN();
        try {
            theta = theta_angle(g, c, edge);
        } catch (const DegenerateFace&) {
        }
        os << "," << fmt(theta) << "\n";
    }

    bool periodic = moduli_equal(bend(c0, I, 2.0 * time), c0);
    bool full_period = std::fabs(std::remainder(time, M_PI)) < 1e-12;
    os << "# verdict " << (periodic ? "PERIODIC" : "MOVED") << " lambda_conserved "
       << (conserved ? "PASS" : "FAIL") << "\n";
    if (!conserved) return kExitVerdictFail;
    if (full_period && !periodic) return kExitVerdictFail;
    return 0;
}

int cmd_tetra(double E, double Ep, const std::string& ell_csv, const std::string& out_path) {
    auto ell_long = parse_ell(ell_csv);
    if (ell_long.size() != 4) {
        std::cerr << "tetra: needs exactly four edge lengths\n";
        return kExitPrecondition;
    }
    TetraEdges t{std::sqrt(E), std::sqrt(Ep), double(ell_long[0]), double(ell_long[1]),
                 double(ell_long[2]), double(ell_long[3])};
    try {
        json doc;
        doc["V"] = volume(t);
        auto alpha = exterior_dihedrals(t);
        doc["alpha"] = {{"h", alpha.h},   {"hp", alpha.hp}, {"l1", alpha.l1},
                        {"l2", alpha.l2}, {"l3", alpha.l3}, {"l4", alpha.l4}};
        doc["theta"] = theta_phase(t);
        doc["area"] = area_D(t);
        doc["omega"] = omega_xxprime(t);
        std::ofstream file;
        auto& os = open_out(file, out_path);
        os << doc.dump(2) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "tetra: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SU(2) recoupling spectra, polygon bending flows, and 6j asymptotics"};
    app.require_subcommand(1);

    std::string graph = "g4", ell, d_csv, out_path, format = "text", k_range;
    long k = 1;
    double target_E = 4.0, target_Ep = 4.0, flow_time = M_PI;
    int edge = 0, steps = 16, workers = 1;
    unsigned long seed = 0;
    double tol_slope = -2.3, tol_lambda = 1e-9;

    auto* spectrum = app.add_subcommand("spectrum", "joint Casimir spectrum vs coloring formula");
    spectrum->add_option("--graph", graph, "builtin alias (g4, g4p, cat<n>, star6) or file");
    spectrum->add_option("--ell", ell, "boundary colors, comma separated")->required();
    spectrum->add_option("--out", out_path, "output path (default stdout)");
    spectrum->add_option("--format", format, "text or json");

    auto* sweep = app.add_subcommand("sweep", "Roberts asymptotics error sweep over k");
    sweep->add_option("--ell", ell, "four boundary values")->required();
    sweep->add_option("--k", k, "single level");
    sweep->add_option("--k-range", k_range, "a:b inclusive");
    sweep->add_option("--target-E", target_E, "target eigenvalue E");
    sweep->add_option("--target-Ep", target_Ep, "target eigenvalue E'");
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--workers", workers, "worker pool size");
    sweep->add_option("--tol-slope", tol_slope, "verdict threshold for the fitted slope");

    auto* bend_cmd = app.add_subcommand("bend", "trace a bending flow");
    bend_cmd->add_option("--graph", graph, "builtin alias or file");
    bend_cmd->add_option("--ell", ell, "boundary lengths")->required();
    bend_cmd->add_option("--d", d_csv, "start diagonals (default: random interior)");
    bend_cmd->add_option("--edge", edge, "internal edge to flow");
    bend_cmd->add_option("--time", flow_time, "flow time (pi = full period)");
    bend_cmd->add_option("--steps", steps, "trace points");
    bend_cmd->add_option("--seed", seed, "RNG seed for the start point");
    bend_cmd->add_option("--out", out_path, "output path (default stdout)");
    bend_cmd->add_option("--tol-lambda", tol_lambda, "conservation tolerance");

    auto* tetra_cmd = app.add_subcommand("tetra", "tetrahedron geometry record");
    tetra_cmd->add_option("--target-E", target_E, "E, squared diagonal")->required();
    tetra_cmd->add_option("--target-Ep", target_Ep, "E', squared diagonal")->required();
    tetra_cmd->add_option("--ell", ell, "four side lengths")->required();
    tetra_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return cmd_spectrum(graph, ell, out_path, format);
        if (sweep->parsed())
            return cmd_sweep(ell, k, k_range, target_E, target_Ep, out_path, workers, tol_slope);
        if (bend_cmd->parsed())
            return cmd_bend(graph, ell, d_csv, edge, flow_time, steps, seed, out_path,
                            tol_lambda);
        if (tetra_cmd->parsed()) return cmd_tetra(target_E, target_Ep, ell, out_path);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotAdmissible& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
