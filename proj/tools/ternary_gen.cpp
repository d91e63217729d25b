// Instance generator: writes a point-set file plus a JSON sidecar carrying
// every parameter needed for exact reproduction.
//
// Exit codes: 0 success, 2 usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ternary/generators.hpp"
#include "ternary/sampling.hpp"
#include "ternary/talagrand.hpp"

using namespace ternary;

namespace {

nlohmann::json point_to_json(const TernaryPoint& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int c : p.coords) arr.push_back(c);
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary-gen: instance generator for convex-set experiments"};

    std::string family = "tas";
    int n = 9;
    std::uint64_t seed = 1;
    double radius = -1.0;
    double tau = -1.0;
    std::string out = "instance.set";
    std::string format = "indices";

    app.add_option("--family", family, "ball | halfspace | rhi | tas | antislab | dyes | dno");
    app.add_option("--n", n, "dimension")->required();
    app.add_option("--seed", seed, "seed");
    app.add_option("--radius", radius, "ball radius (default 2n/3 rounded up)");
    app.add_option("--tau", tau, "threshold override");
    app.add_option("--out", out, "output set file");
    app.add_option("--format", format, "set file payload: indices | bitmap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Rng rng(seed);
        nlohmann::json side;
        side["family"] = family;
        side["n"] = n;
        side["seed"] = seed;

        PointSet set(n);
        if (family == "ball") {
            const double r = radius > 0 ? radius : std::ceil(2.0 * n / 3.0);
            set = make_ball(r, n);
            side["radius"] = r;
        } else if (family == "halfspace") {
            std::vector<double> v(static_cast<std::size_t>(n));
            for (auto& c : v) c = rng.sign() + rng.uniform(-0.1, 0.1);
            const double t = tau >= 0 ? tau : std::sqrt(double(n));
            set = make_halfspace_set(v, t, n);
            side["normal"] = v;
            side["tau"] = t;
        } else if (family == "rhi") {
            RhiOverrides ov;
            if (tau >= 0) ov.tau = int(tau);
            const RhiInstance inst = make_random_halfspace_intersection(n, rng, ov);
            set = inst.set;
            side["tau"] = inst.tau;
            side["rho"] = inst.rho;
            side["k"] = inst.k;
            side["normals"] = inst.normals;
        } else if (family == "tas" || family == "antislab") {
            TasSpec spec = TasSpec::canonical(n, rng);
            if (tau >= 0) spec.tau = tau;
            if (family == "tas") {
                set = make_tas(spec, n);
                side["t"] = spec.t;
            } else {
                set = make_antislab({spec.v, spec.tau}, n);
            }
            side["v"] = point_to_json(spec.v);
            side["tau"] = spec.tau;
        } else if (family == "dyes" || family == "dno") {
            const TalagrandInstance inst =
                family == "dyes" ? sample_dyes(n, rng) : sample_dno(n, rng);
            set = inst.set;
            side["N"] = inst.layout.params.num_terms;
            side["band"] = inst.layout.params.band;
            side["term_weight"] = inst.layout.params.term_weight;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& term : inst.layout.terms) {
                nlohmann::json t = nlohmann::json::array();
                for (const auto& c : term.constraints)
                    t.push_back({{"coord", c.coord}, {"sign", c.sign}});
                terms.push_back(t);
            }
            side["terms"] = terms;
        } else {
            std::cerr << "usage error: unknown family " << family << "\n";
            return 2;
        }

        set.save_file(out, format);
        side["cardinality"] = set.cardinality();
        std::ofstream os(out + ".json");
        if (!os) throw std::runtime_error("cannot write sidecar for " + out);
        os << side.dump(2) << "\n";
        std::cout << "wrote " << out << " (" << set.cardinality() << " points) and " << out
                  << ".json\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
