#include "pfj/compute.hpp"

#include <vector>

#include "pfj/kernels.hpp"

namespace pfj::cli {

namespace {

using nlohmann::json;

json cpair(Complex v) { return json::array({v.real(), v.imag()}); }

json complex_table(const Matrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(cpair(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json kernel_blocks(const MatrixKernel& k) {
    return json{{"k11", complex_table(k.k11)},
                {"k12", complex_table(k.k12)},
                {"k21", complex_table(k.k21)},
                {"k22", complex_table(k.k22)}};
}

json ensemble_section(const RunConfig& rc) {
    json out;
    out["family"] = rc.family;
    out["n"] = rc.spec.n;
    out["points"] = rc.spec.space.points;
    out["weights"] = rc.spec.space.weights;
    out["interval"] = rc.interval;
    out["warnings"] = rc.warnings;
    if (rc.doubled) {
        out["base_points"] = rc.doubled->base.points;
        out["base_weights"] = rc.doubled->base.weights;
    }
    return out;
}

}  // namespace

const std::set<std::string> kComputeOutputs = {"gap", "janossy", "kernel",
                                               "partition", "rho"};

json compute_document(const RunConfig& rc,
                      const std::set<std::string>& outputs) {
    const auto& spec = rc.spec;
    const int m = spec.space.size();
    json doc;
    doc["ensemble"] = ensemble_section(rc);

    const MomentSet mom = moment_matrix(spec);
    if (outputs.count("partition")) {
        doc["partition"] = json{{"value", cpair(mom.z)}};
    }

    const bool need_kernel = outputs.count("rho") || outputs.count("kernel") ||
                             outputs.count("janossy") || outputs.count("gap");
    if (!need_kernel) return doc;
    const MatrixKernel k = correlation_kernel(spec, mom);

    if (outputs.count("rho")) {
        std::vector<double> one(m);
        double weighted = 0.0;
        for (int x = 0; x < m; ++x) {
            one[x] = correlation_function(k, {x}).real();
            weighted += one[x] * spec.space.weights[x];
        }
        json two = json::array();
        for (int x = 0; x < m; ++x) {
            json row = json::array();
            for (int y = 0; y < m; ++y) {
                row.push_back(correlation_function(k, {x, y}).real());
            }
            two.push_back(std::move(row));
        }
        doc["rho"] = json{{"one_point", one},
                          {"two_point", two},
                          {"weighted_sum", weighted}};
    }

    if (outputs.count("kernel")) {
        json sec;
        sec["correlation"] = kernel_blocks(k);
        bool have_direct = false, have_resolvent = false;
        MatrixKernel direct{}, resolvent{};
        try {
            direct = janossy_kernel_direct(spec,
                                           interval_matrices(spec, rc.interval));
            have_direct = true;
            sec["janossy_direct"] = kernel_blocks(direct);
        } catch (const SingularError& e) {
            sec["janossy_direct"] =
                json{{"singular", true}, {"note", e.what()}};
        }
        try {
            resolvent = janossy_kernel_resolvent(k, rc.interval);
            have_resolvent = true;
            sec["janossy_resolvent"] = kernel_blocks(resolvent);
        } catch (const SingularError& e) {
            sec["janossy_resolvent"] =
                json{{"singular", true}, {"note", e.what()}};
        }
        if (have_direct && have_resolvent) {
            double dev = 0.0;
            for (int x : rc.interval) {
                for (int y : rc.interval) {
                    const Eigen::Matrix2cd diff =
                        direct.block(x, y) - resolvent.block(x, y);
                    dev = std::max(dev, diff.cwiseAbs().maxCoeff());
                }
            }
            sec["max_deviation_on_interval"] = dev;
        }
        doc["kernel"] = std::move(sec);
    }

    if (outputs.count("janossy")) {
        json sec;
        try {
            const MatrixKernel l = janossy_kernel_resolvent(k, rc.interval);
            const double c = gap_probability(k, rc.interval);
            sec["constant"] = c;
            json one = json::array();
            for (int x : rc.interval) {
                one.push_back(janossy_density(l, c, {x}, rc.interval));
            }
            sec["one_point"] = std::move(one);
            json two = json::array();
            for (int x : rc.interval) {
                json row = json::array();
                for (int y : rc.interval) {
                    row.push_back(janossy_density(l, c, {x, y}, rc.interval));
                }
                two.push_back(std::move(row));
            }
            sec["two_point"] = std::move(two);
        } catch (const SingularError& e) {
            sec = json{{"singular", true}, {"note", e.what()}};
        }
        doc["janossy"] = std::move(sec);
    }

    if (outputs.count("gap")) {
        doc["gap"] = json{{"determinant_route", gap_probability(k, rc.interval)},
                          {"expansion_route", gap_expansion(k, rc.interval)}};
    }
    return doc;
}

}  // namespace pfj::cli
