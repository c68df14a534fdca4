// Python bindings. Exact values come back as fractions.Fraction and int.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "partdist/cli.hpp"
#include "partdist/distribution.hpp"
#include "partdist/mgf.hpp"
#include "partdist/sampler.hpp"
#include "partdist/xmoments.hpp"

namespace py = pybind11;
using namespace partdist;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

py::int_ integer(const BigInt& v)
{
    return py::int_(py::str(v.get_str()));
}

py::tuple as_tuple(const std::vector<int>& v)
{
    return py::cast(v).cast<py::tuple>();
}

py::list fractions(const std::vector<Rational>& v)
{
    py::list out;
    for (const auto& r : v) {
        out.append(fraction(r));
    }
    return out;
}

py::list matrix(const RationalMatrix& m)
{
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.append(fraction(m(i, j)));
        }
        rows.append(row);
    }
    return rows;
}

py::list integers(const std::vector<BigInt>& v)
{
    py::list out;
    for (const auto& x : v) {
        out.append(integer(x));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(partdist, m)
{
    m.doc() = "Cycle-type statistics of uniform random permutations";

    m.def("partitions", [](int n) {
        py::list out;
        for (const auto& p : enumerate_partitions(n)) {
            out.append(as_tuple(p.parts()));
        }
        return out;
    }, py::arg("n"), "Partitions of n in reverse-lexicographic order.");

    m.def("multiplicity", [](std::vector<int> parts) {
        return as_tuple(to_multiplicity(Partition(std::move(parts))).counts());
    }, py::arg("parts"));

    m.def("partition_vector", [](std::vector<int> parts) {
        return as_tuple(to_partition_vector(Partition(std::move(parts))).entries());
    }, py::arg("parts"));

    m.def("probability", [](std::vector<int> parts) { return fraction(pmf_of(Partition(std::move(parts)))); },
          py::arg("parts"), "Probability that a uniform permutation has this cycle type.");

    m.def("pmf", [](int n) {
        py::dict out;
        for (const auto& e : pmf_table(n).entries) {
            out[as_tuple(e.partition.parts())] = fraction(e.probability);
        }
        return out;
    }, py::arg("n"));

    m.def("fine_identity_holds", [](int n) { return verify_fine_identity(n).holds; }, py::arg("n"));
    m.def("expectation_y", [](int n) { return fractions(expectation_y(n)); }, py::arg("n"));
    m.def("second_moment_y", [](int n) { return matrix(second_moment_decomposition(n).sum()); }, py::arg("n"));
    m.def("covariance_y", [](int n) { return matrix(covariance_y(n)); }, py::arg("n"));

    m.def("mgf", [](int n) {
        py::dict out;
        for (const auto& [exp, coef] : build_mgf(n).terms) {
            out[as_tuple(exp)] = fraction(coef);
        }
        return out;
    }, py::arg("n"), "MGF terms as {exponent vector: coefficient}.");

    m.def("verify_mgf_recursion", [](int n, int i) { return verify_theorem1(n, i).ok; }, py::arg("n"), py::arg("i"));

    m.def("expectation_x", [](int n) { return fractions(x_expectations(n).values); }, py::arg("n"));
    m.def("scaled_expectation_x", [](int n) { return integers(x_expectations(n).scaled); }, py::arg("n"),
          "n! E(X_k) for k = 1..n.");
    m.def("x1_sequence", [](int max_n) { return integers(x1_sequence(max_n)); }, py::arg("max_n"));
    m.def("x2_sequence", [](int max_n) { return integers(x2_sequence(max_n)); }, py::arg("max_n"));
    m.def("conjecture", [](int n, int j) { return integer(conjecture_closed_form(n, j)); }, py::arg("n"),
          py::arg("j"));

    m.def("fit_binomial_basis", [](int j, const std::vector<int>& samples) {
        const auto fit = fit_binomial_basis(j, samples);
        py::dict coefficients;
        for (const auto& [i, a] : fit.coefficients) {
            coefficients[py::int_(i)] = fraction(a);
        }
        py::dict out;
        out["coefficients"] = coefficients;
        out["all_positive_integers"] = fit.all_positive_integers;
        out["holdout_ok"] = fit.holdout_ok;
        out["claims_ok"] = fit.claims_ok();
        return out;
    }, py::arg("j"), py::arg("samples"));

    m.def("sample", [](int n, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
        SampleRun run;
        {
            py::gil_scoped_release release;
            run = empirical_moments({n, trials, seed, workers});
        }
        py::dict counts;
        for (const auto& [p, c] : run.counts) {
            counts[as_tuple(p.parts())] = c;
        }
        std::vector<double> mean_y;
        std::vector<double> mean_x;
        for (const auto& e : run.mean_y) {
            mean_y.push_back(e.mean);
        }
        for (const auto& e : run.mean_x) {
            mean_x.push_back(e.mean);
        }
        const auto chi = chi_square_report(run);
        py::dict out;
        out["counts"] = counts;
        out["mean_y"] = mean_y;
        out["mean_x"] = mean_x;
        out["max_abs_moment_z"] = run.max_abs_moment_z();
        out["chi_square_status"] = to_string(chi.status);
        out["chi_square_below_critical"] = chi.below_critical;
        return out;
    }, py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 1);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
    }, py::arg("args"), "Runs a partdist command; returns (status, stdout, stderr).");
}
