#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tucensus/enumeration.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/matrix.hpp"
#include "tucensus/report.hpp"

namespace tucensus {

enum class SpectrumSource { laplacian, signless_laplacian, generic };

struct Spectrum {
    std::vector<double> values; // ascending
    SpectrumSource source = SpectrumSource::generic;
    double tolerance = 1e-9;
};

inline constexpr double default_spectral_tolerance = 1e-9;

namespace detail {

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                m(r, c).convert_to<double>();
    return out;
}

} // namespace detail

inline Spectrum eigenvalues(const IntMatrix& m, SpectrumSource source = SpectrumSource::generic,
                            double tolerance = default_spectral_tolerance) {
    if (!m.is_symmetric()) throw error(errc::not_symmetric, "eigenvalues need a symmetric matrix");
    Eigen::MatrixXd mat = detail::to_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    if (solver.info() != Eigen::Success) throw error(errc::numeric_failure, "eigensolver did not converge");
    // Residual postcondition ||Mv - lambda v|| <= tol * ||M|| per pair.
    const double scale = std::max(1.0, mat.norm());
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        const double residual =
            (mat * solver.eigenvectors().col(i) - solver.eigenvalues()(i) * solver.eigenvectors().col(i)).norm();
        if (residual > tolerance * scale)
            throw error(errc::numeric_failure, "eigenpair residual " + std::to_string(residual) + " above tolerance");
    }
    Spectrum spectrum;
    spectrum.source = source;
    spectrum.tolerance = tolerance;
    spectrum.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + mat.rows());
    return spectrum;
}

namespace detail {

// L and Q are positive semidefinite; a clearly negative eigenvalue means the
// solver, not the graph, went wrong.
inline void require_psd(const Spectrum& s) {
    if (!s.values.empty() && s.values.front() < -s.tolerance)
        throw error(errc::numeric_failure,
                    "negative eigenvalue " + std::to_string(s.values.front()) + " from a PSD matrix");
}

} // namespace detail

inline Spectrum laplacian_spectrum(const Graph& g, double tolerance = default_spectral_tolerance) {
    Spectrum s = eigenvalues(laplacian(g), SpectrumSource::laplacian, tolerance);
    detail::require_psd(s);
    return s;
}

inline Spectrum signless_spectrum(const Graph& g, double tolerance = default_spectral_tolerance) {
    Spectrum s = eigenvalues(signless_laplacian(g), SpectrumSource::signless_laplacian, tolerance);
    detail::require_psd(s);
    return s;
}

inline std::string format_significant(double x, int digits = 12) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

inline std::string format_spectrum(const Spectrum& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) out += ", ";
        out += format_significant(s.values[i]);
    }
    return out + "]";
}

// Coefficients a_1..a_n of det(xI - M) = x^n + a_1 x^{n-1} + ... + a_n,
// exact over the integers by Faddeev-LeVerrier (every division by k is exact).
inline std::vector<Int> charpoly_coefficients(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw error(errc::non_square, "characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Int> coeffs;
    coeffs.reserve(n);
    IntMatrix b = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = b;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs.back();
            b = m * shifted;
        }
        Int ck = -b.trace() / static_cast<long long>(k);
        coeffs.push_back(ck);
    }
    return coeffs;
}

// Three routes to t(G): subset enumeration, det(L(i)), and the eigenvalue
// product mu_2 ... mu_n / n.
struct SpanningTreeTriple {
    std::int64_t t_enumerated = 0;
    Int t_determinant;
    double t_eigen = 0.0;
};

inline SpanningTreeTriple mtt_eigen_form(const Graph& g) {
    if (!is_connected(g)) throw error(errc::disconnected, "matrix tree theorem check needs a connected graph");
    SpanningTreeTriple triple;
    triple.t_enumerated = count_spanning_trees(g);
    triple.t_determinant = det(principal_submatrix(laplacian(g), 1));
    Spectrum mu = laplacian_spectrum(g);
    double product = 1.0;
    for (std::size_t i = 1; i < mu.values.size(); ++i) product *= mu.values[i];
    triple.t_eigen = product / g.vertex_count();
    return triple;
}

// L-spectrum equals Q-spectrum (elementwise within tolerance) iff bipartite,
// plus the singularity cross-checks: the smallest Q-eigenvalue is (near) zero
// exactly when some component is bipartite, which is also exactly when the
// exact determinant vanishes; on connected bipartite graphs that zero is a
// simple eigenvalue.
inline VerificationItem bipartite_spectral_check(const Graph& g, double tolerance = default_spectral_tolerance) {
    VerificationItem item;
    item.theorem = theorem::bipartite_spectra;
    item.relation = "equals";
    Spectrum mu = laplacian_spectrum(g, tolerance);
    Spectrum lambda = signless_spectrum(g, tolerance);
    bool equal = true;
    for (std::size_t i = 0; i < mu.values.size(); ++i)
        if (std::abs(mu.values[i] - lambda.values[i]) > tolerance) equal = false;
    const bool bipartite = is_bipartite(g).bipartite;
    item.lhs = equal ? "spectra equal" : "spectra differ";
    item.rhs = bipartite ? "bipartite" : "not bipartite";
    item.cases.push_back({"L vs Q spectra match iff bipartite", format_spectrum(mu), format_spectrum(lambda),
                          equal == bipartite});

    const bool near_zero = lambda.values.front() <= tolerance;
    const bool bip_component = has_bipartite_component(g);
    item.cases.push_back({"smallest Q-eigenvalue near 0 iff a component is bipartite",
                          format_significant(lambda.values.front()), bip_component ? "yes" : "no",
                          near_zero == bip_component});

    const Int det_q = det(signless_laplacian(g));
    item.cases.push_back({"det(Q) = 0 iff a component is bipartite", det_q.str(), bip_component ? "yes" : "no",
                          (det_q == 0) == bip_component});

    if (bipartite && is_connected(g) && g.vertex_count() >= 2) {
        // Zero is a simple Q-eigenvalue here: the next one clears the tolerance.
        item.cases.push_back({"zero Q-eigenvalue is simple", format_significant(lambda.values[1]),
                              "> " + format_significant(tolerance), lambda.values[1] > tolerance});
    }

    item.passed = true;
    for (const auto& c : item.cases)
        if (!c.passed) item.passed = false;
    if (!item.passed)
        item.witness = "L " + format_spectrum(mu) + " vs Q " + format_spectrum(lambda);
    return item;
}

// a1 = -2m, a2 = 2m^2 - m - (1/2) sum d_i^2, a_n = (-1)^n det(Q), plus
// sum_i det(Q(i)) = (-1)^{n-1} a_{n-1}; all exact.
inline VerificationItem charpoly_identity_check(const Graph& g) {
    VerificationItem item;
    item.theorem = theorem::charpoly;
    item.relation = "equals";
    IntMatrix q = signless_laplacian(g);
    const std::vector<Int> a = charpoly_coefficients(q);
    const int n = g.vertex_count();
    const long long m = g.edge_count();

    std::vector<std::string> failures;
    auto check = [&](const std::string& label, const Int& got, const Int& want) {
        item.cases.push_back({label, got.str(), want.str(), got == want});
        if (got != want) failures.push_back(label + ": " + got.str() + " != " + want.str());
    };

    check("a1 = -2m", a[0], Int(-2) * m);
    if (n >= 2) {
        Int degree_sq = 0;
        for (int v = 1; v <= n; ++v) degree_sq += Int(g.degree(v)) * g.degree(v);
        check("a2 = 2m^2 - m - (1/2) sum d_i^2", a[1], Int(2) * m * m - m - degree_sq / 2);
    }
    Int det_q = det(q);
    check("a_n = (-1)^n det(Q)", a[static_cast<std::size_t>(n - 1)], (n % 2 == 0) ? det_q : -det_q);
    if (n >= 2) {
        Int minor_sum = 0;
        for (int i = 1; i <= n; ++i) minor_sum += det(principal_submatrix(q, i));
        check("sum det(Q(i)) = (-1)^(n-1) a_(n-1)", minor_sum,
              (n % 2 == 1) ? a[static_cast<std::size_t>(n - 2)] : -a[static_cast<std::size_t>(n - 2)]);
    }

    item.passed = failures.empty();
    item.lhs = "charpoly coefficients";
    item.rhs = "degree/determinant identities";
    if (!item.passed) {
        item.witness = failures.front();
    }
    return item;
}

} // namespace tucensus
