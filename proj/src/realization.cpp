#include "mbkit/realization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mbkit/eig.hpp"

namespace mbk {

PatternReport pattern_membership(const SymmetricMatrix& a, const Graph& g, double zero_tol,
                                 double nonzero_tol) {
    if (a.order() != g.vertex_count())
        throw std::invalid_argument("pattern_membership: matrix order does not match vertex count");
    PatternReport rep;
    rep.zero_tol = zero_tol;
    rep.nonzero_tol = nonzero_tol;
    rep.scale = a.max_abs_offdiag();
    int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = std::abs(a(i, j));
            if (g.has_edge(i, j)) {
                if (!(v > nonzero_tol * rep.scale))
                    rep.violations.push_back({i, j, false, a(i, j)});
            } else if (!(v <= zero_tol * rep.scale)) {
                rep.violations.push_back({i, j, true, a(i, j)});
            }
        }
    rep.ok = rep.violations.empty();
    return rep;
}

namespace {

std::string describe_pattern_failure(const PatternReport& rep) {
    std::ostringstream os;
    os << "pattern violation:";
    int shown = 0;
    for (const auto& v : rep.violations) {
        if (shown++ == 4) {
            os << " ...";
            break;
        }
        os << " (" << v.i << "," << v.j << ") " << (v.must_be_zero ? "must-be-zero" : "must-be-nonzero")
           << " value " << v.value;
    }
    return os.str();
}

double cluster_tol_for(const Spectrum& spec, double cluster_rel) {
    double spread = spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.back() - spec.eigenvalues.front();
    return cluster_rel * std::max(1.0, spread);
}

}  // namespace

RealizationCertificate certify(const SymmetricMatrix& a, const Graph& g, int k,
                               const Tolerances& tols, Provenance provenance) {
    int n = g.vertex_count();
    if (n < 2) throw CertifyError("certify: need at least two vertices for a bipartition");
    if (k < 1 || n - k < k)
        throw CertifyError("certify: k must satisfy 1 <= k <= floor(n/2)");

    PatternReport pat = pattern_membership(a, g, tols.zero, tols.nonzero);
    if (!pat.ok) throw CertifyError(describe_pattern_failure(pat), pat);

    Spectrum spec = eigendecompose(a);
    MultiplicityPartition part = cluster_multiplicities(spec, cluster_tol_for(spec, tols.cluster));
    if (part.classes.size() != 2) {
        std::ostringstream os;
        os << "certify: expected two eigenvalue classes, clustering found " << part.classes.size();
        throw CertifyError(os.str());
    }
    // identify the multiplicity-k class; on an exact tie take the upper value
    int k_idx;
    if (part.classes[0].multiplicity == n - k && part.classes[1].multiplicity == k)
        k_idx = 1;
    else if (part.classes[0].multiplicity == k && part.classes[1].multiplicity == n - k)
        k_idx = (n - k == k) ? 1 : 0;
    else {
        std::ostringstream os;
        os << "certify: multiplicities [" << part.classes[0].multiplicity << ","
           << part.classes[1].multiplicity << "] do not match [" << n - k << "," << k << "]";
        throw CertifyError(os.str());
    }

    double lam_other = part.classes[1 - k_idx].value;
    double lam_k = part.classes[k_idx].value;

    // normalize: other class -> 0, k class -> 1
    double alpha = 1.0 / (lam_k - lam_other);
    double beta = -alpha * lam_other;
    SymmetricMatrix norm = a.scaled_shifted(alpha, beta);

    PatternReport pat2 = pattern_membership(norm, g, tols.zero, tols.nonzero);
    if (!pat2.ok) throw CertifyError("certify: pattern lost under normalization; " + describe_pattern_failure(pat2), pat2);
    Spectrum spec2 = eigendecompose(norm);
    MultiplicityPartition part2 = cluster_multiplicities(spec2, cluster_tol_for(spec2, tols.cluster));
    if (part2.classes.size() != 2 || !part2.is_bipartition(n, k))
        throw CertifyError("certify: normalized spectrum is not {0^(n-k), 1^(k)}");

    // numerical rank consistency: count eigenvalues above the cluster tol
    double ctol = cluster_tol_for(spec2, tols.cluster);
    int rank = 0;
    for (double ev : spec2.eigenvalues)
        if (std::abs(ev) > ctol) ++rank;
    if (rank != k) {
        std::ostringstream os;
        os << "certify: numerical rank " << rank << " differs from claimed k = " << k;
        throw CertifyError(os.str());
    }

    RealizationCertificate cert;
    cert.graph = g;
    cert.matrix = std::move(norm);
    cert.class_values = {0.0, 1.0};
    cert.class_multiplicities = {n - k, k};
    cert.k = k;
    cert.tols = tols;
    cert.provenance = std::move(provenance);
    cert.original_values = {lam_other, lam_k};
    return cert;
}

RealizationCertificate rescale_spectrum(const RealizationCertificate& cert, double mu1, double mu2) {
    if (cert.three_eigenvalue_kind)
        throw std::invalid_argument("rescale_spectrum: only two-class certificates can be rescaled");
    if (cert.class_values.size() != 2)
        throw std::invalid_argument("rescale_spectrum: certificate is not two-class");
    if (mu1 == mu2) throw std::invalid_argument("rescale_spectrum: target values must be distinct");

    // big class value -> mu1, k class value -> mu2
    int k_idx = (cert.class_multiplicities[1] == cert.k) ? 1 : 0;
    double lam_o = cert.class_values[1 - k_idx];
    double lam_k = cert.class_values[k_idx];
    double alpha = (mu2 - mu1) / (lam_k - lam_o);
    double beta = mu1 - alpha * lam_o;
    if (alpha == 0.0) throw std::invalid_argument("rescale_spectrum: degenerate scaling");

    RealizationCertificate out = cert;
    out.matrix = cert.matrix.scaled_shifted(alpha, beta);
    double lo = std::min(mu1, mu2), hi = std::max(mu1, mu2);
    out.class_values = {lo, hi};
    out.class_multiplicities = {lo == mu1 ? cert.class_multiplicities[1 - k_idx] : cert.class_multiplicities[k_idx],
                                lo == mu1 ? cert.class_multiplicities[k_idx] : cert.class_multiplicities[1 - k_idx]};
    out.original_values = cert.class_values;
    return out;
}

RealizationCertificate clone_realization(const RealizationCertificate& cert, int v) {
    if (cert.three_eigenvalue_kind)
        throw std::invalid_argument("clone_realization: only two-class certificates can be cloned");
    int n = cert.graph.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("clone_realization: vertex out of range");

    GramFactor f = gram_extract(cert.matrix, cert.k, 10.0 * cert.tols.cluster);
    const Matrix& u = f.u();
    double row = u.row_norm_sq(v);
    if (row <= 1e-10 * f.col_norm_sq())
        throw std::invalid_argument(
            "clone_realization: zero factor row at the vertex (isolated vertex cannot be cloned)");

    Matrix u2(n + 1, f.k());
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < f.k(); ++j) u2(i, j) = (i == v ? inv_sqrt2 : 1.0) * u(i, j);
    for (int j = 0; j < f.k(); ++j) u2(n, j) = inv_sqrt2 * u(v, j);

    SymmetricMatrix a2 = gram_outer(u2);
    Graph g2 = clone_vertex(cert.graph, v);
    Provenance prov;
    prov.name = "clone";
    prov.params_json = std::string("{\"vertex\":") + std::to_string(v) + ",\"base\":\"" +
                       cert.provenance.name + "\"}";
    prov.seed = cert.provenance.seed;
    return certify(a2, g2, cert.k, cert.tols, std::move(prov));
}

void revalidate(const RealizationCertificate& cert) {
    const Graph& g = cert.graph;
    int n = g.vertex_count();
    if (cert.matrix.order() != n) throw CertifyError("revalidate: matrix order mismatch");
    if (cert.class_values.size() != cert.class_multiplicities.size())
        throw CertifyError("revalidate: class arrays mismatch");

    PatternReport pat = pattern_membership(cert.matrix, g, cert.tols.zero, cert.tols.nonzero);
    if (!pat.ok) throw CertifyError(describe_pattern_failure(pat), pat);

    Spectrum spec = eigendecompose(cert.matrix);
    double ctol = cluster_tol_for(spec, cert.tols.cluster);
    MultiplicityPartition part = cluster_multiplicities(spec, ctol);
    if (part.classes.size() != cert.class_values.size())
        throw CertifyError("revalidate: eigenvalue class count changed");
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
        if (part.classes[i].multiplicity != cert.class_multiplicities[i])
            throw CertifyError("revalidate: multiplicities drifted");
        if (std::abs(part.classes[i].value - cert.class_values[i]) > 100.0 * ctol)
            throw CertifyError("revalidate: class values drifted");
    }
    if (!cert.three_eigenvalue_kind) {
        if (part.classes.size() != 2) throw CertifyError("revalidate: expected two classes");
        if (!part.is_bipartition(n, cert.k)) throw CertifyError("revalidate: not an [n-k, k] bipartition");
    }
}

}  // namespace mbk
