#include "mbkit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "mbkit/eig.hpp"
#include "mbkit/rng.hpp"

namespace mbk {

namespace {

using nlohmann::json;

constexpr int kRetryCap = 32;

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

void require_normalized_bipartition(const RealizationCertificate& c, const char* who) {
    if (c.three_eigenvalue_kind || c.class_values.size() != 2 ||
        std::abs(c.class_values[0]) > 1e-6 || std::abs(c.class_values[1] - 1.0) > 1e-6)
        throw std::invalid_argument(std::string(who) + ": certificate must be normalized to spectrum {0, 1}");
}

Provenance make_provenance(const char* name, json params, std::uint64_t seed) {
    Provenance p;
    p.name = name;
    p.params_json = params.dump();
    p.seed = seed;
    return p;
}

}  // namespace

Graph blocks_graph(const std::vector<std::vector<int>>& factor_clique_sizes) {
    int n = 0;
    for (const auto& f : factor_clique_sizes)
        for (int s : f) {
            if (s < 1) throw std::invalid_argument("blocks_graph: clique sizes must be positive");
            n += s;
        }
    Graph g(n);
    std::vector<int> factor_of(n), clique_of(n);
    int v = 0;
    for (int f = 0; f < int(factor_clique_sizes.size()); ++f)
        for (int c = 0; c < int(factor_clique_sizes[f].size()); ++c)
            for (int t = 0; t < factor_clique_sizes[f][c]; ++t) {
                factor_of[v] = f;
                clique_of[v] = c;
                g.set_label(v, "factor " + std::to_string(f) + " clique " + std::to_string(c));
                ++v;
            }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (factor_of[x] != factor_of[y])
                g.add_edge(x, y);
            else if (clique_of[x] == clique_of[y])
                g.add_edge(x, y);
        }
    return g;
}

RealizationCertificate multipartite_three_eigs(const PartList& parts) {
    int l = parts.count();
    if (l < 2) throw std::invalid_argument("multipartite_three_eigs: need at least two parts");
    int n = parts.total();

    std::vector<int> part_of(n);
    {
        int v = 0;
        for (int p = 0; p < l; ++p)
            for (int i = 0; i < parts.parts[p]; ++i) part_of[v++] = p;
    }
    SymmetricMatrix b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                b.set(u, v, 1.0 / std::sqrt(double(parts.parts[part_of[u]]) * parts.parts[part_of[v]]));

    Graph g = build_complete_multipartite(parts);
    Tolerances tols;
    PatternReport pat = pattern_membership(b, g, tols.zero, tols.nonzero);
    if (!pat.ok) throw CertifyError("multipartite_three_eigs: pattern check failed", pat);

    Spectrum spec = eigendecompose(b);
    int zeros = n - l;
    std::vector<double> expected;
    expected.insert(expected.end(), std::size_t(l - 1), -1.0);
    expected.insert(expected.end(), std::size_t(zeros), 0.0);
    expected.push_back(double(l - 1));
    for (int i = 0; i < n; ++i)
        if (std::abs(spec.eigenvalues[i] - expected[i]) > 1e-8)
            throw CertifyError("multipartite_three_eigs: spectrum differs from {-1, 0, l-1}");

    double spread = spec.eigenvalues.back() - spec.eigenvalues.front();
    MultiplicityPartition part = cluster_multiplicities(spec, tols.cluster * std::max(1.0, spread));

    RealizationCertificate cert;
    cert.graph = g;
    cert.matrix = b;
    for (const auto& c : part.classes) {
        cert.class_values.push_back(c.value);
        cert.class_multiplicities.push_back(c.multiplicity);
    }
    cert.k = l - 1;
    cert.three_eigenvalue_kind = true;
    cert.tols = tols;
    cert.provenance = make_provenance("multipartite-b", json{{"parts", parts.parts}}, 0);
    cert.original_values = cert.class_values;
    revalidate(cert);
    return cert;
}

RealizationCertificate join_equal_mb(const RealizationCertificate& cg,
                                     const RealizationCertificate& ch, std::uint64_t seed) {
    require_normalized_bipartition(cg, "join_equal_mb");
    require_normalized_bipartition(ch, "join_equal_mb");
    if (cg.k != ch.k) throw std::invalid_argument("join_equal_mb: certificates have different k");
    if (has_isolated_vertex(cg.graph) || has_isolated_vertex(ch.graph))
        throw std::invalid_argument("join_equal_mb: isolated vertices are not supported");
    int k = cg.k;
    int n1 = cg.graph.vertex_count(), n2 = ch.graph.vertex_count();

    GramFactor fg = gram_extract(cg.matrix, k);
    GramFactor fh = gram_extract(ch.matrix, k);
    Matrix m1 = fg.u().transposed();  // k x n1
    Matrix m2 = fh.u().transposed();  // k x n2
    RotationResult rot = nonvanishing_rotation(m1, m2, derive_seed(seed, 1));

    // C = W^T W with W = [M1 | R M2]; rows of the tall factor are the rows
    // of U_g followed by the rows of U_h R^T
    Matrix uh_rt = fh.u() * rot.r.transposed();
    Matrix tall(n1 + n2, k);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < k; ++j) tall(i, j) = fg.u()(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < k; ++j) tall(n1 + i, j) = uh_rt(i, j);
    SymmetricMatrix c = gram_outer(tall);

    // idempotence up to the factor 2: C^2 = 2C
    Matrix cm = c.to_matrix();
    Matrix prod = cm * cm;
    double c2_residual = 0.0;
    for (std::size_t i = 0; i < prod.data().size(); ++i)
        c2_residual = std::max(c2_residual, std::abs(prod.data()[i] - 2.0 * cm.data()[i]));

    Graph gj = join(cg.graph, ch.graph);
    json params{{"k", k},
                {"left", cg.provenance.name},
                {"right", ch.provenance.name},
                {"rotation_tries", rot.tries},
                {"c2_residual", c2_residual}};
    return certify(c, gj, k, cg.tols, make_provenance("join-equal", params, seed));
}

RealizationCertificate join_with_cliques(const Graph& g, const GramFactor& z,
                                         const std::vector<int>& sizes, double beta,
                                         std::uint64_t seed) {
    int d = z.k();
    int n = g.vertex_count();
    if (z.n() != n) throw std::invalid_argument("join_with_cliques: factor rows do not match the graph");
    if (int(sizes.size()) != d)
        throw std::invalid_argument("join_with_cliques: need one clique size per factor column");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("join_with_cliques: clique sizes must be positive");
    if (has_isolated_vertex(g))
        throw std::invalid_argument("join_with_cliques: isolated vertices are not supported");
    double c = z.col_norm_sq();
    if (!(beta > c))
        throw std::invalid_argument("join_with_cliques: beta must exceed the squared column norm");
    {
        PatternReport pat = pattern_membership(gram_assemble(z), g, 1e-9, 1e-8);
        if (!pat.ok) throw std::invalid_argument("join_with_cliques: Z Z^T is not in S(G)");
    }

    Matrix q = entrywise_nonzero_gram(z, derive_seed(seed, 2)).u();
    int s_total = std::accumulate(sizes.begin(), sizes.end(), 0);
    Matrix v(n + s_total, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) v(i, j) = q(i, j);
    int off = n;
    for (int i = 0; i < d; ++i) {
        double alpha = std::sqrt((beta - c) / sizes[i]);
        for (int t = 0; t < sizes[i]; ++t) v(off + t, i) = alpha;
        off += sizes[i];
    }
    SymmetricMatrix bmat = gram_outer(v);

    Graph cliques(0);
    for (int i = 0; i < d; ++i) cliques = disjoint_union(cliques, complete_graph(sizes[i]));
    Graph h = join(g, cliques);
    json params{{"sizes", sizes}, {"beta", beta}};
    return certify(bmat, h, d, Tolerances{}, make_provenance("join-cliques", params, seed));
}

RealizationCertificate join_with_empty(const RealizationCertificate& cg, std::uint64_t seed) {
    require_normalized_bipartition(cg, "join_with_empty");
    int k = cg.k;
    if (k < 2) throw std::invalid_argument("join_with_empty: need k >= 2");
    if (has_isolated_vertex(cg.graph))
        throw std::invalid_argument("join_with_empty: isolated vertices are not supported");
    int n = cg.graph.vertex_count();

    GramFactor fg = gram_extract(cg.matrix, k);
    Matrix m1 = fg.u().transposed();
    RotationResult rot = nonvanishing_rotation(m1, Matrix::identity(k), derive_seed(seed, 1));

    Matrix rt = rot.r.transposed();
    Matrix tall(n + k, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) tall(i, j) = fg.u()(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) tall(n + i, j) = rt(i, j);
    SymmetricMatrix c = gram_outer(tall);

    Graph h = join(cg.graph, empty_graph(k));
    json params{{"k", k}, {"base", cg.provenance.name}, {"rotation_tries", rot.tries}};
    return certify(c, h, k, cg.tols, make_provenance("join-empty-k", params, seed));
}

namespace {

// Shared body of the two join-with-independent-set constructions: given a
// realization A of G with the required positive eigenvalues, build
// C = [U | D] with equalized row norms so C^T C has spectrum {0, lambda_0}.
RealizationCertificate join_empty_from_realization(const Graph& g, int rows, int skip_zero,
                                                   std::uint64_t seed, const char* name) {
    int n = g.vertex_count();
    std::vector<double> targets(n);
    for (int i = 0; i < n; ++i) targets[i] = double(i + 1 - skip_zero);  // 1..n or 0..n-1

    for (int attempt = 0; attempt < 8; ++attempt) {
        SymmetricMatrix a = generic_realization(g, targets, derive_seed(seed, 7 + attempt));
        Spectrum spec = eigendecompose(a);

        Matrix u(rows, n);
        for (int r = 0; r < rows; ++r) {
            int ev = skip_zero + r;  // skip the zero eigenvalue when present
            double root = std::sqrt(std::max(0.0, spec.eigenvalues[ev]));
            for (int jcol = 0; jcol < n; ++jcol) u(r, jcol) = root * spec.eigenvectors(jcol, ev);
        }
        double max_row = 0.0;
        for (int r = 0; r < rows; ++r) max_row = std::max(max_row, u.row_norm_sq(r));
        double lambda0 = 1.0 + max_row;

        Matrix cmat(rows, n + rows);
        for (int r = 0; r < rows; ++r) {
            for (int jcol = 0; jcol < n; ++jcol) cmat(r, jcol) = u(r, jcol);
            cmat(r, n + r) = std::sqrt(lambda0 - u.row_norm_sq(r));
        }
        SymmetricMatrix big = gram_outer(cmat.transposed());
        Graph h = join(g, empty_graph(rows));
        json params{{"n", n}, {"lambda0", lambda0}, {"attempt", attempt}};
        try {
            return certify(big, h, rows, Tolerances{}, make_provenance(name, params, seed));
        } catch (const CertifyError&) {
            if (attempt == 7) throw;
        }
    }
    throw std::runtime_error(std::string(name) + ": retry budget exhausted");
}

}  // namespace

RealizationCertificate join_empty_n(const Graph& g, std::uint64_t seed) {
    if (g.vertex_count() < 2) throw std::invalid_argument("join_empty_n: need n >= 2");
    if (!g.is_connected()) throw std::invalid_argument("join_empty_n: graph must be connected");
    return join_empty_from_realization(g, g.vertex_count(), 0, seed, "join-empty-n");
}

RealizationCertificate join_empty_n_minus_1(const Graph& g, std::uint64_t seed) {
    if (g.vertex_count() < 2) throw std::invalid_argument("join_empty_n_minus_1: need n >= 2");
    if (!g.is_connected()) throw std::invalid_argument("join_empty_n_minus_1: graph must be connected");
    return join_empty_from_realization(g, g.vertex_count() - 1, 1, seed, "join-empty-n-1");
}

RingMatrix ring_matrix(int order, double t) {
    if (order < 2 || order > 5) throw std::invalid_argument("ring_matrix: order must be 2..5");
    if (!(t > 1.0)) throw std::invalid_argument("ring_matrix: parameter must exceed 1");

    RingMatrix out;
    out.order = order;
    out.param = t;
    Matrix m(order, order);
    if (order == 2) {
        m(0, 0) = 1;
        m(0, 1) = t;
        m(1, 0) = -t;
        m(1, 1) = 1;
    } else {
        std::vector<double> row;
        if (order == 3) {
            row = {t, 1.0, -t / (t + 1.0)};
        } else if (order == 4) {
            row = {t, -1.0, 1.0 / t, 1.0};
        } else {
            double s = t;
            double p = (-s * s + s + 1.0) / (s * s + 2.0 * s);
            double r = s / (s + 1.0);
            row = {p, -1.0, s, r, 1.0};
        }
        // each row is the previous one shifted right
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) m(i, j) = row[((j - i) % order + order) % order];
    }
    out.m = std::move(m);
    out.row_norm_sq = out.m.row_norm_sq(0);
    for (int i = 0; i < order; ++i) {
        if (std::abs(out.m.row_norm_sq(i) - out.row_norm_sq) > 1e-10 * out.row_norm_sq)
            throw std::runtime_error("ring_matrix: row norms are not equal");
        for (int j = i + 1; j < order; ++j) {
            double dot = 0.0;
            for (int c = 0; c < order; ++c) dot += out.m(i, c) * out.m(j, c);
            if (std::abs(dot) > 1e-10 * out.row_norm_sq)
                throw std::runtime_error("ring_matrix: rows are not orthogonal");
        }
    }
    return out;
}

bool ring_pair_nonzero(const RingMatrix& a, const RingMatrix& b, double theta_nz) {
    if (a.order != b.order) return false;
    Matrix p = a.m.transposed() * b.m;
    double bound = theta_nz * a.m.frobenius() * b.m.frobenius();
    for (double x : p.data())
        if (!(std::abs(x) > bound)) return false;
    return true;
}

RealizationCertificate canonical_blocks(const CliqueBlockSpec& spec,
                                        const std::vector<RingMatrix>& ms) {
    int l = spec.factors();
    int k = spec.cliques_per_factor();
    if (int(ms.size()) != l)
        throw std::invalid_argument("canonical_blocks: need one ring matrix per factor");
    for (const auto& rm : ms)
        if (rm.order != k) throw std::invalid_argument("canonical_blocks: ring matrix order mismatch");
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            if (ms[i].param == ms[j].param)
                throw std::invalid_argument("canonical_blocks: ring parameters must be distinct");
            if (!ring_pair_nonzero(ms[i], ms[j]))
                throw std::invalid_argument("canonical_blocks: cross product has a (near-)zero entry");
        }

    // each factor contributes its fixed row norm, so the combined vectors
    // automatically share one norm; assert rather than rescale
    double combined = 0.0;
    for (const auto& rm : ms) combined += rm.row_norm_sq;

    int n = spec.total_vertices();
    Matrix v(n, k);
    int off = 0;
    for (int f = 0; f < l; ++f)
        for (int c = 0; c < k; ++c) {
            int size = spec.blocks[f][c];
            double scale = 1.0 / std::sqrt(double(size));
            for (int t = 0; t < size; ++t)
                for (int h = 0; h < k; ++h) v(off + t, h) = scale * ms[f].m(h, c);
            off += size;
        }
    for (int h = 0; h < k; ++h)
        if (std::abs(v.col_norm_sq(h) - combined) > 1e-9 * combined)
            throw std::runtime_error("canonical_blocks: vector norms failed to equalize");

    SymmetricMatrix a = gram_outer(v);
    Graph g = blocks_graph(spec.blocks);
    std::vector<double> params_list;
    for (const auto& rm : ms) params_list.push_back(rm.param);
    json params{{"blocks", spec.blocks}, {"params", params_list}};
    return certify(a, g, k, Tolerances{}, make_provenance("canonical-blocks", params, 0));
}

RealizationCertificate canonical_blocks_auto(const CliqueBlockSpec& spec,
                                             std::vector<double> params) {
    static const double primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    int l = spec.factors();
    while (int(params.size()) < l) {
        for (double p : primes) {
            if (int(params.size()) >= l) break;
            if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
        }
    }
    std::vector<RingMatrix> ms;
    for (int f = 0; f < l; ++f) ms.push_back(ring_matrix(spec.cliques_per_factor(), params[f]));
    return canonical_blocks(spec, ms);
}

RealizationCertificate example_three_cliques(const std::array<int, 6>& sizes, double t1, double t2,
                                             std::uint64_t seed) {
    for (int s : sizes)
        if (s <= 1) throw std::invalid_argument("example_three_cliques: sizes must exceed 1");
    if (!(t1 > 0.0) || !(t2 > 0.0))
        throw std::invalid_argument("example_three_cliques: parameters must be positive");
    if (t1 == t2) throw std::invalid_argument("example_three_cliques: parameters must be distinct");

    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g = blocks_graph({{sizes[0], sizes[1], sizes[2]}, {sizes[3], sizes[4], sizes[5]}});

    double ta = t1, tb = t2;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        double norm_sq = 0.0;
        for (double t : {ta, tb}) norm_sq += t * t + 1.0 + t * t / ((t + 1.0) * (t + 1.0));
        double inv = 1.0 / std::sqrt(norm_sq);

        // numerators follow the order-3 ring pattern per clique
        Matrix v(n, 3);
        int off = 0;
        for (int f = 0; f < 2; ++f) {
            double t = (f == 0) ? ta : tb;
            double coeff[3][3] = {{t, 1.0, -t / (t + 1.0)},
                                  {-t / (t + 1.0), t, 1.0},
                                  {1.0, -t / (t + 1.0), t}};
            for (int c = 0; c < 3; ++c) {
                int size = sizes[3 * f + c];
                double scale = inv / std::sqrt(double(size));
                for (int i = 0; i < size; ++i)
                    for (int h = 0; h < 3; ++h) v(off + i, h) = scale * coeff[h][c];
                off += size;
            }
        }

        SymmetricMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int h = 0; h < 3; ++h) s += v(i, h) * v(j, h);
                a.set(i, j, (i == j ? 1.0 : 0.0) - 2.0 * s);
            }

        json params{{"sizes", std::vector<int>(sizes.begin(), sizes.end())},
                    {"t", std::vector<double>{ta, tb}},
                    {"attempt", attempt}};
        try {
            return certify(a, g, 3, Tolerances{}, make_provenance("three-cliques", params, seed));
        } catch (const CertifyError&) {
            Rng rng(derive_seed(seed, 11 + std::uint64_t(attempt)));
            ta = rng.uniform(1.5, 6.0);
            tb = rng.uniform(1.5, 6.0);
            if (std::abs(ta - tb) < 0.25) tb += 0.5;
        }
    }
    throw std::runtime_error("example_three_cliques: retry budget exhausted");
}

namespace {

// v1/v2 rows shared by the two hole constructions
void fill_weight_rows(Matrix& v, const std::vector<int>& a, const std::vector<int>& b,
                      const std::vector<double>& w) {
    int off = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double ratio = std::sqrt(double(a[i]) / double(b[i]));
        for (int t = 0; t < a[i]; ++t) {
            v(off + t, 0) = 1.0;
            v(off + t, 1) = w[i];
        }
        off += a[i];
        for (int t = 0; t < b[i]; ++t) {
            v(off + t, 0) = -ratio * w[i];
            v(off + t, 1) = ratio;
        }
        off += b[i];
    }
}

}  // namespace

RealizationCertificate bipartite_hole(const HoleParams& p, std::uint64_t seed) {
    std::size_t l = p.a.size();
    if (l < 2 || p.b.size() != l) throw std::invalid_argument("bipartite_hole: need l >= 2 clique pairs");
    if (p.w.size() != l) throw std::invalid_argument("bipartite_hole: need one weight per factor");
    for (std::size_t i = 0; i < l; ++i)
        if (p.a[i] <= 2 || p.b[i] <= 2)
            throw std::invalid_argument("bipartite_hole: clique sizes must exceed 2");
    if (p.alpha < 1 || 2 * p.alpha > p.a[0])
        throw std::invalid_argument("bipartite_hole: need 1 <= alpha and 2*alpha <= a_1");
    for (double wi : p.w)
        if (!(wi > 0.0)) throw std::invalid_argument("bipartite_hole: weights must be positive");
    {
        double lhs = 0.0;
        for (std::size_t i = 1; i < l; ++i) lhs += p.a[i] * (1.0 + p.w[i] * p.w[i]);
        if (!(lhs > p.alpha * (1.0 + p.w[0] * p.w[0])))
            throw std::invalid_argument("bipartite_hole: weight condition fails (a^2 <= 0)");
    }

    std::vector<std::vector<int>> layout;
    for (std::size_t i = 0; i < l; ++i) layout.push_back({p.a[i], p.b[i]});
    Graph g = blocks_graph(layout);
    // the hole: all alpha x alpha pairs between the first and second groups
    // of the first clique
    for (int x = 0; x < p.alpha; ++x)
        for (int y = 0; y < p.alpha; ++y) g.remove_edge(x, p.alpha + y);
    int n = g.vertex_count();

    std::vector<double> w = p.w;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        double sum_all = 0.0;
        for (std::size_t i = 0; i < l; ++i) sum_all += p.a[i] * (1.0 + w[i] * w[i]);
        double beta = std::sqrt(1.0 + w[0] * w[0]);
        double a_sq = (sum_all - 2.0 * p.alpha * (1.0 + w[0] * w[0])) / 2.0;
        if (!(a_sq > 0.0)) throw std::invalid_argument("bipartite_hole: a^2 <= 0");
        double a_val = std::sqrt(a_sq);

        Matrix v(n, 3);
        fill_weight_rows(v, p.a, p.b, w);
        for (int t = 0; t < p.alpha; ++t) v(t, 2) = beta;
        for (int t = 0; t < p.alpha; ++t) v(p.alpha + t, 2) = -beta;
        int off2 = p.a[0] + p.b[0];
        v(off2, 2) = a_val;
        v(off2 + 1, 2) = -a_val;

        SymmetricMatrix m = gram_outer(v);
        json params{{"alpha", p.alpha}, {"a", p.a}, {"b", p.b}, {"w", w}, {"attempt", attempt}};
        try {
            return certify(m, g, 3, Tolerances{}, make_provenance("bipartite-hole", params, seed));
        } catch (const CertifyError&) {
            Rng rng(derive_seed(seed, 13 + std::uint64_t(attempt)));
            for (std::size_t i = 0; i < l; ++i) w[i] = rng.uniform(1.0, double(l) + 2.0);
            std::sort(w.begin(), w.end());
            double lhs = 0.0;
            for (std::size_t i = 1; i < l; ++i) lhs += p.a[i] * (1.0 + w[i] * w[i]);
            if (!(lhs > p.alpha * (1.0 + w[0] * w[0]))) w = p.w;  // keep trying from the given weights
        }
    }
    throw std::runtime_error("bipartite_hole: retry budget exhausted");
}

RealizationCertificate two_edges_removed(const std::vector<int>& a, const std::vector<int>& b,
                                         double w1, double w2, std::uint64_t seed) {
    std::size_t l = a.size();
    if (l < 2 || b.size() != l) throw std::invalid_argument("two_edges_removed: need l >= 2 clique pairs");
    for (std::size_t i = 0; i < l; ++i) {
        if (a[i] < 2) throw std::invalid_argument("two_edges_removed: a_i must be >= 2");
        if (b[i] < 1) throw std::invalid_argument("two_edges_removed: b_i must be positive");
    }
    if (b[1] < 2) throw std::invalid_argument("two_edges_removed: b_2 must be >= 2");
    if (!(w1 > 0.0) || !(w2 > 0.0))
        throw std::invalid_argument("two_edges_removed: weights must be positive");

    std::vector<double> w(l);
    w[0] = w1;
    w[1] = w2;
    for (std::size_t i = 2; i < l; ++i) w[i] = double(i) + 1.0;

    auto v1_norm_sq = [&](const std::vector<double>& ww) {
        double s = 0.0;
        for (std::size_t i = 0; i < l; ++i) s += a[i] * (1.0 + ww[i] * ww[i]);
        return s;
    };
    // solvability of 2 beta^4 - ||v1||^2 beta^2 + 2 (1 + w1 w2)^2 = 0:
    // nonnegative discriminant, i.e. ||v1||^2 >= 4 (1 + w1 w2)
    auto feasible = [&](const std::vector<double>& ww) {
        return v1_norm_sq(ww) >= 4.0 * (1.0 + ww[0] * ww[1]);
    };
    if (!feasible(w))
        throw std::invalid_argument("two_edges_removed: norm equation infeasible for these weights");

    std::vector<std::vector<int>> layout;
    for (std::size_t i = 0; i < l; ++i) layout.push_back({a[i], b[i]});
    Graph g = blocks_graph(layout);
    int off2 = a[0] + b[0];  // start of K_{a_2}
    g.remove_edge(0, off2 + 1);
    g.remove_edge(1, off2);
    int n = g.vertex_count();

    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        double nv1 = v1_norm_sq(w);
        double cross = 1.0 + w[0] * w[1];
        // ||v3||^2 = 2 beta^2 + 2 (cross/beta)^2 must reach ||v1||^2;
        // larger root keeps beta well away from the degenerate minimum
        double disc = nv1 * nv1 - 16.0 * cross * cross;
        if (disc < 0.0) throw std::invalid_argument("two_edges_removed: norm equation infeasible");
        double beta_sq = (nv1 + std::sqrt(disc)) / 4.0;
        double beta = std::sqrt(beta_sq);
        double gamma = cross / beta;

        Matrix v(n, 3);
        fill_weight_rows(v, a, b, w);
        v(0, 2) = beta;
        v(1, 2) = -beta;
        v(off2, 2) = gamma;
        v(off2 + 1, 2) = -gamma;

        SymmetricMatrix m = gram_outer(v);
        json params{{"a", a}, {"b", b}, {"w", w}, {"attempt", attempt}};
        try {
            return certify(m, g, 3, Tolerances{}, make_provenance("two-edges-removed", params, seed));
        } catch (const CertifyError&) {
            Rng rng(derive_seed(seed, 17 + std::uint64_t(attempt)));
            for (int inner = 0; inner < 16; ++inner) {
                std::vector<double> cand(l);
                for (std::size_t i = 0; i < l; ++i) cand[i] = rng.uniform(0.9, double(l) + 2.0);
                if (feasible(cand)) {
                    w = cand;
                    break;
                }
            }
        }
    }
    throw std::runtime_error("two_edges_removed: retry budget exhausted");
}

RealizationCertificate path_p2_realization(int n) {
    if (n < 2) throw std::invalid_argument("path_p2_realization: need n >= 2");
    int big = 2 * n, k = n - 1;
    Matrix u(big, k);
    for (int i = 0; i < k; ++i) {
        u(2 * i, i) = 1.0;
        u(2 * i + 1, i) = 1.0;
        u(2 * i + 2, i) = 2.0;
        u(2 * i + 3, i) = -2.0;
    }
    SymmetricMatrix a = gram_outer(u);
    Graph g = strong_product_path_p2(n);
    json params{{"n", n}};
    return certify(a, g, k, Tolerances{}, make_provenance("path-p2", params, 0));
}

RealizationCertificate path_of_cliques(const std::vector<int>& cluster_sizes) {
    int m = int(cluster_sizes.size());
    if (m < 2) throw std::invalid_argument("path_of_cliques: need at least two clusters");
    for (int c : cluster_sizes)
        if (c < 2) throw std::invalid_argument("path_of_cliques: cluster sizes must be >= 2");

    RealizationCertificate cert = path_p2_realization(m);
    for (int i = 0; i < m; ++i)
        for (int rep = 0; rep < cluster_sizes[i] - 2; ++rep) cert = clone_realization(cert, 2 * i);

    cert.provenance = make_provenance("path-of-cliques", json{{"sizes", cluster_sizes}}, 0);
    return cert;
}

}  // namespace mbk
