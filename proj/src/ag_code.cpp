/*
 * Copyright 2026 The kummer-lcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kummer_lcd/ag_code.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace kummer_lcd {

LinearCode make_code(FieldPtr field, const Matrix& generator, std::vector<Place> labels) {
    LinearCode code;
    code.n = generator.cols();
    code.generator = linalg::rref(*field, generator);
    if (code.generator.rows() == 0) code.generator = Matrix(0, code.n);
    code.k = code.generator.rows();
    code.field = std::move(field);
    if (!labels.empty() && labels.size() != code.n) throw CodeError("column label count does not match length");
    code.column_labels = std::move(labels);
    return code;
}

Matrix evaluation_matrix(const KummerCurve& C, std::span<const FunctionElement> functions,
                         std::span<const Place> points) {
    Matrix M(functions.size(), points.size());
    for (std::size_t i = 0; i < functions.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) M(i, j) = evaluate(C, functions[i], points[j]);
    return M;
}

LinearCode build_code(const KummerCurve& C, std::span<const Place> points, const Divisor& G) {
    std::set<Place> seen;
    Divisor D;
    for (const auto& P : points) {
        if (!P.is_affine() || !C.is_rational_place(P))
            throw CodeError("D must be a sum of distinct affine rational places");
        if (!seen.insert(P).second) throw CodeError("D repeats the place " + C.place_to_string(P));
        if (G.coefficient(P) != 0) throw CodeError("Supp G meets Supp D at " + C.place_to_string(P));
        D.set(P, 1);
    }
    const int n = static_cast<int>(points.size());
    if (G.degree() >= n)
        throw CodeError("deg G = " + std::to_string(G.degree()) + " must be below n = " + std::to_string(n));

    RRBasis basis = riemann_roch_basis(C, G);
    Matrix M = evaluation_matrix(C, basis.functions, points);
    if (M.rows() == 0) M = Matrix(0, points.size());
    LinearCode code = make_code(C.field(), M, {points.begin(), points.end()});
    if (static_cast<int>(code.k) != basis.dimension)
        throw std::logic_error("evaluation map is not injective although deg G < n");
    code.provenance = CodeProvenance{C.label(), std::move(D), G};
    return code;
}

LinearCode build_code(const KummerCurve& C, const Divisor& D, const Divisor& G) {
    for (const auto& [P, c] : D.terms())
        if (c != 1 || !P.is_affine() || !C.is_rational_place(P))
            throw CodeError("D must be a sum of distinct affine rational places");
    std::vector<Place> points;
    for (const auto& P : C.affine_points())
        if (D.coefficient(P) == 1) points.push_back(P);
    return build_code(C, std::span<const Place>(points), G);
}

LinearCode dual(const LinearCode& code) {
    const auto& F = *code.field;
    Matrix K = linalg::nullspace(F, code.generator);
    if (K.rows() == 0) K = Matrix(0, code.n);
    return make_code(code.field, K, code.column_labels);
}

LinearCode hull(const LinearCode& code) {
    LinearCode d = dual(code);
    Matrix I = linalg::intersect_row_spaces(*code.field, code.generator, d.generator);
    return make_code(code.field, I, code.column_labels);
}

std::size_t hull_dimension_by_projection(const LinearCode& code) {
    if (code.k == 0) return 0;
    Matrix gram = linalg::multiply(*code.field, code.generator, code.generator.transpose());
    return code.k - linalg::rank(*code.field, gram);
}

bool is_lcd(const LinearCode& code) { return hull(code).k == 0; }

bool is_self_orthogonal(const LinearCode& code) { return hull(code).k == code.k; }

bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.n == b.n && a.k == b.k && linalg::same_row_space(*a.field, a.generator, b.generator);
}

bool orthogonal(const LinearCode& a, const LinearCode& b) {
    if (a.n != b.n) return false;
    if (a.k == 0 || b.k == 0) return true;
    Matrix P = linalg::multiply(*a.field, a.generator, b.generator.transpose());
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j)
            if (P(i, j).packed != 0) return false;
    return true;
}

bool HullTheoremReport::hypotheses_hold() const {
    return std::ranges::all_of(hypotheses, &Check::pass);
}

bool HullTheoremReport::conclusions_hold() const {
    return std::ranges::all_of(conclusions, &Check::pass);
}

HullTheoremReport verify_hull_theorem(const KummerCurve& C, std::span<const Place> points, const Divisor& G,
                                      const Divisor& H) {
    LinearCode cg = build_code(C, points, G);
    LinearCode ch = build_code(C, points, H);
    const int n = static_cast<int>(cg.n);
    if (!orthogonal(cg, ch) || cg.k + ch.k != cg.n)
        throw CodeError("C(D,H) is not the dual of C(D,G): k + k' = " + std::to_string(cg.k + ch.k) +
                        ", n = " + std::to_string(n));

    HullTheoremReport rep;
    const int g = C.genus();
    rep.gcdGH = gcd_divisor(G, H);
    rep.ell_gcd = ell(C, rep.gcdGH);
    rep.hypotheses.push_back({"duality", true, "k + k' = n and the generators are orthogonal"});
    rep.hypotheses.push_back({"degree_window", 2 * g - 2 < G.degree() && G.degree() < n,
                              "deg G = " + std::to_string(G.degree())});
    rep.hypotheses.push_back({"gcd_nonspecial", is_nonspecial(C, rep.gcdGH),
                              "i(gcd) = " + std::to_string(index_of_specialty(C, rep.gcdGH))});

    LinearCode h = hull(cg);
    rep.hull_dim = h.k;
    LinearCode from_gcd = build_code(C, points, rep.gcdGH);
    rep.conclusions.push_back({"hull_equals_code_of_gcd", same_code(h, from_gcd),
                               "hull dim " + std::to_string(h.k) + ", dim C(D,gcd) " + std::to_string(from_gcd.k)});
    rep.conclusions.push_back({"hull_trivial_iff_ell_gcd_zero", (h.k == 0) == (rep.ell_gcd == 0),
                               "ell(gcd) = " + std::to_string(rep.ell_gcd)});
    rep.conclusions.push_back({"projection_route_agrees", hull_dimension_by_projection(cg) == h.k, ""});
    return rep;
}

namespace {

int isqrt_exact(std::uint32_t q) {
    auto s = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(q))));
    return s * s == q ? static_cast<int>(s) : 0;
}

bool is_power_of(int p, int e) {
    if (e < 1) return false;
    while (e % p == 0) e /= p;
    return e == 1;
}

}  // namespace

std::string FamilyCheck::name() const {
    switch (family) {
        case CurveFamily::MaximalKummer: return "maximal-kummer";
        case CurveFamily::RemarkFamily: return "lewittes-optimal";
        case CurveFamily::Unsupported: break;
    }
    return "unsupported";
}

FamilyCheck classify_family(const KummerCurve& C) {
    FamilyCheck fc;
    const auto& F = C.F();
    fc.Q = isqrt_exact(F.order());
    if (fc.Q == 0) {
        fc.detail = "field order " + std::to_string(F.order()) + " is not a square";
        return fc;
    }
    const Poly& f = C.defining_poly();
    for (std::size_t e = 0; e < f.size(); ++e)
        if (f[e].packed != 0 && !is_power_of(F.characteristic(), static_cast<int>(e))) {
            fc.detail = "defining polynomial is not linearized";
            return fc;
        }
    if (C.r() <= 1 || C.r() > fc.Q) {
        fc.detail = "r = " + std::to_string(C.r()) + " outside 1 < r <= " + std::to_string(fc.Q);
        return fc;
    }
    const auto expected = static_cast<std::size_t>(fc.Q) * fc.Q * C.r() + 1;
    if (C.rational_points().size() != expected) {
        fc.detail = std::to_string(C.rational_points().size()) + " rational points, expected " +
                    std::to_string(expected);
        return fc;
    }
    const int m = C.m(), Q = fc.Q;
    if (m == Q + 1) {
        fc.family = CurveFamily::MaximalKummer;
        fc.detail = "m = Q + 1 with Q = " + std::to_string(Q);
    } else if (Q + 1 <= m && m <= Q * Q / 2 - std::gcd(2, Q) + 1) {
        fc.family = CurveFamily::RemarkFamily;
        fc.detail = "Q + 1 <= m <= Q^2/2 - gcd(2,Q) + 1 with Q = " + std::to_string(Q);
    } else {
        fc.detail = "m = " + std::to_string(m) + " outside the supported range for Q = " + std::to_string(Q);
    }
    return fc;
}

Divisor dual_partner_divisor(const KummerCurve& C, const Divisor& G, bool allow_remark_family) {
    FamilyCheck fc = classify_family(C);
    if (fc.family == CurveFamily::Unsupported) throw CodeError("unsupported curve family: " + fc.detail);
    if (fc.family == CurveFamily::RemarkFamily && !allow_remark_family)
        throw CodeError("curve is outside the maximal family; pass --allow-remark-family to proceed");
    for (const auto& [P, c] : G.terms())
        if (P.is_affine()) throw CodeError("Supp G must lie on ramified places and infinity");
    Divisor S;
    S.set(Place::infinity(), 2 * C.genus() + C.r() - 2);
    for (int i = 1; i <= C.r(); ++i) S.set(Place::ramified(i), fc.Q * fc.Q - 2);
    return S - G;
}

LcdConstruction lcd_construct_maxcur(const KummerCurve& C, const Divisor& G, bool allow_remark_family) {
    LcdConstruction out;
    auto& cert = out.certificate;
    cert.G = G;
    cert.H = dual_partner_divisor(C, G, allow_remark_family);
    cert.gcdGH = gcd_divisor(cert.G, cert.H);
    cert.family = classify_family(C).name();

    const int g = C.genus();
    const auto points = C.affine_points();
    const int n = static_cast<int>(points.size());
    auto in_window = [&](const Divisor& X) { return 2 * g - 2 < X.degree() && X.degree() < n; };
    cert.checks.degree_window = in_window(cert.G) && in_window(cert.H);
    cert.checks.gcd_degree_is_g_minus_1 = cert.gcdGH.degree() == g - 1;
    cert.checks.gcd_nonspecial = is_nonspecial(C, cert.gcdGH);
    if (!cert.checks.degree_window) return out;

    out.code = build_code(C, points, cert.G);
    out.partner = build_code(C, points, cert.H);
    cert.checks.duality_verified = orthogonal(*out.code, *out.partner) && out.code->k + out.partner->k == out.code->n;
    cert.hull_dim = hull(*out.code).k;
    if (cert.hull_dim != hull_dimension_by_projection(*out.code))
        throw std::logic_error("hull dimension routes disagree");
    cert.checks.hull_trivial = cert.hull_dim == 0;
    return out;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t b, std::size_t e) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
        v *= b;
    }
    return v;
}

std::size_t weight(std::span<const Elem> c) {
    return static_cast<std::size_t>(std::ranges::count_if(c, [](Elem e) { return e.packed != 0; }));
}

// Minimum weight over messages whose first nonzero entry is a 1 at position
// `lead` and whose entry at lead + 1 (if any) is the `fixed`-th field element.
std::size_t chunk_min_weight(const LinearCode& code, std::size_t lead, std::size_t fixed) {
    const auto& F = *code.field;
    const auto& els = F.elements();
    const std::size_t n = code.n, k = code.k;
    std::vector<Elem> c(code.generator.row(lead).begin(), code.generator.row(lead).end());
    auto axpy = [&](std::size_t row, Elem s) {
        if (s.packed == 0) return;
        auto r = code.generator.row(row);
        for (std::size_t j = 0; j < n; ++j) c[j] = F.add(c[j], F.mul(s, r[j]));
    };
    if (lead + 1 >= k) return weight(c);
    axpy(lead + 1, els[fixed]);

    const std::size_t first_free = lead + 2;
    std::vector<std::size_t> digit(k, 0);
    std::size_t best = weight(c);
    while (true) {
        std::size_t pos = first_free;
        while (pos < k) {
            std::size_t d = digit[pos];
            if (d + 1 < els.size()) {
                axpy(pos, F.sub(els[d + 1], els[d]));
                digit[pos] = d + 1;
                break;
            }
            axpy(pos, F.neg(els[d]));
            digit[pos] = 0;
            ++pos;
        }
        if (pos >= k) break;
        best = std::min(best, weight(c));
    }
    return best;
}

}  // namespace

MinDistanceResult min_distance(const LinearCode& code, std::uint64_t budget, unsigned jobs) {
    MinDistanceResult res;
    if (code.provenance) res.designed_bound = static_cast<int>(code.n) - code.provenance->G.degree();
    res.codewords = saturating_pow(code.field->order(), code.k);
    if (code.k == 0) return res;  // zero code: no nonzero codeword
    if (res.codewords > budget) {
        res.budget_exceeded = true;
        return res;
    }

    struct Chunk {
        std::size_t lead, fixed;
    };
    std::vector<Chunk> chunks;
    const std::size_t q = code.field->order();
    for (std::size_t lead = 0; lead < code.k; ++lead) {
        if (lead + 1 >= code.k)
            chunks.push_back({lead, 0});
        else
            for (std::size_t v = 0; v < q; ++v) chunks.push_back({lead, v});
    }

    std::atomic<std::size_t> next{0};
    std::size_t best = code.n;
    std::mutex mu;
    auto worker = [&] {
        std::size_t local = code.n;
        for (std::size_t i; (i = next.fetch_add(1)) < chunks.size();)
            local = std::min(local, chunk_min_weight(code, chunks[i].lead, chunks[i].fixed));
        std::lock_guard lock(mu);
        best = std::min(best, local);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chunks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    res.distance = static_cast<int>(best);
    return res;
}

std::size_t one_point_hull_probe(const KummerCurve& C, int alpha) {
    const auto points = C.affine_points();
    if (alpha < 0 || alpha >= static_cast<int>(points.size()))
        throw CodeError("alpha must satisfy 0 <= alpha < n");
    Divisor G;
    G.set(Place::infinity(), alpha);
    return hull(build_code(C, points, G)).k;
}

}  // namespace kummer_lcd
