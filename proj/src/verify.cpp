#include "torusweyl/verify.hpp"

namespace torusweyl {

namespace {

void record(SuiteReport& rep, const std::string& name, double err) {
    rep.checks.push_back({name, err, err <= kVerifyTol});
}

cplx phase_times(const TorusSpace& sp, const PhaseAngle& a) { return a.value(sp); }

}  // namespace

TorusOperator random_operator(const TorusSpace& space, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(space.n, space.n);
    for (int i = 0; i < space.n; ++i)
        for (int j = 0; j < space.n; ++j) m(i, j) = cplx(g(rng), g(rng));
    return {space, m};
}

TorusOperator random_hermitian(const TorusSpace& space, std::mt19937& rng) {
    TorusOperator a = random_operator(space, rng);
    return {space, 0.5 * (a.matrix() + a.matrix().adjoint())};
}

TorusOperator random_unitary(const TorusSpace& space, std::mt19937& rng) {
    return propagator_exact(random_hermitian(space, rng), 0.1);
}

SuiteReport verify_cocycle(const TorusSpace& sp) {
    const int N = sp.n;
    SuiteReport rep;

    double err_tt = 0.0, err_inv = 0.0;
    for (int r1 = 0; r1 < N; ++r1)
        for (int s1 = 0; s1 < N; ++s1) {
            const TorusOperator t1 = translation(sp, {r1, s1});
            err_inv = std::max(err_inv,
                               t1.adjoint().max_abs_diff(translation(sp, {-r1, -s1})));
            for (int r2 = 0; r2 < N; ++r2)
                for (int s2 = 0; s2 < N; ++s2) {
                    const TorusOperator t2 = translation(sp, {r2, s2});
                    // T_{xi2} T_{xi1} = T_{xi1+xi2} exp(-i pi N xi1 ^ xi2)
                    const cplx ph =
                        Phase{Rational(-wedge(r1, s1, r2, s2), 2 * std::int64_t(N))}.value();
                    err_tt = std::max(err_tt, (t2 * t1).max_abs_diff(
                                                  ph * translation(sp, {r1 + r2, s1 + s2})));
                }
        }
    record(rep, "cocycle/translation-composition", err_tt);
    record(rep, "cocycle/translation-inverse", err_inv);

    double err_rt = 0.0, err_tr = 0.0;
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2) {
            const TorusOperator rx = reflection(sp, {a2, b2});
            for (int r = 0; r < N; ++r)
                for (int s = 0; s < N; ++s) {
                    const TorusOperator t = translation(sp, {r, s});
                    // exp(-i 2pi N x ^ xi)
                    const cplx ph = phase_times(
                        sp, PhaseAngle{Rational(-(std::int64_t(a2) * s - std::int64_t(b2) * r),
                                                2 * std::int64_t(N)),
                                       Rational(-s, N), Rational(r, N), Rational(0)});
                    err_rt = std::max(
                        err_rt, (rx * t).max_abs_diff(ph * reflection(sp, {a2 - r, b2 - s})));
                    err_tr = std::max(
                        err_tr, (t * rx).max_abs_diff(ph * reflection(sp, {a2 + r, b2 + s})));
                }
        }
    record(rep, "cocycle/reflection-translation", err_rt);
    record(rep, "cocycle/translation-reflection", err_tr);

    double err_rr = 0.0;
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2)
            for (int c2 = 0; c2 < N; ++c2)
                for (int d2 = 0; d2 < N; ++d2) {
                    // R_{x1} R_{x2} = T_{2(x1-x2)} exp(-i 2pi N 2 x1 ^ x2)
                    const cplx ph = phase_times(
                        sp,
                        PhaseAngle{Rational(-wedge(a2, b2, c2, d2), 2 * std::int64_t(N)),
                                   Rational(std::int64_t(b2) - d2, N),
                                   Rational(std::int64_t(c2) - a2, N), Rational(0)});
                    const TorusOperator lhs =
                        reflection(sp, {a2, b2}) * reflection(sp, {c2, d2});
                    err_rr = std::max(
                        err_rr, lhs.max_abs_diff(ph * translation(sp, {a2 - c2, b2 - d2})));
                }
    record(rep, "cocycle/reflection-composition", err_rr);
    return rep;
}

SuiteReport verify_traces(const TorusSpace& sp) {
    const int N = sp.n;
    SuiteReport rep;

    double err_t = 0.0;
    for (std::int64_t r = -N; r < 2 * N; ++r)
        for (std::int64_t s = -N; s < 2 * N; ++s) {
            const cplx tr = translation(sp, {r, s}).trace();
            cplx expect = 0.0;
            if (r % N == 0 && s % N == 0)
                expect = static_cast<double>(N) *
                         phase_times(sp, PhaseAngle{Rational(r * s, 2 * std::int64_t(N)),
                                                    Rational(-s, N), Rational(r, N),
                                                    Rational(0)});
            err_t = std::max(err_t, std::abs(tr - expect));
        }
    record(rep, "traces/translation", err_t);

    // the four parity cases of Tr R_x
    double err[4] = {0.0, 0.0, 0.0, 0.0};
    const char* names[4] = {"traces/reflection-even-int", "traces/reflection-even-half",
                            "traces/reflection-odd-int", "traces/reflection-odd-half"};
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2) {
            const cplx tr = reflection(sp, {a2, b2}).trace();
            const int f = reflection_trace(sp, {a2, b2});
            const bool half = (a2 % 2 != 0) || (b2 % 2 != 0);
            int c;
            if (N % 2 == 0)
                c = half ? 1 : 0;
            else
                c = (a2 % 2 != 0 && b2 % 2 != 0) ? 3 : 2;
            err[c] = std::max(err[c], std::abs(tr - static_cast<double>(f)));
        }
    for (int c = 0; c < 4; ++c) record(rep, names[c], err[c]);
    return rep;
}

SuiteReport verify_symbols(const TorusSpace& sp, unsigned seed, int n_random) {
    SuiteReport rep;
    std::mt19937 rng(seed);
    double err_chord = 0.0, err_center = 0.0, err_pos_chord = 0.0, err_pos_center = 0.0;
    double err_conv = 0.0, err_herm = 0.0, err_trace = 0.0;
    for (int k = 0; k < n_random; ++k) {
        const TorusOperator a = random_operator(sp, rng);
        const ChordSymbol ca = chord_symbol(a);
        const CenterSymbol xa = center_symbol(a);
        err_chord = std::max(err_chord, operator_from_chord(ca).max_abs_diff(a));
        err_center = std::max(err_center, operator_from_center(xa).max_abs_diff(a));
        err_pos_chord = std::max(
            err_pos_chord, (position_matrix_from_chord(ca) - a.matrix()).cwiseAbs().maxCoeff());
        err_pos_center = std::max(
            err_pos_center,
            (position_matrix_from_center(xa) - a.matrix()).cwiseAbs().maxCoeff());
        err_conv = std::max(err_conv, (chord_to_center(ca).values() - xa.values())
                                          .cwiseAbs()
                                          .maxCoeff());
        err_conv = std::max(err_conv, (center_to_chord(xa).values() - ca.values())
                                          .cwiseAbs()
                                          .maxCoeff());
        err_trace = std::max(err_trace, std::abs(trace_from_center(xa) - a.trace()));
        err_trace = std::max(err_trace, std::abs(ca.fundamental(0, 0) - a.trace()));

        const TorusOperator h = random_hermitian(sp, rng);
        const CenterSymbol xh = center_symbol(h);
        for (int a2 = -sp.n; a2 < 2 * sp.n; ++a2)
            for (int b2 = -sp.n; b2 < 2 * sp.n; ++b2)
                err_herm = std::max(err_herm, std::abs(std::imag(xh.at(a2, b2))));
    }
    record(rep, "symbols/chord-round-trip", err_chord);
    record(rep, "symbols/center-round-trip", err_center);
    record(rep, "symbols/position-from-chord", err_pos_chord);
    record(rep, "symbols/position-from-center", err_pos_center);
    record(rep, "symbols/chord-center-conversion", err_conv);
    record(rep, "symbols/hermitian-symbol-real", err_herm);
    record(rep, "symbols/trace-identity", err_trace);
    return rep;
}

SuiteReport verify_products(const TorusSpace& sp, unsigned seed, int n_random) {
    SuiteReport rep;
    std::mt19937 rng(seed);
    double err_chord = 0.0, err_center = 0.0, err_tr_chord = 0.0, err_tr_center = 0.0;
    for (int k = 0; k < n_random; ++k) {
        const TorusOperator a = random_operator(sp, rng);
        const TorusOperator b = random_operator(sp, rng);
        const TorusOperator ab = a * b;
        const ChordSymbol pc = chord_product(chord_symbol(a), chord_symbol(b));
        err_chord = std::max(
            err_chord, (pc.values() - chord_symbol(ab).values()).cwiseAbs().maxCoeff());
        const CenterSymbol px = center_product(center_symbol(a), center_symbol(b));
        err_center = std::max(
            err_center, (px.values() - center_symbol(ab).values()).cwiseAbs().maxCoeff());
        err_tr_chord = std::max(err_tr_chord,
                                std::abs(trace_of_product(chord_symbol(a), chord_symbol(b)) -
                                         ab.trace()));
        err_tr_center = std::max(
            err_tr_center,
            std::abs(trace_of_product(center_symbol(a), center_symbol(b)) - ab.trace()));
    }
    record(rep, "products/chord-rule-vs-matrix", err_chord);
    record(rep, "products/center-rule-vs-matrix", err_center);
    record(rep, "products/trace-chord", err_tr_chord);
    record(rep, "products/trace-center", err_tr_center);
    return rep;
}

SuiteReport verify_feline(const TorusSpace& sp, const CatMapSpec& spec, unsigned seed,
                          int n_random) {
    if (sp.n % 2 == 0) throw std::invalid_argument("verify feline: requires odd N");
    SuiteReport rep;
    std::mt19937 rng(seed);
    const TorusOperator u = cat_map_unitary(sp, spec);

    Matrix uu = u.matrix() * u.matrix().adjoint() - Matrix::Identity(sp.n, sp.n);
    record(rep, "feline/unitary", uu.cwiseAbs().maxCoeff());

    double err_cov = 0.0;
    for (int k = 0; k < n_random; ++k) {
        const TorusOperator a = random_operator(sp, rng);
        const QpsCenterSymbol s0 = recenter_odd_n(center_symbol(a));
        const QpsCenterSymbol s1 =
            recenter_odd_n(center_symbol(u * a * u.adjoint()));
        for (int al = 0; al < sp.n; ++al)
            for (int be = 0; be < sp.n; ++be) {
                const auto [ap, bp] = spec.apply(al, be, sp.n);
                err_cov = std::max(err_cov,
                                   std::abs(s1.fundamental(al, be) - s0.at(ap, bp)));
            }
    }
    record(rep, "feline/center-covariance", err_cov);
    return rep;
}

}  // namespace torusweyl
