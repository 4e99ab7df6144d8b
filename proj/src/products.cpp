#include "torusweyl/products.hpp"

#include <cmath>

namespace torusweyl {

namespace {

// Exact 2N-th roots of unity; every composition phase below reduces to one.
class RootTable {
public:
    explicit RootTable(int N) : m_(2 * N), roots_(m_) {
        for (int j = 0; j < m_; ++j)
            roots_[j] = std::polar(1.0, 2.0 * kPi * j / m_);
    }
    // exp(i 2pi num / (2N))
    cplx operator()(std::int64_t num) const {
        std::int64_t j = num % m_;
        if (j < 0) j += m_;
        return roots_[j];
    }

private:
    int m_;
    std::vector<cplx> roots_;
};

void require_same_space(const TorusSpace& a, const TorusSpace& b) {
    if (!(a == b)) throw std::invalid_argument("symbol product: space mismatch");
}

void check_budget(int N, std::size_t count, std::size_t budget) {
    double terms = std::pow(static_cast<double>(N) * N, static_cast<double>(count + 1));
    if (terms > static_cast<double>(budget))
        throw std::domain_error("symbol product: term budget exceeded");
}

// Accumulated phase numerator (over 2N) of the product of translations
// T_{eta_1}...T_{eta_n}: sum_{i<k} eta_i ^ eta_k in integer labels.
std::int64_t chord_polygon_num(const std::vector<ChordIndex>& etas) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < etas.size(); ++i)
        for (std::size_t k = i + 1; k < etas.size(); ++k)
            acc += wedge(etas[i].r, etas[i].s, etas[k].r, etas[k].s);
    return acc;
}

// Delta_{2n+1} phase numerator (over 2N) on doubled center labels, plus the
// alternating-sum corner offset v. For QPS labels pass den = 1 (numerator
// then counts over N, i.e. gets doubled against the 2N table).
struct CenterPhase {
    std::int64_t num;
    LabelVec v;
};

CenterPhase center_polygon_num(const LabelVec& x, const std::vector<LabelVec>& ys) {
    std::int64_t e = 0;
    LabelVec v{0, 0};
    const std::size_t n2 = ys.size();
    std::vector<LabelVec> tau(n2 / 2);
    for (std::size_t k = 0; 2 * k < n2; ++k) {
        const LabelVec& y1 = ys[2 * k];
        const LabelVec& y2 = ys[2 * k + 1];
        e -= wedge(y1.p, y1.q, y2.p, y2.q);
        tau[k] = {y1.p - y2.p, y1.q - y2.q};
        v.p += tau[k].p;
        v.q += tau[k].q;
    }
    for (std::size_t k = 0; k < tau.size(); ++k)
        for (std::size_t l = k + 1; l < tau.size(); ++l)
            e += wedge(tau[k].p, tau[k].q, tau[l].p, tau[l].q);
    e -= wedge(x.p, x.q, v.p, v.q);
    return {e, v};
}

// Iterate an odometer over `count` lattice points in [0,N-1]^2, row-major.
bool advance(std::vector<LabelVec>& idx, int N) {
    for (std::size_t j = idx.size(); j-- > 0;) {
        if (++idx[j].q < N) return true;
        idx[j].q = 0;
        if (++idx[j].p < N) return true;
        idx[j].p = 0;
    }
    return false;
}

}  // namespace

ChordSymbol chord_product(const ChordSymbol& a, const ChordSymbol& b) {
    require_same_space(a.space(), b.space());
    const TorusSpace& sp = a.space();
    const int N = sp.n;
    const RootTable root(N);
    ChordSymbol out(sp);
    for (int r = 0; r < N; ++r) {
        for (int s = 0; s < N; ++s) {
            cplx acc = 0.0;
            for (int r1 = 0; r1 < N; ++r1)
                for (int s1 = 0; s1 < N; ++s1)
                    acc += a.fundamental(r1, s1) * b.at(r - r1, s - s1) *
                           root(wedge(r1, s1, r, s));
            out.values()(r, s) = acc / static_cast<double>(N);
        }
    }
    return out;
}

ChordSymbol chord_product_multi(const std::vector<ChordSymbol>& symbols) {
    if (symbols.empty())
        throw std::invalid_argument("chord_product_multi: empty symbol list");
    for (const auto& s : symbols) require_same_space(symbols.front().space(), s.space());
    if (symbols.size() == 1) return symbols.front();

    const TorusSpace& sp = symbols.front().space();
    const int N = sp.n;
    const std::size_t n = symbols.size();
    const RootTable root(N);
    const double scale = std::pow(static_cast<double>(N), static_cast<double>(n - 1));

    ChordSymbol out(sp);
    std::vector<ChordIndex> etas(n);
    for (int r = 0; r < N; ++r) {
        for (int s = 0; s < N; ++s) {
            cplx acc = 0.0;
            std::vector<LabelVec> idx(n - 1);  // fundamental chords of symbols[1..]
            do {
                std::int64_t sum_r = 0, sum_s = 0;
                cplx term = 1.0;
                for (std::size_t j = 1; j < n; ++j) {
                    etas[j] = {idx[j - 1].p, idx[j - 1].q};
                    term *= symbols[j].fundamental(static_cast<int>(etas[j].r),
                                                   static_cast<int>(etas[j].s));
                    sum_r += etas[j].r;
                    sum_s += etas[j].s;
                }
                etas[0] = {r - sum_r, s - sum_s};
                term *= symbols[0].at(etas[0].r, etas[0].s);
                acc += term * root(chord_polygon_num(etas));
            } while (advance(idx, N));
            out.values()(r, s) = acc / scale;
        }
    }
    return out;
}

CenterSymbol center_product(const CenterSymbol& a, const CenterSymbol& b) {
    require_same_space(a.space(), b.space());
    const TorusSpace& sp = a.space();
    const int N = sp.n;
    const RootTable root(N);
    CenterSymbol out(sp);
    for (int a2 = 0; a2 < N; ++a2) {
        for (int b2 = 0; b2 < N; ++b2) {
            cplx acc = 0.0;
            for (int p1 = 0; p1 < N; ++p1) {
                for (int q1 = 0; q1 < N; ++q1) {
                    for (int p2 = 0; p2 < N; ++p2) {
                        for (int q2 = 0; q2 < N; ++q2) {
                            // corner x + x2 - x1 always lands on the center lattice
                            const int f = reflection_trace(sp, {a2 + p2 - p1, b2 + q2 - q1});
                            if (f == 0) continue;
                            // Delta_3(x,x1,x2) numerator over 2N
                            const std::int64_t num = wedge(p1, q1, p2, q2) +
                                                     wedge(p2, q2, a2, b2) +
                                                     wedge(a2, b2, p1, q1);
                            acc += a.fundamental(p2, q2) * b.fundamental(p1, q1) *
                                   root(num) * static_cast<double>(f);
                        }
                    }
                }
            }
            out.values()(a2, b2) = acc / static_cast<double>(N * N);
        }
    }
    return out;
}

CenterSymbol center_product_multi(const std::vector<CenterSymbol>& symbols,
                                  std::size_t budget) {
    if (symbols.empty())
        throw std::invalid_argument("center_product_multi: empty symbol list");
    for (const auto& s : symbols) require_same_space(symbols.front().space(), s.space());
    const TorusSpace& sp = symbols.front().space();
    const int N = sp.n;

    std::vector<CenterSymbol> facs = symbols;
    if (facs.size() % 2 != 0) facs.push_back(identity_center_symbol(sp));  // A_1 = 1
    const std::size_t n2 = facs.size();
    check_budget(N, n2, budget);

    const RootTable root(N);
    const double scale = std::pow(static_cast<double>(N), static_cast<double>(n2));
    CenterSymbol out(sp);
    for (int a2 = 0; a2 < N; ++a2) {
        for (int b2 = 0; b2 < N; ++b2) {
            const LabelVec x{a2, b2};
            cplx acc = 0.0;
            std::vector<LabelVec> ys(n2);
            do {
                cplx term = 1.0;
                for (std::size_t j = 0; j < n2; ++j)
                    term *= facs[j].fundamental(static_cast<int>(ys[j].p),
                                                static_cast<int>(ys[j].q));
                const auto [num, v] = center_polygon_num(x, ys);
                const int f = reflection_trace(sp, {a2 + v.p, b2 + v.q});
                if (f != 0) acc += term * root(num) * static_cast<double>(f);
            } while (advance(ys, N));
            out.values()(a2, b2) = acc / scale;
        }
    }
    return out;
}

QpsCenterSymbol center_product_qps(const QpsCenterSymbol& a, const QpsCenterSymbol& b) {
    require_same_space(a.space(), b.space());
    const TorusSpace& sp = a.space();
    const int N = sp.n;
    const RootTable root(N);
    QpsCenterSymbol out(sp);
    for (int al = 0; al < N; ++al) {
        for (int be = 0; be < N; ++be) {
            cplx acc = 0.0;
            for (int p1 = 0; p1 < N; ++p1)
                for (int q1 = 0; q1 < N; ++q1)
                    for (int p2 = 0; p2 < N; ++p2)
                        for (int q2 = 0; q2 < N; ++q2) {
                            // integer labels: Delta_3 numerator over N, doubled for the 2N table
                            const std::int64_t num = wedge(p1, q1, p2, q2) +
                                                     wedge(p2, q2, al, be) +
                                                     wedge(al, be, p1, q1);
                            acc += a.fundamental(p2, q2) * b.fundamental(p1, q1) * root(4 * num);
                        }
            out.values()(al, be) = acc / static_cast<double>(N * N);
        }
    }
    return out;
}

QpsCenterSymbol center_product_multi_qps(const std::vector<QpsCenterSymbol>& symbols,
                                         std::size_t budget) {
    if (symbols.empty())
        throw std::invalid_argument("center_product_multi_qps: empty symbol list");
    for (const auto& s : symbols) require_same_space(symbols.front().space(), s.space());
    const TorusSpace& sp = symbols.front().space();
    const int N = sp.n;

    std::vector<QpsCenterSymbol> facs = symbols;
    if (facs.size() % 2 != 0) facs.push_back(identity_qps_symbol(sp));
    const std::size_t n2 = facs.size();
    check_budget(N, n2, budget);

    const RootTable root(N);
    const double scale = std::pow(static_cast<double>(N), static_cast<double>(n2));
    QpsCenterSymbol out(sp);
    for (int al = 0; al < N; ++al) {
        for (int be = 0; be < N; ++be) {
            const LabelVec x{al, be};
            cplx acc = 0.0;
            std::vector<LabelVec> ys(n2);
            do {
                cplx term = 1.0;
                for (std::size_t j = 0; j < n2; ++j)
                    term *= facs[j].fundamental(static_cast<int>(ys[j].p),
                                                static_cast<int>(ys[j].q));
                const auto [num, v] = center_polygon_num(x, ys);
                acc += term * root(4 * num);
            } while (advance(ys, N));
            out.values()(al, be) = acc / scale;
        }
    }
    return out;
}

cplx trace_of_product(const ChordSymbol& a, const ChordSymbol& b) {
    require_same_space(a.space(), b.space());
    const int N = a.space().n;
    cplx acc = 0.0;
    for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s)
            acc += a.fundamental(r, s) * b.at(-r, -s);
    return acc / static_cast<double>(N);
}

cplx trace_of_product(const CenterSymbol& a, const CenterSymbol& b) {
    require_same_space(a.space(), b.space());
    const int N = a.space().n;
    cplx acc = 0.0;
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2)
            acc += a.fundamental(a2, b2) * b.fundamental(a2, b2);
    return acc / static_cast<double>(N);
}

}  // namespace torusweyl
