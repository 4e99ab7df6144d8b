#include "torusweyl/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace torusweyl::io {

namespace {

json matrix_part(const Matrix& m, bool real) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(real ? m(i, j).real() : m(i, j).imag());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_parts(const json& re, const json& im) {
    if (!re.is_array() || !im.is_array() || re.size() != im.size())
        throw std::runtime_error("matrix parts malformed");
    const auto rows = static_cast<Eigen::Index>(re.size());
    if (rows == 0) throw std::runtime_error("matrix parts empty");
    const auto cols = static_cast<Eigen::Index>(re[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (re[i].size() != static_cast<std::size_t>(cols) ||
            im[i].size() != static_cast<std::size_t>(cols))
            throw std::runtime_error("matrix parts ragged");
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = cplx(re[i][j].get<double>(), im[i][j].get<double>());
    }
    return m;
}

TorusSpace space_from_json(const json& j) {
    const auto& chi = j.at("chi");
    if (!chi.is_array() || chi.size() != 2) throw std::runtime_error("chi must be [chi_p, chi_q]");
    return {j.at("n").get<int>(), chi[0].get<double>(), chi[1].get<double>()};
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::int64_t exact_int(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": entries must be exact integers");
    return v.get<std::int64_t>();
}

}  // namespace

json operator_to_json(const TorusOperator& op) {
    return json{{"n", op.space().n},
                {"chi", {op.space().chi_p, op.space().chi_q}},
                {"re", matrix_part(op.matrix(), true)},
                {"im", matrix_part(op.matrix(), false)}};
}

TorusOperator operator_from_json(const json& j) {
    TorusSpace sp = space_from_json(j);
    Matrix m = matrix_from_parts(j.at("re"), j.at("im"));
    if (m.rows() != sp.n || m.cols() != sp.n)
        throw std::invalid_argument("operator matrix size does not match n");
    return {sp, m};
}

json state_to_json(const TorusState& state) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
        re.push_back(state.amplitudes()(i).real());
        im.push_back(state.amplitudes()(i).imag());
    }
    return json{{"n", state.space().n},
                {"chi", {state.space().chi_p, state.space().chi_q}},
                {"re", re},
                {"im", im}};
}

TorusState state_from_json(const json& j) {
    TorusSpace sp = space_from_json(j);
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size())
        throw std::runtime_error("state parts malformed");
    if (static_cast<int>(re.size()) != sp.n)
        throw std::invalid_argument("state length does not match n");
    Vector v(sp.n);
    for (int i = 0; i < sp.n; ++i) v(i) = cplx(re[i].get<double>(), im[i].get<double>());
    return {sp, v};
}

json symbol_to_json(const std::string& kind, const TorusSpace& space, const Matrix& values) {
    return json{{"kind", kind},
                {"n", space.n},
                {"chi", {space.chi_p, space.chi_q}},
                {"re", matrix_part(values, true)},
                {"im", matrix_part(values, false)}};
}

SymbolRecord symbol_from_json(const json& j) {
    SymbolRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    TorusSpace sp = space_from_json(j);
    rec.n = sp.n;
    rec.chi_p = sp.chi_p;
    rec.chi_q = sp.chi_q;
    Matrix all = matrix_from_parts(j.at("re"), j.at("im"));
    if (all.rows() < sp.n || all.cols() < sp.n)
        throw std::invalid_argument("symbol block smaller than n");
    rec.values = all.topLeftCorner(sp.n, sp.n);
    return rec;
}

std::string symbol_to_csv(const std::string& kind, const TorusSpace& space,
                          const Matrix& values) {
    std::ostringstream out;
    out << "kind,n,chi_p,chi_q\n";
    out << kind << ',' << space.n << ',' << fmt17(space.chi_p) << ',' << fmt17(space.chi_q)
        << '\n';
    for (Eigen::Index i = 0; i < values.rows(); ++i)
        for (Eigen::Index j = 0; j < values.cols(); ++j)
            out << i << ',' << j << ',' << fmt17(values(i, j).real()) << ','
                << fmt17(values(i, j).imag()) << '\n';
    return out.str();
}

SymbolRecord symbol_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("kind,n,chi_p,chi_q", 0) != 0)
        throw std::runtime_error("symbol CSV: missing header");
    if (!std::getline(in, line)) throw std::runtime_error("symbol CSV: missing metadata row");

    SymbolRecord rec;
    {
        std::istringstream meta(line);
        std::string n_str, cp_str, cq_str;
        if (!std::getline(meta, rec.kind, ',') || !std::getline(meta, n_str, ',') ||
            !std::getline(meta, cp_str, ',') || !std::getline(meta, cq_str))
            throw std::runtime_error("symbol CSV: malformed metadata row");
        rec.n = std::stoi(n_str);
        rec.chi_p = std::stod(cp_str);
        rec.chi_q = std::stod(cq_str);
    }
    if (rec.n < 1) throw std::runtime_error("symbol CSV: invalid n");

    rec.values = Matrix::Zero(rec.n, rec.n);
    Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(rec.n, rec.n);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string i_str, j_str, re_str, im_str;
        if (!std::getline(row, i_str, ',') || !std::getline(row, j_str, ',') ||
            !std::getline(row, re_str, ',') || !std::getline(row, im_str))
            throw std::runtime_error("symbol CSV: malformed data row");
        const long i = std::stol(i_str), j = std::stol(j_str);
        if (i < 0 || j < 0) throw std::runtime_error("symbol CSV: negative index");
        if (i >= rec.n || j >= rec.n) continue;  // extended-grid rows
        rec.values(i, j) = cplx(std::stod(re_str), std::stod(im_str));
        seen(i, j) = 1;
    }
    if (seen.sum() != rec.n * rec.n)
        throw std::runtime_error("symbol CSV: fundamental block incomplete");
    return rec;
}

ChordSymbol as_chord_symbol(const SymbolRecord& rec) {
    if (rec.kind != "chord") throw std::invalid_argument("expected a chord symbol file");
    return {rec.space(), rec.values};
}

CenterSymbol as_center_symbol(const SymbolRecord& rec) {
    if (rec.kind != "center") throw std::invalid_argument("expected a center symbol file");
    return {rec.space(), rec.values};
}

QpsCenterSymbol as_qps_symbol(const SymbolRecord& rec) {
    if (rec.kind != "center_qps")
        throw std::invalid_argument("expected a center_qps symbol file");
    return {rec.space(), rec.values};
}

PeriodicPlaneSymbol hamiltonian_from_json(const json& j) {
    PeriodicPlaneSymbol h;
    for (const auto& term : j.at("terms")) {
        const auto r = term.at("r").get<std::int64_t>();
        const auto s = term.at("s").get<std::int64_t>();
        const double re = term.at("re").get<double>();
        const double im = term.contains("im") ? term.at("im").get<double>() : 0.0;
        h.set(r, s, cplx(re, im));
    }
    return h;
}

json hamiltonian_to_json(const PeriodicPlaneSymbol& h) {
    json terms = json::array();
    for (const auto& [k, v] : h.terms())
        terms.push_back(json{{"r", k.first}, {"s", k.second}, {"re", v.real()}, {"im", v.imag()}});
    return json{{"terms", terms}};
}

CatMapSpec catmap_from_json(const json& j) {
    const bool has_b = j.contains("b"), has_m = j.contains("m");
    if (has_b == has_m)
        throw std::invalid_argument("cat map config needs exactly one of \"b\" or \"m\"");
    const json& mat = has_b ? j.at("b") : j.at("m");
    if (!mat.is_array() || mat.size() != 2 || mat[0].size() != 2 || mat[1].size() != 2)
        throw std::invalid_argument("cat map matrix must be 2x2");
    CatMapSpec::Mat2 a{};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) a[i][k] = exact_int(mat[i][k], "cat map");
    return has_b ? CatMapSpec::from_cayley(a) : CatMapSpec::from_map(a);
}

void write_pgm(const std::filesystem::path& path, const Eigen::MatrixXd& values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    const double lo = values.minCoeff(), hi = values.maxCoeff();
    out << "P5\n" << values.cols() << ' ' << values.rows() << "\n255\n";
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            int g = 128;
            if (hi > lo) g = static_cast<int>(std::lround(255.0 * (values(i, j) - lo) / (hi - lo)));
            out.put(static_cast<char>(std::clamp(g, 0, 255)));
        }
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return json::parse(in);
}

void save_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace torusweyl::io
