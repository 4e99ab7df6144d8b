#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "torusweyl/dynamics.hpp"
#include "torusweyl/plane.hpp"

namespace torusweyl::io {

using nlohmann::json;

// Operator schema: {"n": N, "chi": [chi_p, chi_q], "re": [[...]], "im": [[...]]},
// row-major. Doubles survive JSON round trips bit-exactly.
json operator_to_json(const TorusOperator& op);
TorusOperator operator_from_json(const json& j);

// State schema mirrors the operator one with flat arrays.
json state_to_json(const TorusState& state);
TorusState state_from_json(const json& j);

// Symbol exchange record. kind is one of "chord", "center", "center_qps".
// values is the fundamental N x N block; grid exports may carry more rows.
struct SymbolRecord {
    std::string kind;
    int n = 1;
    double chi_p = 0.0;
    double chi_q = 0.0;
    Matrix values;

    TorusSpace space() const { return {n, chi_p, chi_q}; }
};

json symbol_to_json(const std::string& kind, const TorusSpace& space, const Matrix& values);
SymbolRecord symbol_from_json(const json& j);

// CSV: one metadata line under the header "kind,n,chi_p,chi_q", then data
// rows "i,j,re,im" with 17 significant digits. Rows outside the fundamental
// block (extended grids) are accepted and ignored on import.
std::string symbol_to_csv(const std::string& kind, const TorusSpace& space,
                          const Matrix& values);
SymbolRecord symbol_from_csv(std::istream& in);

ChordSymbol as_chord_symbol(const SymbolRecord& rec);
CenterSymbol as_center_symbol(const SymbolRecord& rec);
QpsCenterSymbol as_qps_symbol(const SymbolRecord& rec);

// Hamiltonian config {"terms": [{"r": int, "s": int, "re": float, "im": float}, ...]}.
PeriodicPlaneSymbol hamiltonian_from_json(const json& j);
json hamiltonian_to_json(const PeriodicPlaneSymbol& h);

// Cat map {"b": [[..],[..]]} or {"m": [[..],[..]]}; entries must be exact
// JSON integers.
CatMapSpec catmap_from_json(const json& j);

// Binary P5 graymap with linear value mapping; min/max land in the sidecar.
void write_pgm(const std::filesystem::path& path, const Eigen::MatrixXd& values);

// File helpers; throw std::runtime_error on I/O failure.
json load_json(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace torusweyl::io
