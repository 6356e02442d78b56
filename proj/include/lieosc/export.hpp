#pragma once

#include <string>

#include "lieosc/fock.hpp"
#include "lieosc/report.hpp"
#include "lieosc/tensors.hpp"

namespace lieosc {

enum class Format { Json, Csv };

/// "json" or "csv"; throws InvalidArgument otherwise.
Format parse_format(const std::string& text);

// All exported indices are 1-based. Documents end with a newline; JSON uses
// two-space indentation with sorted keys, so equal inputs give equal bytes.

/// {"terms":[{"d":2,"re":"1/2","im":"0"}]}, terms in canonical order.
std::string export_surd(const Surd& s);
Surd import_surd(const std::string& json);

/// {"rows":r,"cols":c,"entries":[{"r":1,"c":2,"v":<surd>}]}, row-major.
std::string export_matrix(const Matrix& m);
Matrix import_matrix(const std::string& json);

/// JSON: {"dims":[...],"entries":[{"index":[...],"v":<surd>}]};
/// CSV: header i,j,k[,l] then one row per nonzero with the Surd text.
std::string export_tensor(const SparseTensor& t, Format f);
SparseTensor import_tensor(const std::string& json);

/// Generators of the defining representation with names, metric and roots.
std::string export_rep(const RepBundle& rep, Format f);
/// Occupation basis and the X_i matrices.
std::string export_oscillator(const OperatorRep& op, const RepBundle& rep, Format f);

std::string export_report(const Report& r, Format f);
Report import_report(const std::string& json);

/// Writes text to path; throws Io on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace lieosc
