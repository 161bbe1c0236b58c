#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bredonk/bredon.hpp"

namespace bredonk {

/// JSON dataset format:
///
///   {
///     "name": "sl3z",
///     "matrix_dim": 3,
///     "cells": [{"id": "v1", "dim": 0, "stabilizer_gens": [[-1,0,0, 0,0,-1, 0,-1,0], ...]}, ...],
///     "boundaries": [{"cell": "e1", "terms": [{"sign": 1, "target": "v2"},
///                                             {"sign": -1, "target": "v1", "g": [...]}]}, ...]
///   }
///
/// Matrices are flat row-major integer arrays of length matrix_dim^2; a term
/// without "g" uses the identity. Entries may also be decimal strings.
GCWComplex parse_dataset(std::string_view json_text);
GCWComplex load_dataset(const std::filesystem::path& path);
/// Deterministic: sorted keys, cells in input order, boundaries in cell order.
std::string serialize_dataset(const GCWComplex& X);

/// Generator list file: {"matrix_dim": n, "gens": [[...], ...]}.
std::vector<GroupElement> parse_generators(std::string_view json_text);
/// "a,b,c,..." with a square number of entries.
GroupElement parse_flat_element(std::string_view csv);

// Built-in models.
GCWComplex builtin_sl3z();
/// Point with stabilizer {[1], [-1]}.
GCWComplex builtin_c2point();
/// Point with trivial 1x1 stabilizer.
GCWComplex builtin_trivialpoint();
std::optional<GCWComplex> builtin_complex(std::string_view name);

/// The generators g1..g14 and the folding elements q1, q2 of the built-in
/// SL(3,Z) model, by name.
std::optional<GroupElement> named_element(std::string_view name);

}  // namespace bredonk
