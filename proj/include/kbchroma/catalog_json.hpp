#pragma once

#include <string>

#include "kbchroma/catalog.hpp"

namespace kbchroma {

/// Catalog as JSON: {b, boundary, entries:[{d, j, partitions, cprime,
/// lambda_coeffs, coeff_poly_coeffs, contributing}]}. Polynomial
/// coefficients are ascending-power "num/den" strings so nothing is lost to
/// floating point. parse_catalog_json reconstructs the full in-memory
/// catalog, recovering the f-basis weights from the (triangular) basis.
std::string dump_catalog_json(const Catalog& cat, int indent = 2);
Catalog parse_catalog_json(const std::string& text);

bool catalogs_equal(const Catalog& a, const Catalog& b);

}  // namespace kbchroma
