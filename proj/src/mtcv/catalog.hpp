// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mtcv/characters.hpp"
#include "mtcv/data_file.hpp"

namespace mtcv {

using CatalogEntry = ModularDataSet;

/// "trivial", "fibonacci", "ising", "su2-1" ... "su2-8".
std::vector<std::string> catalog_names();

/// Canonical data-file text of an entry. Throws Error(invalid_argument) for an
/// unknown name.
std::string catalog_text(std::string_view name);

/// Parsed entry. Throws Error(invalid_argument) for an unknown name.
CatalogEntry get_entry(std::string_view name);

/// sqrt(2/(k+2)) sin(pi (l+1)(m+1)/(k+2)) evaluated directly, 1 <= k <= 8.
SMatrix su2k_smatrix(int k);

/// Throws Error(unsupported) for entries without character data.
QCharacter character_series(std::string_view entry, Label a, int order);
VerificationReport verify_modular_S(std::string_view entry, const SMatrix& S, Complex tau,
                                    int order, double tol);

}  // namespace mtcv
