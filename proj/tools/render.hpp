#pragma once

/**
 * @file render.hpp
 * @brief Plain-text and CSV renderings of tables, charts, matrices, and the
 *        psi/F function families. Shading is marked with [brackets] so the
 *        output stays diff-able.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "omega/cyclo.hpp"
#include "omega/distinguished.hpp"
#include "omega/orbits.hpp"
#include "omega/series.hpp"

namespace omega_cli {

/// 12-column grid over [lo, hi]; members of `marked` are bracketed and a
/// footnoted [1]* cell records the r = 1 convention when in range.
std::string render_table_text(std::int64_t lo, std::int64_t hi,
                              const std::vector<std::int64_t>& marked);
std::string render_table_csv(std::int64_t lo, std::int64_t hi,
                             const std::vector<std::int64_t>& marked);

std::string render_verdict_text(const omega::PairContext& ctx,
                                const omega::DistinguishedVerdict& v);

std::string render_chart_text(const omega::MultiplesChart& chart);
std::string render_chart_csv(const omega::MultiplesChart& chart);

std::string render_profile_text(const omega::OrderGrowthProfile& profile);

std::string render_orbits_text(const omega::OrbitSet& lambda, const omega::OrbitSet& upsilon);

/// Entries as sums of roots of unity ("1 + w + w^4", "3*w^6"), from M's
/// multiset view.
std::string render_matrix_text(const omega::BasisMatrix& m);
/// The brace-notation table of M'.
std::string render_mprime_text(const omega::BasisMatrix& m);
/// Canonical coefficient form, for matrices without multiset provenance.
std::string render_element_matrix_text(const std::vector<std::vector<omega::CycloElement>>& mat);

std::string render_psi_text(const omega::BasisMatrix& m);
std::string render_F_text(const omega::BasisMatrix& m);

std::string render_ten_fourteen_text(const omega::TenFourteenReport& report);
std::string render_descent_text(const omega::DescentReport& report);
std::string render_mprime_report_text(const omega::MPrimeReport& report);

/// Multiset as a sum of roots with multiplicities folded into coefficients.
std::string roots_sum_string(const omega::ExponentMultiset& ms);

}  // namespace omega_cli
