#pragma once

#include <string>

#include "algroup/polar.hpp"

namespace algroup {

std::string coords_str(const FqVec& v);

std::string render_algebra_summary(Context& ctx);
std::string render_orbits_text(Context& ctx);
std::string render_table_text(Context& ctx);
std::string render_polarization_text(Context& ctx, const Polarization& pol);
std::string render_certification_text(const CertifiedTable& table);
std::string render_branch_text(Context& ctx, const BranchReport& report);

std::string table_csv(Context& ctx);

// Machine-readable report; cells reuse the exact cyclotomic print format of
// the text table. Sections appear only when the matching pointer is set.
std::string report_json(Context& ctx, const std::string& command,
                        const CertifiedTable* cert, const BranchReport* branch,
                        bool include_table);

}  // namespace algroup
