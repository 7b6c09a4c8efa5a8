#include "algroup/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace algroup {

namespace {

using nlohmann::json;

json coords_json(const FqVec& v) {
  json arr = json::array();
  for (auto c : v) arr.push_back(static_cast<int>(c));
  return arr;
}

json basis_json(const Subspace& u) {
  json arr = json::array();
  for (int i = 0; i < u.dim(); ++i) arr.push_back(coords_json(u.basis().row(i)));
  return arr;
}

}  // namespace

std::string coords_str(const FqVec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(static_cast<int>(v[i]));
  }
  return out + "]";
}

std::string render_algebra_summary(Context& ctx) {
  const Algebra& A = ctx.algebra();
  std::ostringstream out;
  out << "algebra " << A.name() << ": F_" << A.field().q() << " (p=" << A.field().p()
      << ", e=" << A.field().e() << "), dim " << A.dim() << ", |G| = " << ctx.group_order()
      << "\n";
  return out.str();
}

std::string render_orbits_text(Context& ctx) {
  std::ostringstream out;
  out << render_algebra_summary(ctx);
  out << "conjugacy classes: " << ctx.class_count()
      << "; coadjoint orbits: " << ctx.orbit_count() << "\n";
  out << "orbit  size  rank  degree  rep\n";
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
    const auto& o = ctx.orbits().orbits[oi];
    std::uint64_t degree = 1;
    for (int i = 0; i < o.rank / 2; ++i) degree *= ctx.field().q();
    out << std::setw(5) << oi << std::setw(6) << o.size() << std::setw(6) << o.rank
        << std::setw(8) << degree << "  " << coords_str(o.rep.c) << "\n";
  }
  return out.str();
}

std::string render_table_text(Context& ctx) {
  std::ostringstream out;
  out << render_algebra_summary(ctx);
  const auto& cc = ctx.classes();
  out << "classes (columns):\n";
  for (std::size_t c = 0; c < cc.count(); ++c)
    out << "  C" << c << ": size " << cc.sizes[c] << ", rep 1+" << coords_str(cc.reps[c])
        << "\n";
  out << "rows phi_i are indexed by coadjoint orbits (degree = value at C0)\n";

  std::vector<std::vector<std::string>> cells(ctx.orbit_count());
  std::vector<std::size_t> width(cc.count() + 1, 0);
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
    cells[oi].push_back("phi_" + std::to_string(oi));
    width[0] = std::max(width[0], cells[oi][0].size());
    for (std::size_t c = 0; c < cc.count(); ++c) {
      cells[oi].push_back(ctx.phi(oi).v[c].str());
      width[c + 1] = std::max(width[c + 1], cells[oi][c + 1].size());
    }
  }
  std::vector<std::string> header(1, "");
  for (std::size_t c = 0; c < cc.count(); ++c) {
    header.push_back("C" + std::to_string(c));
    width[c + 1] = std::max(width[c + 1], header[c + 1].size());
  }
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << "\n";
  };
  emit_row(header);
  for (const auto& row : cells) emit_row(row);
  return out.str();
}

std::string render_polarization_text(Context& ctx, const Polarization& pol) {
  std::ostringstream out;
  out << render_algebra_summary(ctx);
  out << "f = " << coords_str(pol.f.c) << "\n";
  std::size_t orbit = ctx.orbit_index_of(pol.f);
  const auto& o = ctx.orbits().orbits[orbit];
  out << "orbit " << orbit << ": size " << o.size() << ", rank " << o.rank << "\n";
  out << "pieces:\n";
  for (std::size_t i = 0; i < pol.pieces.size(); ++i) {
    out << "  R_" << (i + 1) << " (dim " << pol.pieces[i].dim() << "):";
    for (int r = 0; r < pol.pieces[i].dim(); ++r)
      out << " " << coords_str(pol.pieces[i].basis().row(r));
    out << "\n";
  }
  out << "U (dim " << pol.u.dim() << "):";
  for (int r = 0; r < pol.u.dim(); ++r) out << " " << coords_str(pol.u.basis().row(r));
  out << "\n";
  int dim_rad = ctx.algebra().dim() - o.rank;
  out << "dimension identity: dim U = " << pol.u.dim() << " = (" << ctx.algebra().dim()
      << " + " << dim_rad << ")/2\n";
  out << "|H| = " << pol.subgroup_order << ", induced degree = "
      << ctx.group_order() / pol.subgroup_order << "\n";
  return out.str();
}

std::string render_certification_text(const CertifiedTable& table) {
  std::ostringstream out;
  for (const auto& stage : table.stages)
    out << (stage.passed ? "[PASS] " : "[FAIL] ") << stage.name << ": " << stage.detail
        << "\n";
  out << (table.all_passed ? "certification: all checks passed"
                           : "certification: FAILED")
      << "\n";
  return out.str();
}

std::string render_branch_text(Context& ctx, const BranchReport& report) {
  std::ostringstream out;
  out << render_algebra_summary(ctx);
  out << "maximal algebra subgroups checked: " << report.subgroups.size() << "\n";
  for (std::size_t si = 0; si < report.subgroups.size(); ++si) {
    const Subspace& u = report.subgroups[si];
    out << "H_" << si << " = 1+U, U basis:";
    for (int r = 0; r < u.dim(); ++r) out << " " << coords_str(u.basis().row(r));
    out << (report.subgroup_certified[si] ? "" : "  [subgroup table not fully certified]")
        << "\n";
    std::size_t stay = 0, induced = 0;
    for (const auto& entry : report.entries) {
      if (entry.subgroup != si) continue;
      if (entry.branch == 1)
        ++stay;
      else
        ++induced;
    }
    out << "  restriction irreducible: " << stay << ", induced from below: " << induced
        << "\n";
  }
  out << "branching dichotomy verified for every (irreducible, subgroup) pair\n";
  return out.str();
}

std::string table_csv(Context& ctx) {
  std::ostringstream out;
  out << "phi";
  for (std::size_t c = 0; c < ctx.class_count(); ++c) out << ",C" << c;
  out << "\n";
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
    out << "phi_" << oi;
    for (std::size_t c = 0; c < ctx.class_count(); ++c) out << "," << ctx.phi(oi).v[c].str();
    out << "\n";
  }
  return out.str();
}

std::string report_json(Context& ctx, const std::string& command,
                        const CertifiedTable* cert, const BranchReport* branch,
                        bool include_table) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;

  const Algebra& A = ctx.algebra();
  doc["algebra"] = {{"name", A.name()},
                    {"p", A.field().p()},
                    {"e", A.field().e()},
                    {"modulus", A.field().spec().modulus},
                    {"dim", A.dim()},
                    {"group_order", ctx.group_order()}};

  json classes = json::array();
  for (std::size_t c = 0; c < ctx.class_count(); ++c)
    classes.push_back({{"index", c},
                       {"size", ctx.classes().sizes[c]},
                       {"rep", coords_json(ctx.classes().reps[c])}});
  doc["classes"] = classes;

  json orbits = json::array();
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
    const auto& o = ctx.orbits().orbits[oi];
    orbits.push_back({{"index", oi},
                      {"size", o.size()},
                      {"rank", o.rank},
                      {"rep", coords_json(o.rep.c)}});
  }
  doc["orbits"] = orbits;

  if (include_table) {
    json table = json::array();
    for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
      json row = json::array();
      for (std::size_t c = 0; c < ctx.class_count(); ++c)
        row.push_back(ctx.phi(oi).v[c].str());
      table.push_back(row);
    }
    doc["table"] = table;
  }

  if (cert) {
    json stages = json::array();
    for (const auto& stage : cert->stages)
      stages.push_back({{"name", stage.name}, {"passed", stage.passed}, {"detail", stage.detail}});
    json witnesses = json::array();
    for (const auto& w : cert->witnesses) {
      json lambda = json::array();
      for (const auto& value : w.lambda_values) lambda.push_back(value.str());
      witnesses.push_back({{"orbit", w.orbit},
                           {"f", coords_json(w.f.c)},
                           {"subspace_basis", basis_json(w.u)},
                           {"subgroup_order", w.subgroup_order},
                           {"lambda", lambda}});
    }
    doc["certification"] = {{"passed", cert->all_passed},
                            {"stages", stages},
                            {"witnesses", witnesses}};
  }

  if (branch) {
    json subgroups = json::array();
    for (std::size_t si = 0; si < branch->subgroups.size(); ++si)
      subgroups.push_back({{"basis", basis_json(branch->subgroups[si])},
                           {"certified", static_cast<bool>(branch->subgroup_certified[si])}});
    json entries = json::array();
    for (const auto& entry : branch->entries)
      entries.push_back(
          {{"subgroup", entry.subgroup}, {"chi", entry.chi}, {"branch", entry.branch}});
    doc["branching"] = {{"subgroups", subgroups}, {"entries", entries}};
  }

  return doc.dump(2) + "\n";
}

}  // namespace algroup
