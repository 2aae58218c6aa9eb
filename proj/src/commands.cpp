#include "cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "groupkit/abelian.hpp"
#include "theorems/verify.hpp"

namespace cli {

using fps::RingSpec;
using groupkit::GroupContext;
using groupkit::SubgroupTable;
using theorems::VerificationReport;

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format: " + text);
}

namespace {

std::string factors_spaced(const groupkit::AbelianType& t) {
  std::string s;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(t.factors[i]);
  }
  return s;
}

SubgroupTable named_group(const std::string& name, const GroupContext& ctx) {
  if (name == "TR" || name == "tr") return full_riordan_group(ctx);
  if (name == "TA" || name == "ta") return appell_subgroup(ctx);
  if (name == "TJ" || name == "tj" || name == "TN" || name == "tn")
    return substitution_subgroup(ctx);
  throw std::invalid_argument("unknown group (use TR, TA, or TJ): " + name);
}

void print_reports_text(std::ostream& out, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    out << (r.pass ? "pass" : "FAIL") << "  " << r.claim;
    for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
    out << "  predicted " << r.predicted;
    if (!r.pass) out << "  computed " << r.computed;
    out << "\n";
  }
  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.pass ? 0 : 1;
  out << reports.size() << " checks, " << failures << " failed\n";
}

int finish_reports(std::ostream& out, const CommonOpts& opts,
                   const std::vector<VerificationReport>& reports) {
  if (opts.format == Format::Json)
    out << reports_to_json(reports).dump(2) << "\n";
  else
    print_reports_text(out, reports);
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) throw std::invalid_argument("cannot write output file: " + opts.out_path);
    file << reports_to_json(reports).dump(2) << "\n";
  }
  return theorems::all_pass(reports) ? 0 : 1;
}

}  // namespace

int cmd_table1(std::ostream& out, int max_index, bool engine_check, Format format) {
  if (max_index < 1 || max_index > 64)
    throw std::invalid_argument("table cap exceeded (index <= 64)");
  if (engine_check && max_index > 16)
    throw std::invalid_argument("engine cross-check cap exceeded (index <= 16)");

  std::vector<VerificationReport> checks;
  if (engine_check) checks = theorems::verify_appell_classification(max_index);

  const auto verdict = [&](int n) -> std::string {
    for (const auto& r : checks)
      if (r.claim == "appell.table" && r.parameters.front().second == std::to_string(n))
        return r.pass ? "pass" : "fail";
    return "";
  };

  if (format == Format::Csv) {
    out << "n,factors\n";
    for (int n = 1; n <= max_index; ++n)
      out << n << "," << factors_spaced(theorems::appell_invariant_factors(n)) << "\n";
  } else if (format == Format::Json) {
    json rows = json::array();
    for (int n = 1; n <= max_index; ++n) {
      json row{{"n", std::to_string(n)}};
      json fs = json::array();
      for (auto f : theorems::appell_invariant_factors(n).factors)
        fs.push_back(std::to_string(f));
      row["factors"] = fs;
      if (engine_check) row["engine"] = verdict(n);
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << "\n";
  } else {
    for (int n = 1; n <= max_index; ++n) {
      out << std::setw(3) << n << "  " << theorems::appell_invariant_factors(n).to_string();
      if (engine_check) out << "  engine:" << verdict(n);
      out << "\n";
    }
  }
  if (engine_check && !theorems::all_pass(checks)) return 1;
  return 0;
}

int cmd_element(std::ostream& out, const CommonOpts& opts, std::size_t order,
                const std::string& action, const std::vector<std::string>& args) {
  const auto parse = [&](std::size_t i) { return parse_pair(args.at(i), opts.ring, order); };
  const auto emit_pair = [&](const riordan::Pair& p) {
    if (opts.format == Format::Json)
      out << pair_to_json(p).dump() << "\n";
    else
      out << pair_to_text(p) << "\n";
  };

  if (action == "mul") {
    if (args.size() != 2) throw std::invalid_argument("mul needs two pair literals");
    emit_pair(parse(0) * parse(1));
  } else if (action == "inv") {
    if (args.size() != 1) throw std::invalid_argument("inv needs one pair literal");
    emit_pair(inverse(parse(0)));
  } else if (action == "matrix") {
    if (args.size() != 1) throw std::invalid_argument("matrix needs one pair literal");
    const auto m = to_matrix(parse(0));
    if (opts.format == Format::Json)
      out << matrix_to_json(m).dump() << "\n";
    else if (opts.format == Format::Csv)
      out << matrix_to_csv(m);
    else
      out << matrix_to_text(m);
  } else if (action == "order") {
    if (args.size() != 1) throw std::invalid_argument("order needs one pair literal");
    const auto p = parse(0);
    std::uint64_t result;
    if (p.ring().finite() && p.is_unit_diagonal() &&
        p.ring().modulus() <= groupkit::kMaxPackedModulus) {
      const GroupContext ctx(static_cast<int>(order), p.ring());
      result = element_order(ctx, groupkit::pack(ctx, p));
    } else {
      // generic fallback: iterate until the identity comes back
      const auto id = riordan::Pair::identity(p.ring(), order);
      riordan::Pair x = p;
      result = 1;
      while (!(x == id)) {
        x = x * p;
        if (++result > (std::uint64_t{1} << 20))
          throw std::domain_error("element order exceeds cap");
      }
    }
    out << result << "\n";
  } else {
    throw std::invalid_argument("unknown element action: " + action);
  }
  return 0;
}

int cmd_group_order(std::ostream& out, const CommonOpts& opts, const std::string& group,
                    int level) {
  const GroupContext ctx(level, opts.ring);
  const auto table = named_group(group, ctx);
  if (opts.format == Format::Json)
    out << json{{"group", group}, {"level", std::to_string(level)},
                {"order", std::to_string(table.order())}}
               .dump()
        << "\n";
  else
    out << table.order() << "\n";
  return 0;
}

int cmd_lcs(std::ostream& out, const CommonOpts& opts, int level, int depth) {
  if (!(opts.ring == RingSpec::f2()))
    throw std::invalid_argument("lower central series reports are computed over F2");
  const std::size_t max_depth = depth > 0 ? static_cast<std::size_t>(depth) : 32;
  const auto prev = theorems::analyze_lcs(level - 1, max_depth);
  const auto cur = theorems::analyze_lcs(level, max_depth);
  auto verification = theorems::verify_lcs_quotients(prev, cur);

  if (opts.format == Format::Json) {
    json j{{"level", std::to_string(level)}};
    json sizes = json::array();
    for (const auto& t : cur.series) sizes.push_back(std::to_string(t.order()));
    j["gamma_orders"] = sizes;
    j["reports"] = reports_to_json(verification.reports);
    out << j.dump(2) << "\n";
  } else {
    out << "gamma orders:";
    for (const auto& t : cur.series) out << " " << t.order();
    out << "\n";
    print_reports_text(out, verification.reports);
  }
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) throw std::invalid_argument("cannot write output file: " + opts.out_path);
    file << reports_to_json(verification.reports).dump(2) << "\n";
  }
  return theorems::all_pass(verification.reports) ? 0 : 1;
}

int cmd_abelianization(std::ostream& out, const CommonOpts& opts, const std::string& group,
                       int level) {
  const GroupContext ctx(level, opts.ring);
  const auto table = named_group(group, ctx);
  const auto derived = commutator_subgroup(table, table);
  const auto type = quotient_abelian_invariants(table, derived);
  if (opts.format == Format::Json)
    out << json{{"group", group},
                {"level", std::to_string(level)},
                {"ring", opts.ring.to_string()},
                {"invariants", factors_spaced(type)}}
               .dump()
        << "\n";
  else
    out << type.to_string() << "\n";
  return 0;
}

int cmd_dihedral(std::ostream& out, const CommonOpts& opts, int n, int infinite_level) {
  std::vector<VerificationReport> reports;
  if (n > 0) {
    reports = theorems::dihedral_embedding(n).reports;
  } else {
    for (int k = 1; k <= 3; ++k) {
      auto r = theorems::dihedral_embedding(k).reports;
      reports.insert(reports.end(), r.begin(), r.end());
    }
  }
  reports.push_back(theorems::infinite_dihedral_relations(infinite_level));
  return finish_reports(out, opts, reports);
}

int cmd_shapiro(std::ostream& out, const CommonOpts& opts, const json& input) {
  std::vector<fps::Int> g, f;
  try {
    for (const auto& v : input.at("g"))
      g.push_back(v.is_string() ? fps::Int(v.get<std::string>()) : fps::Int(v.get<long long>()));
    for (const auto& v : input.at("f"))
      f.push_back(v.is_string() ? fps::Int(v.get<std::string>()) : fps::Int(v.get<long long>()));
  } catch (const json::exception&) {
    throw std::invalid_argument("shapiro input needs integer arrays \"g\" and \"f\"");
  }
  const auto verdict = theorems::shapiro_membership(g, f);
  if (opts.format == Format::Json) {
    json j{{"member", verdict.member}};
    j["failed_conditions"] = verdict.failures;
    out << j.dump() << "\n";
  } else {
    out << (verdict.member ? "member" : "non-member") << "\n";
    for (const auto& reason : verdict.failures) out << "  failed: " << reason << "\n";
  }
  return 0;
}

int cmd_verify(std::ostream& out, const CommonOpts& opts, const std::vector<std::string>& suites,
               int n_max) {
  const auto reports = theorems::run_suites(suites, n_max);
  return finish_reports(out, opts, reports);
}

}  // namespace cli
