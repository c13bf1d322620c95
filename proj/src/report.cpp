#include "semigaps/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace semigaps {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json generator_array(const std::vector<std::uint64_t>& gens) {
  ordered_json arr = ordered_json::array();
  for (std::uint64_t v : gens) arr.push_back(std::to_string(v));
  return arr;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    os << values[i];
  }
  return os.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw invalid_input("unknown output format: " + name);
}

std::string render_power_sums(const PowerSumReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["generators"] = generator_array(report.input);
    j["minimal"] = report.minimal;
    j["class"] = pipeline_class_name(report.cls);
    ordered_json rows = ordered_json::array();
    for (const PowerSumResult& r : report.results) {
      ordered_json row;
      row["n"] = r.n;
      row["value"] = to_string(r.value);
      row["method"] = method_name(r.method);
      if (r.agreement.has_value()) {
        row["verified"] = *r.agreement;
      } else {
        row["verified"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    return dump(j);
  }

  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "n,value,method,verified\n";
    for (const PowerSumResult& r : report.results) {
      os << r.n << ',' << to_string(r.value) << ',' << method_name(r.method) << ',';
      if (r.agreement.has_value()) os << (*r.agreement ? "true" : "false");
      os << '\n';
    }
    return os.str();
  }

  std::ostringstream os;
  os << "generators: " << join(report.input);
  if (report.minimal) os << " (minimal)";
  os << '\n';
  if (report.effective.count() != 0 && report.effective.gens != report.input) {
    os << "reduced to: " << join(report.effective.gens) << '\n';
  }
  os << "class: " << pipeline_class_name(report.cls) << '\n';

  std::size_t value_width = 5;
  std::size_t method_width = 6;
  for (const PowerSumResult& r : report.results) {
    value_width = std::max(value_width, to_string(r.value).size());
    method_width = std::max(method_width, std::string(method_name(r.method)).size());
  }
  os << "  " << std::setw(3) << "n" << "  " << std::left << std::setw(static_cast<int>(value_width))
     << "value" << "  " << std::setw(static_cast<int>(method_width)) << "method"
     << "  verified\n"
     << std::right;
  for (const PowerSumResult& r : report.results) {
    os << "  " << std::setw(3) << r.n << "  " << std::left
       << std::setw(static_cast<int>(value_width)) << to_string(r.value) << "  "
       << std::setw(static_cast<int>(method_width)) << method_name(r.method) << "  "
       << (r.agreement.has_value() ? (*r.agreement ? "yes" : "no") : "-") << '\n'
       << std::right;
  }
  return os.str();
}

std::string render_gaps(const std::vector<std::uint64_t>& gens, const GapSet& gaps,
                        OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["generators"] = generator_array(gens);
    ordered_json arr = ordered_json::array();
    for (std::uint64_t gap : gaps.gaps) arr.push_back(std::to_string(gap));
    j["gaps"] = std::move(arr);
    j["genus"] = std::to_string(gaps.genus());
    if (gaps.empty()) {
      j["frobenius"] = nullptr;
    } else {
      j["frobenius"] = std::to_string(gaps.frobenius());
    }
    return dump(j);
  }

  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "gap\n";
    for (std::uint64_t gap : gaps.gaps) os << gap << '\n';
    return os.str();
  }

  std::ostringstream os;
  os << "generators: " << join(gens) << '\n';
  os << "gaps: " << (gaps.empty() ? "(none)" : join(gaps.gaps)) << '\n';
  os << "genus: " << gaps.genus() << '\n';
  os << "frobenius: ";
  if (gaps.empty()) {
    os << '-';
  } else {
    os << gaps.frobenius();
  }
  os << '\n';
  return os.str();
}

std::string render_relations(const GeneratorTuple& g, const RelationMatrix& rel,
                             const SemigroupClass& cls, const NumeratorPolynomial& numerator,
                             OutputFormat format) {
  const char* kind = cls.symmetric() ? "symmetric" : "nonsymmetric";

  if (format == OutputFormat::json) {
    ordered_json j;
    j["generators"] = generator_array(g.gens);
    ordered_json matrix = ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < 3; ++k) row.push_back(std::to_string(rel.a[i][k]));
      matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    ordered_json wd = ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) wd.push_back(std::to_string(rel.weighted_diag[i]));
    j["weighted_diagonal"] = std::move(wd);
    j["class"] = kind;
    j["trace"] = to_string(cls.trace);
    if (cls.symmetric()) {
      j["j_invariant"] = nullptr;
      j["reduced_trace"] = to_string(cls.reduced_trace);
    } else {
      j["j_invariant"] = to_string(cls.j_invariant);
      j["reduced_trace"] = nullptr;
    }
    j["numerator"] = numerator.to_string();
    return dump(j);
  }

  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "d1,d2,d3,class,a11,a12,a13,a21,a22,a23,a31,a32,a33,trace,j_invariant,reduced_trace\n";
    os << g.d(0) << ',' << g.d(1) << ',' << g.d(2) << ',' << kind;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) os << ',' << rel.a[i][k];
    }
    os << ',' << to_string(cls.trace) << ',';
    if (!cls.symmetric()) os << to_string(cls.j_invariant);
    os << ',';
    if (cls.symmetric()) os << to_string(cls.reduced_trace);
    os << '\n';
    return os.str();
  }

  std::ostringstream os;
  os << "generators: " << join(g.gens) << '\n';
  for (std::size_t i = 0; i < 3; ++i) {
    os << "a[" << i + 1 << "][*]: " << rel.a[i][0] << ' ' << rel.a[i][1] << ' ' << rel.a[i][2]
       << "   (" << rel.diag(i) << '*' << g.d(i) << " = " << rel.weighted_diag[i] << ")\n";
  }
  os << "class: " << kind << '\n';
  os << "trace: " << to_string(cls.trace) << '\n';
  if (cls.symmetric()) {
    os << "reduced trace: " << to_string(cls.reduced_trace) << '\n';
  } else {
    os << "J: " << to_string(cls.j_invariant) << '\n';
  }
  os << "numerator: " << numerator.to_string() << '\n';
  return os.str();
}

std::string render_hilbert(const std::vector<std::uint64_t>& gens,
                           const NumeratorPolynomial& closed,
                           const NumeratorPolynomial& oracle, OutputFormat format) {
  const bool equal = closed == oracle;

  if (format == OutputFormat::json) {
    ordered_json j;
    j["generators"] = generator_array(gens);
    j["closed_form"] = closed.to_string();
    j["oracle"] = oracle.to_string();
    j["equal"] = equal;
    return dump(j);
  }

  if (format == OutputFormat::csv) {
    std::set<std::uint64_t> exponents;
    for (const auto& [e, c] : closed.terms()) exponents.insert(e);
    for (const auto& [e, c] : oracle.terms()) exponents.insert(e);
    std::ostringstream os;
    os << "exponent,closed_coeff,oracle_coeff\n";
    for (std::uint64_t e : exponents) {
      os << e << ',' << closed.coeff(e) << ',' << oracle.coeff(e) << '\n';
    }
    return os.str();
  }

  std::ostringstream os;
  os << "generators: " << join(gens) << '\n';
  os << "closed form: " << closed.to_string() << '\n';
  os << "oracle:      " << oracle.to_string() << '\n';
  os << "equal: " << (equal ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace semigaps
