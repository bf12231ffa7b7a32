#include "core/csvio.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/version.hpp"

namespace cbound {

namespace {

void append_header(std::string& out, const ArtifactMeta& meta) {
  out += "# tool: cbound ";
  out += version_string;
  out += '\n';
  out += "# constants: ";
  out += constants_set_id;
  out += '\n';
  if (!meta.config_hash.empty()) {
    out += "# config: ";
    out += meta.config_hash;
    out += '\n';
  }
  if (meta.seed) {
    out += "# seed: " + std::to_string(*meta.seed) + '\n';
    out += "# prng: ";
    out += meta.prng.empty() ? "unspecified" : meta.prng;
    out += '\n';
  }
  for (const auto& note : meta.notes) {
    out += "# note: ";
    out += note;
    out += '\n';
  }
}

struct CsvLine {
  int line_no;
  std::string text;
};

// Comment/blank-stripped data lines plus the '#' header fields.
struct ParsedCsv {
  std::vector<std::pair<std::string, std::string>> header;  // key -> value
  std::vector<CsvLine> rows;
};

ParsedCsv slurp_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  ParsedCsv out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      const auto colon = body.find(':');
      if (colon != std::string::npos) {
        std::string key = body.substr(0, colon);
        std::string value = body.substr(colon + 1);
        auto trim = [](std::string& s) {
          const auto b = s.find_first_not_of(" \t");
          const auto e = s.find_last_not_of(" \t");
          s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        out.header.emplace_back(std::move(key), std::move(value));
      }
      continue;
    }
    out.rows.push_back({line_no, line});
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    fields.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, const std::string& path, int line_no,
                    int column_index) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0')) {
    std::ostringstream os;
    os << path << ": expected a number in column " << column_index + 1;
    throw Error(ErrorCode::ParseError, os.str(), line_no, column_index + 1);
  }
  return v;
}

bool looks_numeric(const std::string& field) {
  const char* begin = field.c_str();
  char* end = nullptr;
  std::strtod(begin, &end);
  return end != begin;
}

}  // namespace

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorCode::IoError, "cannot open '" + tmp + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
      throw Error(ErrorCode::IoError, "short write to '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::IoError,
                "cannot move '" + tmp + "' into place: " + ec.message());
  }
}

void write_spectrum_csv(const std::string& path, const NoiseSpectrum& s,
                        const ArtifactMeta& meta) {
  std::string out;
  append_header(out, meta);
  out += "# kind: ";
  out += spectrum_kind_name(s.kind());
  out += '\n';
  out += "frequency_hz,psd\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += format_g17(s.freqs()[i]);
    out += ',';
    out += format_g17(s.values()[i]);
    out += '\n';
  }
  atomic_write_file(path, out);
}

NoiseSpectrum read_spectrum_csv(const std::string& path) {
  const ParsedCsv csv = slurp_csv(path);
  std::optional<SpectrumKind> kind;
  for (const auto& [key, value] : csv.header) {
    if (key == "kind") {
      kind = spectrum_kind_from_name(value);
      if (!kind)
        throw Error(ErrorCode::ParseError,
                    path + ": unknown spectrum kind '" + value + "'");
    }
  }
  if (!kind)
    throw Error(ErrorCode::ParseError,
                path + ": missing '# kind: <...>' header line");
  std::vector<double> freqs, values;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto fields = split_fields(csv.rows[i].text);
    if (i == 0 && !looks_numeric(fields[0])) continue;  // column header line
    if (fields.size() != 2) {
      std::ostringstream os;
      os << path << ": expected 2 columns, got " << fields.size();
      throw Error(ErrorCode::ParseError, os.str(), csv.rows[i].line_no, 1);
    }
    freqs.push_back(parse_double(fields[0], path, csv.rows[i].line_no, 0));
    values.push_back(parse_double(fields[1], path, csv.rows[i].line_no, 1));
  }
  if (freqs.empty())
    throw Error(ErrorCode::ParseError, path + ": no data rows");
  try {
    return NoiseSpectrum(std::move(freqs), std::move(values), *kind);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_curve_csv(const std::string& path, const ExclusionCurve& curve,
                     const ArtifactMeta& meta) {
  curve.validate();
  std::string out;
  append_header(out, meta);
  out += "# source: " + curve.source_label + '\n';
  out += "# r_valid_max: " + format_g17(curve.r_valid_max) + '\n';
  if (!curve.report.empty()) out += "# note: " + curve.report + '\n';
  out += "r_m,lambda_max_per_s\n";
  for (std::size_t i = 0; i < curve.r.size(); ++i) {
    out += format_g17(curve.r[i]);
    out += ',';
    out += format_g17(curve.lambda_max[i]);
    out += '\n';
  }
  atomic_write_file(path, out);
}

void write_budget_csv(const std::string& path, const BudgetReport& report,
                      const ArtifactMeta& meta) {
  std::string out;
  append_header(out, meta);
  for (const auto& note : report.notes) out += "# note: " + note + '\n';
  out += "frequency_hz";
  for (const auto& c : report.components)
    out += "," + c.name + "_force_n2_per_hz," + c.name + "_disp_m2_per_hz";
  out += ",total_force_n2_per_hz,total_disp_m2_per_hz";
  out += ",residual_force_n2_per_hz,residual_disp_m2_per_hz\n";
  for (std::size_t i = 0; i < report.freqs.size(); ++i) {
    out += format_g17(report.freqs[i]);
    for (const auto& c : report.components) {
      out += ',';
      out += format_g17(c.force_psd[i]);
      out += ',';
      out += format_g17(c.disp_psd[i]);
    }
    out += ',';
    out += format_g17(report.total_force[i]);
    out += ',';
    out += format_g17(report.total_disp[i]);
    out += ',';
    out += format_g17(report.residual_force[i]);
    out += ',';
    out += format_g17(report.residual_disp[i]);
    out += '\n';
  }
  atomic_write_file(path, out);
}

void write_run_csv(const std::string& path, const SimulationRun& run,
                   const ArtifactMeta& meta) {
  std::string out;
  append_header(out, meta);
  out += "# dt: " + format_g17(run.params.dt) + '\n';
  out += "# oscillator: m_eff=" + format_g17(run.params.m_eff) +
         " omega_m=" + format_g17(run.params.omega_m) +
         " quality=" + format_g17(run.params.quality) +
         " force_psd=" + format_g17(run.params.force_psd) + '\n';
  out += "time_s,position_m,force_n\n";
  for (std::size_t i = 0; i < run.position.size(); ++i) {
    out += format_g17(static_cast<double>(i + 1) * run.params.dt);
    out += ',';
    out += format_g17(run.position[i]);
    out += ',';
    out += format_g17(run.force[i]);
    out += '\n';
  }
  atomic_write_file(path, out);
}

RunSeries read_run_csv(const std::string& path) {
  const ParsedCsv csv = slurp_csv(path);
  RunSeries series;
  bool have_dt = false;
  for (const auto& [key, value] : csv.header) {
    if (key == "dt") {
      series.dt = std::strtod(value.c_str(), nullptr);
      have_dt = series.dt > 0;
    }
  }
  bool has_force_column = false;
  bool first_data = true;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto fields = split_fields(csv.rows[i].text);
    if (i == 0 && !looks_numeric(fields[0])) continue;  // column header line
    if (fields.size() != 2 && fields.size() != 3) {
      std::ostringstream os;
      os << path << ": expected 2 or 3 columns, got " << fields.size();
      throw Error(ErrorCode::ParseError, os.str(), csv.rows[i].line_no, 1);
    }
    if (first_data) {
      has_force_column = fields.size() == 3;
      first_data = false;
    } else if ((fields.size() == 3) != has_force_column) {
      throw Error(ErrorCode::ParseError, path + ": inconsistent column count",
                  csv.rows[i].line_no, 1);
    }
    series.time.push_back(parse_double(fields[0], path, csv.rows[i].line_no, 0));
    series.position.push_back(parse_double(fields[1], path, csv.rows[i].line_no, 1));
    if (has_force_column)
      series.force.push_back(parse_double(fields[2], path, csv.rows[i].line_no, 2));
  }
  if (series.time.size() < 2)
    throw Error(ErrorCode::ParseError, path + ": need at least two samples");
  if (!have_dt) {
    series.dt = series.time[1] - series.time[0];
    if (!(series.dt > 0))
      throw Error(ErrorCode::ParseError, path + ": time column not increasing");
  }
  // Uniform sampling is assumed by the estimator downstream; verify.
  for (std::size_t i = 1; i < series.time.size(); ++i) {
    const double step = series.time[i] - series.time[i - 1];
    if (std::abs(step - series.dt) > 1e-6 * series.dt)
      throw Error(ErrorCode::ParseError,
                  path + ": non-uniform sampling (expected dt = " +
                      format_g17(series.dt) + ")");
  }
  return series;
}

std::vector<BrownianRunRecord> read_runs_csv(const std::string& path) {
  const ParsedCsv csv = slurp_csv(path);
  std::vector<BrownianRunRecord> records;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto fields = split_fields(csv.rows[i].text);
    if (i == 0 && !looks_numeric(fields[0])) continue;  // column header line
    if (fields.size() < 3) {
      std::ostringstream os;
      os << path << ": expected at least 3 columns (t_days,s_brown,sigma), got "
         << fields.size();
      throw Error(ErrorCode::ParseError, os.str(), csv.rows[i].line_no, 1);
    }
    BrownianRunRecord rec;
    rec.t_days = parse_double(fields[0], path, csv.rows[i].line_no, 0);
    rec.s_brown = parse_double(fields[1], path, csv.rows[i].line_no, 1);
    rec.sigma = parse_double(fields[2], path, csv.rows[i].line_no, 2);
    if (fields.size() > 3) {
      rec.label = fields[3];
      for (std::size_t j = 4; j < fields.size(); ++j) rec.label += "," + fields[j];
    }
    try {
      rec.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, path + ": " + e.what(),
                  csv.rows[i].line_no, 1);
    }
    records.push_back(std::move(rec));
  }
  if (records.empty())
    throw Error(ErrorCode::ParseError, path + ": no data rows");
  return records;
}

}  // namespace cbound
