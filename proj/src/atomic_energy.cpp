#include "scott/atomic_energy.hpp"

#include "parallel.hpp"
#include "scott/errors.hpp"
#include "scott/scott_shift.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

namespace scott {

void PhysicalConstants::validate() const {
  if (!(alpha > 0.0 && alpha < 0.01)) {
    throw DomainError("alpha must lie in (0, 0.01)");
  }
}

EnergyHa predict_energy(double Z, Coupling g, const TfSolution &tf,
                        double tol) {
  if (!(Z > 0.0)) {
    throw DomainError("predict_energy: Z must be positive");
  }
  const double q = scott_coefficient(g, tol).q;
  return EnergyHa{tf_energy(Z, tf).value + q * Z * Z};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && blank(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && blank(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

template <class T> bool parse_number(std::string_view s, T &value) {
  if (s.empty()) {
    return false;
  }
  if (s.front() == '+') {
    s.remove_prefix(1);
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

std::vector<NistRecord> ingest_energy_table(std::string_view text,
                                            std::string_view column) {
  std::vector<NistRecord> records;
  std::set<int> seen;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto fields = split_fields(line);
    if (!header) {
      if (fields.size() != 2 || fields[0] != "Z" || fields[1] != column) {
        throw ParseError(line_no, "expected header `Z," + std::string(column) +
                                      "`");
      }
      header = true;
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 fields, got " +
                                    std::to_string(fields.size()));
    }
    NistRecord rec;
    if (!parse_number(fields[0], rec.Z) || rec.Z < 1) {
      throw ParseError(line_no, "invalid Z `" + std::string(fields[0]) + "`");
    }
    if (!parse_number(fields[1], rec.e_total) || !std::isfinite(rec.e_total)) {
      throw ParseError(line_no,
                       "invalid energy `" + std::string(fields[1]) + "`");
    }
    if (!(rec.e_total < 0.0)) {
      throw ParseError(line_no, "energy must be negative");
    }
    if (!seen.insert(rec.Z).second) {
      throw ParseError(line_no, "duplicate Z = " + std::to_string(rec.Z));
    }
    records.push_back(rec);
  }
  if (!header) {
    throw ParseError(0, "missing header `Z," + std::string(column) + "`");
  }
  std::sort(records.begin(), records.end(),
            [](const NistRecord &a, const NistRecord &b) { return a.Z < b.Z; });
  return records;
}

std::string format_energy_table(const std::vector<NistRecord> &records,
                                std::string_view column) {
  std::string out = "Z,";
  out += column;
  out += '\n';
  char buf[64];
  for (const auto &r : records) {
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", r.Z, r.e_total);
    out += buf;
  }
  return out;
}

std::vector<ComparisonRow>
comparison_table(const std::vector<NistRecord> &records,
                 const std::optional<std::vector<NistRecord>> &reference,
                 const PhysicalConstants &constants, const TfSolution &tf,
                 std::optional<double> tol, unsigned threads) {
  constants.validate();
  std::vector<NistRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const NistRecord &a, const NistRecord &b) { return a.Z < b.Z; });

  std::vector<ComparisonRow> rows(sorted.size());
  detail::parallel_for(sorted.size(), threads, [&](std::size_t i) {
    const NistRecord &rec = sorted[i];
    ComparisonRow &row = rows[i];
    const double Z = rec.Z;
    const double e_tf = tf_energy(Z, tf).value;
    row.Z = rec.Z;
    row.gamma = constants.alpha * Z;
    row.empirical_q = (rec.e_total - e_tf) / (Z * Z);
    row.schwinger_q = 0.5 + schwinger_constant() * row.gamma * row.gamma;
    if (row.gamma < 1.0) {
      const Coupling g(row.gamma);
      row.model_q =
          scott_coefficient(g, tol.value_or(default_shift_tolerance(g))).q;
    } else {
      row.flagged = true;
    }
    if (reference) {
      for (const auto &ref : *reference) {
        if (ref.Z == rec.Z) {
          row.reference_q = (ref.e_total - e_tf) / (Z * Z);
        }
      }
    }
  });
  return rows;
}

} // namespace scott
