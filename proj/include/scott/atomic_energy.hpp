#pragma once

#include "scott/hydrogenic.hpp"
#include "scott/scott_shift.hpp"
#include "scott/thomas_fermi.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scott {

// Total ground-state energy of a neutral atom, Hartree (negative).
struct NistRecord {
  int Z = 0;
  double e_total = 0.0;

  friend bool operator==(const NistRecord &, const NistRecord &) = default;
};

struct PhysicalConstants {
  double alpha = 7.2973525693e-3;

  // Throws DomainError unless 0 < alpha < 0.01.
  void validate() const;
};

struct ComparisonRow {
  int Z = 0;
  double gamma = 0.0; // alpha * Z
  double empirical_q = 0.0;
  std::optional<double> model_q; // absent when alpha * Z >= 1
  double schwinger_q = 0.0;
  std::optional<double> reference_q;
  bool flagged = false; // alpha * Z >= 1
};

// E_TF(1) Z^{7/3} + (1/2 + s^D(γ)) Z².
EnergyHa predict_energy(double Z, Coupling g, const TfSolution &tf, double tol);

// Parses `Z,<column>` CSV. Lines starting with '#' and blank lines are
// skipped. Throws ParseError (with the 1-based line) on malformed rows,
// duplicate Z or non-negative energies. Result sorted by Z.
std::vector<NistRecord> ingest_energy_table(std::string_view text,
                                            std::string_view column =
                                                "E_total_Ha");

// Inverse of ingest_energy_table; values are written with round-trip
// precision.
std::string format_energy_table(const std::vector<NistRecord> &records,
                                std::string_view column = "E_total_Ha");

// One row per record, ascending Z. Without `tol` each row uses
// default_shift_tolerance(αZ). `threads` only affects speed.
std::vector<ComparisonRow>
comparison_table(const std::vector<NistRecord> &records,
                 const std::optional<std::vector<NistRecord>> &reference,
                 const PhysicalConstants &constants, const TfSolution &tf,
                 std::optional<double> tol, unsigned threads = 1);

} // namespace scott
