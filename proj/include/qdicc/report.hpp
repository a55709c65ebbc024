// Text output: CSV rows, key = value point dumps and compact regime maps.
// Numbers use "%.16e"; absent values print as NA.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qdicc/sweep.hpp"

namespace qdicc {

inline constexpr const char* kCsvHeader =
    "F_E,F_N,beta,mu_l,J_E_l,J_E_r,J_E_u,J_N_l,J_N_r,J_N_u,J_Q_l,J_Q_r,J_Q_u,gamma_cw,X,Y,M,N,"
    "PQ,sigma_macro,sigma_micro,regime,cop,eta,res_JE,res_JN,status";

std::string format_number(double x);

/// Label for the regime column; points without a force plane read
/// "Unclassified".
std::string regime_label(const PointRecord& rec);

/// One CSV line without the trailing newline, columns as in kCsvHeader.
std::string csv_row(const PointRecord& rec);

void write_csv(std::ostream& out, const std::vector<PointRecord>& rows);

/// `key = value` lines for every CSV column, followed by diagnostics.
void write_point(std::ostream& out, const PointRecord& rec);

/// Integer code per regime for the map file; 8 = unclassified, 9 = failed.
int regime_code(const PointRecord& rec);

/// Legend as `#` lines, then one line per F_E value with F_N steps codes.
void write_regime_map(std::ostream& out, const SweepSpec& spec,
                      const std::vector<PointRecord>& rows);

}  // namespace qdicc
