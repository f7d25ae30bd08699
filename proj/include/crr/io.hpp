#ifndef CRR_IO_HPP
#define CRR_IO_HPP

#include <iosfwd>
#include <string>

#include "crr/instance.hpp"
#include "crr/reduction.hpp"

namespace crr {

// Instance file ("crr 1"): header, n, m, then the S and R blocks as rows of
// 0/1 characters. Writers are byte-exact; readers report errors with line
// numbers.
void write_instance(const CrrInstance& inst, std::ostream& out);
CrrInstance read_instance(std::istream& in);

// Set Basis variant ("sb 1"): adds k and carries an n x m block.
void write_sb(const SbInstance& sb, std::ostream& out);
SbInstance read_sb(std::istream& in);

// Solution file ("sol 1"): E then P as 0/1 rows.
void write_solution(const Reconstruction& rec, std::ostream& out);
Reconstruction read_solution(std::istream& in);

// First token of the file: "crr", "sb", "hyper", "sol".
std::string sniff_format(std::istream& in);

// Convenience file helpers used by the CLI and the harness.
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);

}  // namespace crr

#endif
