#pragma once

#include "toric/robustness.hpp"

namespace toric {

/// 4ti2-style matrix file: a "rows cols" header line, then rows lines of
/// cols whitespace-separated integers.
IntMatrix parse_matrix(const std::string& text);
IntMatrix parse_matrix_file(const std::string& path);

/// Matrix header followed by per-column "c ..." lines, each optionally
/// followed by "lambda ...".  Missing lambdas are solved from the gcd
/// identity.
GLMSpec parse_glm(const std::string& text);
GLMSpec parse_glm_file(const std::string& path);

/// FNV-1a 64-bit digest, hex-encoded; used as the input digest in reports.
std::string fnv1a_digest(const std::string& text);

std::string format_matrix(const IntMatrix& m);

/// Integer lambda with lambda . c = 1; requires gcd(c) = 1.
IVec solve_gcd_identity(const IVec& c);

}  // namespace toric
